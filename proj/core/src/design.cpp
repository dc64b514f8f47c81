#include "pdesign/design.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "pdesign/errors.hpp"

namespace pdesign {

PartialDesign make_design(Params params, int n, std::vector<VertexSet> blocks) {
    if (n < 0) throw InvalidInput("negative universe size");
    if (n > kMaxVertices)
        throw SizeLimit("universe size " + std::to_string(n) + " exceeds cap of " +
                        std::to_string(kMaxVertices));
    std::sort(blocks.begin(), blocks.end(), lex_less);
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    PartialDesign d;
    d.params = params;
    d.n = n;
    d.blocks = std::move(blocks);
    return d;
}

std::vector<int> natural_order(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

OrderedDesign make_ordered(PartialDesign design) {
    OrderedDesign od;
    od.order = natural_order(design.n);
    od.design = std::move(design);
    od.has_explicit_order = false;
    return od;
}

OrderedDesign make_ordered(PartialDesign design, std::vector<int> order) {
    if (static_cast<int>(order.size()) != design.n)
        throw InvalidInput("order length does not match universe size");
    std::vector<bool> seen(static_cast<std::size_t>(design.n), false);
    for (int v : order) {
        if (v < 0 || v >= design.n || seen[static_cast<std::size_t>(v)])
            throw InvalidInput("order is not a permutation of 0..n-1");
        seen[static_cast<std::size_t>(v)] = true;
    }
    OrderedDesign od;
    od.design = std::move(design);
    od.order = std::move(order);
    od.has_explicit_order = true;
    return od;
}

std::vector<int> order_positions(const std::vector<int>& order) {
    std::vector<int> pos(order.size());
    for (std::size_t p = 0; p < order.size(); ++p)
        pos[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
    return pos;
}

ValidationReport validate(const PartialDesign& design) {
    ValidationReport report;
    const VertexSet universe = full_set(design.n);
    for (VertexSet b : design.blocks) {
        if (set_size(b) != design.params.k)
            report.violations.push_back({"block-size", b});
        if (!is_subset(b, universe))
            report.violations.push_back({"vertex-range", b});
    }
    // Count block coverage per t-subset; only t-subsets inside some block can
    // exceed the bound.
    std::map<VertexSet, int> coverage;
    for (VertexSet b : design.blocks)
        for_each_subset(b, design.params.t, [&](VertexSet tset) { ++coverage[tset]; });
    for (const auto& [tset, count] : coverage)
        if (count > design.params.lambda)
            report.violations.push_back({"multiplicity", tset});
    report.ok = report.violations.empty();
    return report;
}

bool is_complete_design(const PartialDesign& design) {
    ValidationReport report = validate(design);
    if (!report.ok) throw InvalidDesign("design fails validation");
    bool complete = true;
    for_each_subset(full_set(design.n), design.params.t, [&](VertexSet tset) {
        int count = 0;
        for (VertexSet b : design.blocks)
            if (is_subset(tset, b)) ++count;
        if (count != design.params.lambda) complete = false;
    });
    return complete;
}

VertexSet neighborhood(const PartialDesign& design, VertexSet tset) {
    if (set_size(tset) != design.params.t)
        throw ArityError("expected a " + std::to_string(design.params.t) + "-element subset, got " +
                         std::to_string(set_size(tset)) + " vertices");
    VertexSet nb = 0;
    for (VertexSet b : design.blocks)
        if (is_subset(tset, b)) nb |= b;
    return nb;
}

} // namespace pdesign
