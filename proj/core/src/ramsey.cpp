#include "pdesign/ramsey.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pdesign/canonical.hpp"
#include "pdesign/errors.hpp"

namespace pdesign {

std::vector<OrderedDesign> orderings(const PartialDesign& design, bool distinct_only,
                                     std::uint64_t budget) {
    std::uint64_t count = 1;
    for (int i = 2; i <= design.n; ++i) {
        count *= static_cast<std::uint64_t>(i);
        if (count > budget) throw BudgetExceeded("ordering enumeration exceeds its budget");
    }
    std::vector<OrderedDesign> out;
    std::set<std::string> seen;
    std::vector<int> order = natural_order(design.n);
    do {
        OrderedDesign od = make_ordered(design, order);
        if (distinct_only && !seen.insert(ordered_canonical_bytes(od)).second) continue;
        out.push_back(std::move(od));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

ArrowInstance make_arrow_instance(OrderedDesign big, OrderedDesign middle, OrderedDesign pattern,
                                  int colors) {
    if (colors < 1) throw InvalidInput("color count must be positive");
    ArrowInstance inst;
    inst.pattern_copies = enumerate_copies(pattern, big);
    inst.middle_copies = enumerate_copies(middle, big);
    if (inst.pattern_copies.empty() && !inst.middle_copies.empty())
        throw EmptyPattern("pattern has no copies in the host while the middle structure does");
    // A middle copy is closed, so the pattern copies inside it are exactly
    // the pattern copies of the host contained in its vertex set.
    inst.contained.resize(inst.middle_copies.size());
    for (std::size_t m = 0; m < inst.middle_copies.size(); ++m)
        for (std::size_t p = 0; p < inst.pattern_copies.size(); ++p)
            if (is_subset(inst.pattern_copies[p].vertices, inst.middle_copies[m].vertices))
                inst.contained[m].push_back(static_cast<int>(p));
    inst.big = std::move(big);
    inst.middle = std::move(middle);
    inst.pattern = std::move(pattern);
    inst.colors = colors;
    return inst;
}

std::optional<Copy> find_mono_copy(const ArrowInstance& inst, const std::vector<int>& coloring) {
    if (coloring.size() != inst.pattern_copies.size())
        throw InvalidInput("coloring must assign a color to every pattern copy");
    for (std::size_t m = 0; m < inst.middle_copies.size(); ++m) {
        bool mono = true;
        int color = -1;
        for (int p : inst.contained[m]) {
            int c = coloring[static_cast<std::size_t>(p)];
            if (color < 0) color = c;
            if (c != color) {
                mono = false;
                break;
            }
        }
        if (mono) return inst.middle_copies[m];
    }
    return std::nullopt;
}

namespace {

// Advances a restricted-growth sequence capped at r colors: each color may
// appear only after every smaller color has appeared. Exactly one
// representative per color-permutation orbit, in lex order.
bool next_rgs(std::vector<int>& c, int r) {
    int m = static_cast<int>(c.size());
    for (int i = m - 1; i >= 1; --i) {
        int prefix_max = 0;
        for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, c[static_cast<std::size_t>(j)]);
        if (c[static_cast<std::size_t>(i)] < std::min(prefix_max + 1, r - 1)) {
            ++c[static_cast<std::size_t>(i)];
            std::fill(c.begin() + i + 1, c.end(), 0);
            return true;
        }
    }
    return false;
}

bool next_full(std::vector<int>& c, int r) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < r - 1) {
            ++c[static_cast<std::size_t>(i)];
            std::fill(c.begin() + i + 1, c.end(), 0);
            return true;
        }
    }
    return false;
}

} // namespace

ArrowVerdict arrow_check(const ArrowInstance& inst, std::uint64_t budget, bool naive) {
    ArrowVerdict verdict;
    std::size_t m = inst.pattern_copies.size();
    if (m == 0) {
        // No pattern copies and (per make_arrow_instance) no middle copies
        // either: the single empty coloring has no monochromatic copy.
        verdict.holds = !inst.middle_copies.empty();
        verdict.colorings_checked = 1;
        if (!verdict.holds) verdict.witness = std::vector<int>{};
        return verdict;
    }
    std::vector<int> coloring(m, 0);
    while (true) {
        if (++verdict.colorings_checked > budget)
            throw BudgetExceeded("arrow check exceeded its coloring budget");
        if (!find_mono_copy(inst, coloring)) {
            verdict.holds = false;
            verdict.witness = coloring;
            return verdict;
        }
        bool more = naive ? next_full(coloring, inst.colors) : next_rgs(coloring, inst.colors);
        if (!more) break;
    }
    verdict.holds = true;
    return verdict;
}

ArrowVerdict arrow_check(const OrderedDesign& big, const OrderedDesign& middle,
                         const OrderedDesign& pattern, int colors, std::uint64_t budget,
                         bool naive) {
    return arrow_check(make_arrow_instance(big, middle, pattern, colors), budget, naive);
}

} // namespace pdesign
