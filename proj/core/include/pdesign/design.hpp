#pragma once

#include <string>
#include <vector>

#include "pdesign/bits.hpp"
#include "pdesign/params.hpp"

namespace pdesign {

/// A partial (k,t,lambda)-design: n vertices 0..n-1 and a set of k-element
/// blocks with every t-subset of the universe in at most lambda blocks.
/// Blocks are kept lex-sorted and deduplicated; construction does not enforce
/// the design rules (validate reports them), only the size cap.
struct PartialDesign {
    Params params;
    int n = 0;
    std::vector<VertexSet> blocks;

    friend bool operator==(const PartialDesign&, const PartialDesign&) = default;
};

struct Violation {
    std::string rule;     // "block-size", "vertex-range" or "multiplicity"
    VertexSet subset = 0; // the offending block or t-subset
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// A design together with a linear order on its vertices. order[p] is the
/// vertex at position p. has_explicit_order records whether an order line was
/// present in the source file (absent means the natural order 0..n-1).
struct OrderedDesign {
    PartialDesign design;
    std::vector<int> order;
    bool has_explicit_order = false;

    friend bool operator==(const OrderedDesign&, const OrderedDesign&) = default;
};

PartialDesign make_design(Params params, int n, std::vector<VertexSet> blocks);

std::vector<int> natural_order(int n);
OrderedDesign make_ordered(PartialDesign design);
OrderedDesign make_ordered(PartialDesign design, std::vector<int> order);

/// position[v] = rank of vertex v in the order.
std::vector<int> order_positions(const std::vector<int>& order);

ValidationReport validate(const PartialDesign& design);

/// True iff every t-subset of the universe lies in exactly lambda blocks.
bool is_complete_design(const PartialDesign& design);

/// All vertices lying in some block that contains every vertex of tset.
VertexSet neighborhood(const PartialDesign& design, VertexSet tset);

} // namespace pdesign
