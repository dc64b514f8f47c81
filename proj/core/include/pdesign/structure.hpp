#pragma once

#include <vector>

#include "pdesign/design.hpp"

namespace pdesign {

/// One row of the neighborhood function table: a covered t-subset and its
/// neighborhood (size between k and K). Rows are keyed by the unordered
/// t-subset; the relation on ordered tuples is symmetric so the set form
/// loses nothing.
struct FunctionEntry {
    VertexSet tset = 0;
    VertexSet value = 0;

    friend bool operator==(const FunctionEntry&, const FunctionEntry&) = default;
};

/// The structure view of a design: the block relation plus the function
/// table. The table is a cache fully determined by the blocks; encode
/// rebuilds it and decode cross-checks it.
struct ClosureStructure {
    PartialDesign design;
    std::vector<FunctionEntry> table; // sorted by lex_less on tset

    friend bool operator==(const ClosureStructure&, const ClosureStructure&) = default;
};

struct OrderedStructure {
    ClosureStructure core;
    std::vector<int> order;
    bool has_explicit_order = false;

    friend bool operator==(const OrderedStructure&, const OrderedStructure&) = default;
};

ClosureStructure encode(const PartialDesign& design);
OrderedStructure encode(const OrderedDesign& design);

PartialDesign decode(const ClosureStructure& structure);
OrderedDesign decode(const OrderedStructure& structure);

/// Rebuilds the function table from the blocks.
std::vector<FunctionEntry> function_table(const PartialDesign& design);

} // namespace pdesign
