#include "pdesign/structure.hpp"

#include <algorithm>

#include "pdesign/errors.hpp"

namespace pdesign {

std::vector<FunctionEntry> function_table(const PartialDesign& design) {
    std::vector<FunctionEntry> table;
    for_each_subset(full_set(design.n), design.params.t, [&](VertexSet tset) {
        VertexSet nb = neighborhood(design, tset);
        if (nb != 0) table.push_back({tset, nb});
    });
    std::sort(table.begin(), table.end(),
              [](const FunctionEntry& a, const FunctionEntry& b) { return lex_less(a.tset, b.tset); });
    return table;
}

ClosureStructure encode(const PartialDesign& design) {
    if (!validate(design).ok) throw InvalidDesign("cannot encode an invalid design");
    ClosureStructure s;
    s.design = design;
    s.table = function_table(design);
    return s;
}

OrderedStructure encode(const OrderedDesign& design) {
    OrderedStructure s;
    s.core = encode(design.design);
    s.order = design.order;
    s.has_explicit_order = design.has_explicit_order;
    return s;
}

PartialDesign decode(const ClosureStructure& structure) {
    if (structure.table != function_table(structure.design))
        throw InconsistentStructure("function table does not match the block relation");
    return structure.design;
}

OrderedDesign decode(const OrderedStructure& structure) {
    OrderedDesign od;
    od.design = decode(structure.core);
    od.order = structure.order;
    od.has_explicit_order = structure.has_explicit_order;
    return od;
}

} // namespace pdesign
