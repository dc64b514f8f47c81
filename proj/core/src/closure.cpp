#include "pdesign/closure.hpp"

namespace pdesign {

VertexSet closure_of(const PartialDesign& design, VertexSet subset) {
    // Worklist fixpoint over t-subsets of the growing set: absorb the
    // neighborhood of every covered t-subset until nothing new appears.
    VertexSet s = subset;
    const int t = design.params.t;
    bool changed = true;
    while (changed) {
        changed = false;
        VertexSet added = 0;
        for_each_subset(s, t, [&](VertexSet tset) {
            VertexSet nb = neighborhood(design, tset);
            added |= nb & ~s;
        });
        if (added) {
            s |= added;
            changed = true;
        }
    }
    return s;
}

bool is_closed(const PartialDesign& design, VertexSet subset) {
    return closure_of(design, subset) == subset;
}

bool is_closed_by_blocks(const PartialDesign& design, VertexSet subset) {
    const int t = design.params.t;
    for (VertexSet b : design.blocks)
        if (!is_subset(b, subset) && set_size(b & subset) > t - 1) return false;
    return true;
}

} // namespace pdesign
