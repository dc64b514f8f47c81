#pragma once

#include "pdesign/design.hpp"

namespace pdesign {

/// Least superset S of subset such that the neighborhood of every covered
/// t-subset of S stays inside S.
VertexSet closure_of(const PartialDesign& design, VertexSet subset);

/// closure_of(subset) == subset.
bool is_closed(const PartialDesign& design, VertexSet subset);

/// Block-wise characterization of closedness: every block is either inside
/// subset or meets it in at most t-1 vertices. Agrees with is_closed.
bool is_closed_by_blocks(const PartialDesign& design, VertexSet subset);

} // namespace pdesign
