#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pdesign/design.hpp"

namespace pdesign {

struct EnumerationCensus {
    Params params;
    int n = 0;
    bool complete_only = false;
    std::vector<PartialDesign> representatives; // pairwise non-isomorphic, canonical labeling
    std::uint64_t labeled = 0;                  // sum over representatives of n!/|Aut|
};

/// All partial (k,t,lambda)-designs on n vertices up to isomorphism,
/// generated level by level (block count) with canonical-form rejection.
EnumerationCensus enumerate_partial_designs(Params params, int n, bool complete_only = false,
                                            std::uint64_t budget = 50'000'000);

/// A complete design on the same universe containing all of partial's
/// blocks, or nothing. Backtracking on the undercovered t-subset with the
/// fewest candidate blocks, candidates in lex order.
std::optional<PartialDesign> complete_design(const PartialDesign& partial,
                                             std::uint64_t budget = 1'000'000'000);

/// Retries completion on universes n, n+1, ..., n+max_extra.
std::optional<PartialDesign> complete_design_growing(const PartialDesign& partial, int max_extra,
                                                     std::uint64_t budget = 1'000'000'000);

/// Exact number of labeled completions; visit is called on each one.
std::uint64_t count_completions(const PartialDesign& partial,
                                std::uint64_t budget = 1'000'000'000);
std::uint64_t for_each_completion(const PartialDesign& partial,
                                  const std::function<void(const PartialDesign&)>& visit,
                                  std::uint64_t budget = 1'000'000'000);

/// Standard necessary divisibility conditions for a complete
/// (k,t,lambda)-design on n points: C(k-i,t-i) divides lambda*C(n-i,t-i) for
/// every 0 <= i < t.
bool divisibility_admissible(Params params, int n);

/// Overridable admissibility hook used by complete_design_growing and the
/// CLI; defaults to divisibility_admissible.
using AdmissibilityPredicate = std::function<bool(Params, int)>;

} // namespace pdesign
