#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pdesign/embedding.hpp"

namespace pdesign {

/// All n! orderings of a design; with distinct_only, one representative per
/// order-isomorphism class.
std::vector<OrderedDesign> orderings(const PartialDesign& design, bool distinct_only = false,
                                     std::uint64_t budget = 1'000'000);

/// An arrow instance C -> (B)^A_r with the copy list fixed up front, so
/// colorings can be exchanged as plain index->color vectors.
struct ArrowInstance {
    OrderedDesign big;     // C
    OrderedDesign middle;  // B
    OrderedDesign pattern; // A
    int colors = 1;        // r
    std::vector<Copy> pattern_copies;          // copies of A in C, lex-sorted
    std::vector<Copy> middle_copies;           // copies of B in C, lex-sorted
    std::vector<std::vector<int>> contained;   // per B-copy: indices of A-copies inside it
};

ArrowInstance make_arrow_instance(OrderedDesign big, OrderedDesign middle, OrderedDesign pattern,
                                  int colors);

/// A copy of B in C all of whose A-copies share one color under the given
/// coloring, or nothing. Deterministic: returns the lex-least such copy.
std::optional<Copy> find_mono_copy(const ArrowInstance& inst, const std::vector<int>& coloring);

struct ArrowVerdict {
    bool holds = false;
    /// Witness coloring when the arrow fails: admits no monochromatic copy.
    std::optional<std::vector<int>> witness;
    std::uint64_t colorings_checked = 0;
};

/// Brute-force arrow check. The pruned search enumerates colorings up to
/// color permutation (restricted-growth sequences); the naive variant walks
/// all r^m colorings. Both return the first bad coloring found in their
/// respective lex orders. Throws BudgetExceeded past the coloring budget and
/// EmptyPattern when A has no copies in C while B does.
ArrowVerdict arrow_check(const ArrowInstance& inst, std::uint64_t budget = 50'000'000,
                         bool naive = false);
ArrowVerdict arrow_check(const OrderedDesign& big, const OrderedDesign& middle,
                         const OrderedDesign& pattern, int colors,
                         std::uint64_t budget = 50'000'000, bool naive = false);

} // namespace pdesign
