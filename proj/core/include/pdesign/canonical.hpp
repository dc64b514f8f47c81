#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdesign/structure.hpp"

namespace pdesign {

constexpr int kDefaultCanonicalBound = 12;

struct CanonicalResult {
    std::vector<int> labels;        // labels[old vertex] = canonical vertex
    std::vector<VertexSet> blocks;  // relabeled, lex-sorted
    std::string bytes;              // serialized canonical form
};

/// Canonical form under relabeling: two designs have equal bytes iff
/// isomorphic. Minimizes a block-completion trace over all labelings of the
/// covered vertices (branch and bound); isolated vertices are interchangeable
/// and get the trailing labels. The bound caps the number of covered
/// vertices (SizeLimit beyond it).
CanonicalResult canonical_form(const PartialDesign& design,
                               int max_covered = kDefaultCanonicalBound);

/// Canonical bytes of an ordered design: relabel by order position. Equal
/// bytes iff order-isomorphic.
std::string ordered_canonical_bytes(const OrderedDesign& design);
std::string ordered_canonical_bytes(const OrderedStructure& structure);

std::string canonical_bytes(const PartialDesign& design,
                            int max_covered = kDefaultCanonicalBound);
std::string canonical_bytes(const ClosureStructure& structure,
                            int max_covered = kDefaultCanonicalBound);

/// Number of block-set-preserving vertex permutations.
std::uint64_t automorphism_count(const PartialDesign& design);

/// FNV-1a digest of a byte string, 16 lowercase hex digits.
std::string hex_digest(const std::string& bytes);

} // namespace pdesign
