#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdesign/structure.hpp"

namespace pdesign {

/// map[a] = image of vertex a; every vertex of the source must be mapped.
using VertexMap = std::vector<int>;

enum class EmbeddingFailure {
    None,
    NotInjective,
    RelationNotPreserved, // condition (i)
    FunctionMismatch,     // condition (ii)
    OutsideBlockTouches,  // condition (iii')
    OrderNotPreserved,
};

struct EmbeddingReport {
    bool ok = true;
    EmbeddingFailure failure = EmbeddingFailure::None;
    std::string detail;
};

const char* to_string(EmbeddingFailure f);

/// Strong embedding check: injectivity, block relation preserved and
/// reflected, function domains/values corresponding, and every target block
/// outside the image of the source's blocks meeting the image in at most t-1
/// vertices. The ordered overload additionally requires order preservation.
bool check_embedding(const VertexMap& map, const PartialDesign& a, const PartialDesign& b);
bool check_embedding(const VertexMap& map, const OrderedDesign& a, const OrderedDesign& b);
bool check_embedding(const VertexMap& map, const OrderedStructure& a, const OrderedStructure& b);

EmbeddingReport check_embedding_diagnostics(const VertexMap& map, const PartialDesign& a,
                                            const PartialDesign& b);
EmbeddingReport check_embedding_diagnostics(const VertexMap& map, const OrderedDesign& a,
                                            const OrderedDesign& b);

/// For a map satisfying condition (i): does the function-preservation clause
/// (ii) agree with the outside-block condition (iii')? Throws InvalidInput
/// when (i) fails.
bool equivalence_iii_iii_prime(const VertexMap& map, const PartialDesign& a,
                               const PartialDesign& b);

/// A copy of a pattern in a host: a closed vertex set whose induced
/// substructure is isomorphic to the pattern.
struct Copy {
    VertexSet vertices = 0;
};

/// Substructure induced on a closed subset; vertices relabeled in increasing
/// id order. Throws NotClosed when the subset is not closed.
PartialDesign induced_substructure(const PartialDesign& design, VertexSet subset);
OrderedDesign induced_substructure(const OrderedDesign& design, VertexSet subset);

/// All injective maps from the source universe into the target universe that
/// pass check_embedding, in lex order of the image tuple.
std::vector<VertexMap> enumerate_embeddings(const PartialDesign& a, const PartialDesign& b);
std::vector<VertexMap> enumerate_embeddings(const OrderedDesign& a, const OrderedDesign& b);

/// All closed subsets of the host carrying an induced substructure
/// isomorphic to the pattern (order-isomorphic in the ordered overload),
/// sorted by lex order of the vertex set.
std::vector<Copy> enumerate_copies(const PartialDesign& pattern, const PartialDesign& host);
std::vector<Copy> enumerate_copies(const OrderedDesign& pattern, const OrderedDesign& host);
std::vector<Copy> enumerate_copies(const OrderedStructure& pattern, const OrderedStructure& host);

} // namespace pdesign
