#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdesign/embedding.hpp"

namespace pdesign {

struct AmalgamProblem {
    PartialDesign base;   // A
    PartialDesign left;   // B1
    PartialDesign right;  // B2
    VertexMap alpha1;     // A -> B1
    VertexMap alpha2;     // A -> B2
};

struct OrderedAmalgamProblem {
    OrderedDesign base;
    OrderedDesign left;
    OrderedDesign right;
    VertexMap alpha1;
    VertexMap alpha2;
};

struct AmalgamResult {
    PartialDesign amalgam;
    VertexMap beta1; // B1 -> C
    VertexMap beta2; // B2 -> C
};

struct OrderedAmalgamResult {
    OrderedDesign amalgam;
    VertexMap beta1;
    VertexMap beta2;
};

/// Free amalgam of B1 and B2 over A. Vertices of B1 keep their ids; vertices
/// of B2 outside the image of A are appended in increasing id order. No block
/// mixes the two new parts. Throws NotClosed when an alpha image is not
/// closed, InvalidInput when an input fails validation or an alpha is not an
/// embedding.
AmalgamResult free_amalgam(const AmalgamProblem& problem);

/// Ordered variant: the amalgam's order is B1's order with each B2-only
/// vertex inserted immediately after its greatest order-predecessor from A
/// (at the front when it has none), groups kept in B2's order. Requires the
/// alphas to be order-preserving.
OrderedAmalgamResult free_amalgam(const OrderedAmalgamProblem& problem);

/// Free amalgam over the empty base: disjoint union.
AmalgamResult joint_embedding(const PartialDesign& left, const PartialDesign& right);
OrderedAmalgamResult joint_embedding(const OrderedDesign& left, const OrderedDesign& right);

struct ClassAxiomReport {
    bool hereditary = true;
    bool joint_embedding = true;
    bool amalgamation = true;
    std::uint64_t structures_checked = 0;
    std::uint64_t problems_checked = 0;
    std::vector<std::string> counterexamples;

    bool all_hold() const { return hereditary && joint_embedding && amalgamation; }
};

/// Exhaustively verifies the hereditary, joint-embedding and amalgamation
/// properties of the class of partial (k,t,lambda)-designs over all members
/// with at most size_bound vertices (one representative per isomorphism
/// class; the checks are isomorphism-invariant).
ClassAxiomReport check_class_axioms(Params params, int size_bound,
                                    std::uint64_t node_budget = 100'000'000);

} // namespace pdesign
