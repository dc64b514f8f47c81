#include "pdesign/amalgam.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pdesign/canonical.hpp"
#include "pdesign/closure.hpp"
#include "pdesign/enumeration.hpp"
#include "pdesign/errors.hpp"

namespace pdesign {

namespace {

VertexSet map_set(const VertexMap& map, VertexSet s) {
    VertexSet out = 0;
    for (int v : to_vertices(s)) out = with_vertex(out, map[static_cast<std::size_t>(v)]);
    return out;
}

void require_class_member(const PartialDesign& d, const char* name) {
    if (!validate(d).ok)
        throw InvalidInput(std::string(name) + " is not a valid partial design");
}

void require_embedding(const VertexMap& alpha, const PartialDesign& a, const PartialDesign& b,
                       const char* name) {
    VertexSet image = map_set(alpha, full_set(a.n));
    EmbeddingReport report = check_embedding_diagnostics(alpha, a, b);
    if (report.ok) return;
    if (!is_closed(b, image))
        throw NotClosed(std::string(name) + " image is not closed in its target");
    throw InvalidInput(std::string(name) + " is not an embedding: " + report.detail);
}

} // namespace

AmalgamResult free_amalgam(const AmalgamProblem& p) {
    require_class_member(p.base, "base");
    require_class_member(p.left, "left side");
    require_class_member(p.right, "right side");
    require_embedding(p.alpha1, p.base, p.left, "alpha1");
    require_embedding(p.alpha2, p.base, p.right, "alpha2");

    AmalgamResult result;
    result.beta1.resize(static_cast<std::size_t>(p.left.n));
    for (int v = 0; v < p.left.n; ++v) result.beta1[static_cast<std::size_t>(v)] = v;

    // Vertices of B2 outside alpha2(A) get fresh ids after B1's, in
    // increasing id order.
    std::vector<int> inv2(static_cast<std::size_t>(p.right.n), -1);
    for (std::size_t a = 0; a < p.alpha2.size(); ++a)
        inv2[static_cast<std::size_t>(p.alpha2[a])] = static_cast<int>(a);
    result.beta2.resize(static_cast<std::size_t>(p.right.n));
    int next = p.left.n;
    for (int v = 0; v < p.right.n; ++v) {
        int a = inv2[static_cast<std::size_t>(v)];
        result.beta2[static_cast<std::size_t>(v)] =
            a >= 0 ? p.alpha1[static_cast<std::size_t>(a)] : next++;
    }

    std::vector<VertexSet> blocks = p.left.blocks;
    for (VertexSet b : p.right.blocks) blocks.push_back(map_set(result.beta2, b));
    result.amalgam = make_design(p.base.params, next, std::move(blocks));
    return result;
}

OrderedAmalgamResult free_amalgam(const OrderedAmalgamProblem& p) {
    if (!check_embedding(p.alpha1, p.base, p.left)) {
        require_embedding(p.alpha1, p.base.design, p.left.design, "alpha1");
        throw InvalidInput("alpha1 does not preserve the order");
    }
    if (!check_embedding(p.alpha2, p.base, p.right)) {
        require_embedding(p.alpha2, p.base.design, p.right.design, "alpha2");
        throw InvalidInput("alpha2 does not preserve the order");
    }

    AmalgamProblem flat{p.base.design, p.left.design, p.right.design, p.alpha1, p.alpha2};
    AmalgamResult flat_result = free_amalgam(flat);

    // Order: B1's order with each B2-only vertex inserted immediately after
    // its greatest order-predecessor from A; no predecessor means the front.
    // Groups keep B2's internal order.
    VertexSet image2 = map_set(p.alpha2, full_set(p.base.design.n));
    std::map<int, std::vector<int>> groups; // anchor vertex in C -> tail vertices in C
    std::vector<int> front;
    int anchor = -1;
    for (int v : p.right.order) {
        if (contains(image2, v)) {
            anchor = flat_result.beta2[static_cast<std::size_t>(v)];
        } else if (anchor < 0) {
            front.push_back(flat_result.beta2[static_cast<std::size_t>(v)]);
        } else {
            groups[anchor].push_back(flat_result.beta2[static_cast<std::size_t>(v)]);
        }
    }
    std::vector<int> order = front;
    for (int v : p.left.order) {
        int c = flat_result.beta1[static_cast<std::size_t>(v)];
        order.push_back(c);
        auto it = groups.find(c);
        if (it != groups.end()) order.insert(order.end(), it->second.begin(), it->second.end());
    }

    OrderedAmalgamResult result;
    result.amalgam = make_ordered(std::move(flat_result.amalgam), std::move(order));
    result.beta1 = std::move(flat_result.beta1);
    result.beta2 = std::move(flat_result.beta2);
    return result;
}

AmalgamResult joint_embedding(const PartialDesign& left, const PartialDesign& right) {
    AmalgamProblem p;
    p.base = make_design(left.params, 0, {});
    p.left = left;
    p.right = right;
    return free_amalgam(p);
}

OrderedAmalgamResult joint_embedding(const OrderedDesign& left, const OrderedDesign& right) {
    OrderedAmalgamProblem p;
    p.base = make_ordered(make_design(left.design.params, 0, {}));
    p.left = left;
    p.right = right;
    return free_amalgam(p);
}

namespace {

struct AxiomContext {
    ClassAxiomReport report;
    std::uint64_t budget;

    void spend(std::uint64_t cost) {
        if (cost > budget) throw BudgetExceeded("class axiom check exceeded its node budget");
        budget -= cost;
    }
};

std::string design_label(const PartialDesign& d) {
    return hex_digest(canonical_bytes(d)) + "/n=" + std::to_string(d.n) +
           "/blocks=" + std::to_string(d.blocks.size());
}

void check_hereditary(const std::vector<PartialDesign>& members, AxiomContext& ctx) {
    for (const PartialDesign& d : members) {
        VertexSet universe = full_set(d.n);
        for (VertexSet s = 0;; ++s) {
            ctx.spend(1);
            if (is_closed(d, s) && !validate(induced_substructure(d, s)).ok) {
                ctx.report.hereditary = false;
                ctx.report.counterexamples.push_back("hereditary " + design_label(d));
            }
            if (s == universe) break;
        }
    }
}

void check_jep(const std::vector<PartialDesign>& members, AxiomContext& ctx) {
    for (const PartialDesign& b1 : members) {
        for (const PartialDesign& b2 : members) {
            ctx.spend(1);
            AmalgamResult r = joint_embedding(b1, b2);
            bool ok = validate(r.amalgam).ok && check_embedding(r.beta1, b1, r.amalgam) &&
                      check_embedding(r.beta2, b2, r.amalgam);
            if (!ok) {
                ctx.report.joint_embedding = false;
                ctx.report.counterexamples.push_back("jep " + design_label(b1) + " " +
                                                     design_label(b2));
            }
            ++ctx.report.problems_checked;
        }
    }
}

bool amalgam_sound(const AmalgamProblem& p, const AmalgamResult& r) {
    if (!validate(r.amalgam).ok) return false;
    // Commutativity.
    for (int a = 0; a < p.base.n; ++a)
        if (r.beta1[static_cast<std::size_t>(p.alpha1[static_cast<std::size_t>(a)])] !=
            r.beta2[static_cast<std::size_t>(p.alpha2[static_cast<std::size_t>(a)])])
            return false;
    // Freeness.
    VertexSet base1 = map_set(r.beta1, map_set(p.alpha1, full_set(p.base.n)));
    VertexSet tail1 = map_set(r.beta1, full_set(p.left.n)) & ~base1;
    VertexSet tail2 = map_set(r.beta2, full_set(p.right.n)) & ~base1;
    for (VertexSet b : r.amalgam.blocks)
        if ((b & tail1) && (b & tail2)) return false;
    if ((map_set(r.beta1, full_set(p.left.n)) & map_set(r.beta2, full_set(p.right.n))) != base1)
        return false;
    // Both sides embed with closed images.
    return check_embedding(r.beta1, p.left, r.amalgam) &&
           check_embedding(r.beta2, p.right, r.amalgam);
}

void check_amalgamation(const std::vector<PartialDesign>& members, AxiomContext& ctx) {
    for (const PartialDesign& a : members) {
        for (const PartialDesign& b1 : members) {
            if (a.n > b1.n) continue;
            std::vector<VertexMap> alphas1 = enumerate_embeddings(a, b1);
            if (alphas1.empty()) continue;
            for (const PartialDesign& b2 : members) {
                if (a.n > b2.n) continue;
                std::vector<VertexMap> alphas2 = enumerate_embeddings(a, b2);
                for (const VertexMap& alpha1 : alphas1) {
                    for (const VertexMap& alpha2 : alphas2) {
                        ctx.spend(1);
                        AmalgamProblem p{a, b1, b2, alpha1, alpha2};
                        AmalgamResult r = free_amalgam(p);
                        if (!amalgam_sound(p, r)) {
                            ctx.report.amalgamation = false;
                            ctx.report.counterexamples.push_back(
                                "amalgamation " + design_label(a) + " " + design_label(b1) + " " +
                                design_label(b2));
                        }
                        ++ctx.report.problems_checked;
                    }
                }
            }
        }
    }
}

} // namespace

ClassAxiomReport check_class_axioms(Params params, int size_bound, std::uint64_t node_budget) {
    std::vector<PartialDesign> members;
    for (int n = 0; n <= size_bound; ++n) {
        EnumerationCensus census = enumerate_partial_designs(params, n, false, node_budget);
        for (PartialDesign& d : census.representatives) members.push_back(std::move(d));
    }

    AxiomContext ctx;
    ctx.budget = node_budget;
    ctx.report.structures_checked = members.size();
    check_hereditary(members, ctx);
    check_jep(members, ctx);
    check_amalgamation(members, ctx);
    std::sort(ctx.report.counterexamples.begin(), ctx.report.counterexamples.end());
    return ctx.report;
}

} // namespace pdesign
