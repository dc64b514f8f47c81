#include "pdesign/embedding.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pdesign/canonical.hpp"
#include "pdesign/closure.hpp"
#include "pdesign/errors.hpp"

namespace pdesign {

namespace {

std::string set_to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : to_vertices(s)) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(v);
    }
    out += '}';
    return out;
}

VertexSet map_set(const VertexMap& map, VertexSet s) {
    VertexSet out = 0;
    for (int v : to_vertices(s)) out = with_vertex(out, map[static_cast<std::size_t>(v)]);
    return out;
}

bool map_well_formed(const VertexMap& map, const PartialDesign& a, const PartialDesign& b) {
    if (static_cast<int>(map.size()) != a.n) return false;
    VertexSet used = 0;
    for (int v : map) {
        if (v < 0 || v >= b.n || contains(used, v)) return false;
        used = with_vertex(used, v);
    }
    return true;
}

// Condition (i): a k-subset of A's universe is a block of A iff its image is
// a block of B.
bool condition_i(const VertexMap& map, const PartialDesign& a, const PartialDesign& b,
                 VertexSet* offender = nullptr) {
    VertexSet image = map_set(map, full_set(a.n));
    for (VertexSet blk : a.blocks) {
        VertexSet img = map_set(map, blk);
        if (!std::binary_search(b.blocks.begin(), b.blocks.end(), img, lex_less)) {
            if (offender) *offender = blk;
            return false;
        }
    }
    for (VertexSet blk : b.blocks) {
        if (!is_subset(blk, image)) continue;
        VertexSet pre = 0;
        for (std::size_t v = 0; v < map.size(); ++v)
            if (contains(blk, map[v])) pre = with_vertex(pre, static_cast<int>(v));
        if (!std::binary_search(a.blocks.begin(), a.blocks.end(), pre, lex_less)) {
            if (offender) *offender = blk;
            return false;
        }
    }
    return true;
}

// Condition (ii): function domains and values correspond. Domains are the
// t-subsets with neighborhood size >= k, values the neighborhoods.
bool condition_ii(const VertexMap& map, const PartialDesign& a, const PartialDesign& b,
                  VertexSet* offender = nullptr) {
    bool ok = true;
    VertexSet bad = 0;
    for_each_subset(full_set(a.n), a.params.t, [&](VertexSet tset) {
        if (!ok) return;
        VertexSet na = neighborhood(a, tset);
        VertexSet nb = neighborhood(b, map_set(map, tset));
        bool defined_a = set_size(na) >= a.params.k;
        bool defined_b = set_size(nb) >= b.params.k;
        if (defined_a != defined_b || (defined_a && map_set(map, na) != nb)) {
            ok = false;
            bad = tset;
        }
    });
    if (!ok && offender) *offender = bad;
    return ok;
}

// Condition (iii'): a block of B outside the image of A's blocks meets the
// image of A in at most t-1 vertices.
bool condition_iii_prime(const VertexMap& map, const PartialDesign& a, const PartialDesign& b,
                         VertexSet* offender = nullptr) {
    VertexSet image = map_set(map, full_set(a.n));
    std::set<VertexSet> image_blocks;
    for (VertexSet blk : a.blocks) image_blocks.insert(map_set(map, blk));
    for (VertexSet blk : b.blocks) {
        if (image_blocks.count(blk)) continue;
        if (set_size(blk & image) > b.params.t - 1) {
            if (offender) *offender = blk;
            return false;
        }
    }
    return true;
}

bool order_preserved(const VertexMap& map, const OrderedDesign& a, const OrderedDesign& b) {
    std::vector<int> pa = order_positions(a.order);
    std::vector<int> pb = order_positions(b.order);
    for (int x = 0; x < a.design.n; ++x)
        for (int y = 0; y < a.design.n; ++y)
            if ((pa[static_cast<std::size_t>(x)] < pa[static_cast<std::size_t>(y)]) !=
                (pb[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] <
                 pb[static_cast<std::size_t>(map[static_cast<std::size_t>(y)])]))
                return false;
    return true;
}

} // namespace

const char* to_string(EmbeddingFailure f) {
    switch (f) {
        case EmbeddingFailure::None: return "none";
        case EmbeddingFailure::NotInjective: return "not-injective";
        case EmbeddingFailure::RelationNotPreserved: return "relation-not-preserved";
        case EmbeddingFailure::FunctionMismatch: return "function-mismatch";
        case EmbeddingFailure::OutsideBlockTouches: return "outside-block-touches-image";
        case EmbeddingFailure::OrderNotPreserved: return "order-not-preserved";
    }
    return "unknown";
}

EmbeddingReport check_embedding_diagnostics(const VertexMap& map, const PartialDesign& a,
                                            const PartialDesign& b) {
    EmbeddingReport report;
    VertexSet offender = 0;
    if (a.params != b.params || !map_well_formed(map, a, b)) {
        report.ok = false;
        report.failure = EmbeddingFailure::NotInjective;
        report.detail = "map is not an injection into the target universe";
    } else if (!condition_i(map, a, b, &offender)) {
        report.ok = false;
        report.failure = EmbeddingFailure::RelationNotPreserved;
        report.detail = "block relation mismatch at " + set_to_string(offender);
    } else if (!condition_ii(map, a, b, &offender)) {
        report.ok = false;
        report.failure = EmbeddingFailure::FunctionMismatch;
        report.detail = "neighborhood function mismatch at " + set_to_string(offender);
    } else if (!condition_iii_prime(map, a, b, &offender)) {
        report.ok = false;
        report.failure = EmbeddingFailure::OutsideBlockTouches;
        report.detail = "outside block " + set_to_string(offender) + " meets image in >= t vertices";
    }
    return report;
}

EmbeddingReport check_embedding_diagnostics(const VertexMap& map, const OrderedDesign& a,
                                            const OrderedDesign& b) {
    EmbeddingReport report = check_embedding_diagnostics(map, a.design, b.design);
    if (report.ok && !order_preserved(map, a, b)) {
        report.ok = false;
        report.failure = EmbeddingFailure::OrderNotPreserved;
        report.detail = "linear order not preserved";
    }
    return report;
}

bool check_embedding(const VertexMap& map, const PartialDesign& a, const PartialDesign& b) {
    return check_embedding_diagnostics(map, a, b).ok;
}

bool check_embedding(const VertexMap& map, const OrderedDesign& a, const OrderedDesign& b) {
    return check_embedding_diagnostics(map, a, b).ok;
}

bool check_embedding(const VertexMap& map, const OrderedStructure& a, const OrderedStructure& b) {
    return check_embedding(map, decode(a), decode(b));
}

bool equivalence_iii_iii_prime(const VertexMap& map, const PartialDesign& a,
                               const PartialDesign& b) {
    if (a.params != b.params || !map_well_formed(map, a, b))
        throw InvalidInput("map is not an injection with matching parameters");
    if (!condition_i(map, a, b)) throw InvalidInput("map does not satisfy condition (i)");
    return condition_ii(map, a, b) == condition_iii_prime(map, a, b);
}

PartialDesign induced_substructure(const PartialDesign& design, VertexSet subset) {
    if (!is_closed(design, subset))
        throw NotClosed("subset " + set_to_string(subset) + " is not closed");
    std::vector<int> verts = to_vertices(subset);
    std::vector<int> relabel(static_cast<std::size_t>(design.n), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        relabel[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    std::vector<VertexSet> blocks;
    for (VertexSet b : design.blocks) {
        if (!is_subset(b, subset)) continue;
        VertexSet img = 0;
        for (int v : to_vertices(b)) img = with_vertex(img, relabel[static_cast<std::size_t>(v)]);
        blocks.push_back(img);
    }
    return make_design(design.params, static_cast<int>(verts.size()), std::move(blocks));
}

OrderedDesign induced_substructure(const OrderedDesign& design, VertexSet subset) {
    PartialDesign sub = induced_substructure(design.design, subset);
    std::vector<int> verts = to_vertices(subset);
    std::vector<int> relabel(static_cast<std::size_t>(design.design.n), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        relabel[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    std::vector<int> order;
    for (int v : design.order)
        if (contains(subset, v)) order.push_back(relabel[static_cast<std::size_t>(v)]);
    return make_ordered(std::move(sub), std::move(order));
}

namespace {

template <typename Host, typename IsoBytes>
std::vector<Copy> enumerate_copies_impl(int pattern_size, const std::string& pattern_bytes,
                                        const Host& host, const PartialDesign& host_design,
                                        IsoBytes&& iso_bytes) {
    std::vector<Copy> copies;
    for_each_subset(full_set(host_design.n), pattern_size, [&](VertexSet subset) {
        if (!is_closed(host_design, subset)) return;
        if (iso_bytes(host, subset) == pattern_bytes) copies.push_back({subset});
    });
    std::sort(copies.begin(), copies.end(),
              [](const Copy& a, const Copy& b) { return lex_less(a.vertices, b.vertices); });
    return copies;
}

} // namespace

namespace {

template <typename S>
std::vector<VertexMap> enumerate_embeddings_impl(const S& a, const S& b, int an, int bn) {
    std::vector<VertexMap> out;
    VertexMap map(static_cast<std::size_t>(an), -1);
    VertexSet used = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == an) {
            if (check_embedding(map, a, b)) out.push_back(map);
            return;
        }
        for (int w = 0; w < bn; ++w) {
            if (contains(used, w)) continue;
            map[static_cast<std::size_t>(v)] = w;
            used = with_vertex(used, w);
            self(self, v + 1);
            used &= ~singleton(w);
        }
        map[static_cast<std::size_t>(v)] = -1;
    };
    dfs(dfs, 0);
    return out;
}

} // namespace

std::vector<VertexMap> enumerate_embeddings(const PartialDesign& a, const PartialDesign& b) {
    return enumerate_embeddings_impl(a, b, a.n, b.n);
}

std::vector<VertexMap> enumerate_embeddings(const OrderedDesign& a, const OrderedDesign& b) {
    return enumerate_embeddings_impl(a, b, a.design.n, b.design.n);
}

std::vector<Copy> enumerate_copies(const PartialDesign& pattern, const PartialDesign& host) {
    std::string pattern_bytes = canonical_bytes(pattern);
    return enumerate_copies_impl(pattern.n, pattern_bytes, host, host,
                                 [](const PartialDesign& h, VertexSet s) {
                                     return canonical_bytes(induced_substructure(h, s));
                                 });
}

std::vector<Copy> enumerate_copies(const OrderedDesign& pattern, const OrderedDesign& host) {
    std::string pattern_bytes = ordered_canonical_bytes(pattern);
    return enumerate_copies_impl(pattern.design.n, pattern_bytes, host, host.design,
                                 [](const OrderedDesign& h, VertexSet s) {
                                     return ordered_canonical_bytes(induced_substructure(h, s));
                                 });
}

std::vector<Copy> enumerate_copies(const OrderedStructure& pattern, const OrderedStructure& host) {
    return enumerate_copies(decode(pattern), decode(host));
}

} // namespace pdesign
