#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pdesign {

/// A set of vertices, one bit per vertex id. All universes are capped at
/// kMaxVertices; larger inputs are rejected with SizeLimit at construction.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }

inline VertexSet with_vertex(VertexSet s, int v) { return s | (VertexSet{1} << v); }

inline VertexSet singleton(int v) { return VertexSet{1} << v; }

inline VertexSet full_set(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

/// Lexicographic order on the ascending vertex lists of two sets:
/// the set owning the lowest differing bit comes first.
inline bool lex_less(VertexSet a, VertexSet b) {
    if (a == b) return false;
    VertexSet d = a ^ b;
    return (a & (d & (~d + 1))) != 0;
}

inline std::vector<int> to_vertices(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

template <typename It>
VertexSet from_vertices(It first, It last) {
    VertexSet s = 0;
    for (; first != last; ++first) s = with_vertex(s, static_cast<int>(*first));
    return s;
}

inline VertexSet from_vertices(const std::vector<int>& vs) {
    return from_vertices(vs.begin(), vs.end());
}

/// Calls fn(mask) for every r-element subset of the vertices of s.
template <typename Fn>
void for_each_subset(VertexSet s, int r, Fn&& fn) {
    std::vector<int> verts = to_vertices(s);
    int n = static_cast<int>(verts.size());
    if (r < 0 || r > n) return;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet m = 0;
        for (int i : idx) m = with_vertex(m, verts[static_cast<std::size_t>(i)]);
        fn(m);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace pdesign
