#include "pdesign/canonical.hpp"

#include <algorithm>
#include <string>

#include "pdesign/errors.hpp"

namespace pdesign {

namespace {

std::string serialize(const char* tag, const Params& p, int n,
                      const std::vector<VertexSet>& blocks) {
    std::string out = tag;
    out += ' ';
    out += std::to_string(p.k) + ' ' + std::to_string(p.t) + ' ' + std::to_string(p.lambda) + ' ' +
           std::to_string(n) + '|';
    for (VertexSet b : blocks) {
        bool first = true;
        for (int v : to_vertices(b)) {
            if (!first) out += ',';
            first = false;
            out += std::to_string(v);
        }
        out += ';';
    }
    return out;
}

// Branch-and-bound search for the labeling of the covered vertices that
// minimizes the block-completion trace. The trace lists, for each label step,
// the relabeled blocks completed at that step (sorted); its minimum over all
// labelings determines the block set, so equal minima mean isomorphic.
class CanonicalSearch {
public:
    CanonicalSearch(const PartialDesign& design, const std::vector<int>& covered)
        : design_(design), covered_(covered) {
        assigned_.assign(static_cast<std::size_t>(design.n), -1);
        chosen_ = 0;
    }

    void run() {
        order_ = covered_;
        // Heuristic candidate order: high-degree vertices first.
        std::vector<int> degree(static_cast<std::size_t>(design_.n), 0);
        for (VertexSet b : design_.blocks)
            for (int v : to_vertices(b)) ++degree[static_cast<std::size_t>(v)];
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
        });
        dfs(0);
    }

    const std::vector<int>& best_labels() const { return best_labels_; }

private:
    void dfs(int depth) {
        if (depth == static_cast<int>(covered_.size())) {
            if (best_labels_.empty() || trace_ < best_trace_) {
                best_trace_ = trace_;
                best_labels_ = assigned_;
            }
            return;
        }
        for (int v : order_) {
            if (assigned_[static_cast<std::size_t>(v)] >= 0) continue;
            std::size_t mark = trace_.size();
            assign(v, depth);
            if (viable()) dfs(depth + 1);
            assigned_[static_cast<std::size_t>(v)] = -1;
            chosen_ &= ~singleton(v);
            trace_.resize(mark);
        }
    }

    void assign(int v, int label) {
        assigned_[static_cast<std::size_t>(v)] = label;
        chosen_ |= singleton(v);
        // Blocks completed by this vertex, relabeled and sorted.
        std::vector<std::vector<int>> completed;
        for (VertexSet b : design_.blocks) {
            if (!contains(b, v) || !is_subset(b, chosen_)) continue;
            std::vector<int> relabeled;
            for (int w : to_vertices(b)) relabeled.push_back(assigned_[static_cast<std::size_t>(w)]);
            std::sort(relabeled.begin(), relabeled.end());
            completed.push_back(std::move(relabeled));
        }
        std::sort(completed.begin(), completed.end());
        for (const auto& blk : completed) trace_.insert(trace_.end(), blk.begin(), blk.end());
    }

    bool viable() const {
        if (best_labels_.empty()) return true;
        std::size_t len = std::min(trace_.size(), best_trace_.size());
        for (std::size_t i = 0; i < len; ++i) {
            if (trace_[i] < best_trace_[i]) return true;
            if (trace_[i] > best_trace_[i]) return false;
        }
        return true;
    }

    const PartialDesign& design_;
    std::vector<int> covered_;
    std::vector<int> order_;
    std::vector<int> assigned_;
    VertexSet chosen_ = 0;
    std::vector<int> trace_;
    std::vector<int> best_trace_;
    std::vector<int> best_labels_;
};

} // namespace

CanonicalResult canonical_form(const PartialDesign& design, int max_covered) {
    VertexSet covered_mask = 0;
    for (VertexSet b : design.blocks) covered_mask |= b;
    if (!is_subset(covered_mask, full_set(design.n)))
        throw InvalidInput("block vertex out of range");
    std::vector<int> covered = to_vertices(covered_mask);
    if (static_cast<int>(covered.size()) > max_covered)
        throw SizeLimit("canonicalization bound exceeded: " + std::to_string(covered.size()) +
                        " covered vertices, limit " + std::to_string(max_covered));

    CanonicalResult result;
    result.labels.assign(static_cast<std::size_t>(design.n), -1);
    if (!covered.empty()) {
        CanonicalSearch search(design, covered);
        search.run();
        result.labels = search.best_labels();
    }
    // Isolated vertices are interchangeable: they take the trailing labels in
    // increasing id order.
    int next = static_cast<int>(covered.size());
    for (int v = 0; v < design.n; ++v)
        if (result.labels[static_cast<std::size_t>(v)] < 0)
            result.labels[static_cast<std::size_t>(v)] = next++;

    for (VertexSet b : design.blocks) {
        VertexSet relabeled = 0;
        for (int v : to_vertices(b))
            relabeled = with_vertex(relabeled, result.labels[static_cast<std::size_t>(v)]);
        result.blocks.push_back(relabeled);
    }
    std::sort(result.blocks.begin(), result.blocks.end(), lex_less);
    result.bytes = serialize("D", design.params, design.n, result.blocks);
    return result;
}

std::string canonical_bytes(const PartialDesign& design, int max_covered) {
    return canonical_form(design, max_covered).bytes;
}

std::string canonical_bytes(const ClosureStructure& structure, int max_covered) {
    return canonical_bytes(structure.design, max_covered);
}

std::string ordered_canonical_bytes(const OrderedDesign& design) {
    std::vector<int> pos = order_positions(design.order);
    std::vector<VertexSet> blocks;
    blocks.reserve(design.design.blocks.size());
    for (VertexSet b : design.design.blocks) {
        VertexSet relabeled = 0;
        for (int v : to_vertices(b)) relabeled = with_vertex(relabeled, pos[static_cast<std::size_t>(v)]);
        blocks.push_back(relabeled);
    }
    std::sort(blocks.begin(), blocks.end(), lex_less);
    return serialize("O", design.design.params, design.design.n, blocks);
}

std::string ordered_canonical_bytes(const OrderedStructure& structure) {
    OrderedDesign od;
    od.design = structure.core.design;
    od.order = structure.order;
    od.has_explicit_order = structure.has_explicit_order;
    return ordered_canonical_bytes(od);
}

namespace {

bool blocks_consistent(const PartialDesign& design, const std::vector<int>& image,
                       VertexSet mapped) {
    for (VertexSet b : design.blocks) {
        if (!is_subset(b, mapped)) continue;
        VertexSet img = 0;
        for (int v : to_vertices(b)) img = with_vertex(img, image[static_cast<std::size_t>(v)]);
        if (!std::binary_search(design.blocks.begin(), design.blocks.end(), img, lex_less))
            return false;
    }
    return true;
}

void aut_dfs(const PartialDesign& design, const std::vector<int>& covered, std::size_t depth,
             std::vector<int>& image, VertexSet mapped, VertexSet used, std::uint64_t& count) {
    if (depth == covered.size()) {
        ++count;
        return;
    }
    int v = covered[depth];
    for (int w : covered) {
        if (contains(used, w)) continue;
        image[static_cast<std::size_t>(v)] = w;
        if (blocks_consistent(design, image, mapped | singleton(v)))
            aut_dfs(design, covered, depth + 1, image, mapped | singleton(v), used | singleton(w),
                    count);
    }
    image[static_cast<std::size_t>(v)] = -1;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

} // namespace

std::uint64_t automorphism_count(const PartialDesign& design) {
    VertexSet covered_mask = 0;
    for (VertexSet b : design.blocks) covered_mask |= b;
    std::vector<int> covered = to_vertices(covered_mask);
    std::uint64_t count = 0;
    std::vector<int> image(static_cast<std::size_t>(design.n), -1);
    if (covered.empty())
        count = 1;
    else
        aut_dfs(design, covered, 0, image, 0, 0, count);
    return count * factorial(design.n - static_cast<int>(covered.size()));
}

std::string hex_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace pdesign
