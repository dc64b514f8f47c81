#include "pdesign/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pdesign/canonical.hpp"
#include "pdesign/errors.hpp"

namespace pdesign {

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<VertexSet> all_blocks(int n, int k) {
    std::vector<VertexSet> out;
    for_each_subset(full_set(n), k, [&](VertexSet b) { out.push_back(b); });
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool addable(const PartialDesign& d, VertexSet candidate, const std::map<VertexSet, int>& coverage) {
    if (std::binary_search(d.blocks.begin(), d.blocks.end(), candidate, lex_less)) return false;
    bool ok = true;
    for_each_subset(candidate, d.params.t, [&](VertexSet tset) {
        auto it = coverage.find(tset);
        if (it != coverage.end() && it->second >= d.params.lambda) ok = false;
    });
    return ok;
}

std::map<VertexSet, int> block_coverage(const PartialDesign& d) {
    std::map<VertexSet, int> coverage;
    for (VertexSet b : d.blocks)
        for_each_subset(b, d.params.t, [&](VertexSet tset) { ++coverage[tset]; });
    return coverage;
}

} // namespace

EnumerationCensus enumerate_partial_designs(Params params, int n, bool complete_only,
                                            std::uint64_t budget) {
    EnumerationCensus census;
    census.params = params;
    census.n = n;
    census.complete_only = complete_only;

    const std::vector<VertexSet> candidates = all_blocks(n, params.k);
    std::uint64_t nodes = 0;

    // Level-by-level generation on block count with canonical-form rejection:
    // children of all level-m representatives are deduplicated by canonical
    // form to give the level-(m+1) representatives.
    std::vector<PartialDesign> level = {make_design(params, n, {})};
    std::set<std::string> seen = {canonical_bytes(level.front(), n)};
    std::vector<PartialDesign> all = level;
    while (!level.empty()) {
        std::vector<PartialDesign> next;
        for (const PartialDesign& d : level) {
            std::map<VertexSet, int> coverage = block_coverage(d);
            for (VertexSet b : candidates) {
                if (++nodes > budget) throw BudgetExceeded("enumeration exceeded its node budget");
                if (!addable(d, b, coverage)) continue;
                std::vector<VertexSet> blocks = d.blocks;
                blocks.push_back(b);
                PartialDesign child = make_design(params, n, std::move(blocks));
                CanonicalResult canon = canonical_form(child, n);
                if (!seen.insert(canon.bytes).second) continue;
                next.push_back(make_design(params, n, canon.blocks));
            }
        }
        for (const PartialDesign& d : next) all.push_back(d);
        level = std::move(next);
    }

    for (PartialDesign& d : all) {
        if (complete_only && !is_complete_design(d)) continue;
        census.labeled += factorial(n) / automorphism_count(d);
        census.representatives.push_back(std::move(d));
    }
    return census;
}

namespace {

struct CompletionSearch {
    const PartialDesign& start;
    std::vector<VertexSet> candidates;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::uint64_t found = 0;
    bool first_only = false;
    bool done = false;
    const std::function<void(const PartialDesign&)>* visit = nullptr;

    std::vector<VertexSet> blocks;
    std::map<VertexSet, int> coverage;
    std::set<VertexSet> forbidden;
    std::vector<VertexSet> tsubsets;

    explicit CompletionSearch(const PartialDesign& d) : start(d) {
        candidates = all_blocks(d.n, d.params.k);
        blocks = d.blocks;
        coverage = block_coverage(d);
        for_each_subset(full_set(d.n), d.params.t, [&](VertexSet ts) { tsubsets.push_back(ts); });
    }

    int coverage_of(VertexSet tset) const {
        auto it = coverage.find(tset);
        return it == coverage.end() ? 0 : it->second;
    }

    std::vector<VertexSet> candidates_for(VertexSet tset) const {
        std::vector<VertexSet> out;
        for (VertexSet b : candidates) {
            if (!is_subset(tset, b) || forbidden.count(b)) continue;
            if (std::binary_search(blocks.begin(), blocks.end(), b, lex_less)) continue;
            bool ok = true;
            for_each_subset(b, start.params.t, [&](VertexSet ts) {
                if (coverage_of(ts) >= start.params.lambda) ok = false;
            });
            if (ok) out.push_back(b);
        }
        return out;
    }

    void add_block(VertexSet b) {
        blocks.insert(std::upper_bound(blocks.begin(), blocks.end(), b, lex_less), b);
        for_each_subset(b, start.params.t, [&](VertexSet ts) { ++coverage[ts]; });
    }

    void remove_block(VertexSet b) {
        blocks.erase(std::lower_bound(blocks.begin(), blocks.end(), b, lex_less));
        for_each_subset(b, start.params.t, [&](VertexSet ts) { --coverage[ts]; });
    }

    void run() { search(); }

    void search() {
        if (done) return;
        if (++nodes > budget) throw BudgetExceeded("completion search exceeded its node budget");

        // Fail-first: branch on the undercovered t-subset with the fewest
        // candidate blocks.
        VertexSet target = 0;
        bool have_target = false;
        std::vector<VertexSet> best_candidates;
        for (VertexSet ts : tsubsets) {
            if (coverage_of(ts) >= start.params.lambda) continue;
            std::vector<VertexSet> cs = candidates_for(ts);
            if (!have_target || cs.size() < best_candidates.size()) {
                have_target = true;
                target = ts;
                best_candidates = std::move(cs);
                if (best_candidates.empty()) break;
            }
        }
        if (!have_target) {
            ++found;
            if (visit) (*visit)(make_design(start.params, start.n, blocks));
            if (first_only) done = true;
            return;
        }
        if (best_candidates.empty()) return;

        // Branch i asserts the i-th candidate is the lex-least block through
        // the target added from here on; earlier candidates stay forbidden so
        // each completion is counted exactly once.
        std::vector<VertexSet> newly_forbidden;
        for (VertexSet b : best_candidates) {
            add_block(b);
            search();
            remove_block(b);
            if (done) break;
            forbidden.insert(b);
            newly_forbidden.push_back(b);
        }
        for (VertexSet b : newly_forbidden) forbidden.erase(b);
    }
};

} // namespace

std::uint64_t for_each_completion(const PartialDesign& partial,
                                  const std::function<void(const PartialDesign&)>& visit,
                                  std::uint64_t budget) {
    if (!validate(partial).ok) throw InvalidDesign("cannot complete an invalid design");
    CompletionSearch search(partial);
    search.budget = budget;
    search.visit = &visit;
    search.run();
    return search.found;
}

std::uint64_t count_completions(const PartialDesign& partial, std::uint64_t budget) {
    if (!validate(partial).ok) throw InvalidDesign("cannot complete an invalid design");
    CompletionSearch search(partial);
    search.budget = budget;
    search.run();
    return search.found;
}

std::optional<PartialDesign> complete_design(const PartialDesign& partial, std::uint64_t budget) {
    if (!validate(partial).ok) throw InvalidDesign("cannot complete an invalid design");
    CompletionSearch search(partial);
    search.budget = budget;
    search.first_only = true;
    std::optional<PartialDesign> result;
    std::function<void(const PartialDesign&)> capture = [&](const PartialDesign& d) { result = d; };
    search.visit = &capture;
    search.run();
    return result;
}

std::optional<PartialDesign> complete_design_growing(const PartialDesign& partial, int max_extra,
                                                     std::uint64_t budget) {
    for (int extra = 0; extra <= max_extra; ++extra) {
        PartialDesign grown = make_design(partial.params, partial.n + extra, partial.blocks);
        if (!divisibility_admissible(grown.params, grown.n)) continue;
        std::optional<PartialDesign> result = complete_design(grown, budget);
        if (result) return result;
    }
    return std::nullopt;
}

namespace {

unsigned __int128 binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    unsigned __int128 b = 1;
    for (int i = 1; i <= r; ++i) b = b * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    return b;
}

} // namespace

bool divisibility_admissible(Params params, int n) {
    for (int i = 0; i < params.t; ++i) {
        unsigned __int128 divisor = binomial(params.k - i, params.t - i);
        unsigned __int128 dividend =
            static_cast<unsigned>(params.lambda) * binomial(n - i, params.t - i);
        if (divisor != 0 && dividend % divisor != 0) return false;
    }
    return true;
}

} // namespace pdesign
