#include <doctest.h>

#include "oracles.hpp"
#include "pdesign/canonical.hpp"
#include "pdesign/enumeration.hpp"
#include "pdesign/errors.hpp"

#include <map>
#include <set>
#include <string>

using namespace pdesign;

TEST_CASE("census on tiny universes") {
    Params p = make_params(3, 2, 1);
    CHECK(enumerate_partial_designs(p, 3).representatives.size() == 2); // empty, one block
    // On 4 points any two triples share a pair, so one block is the maximum.
    CHECK(enumerate_partial_designs(p, 4).representatives.size() == 2);
}

TEST_CASE("census matches the naive filter-everything oracle") {
    Params p = make_params(3, 2, 1);
    for (int n = 0; n <= 6; ++n) {
        std::vector<PartialDesign> labeled = oracle::all_labeled_designs(p, n);
        std::set<std::string> classes;
        for (const PartialDesign& d : labeled) classes.insert(canonical_bytes(d));

        EnumerationCensus census = enumerate_partial_designs(p, n);
        CHECK(census.representatives.size() == classes.size());
        CHECK(census.labeled == labeled.size());
        std::set<std::string> emitted;
        for (const PartialDesign& d : census.representatives) {
            CHECK(validate(d).ok);
            CHECK(emitted.insert(canonical_bytes(d)).second); // pairwise distinct
            CHECK(classes.count(canonical_bytes(d)) == 1);
        }
    }
}

TEST_CASE("orderly audit: every class is one block away from a smaller one") {
    Params p = make_params(3, 2, 1);
    EnumerationCensus census = enumerate_partial_designs(p, 6);
    std::set<std::string> forms;
    for (const PartialDesign& d : census.representatives) forms.insert(canonical_bytes(d));
    for (const PartialDesign& d : census.representatives) {
        if (d.blocks.empty()) continue;
        bool reachable = false;
        for (std::size_t i = 0; i < d.blocks.size() && !reachable; ++i) {
            std::vector<VertexSet> blocks = d.blocks;
            blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
            reachable = forms.count(canonical_bytes(make_design(p, 6, blocks))) == 1;
        }
        CHECK(reachable);
    }
}

TEST_CASE("complete-only census at n = 7 is the Fano plane") {
    Params p = make_params(3, 2, 1);
    EnumerationCensus census = enumerate_partial_designs(p, 7, true);
    REQUIRE(census.representatives.size() == 1);
    CHECK(census.labeled == 30);
    CHECK(canonical_bytes(census.representatives[0]) == canonical_bytes(oracle::fano()));
}

TEST_CASE("complete_design") {
    Params p = make_params(3, 2, 1);
    PartialDesign f = oracle::fano();
    CHECK(complete_design(f) == f); // already complete

    PartialDesign partial = make_design(p, 7, {from_vertices({0, 1, 2}), from_vertices({0, 3, 4})});
    std::optional<PartialDesign> completed = complete_design(partial);
    REQUIRE(completed.has_value());
    CHECK(is_complete_design(*completed));
    for (VertexSet b : partial.blocks)
        CHECK(std::binary_search(completed->blocks.begin(), completed->blocks.end(), b, lex_less));

    // 6 points fail the divisibility conditions; no completion exists.
    for (const PartialDesign& d : oracle::all_labeled_designs(p, 6))
        CHECK_FALSE(complete_design(d).has_value());

    CHECK_THROWS_AS(
        complete_design(make_design(p, 4, {from_vertices({0, 1, 2}), from_vertices({0, 1, 3})})),
        InvalidDesign);
}

TEST_CASE("complete_design_growing retries larger universes") {
    Params p = make_params(3, 2, 1);
    PartialDesign five = make_design(p, 5, {from_vertices({0, 1, 2})});
    CHECK_FALSE(complete_design(five).has_value());
    std::optional<PartialDesign> grown = complete_design_growing(five, 4);
    REQUIRE(grown.has_value());
    CHECK(grown->n == 7);
    CHECK(is_complete_design(*grown));
}

TEST_CASE("count_completions") {
    Params p = make_params(3, 2, 1);
    CHECK(count_completions(make_design(p, 7, {})) == 30);
    CHECK(count_completions(oracle::fano()) == 1);
    CHECK(count_completions(make_design(p, 6, {})) == 0);
    CHECK_THROWS_AS(count_completions(make_design(p, 7, {}), 3), BudgetExceeded);
}

TEST_CASE("divisibility_admissible") {
    Params p = make_params(3, 2, 1);
    CHECK(divisibility_admissible(p, 7));
    CHECK(divisibility_admissible(p, 9));
    CHECK_FALSE(divisibility_admissible(p, 6));
    CHECK_FALSE(divisibility_admissible(p, 8));
    CHECK(divisibility_admissible(p, 1)); // degenerate: binomials vanish
    CHECK(divisibility_admissible(p, 3));
}

TEST_CASE("inadmissible universes admit no completion") {
    Params p = make_params(3, 2, 1);
    for (int n = 0; n <= 7; ++n) {
        if (divisibility_admissible(p, n)) continue;
        CHECK(count_completions(make_design(p, n, {})) == 0);
    }
}
