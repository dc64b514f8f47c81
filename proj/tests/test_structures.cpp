#include <doctest.h>

#include "oracles.hpp"
#include "pdesign/canonical.hpp"
#include "pdesign/errors.hpp"
#include "pdesign/io.hpp"
#include "pdesign/structure.hpp"

#include <algorithm>
#include <sstream>

using namespace pdesign;

TEST_CASE("make_params computes K and rejects bad triples") {
    CHECK(make_params(3, 2, 1).K == 3);
    CHECK(make_params(4, 4, 2).K == 4); // k == t forces K == k
    CHECK(make_params(4, 2, 3).K == 8);
    CHECK_THROWS_AS(make_params(3, 1, 1), ParameterError);
    CHECK_THROWS_AS(make_params(2, 3, 1), ParameterError);
    CHECK_THROWS_AS(make_params(3, 2, 0), ParameterError);
}

TEST_CASE("K is the maximum achievable neighborhood size for (4,2,3)") {
    // Blocks through {0,1} each add at most k-t = 2 new vertices; lambda = 3
    // blocks are allowed. Search all block subsets through the pair on 9
    // vertices for the largest neighborhood.
    Params p = make_params(4, 2, 3);
    std::vector<VertexSet> candidates;
    VertexSet pair = from_vertices({0, 1});
    for_each_subset(full_set(9) & ~pair, 2, [&](VertexSet rest) { candidates.push_back(pair | rest); });
    int best = 0;
    for (unsigned mask = 0; mask < (1u << candidates.size()); ++mask) {
        std::vector<VertexSet> blocks;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (mask & (1u << i)) blocks.push_back(candidates[i]);
        if (blocks.size() > 3) continue;
        PartialDesign d = make_design(p, 9, blocks);
        if (!oracle::valid_design(d)) continue;
        best = std::max(best, set_size(neighborhood(d, pair)));
    }
    CHECK(best == p.K);
}

TEST_CASE("validate") {
    Params p = make_params(3, 2, 1);
    CHECK(validate(make_design(p, 5, {})).ok);
    CHECK(validate(oracle::fano()).ok);

    PartialDesign bad = make_design(p, 4, {from_vertices({0, 1, 2}), from_vertices({0, 1, 3})});
    ValidationReport report = validate(bad);
    REQUIRE_FALSE(report.ok);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].rule == "multiplicity");
    CHECK(report.violations[0].subset == from_vertices({0, 1}));

    PartialDesign wrong_size = make_design(p, 4, {from_vertices({0, 1})});
    CHECK_FALSE(validate(wrong_size).ok);
    PartialDesign out_of_range = make_design(p, 2, {from_vertices({0, 1, 3})});
    CHECK_FALSE(validate(out_of_range).ok);
}

TEST_CASE("is_complete_design") {
    Params p = make_params(3, 2, 1);
    CHECK(is_complete_design(oracle::fano()));
    CHECK_FALSE(is_complete_design(make_design(p, 5, {})));
    CHECK(is_complete_design(make_design(p, 3, {from_vertices({0, 1, 2})})));
    CHECK_THROWS_AS(
        is_complete_design(make_design(p, 4, {from_vertices({0, 1, 2}), from_vertices({0, 1, 3})})),
        InvalidDesign);
}

TEST_CASE("neighborhood") {
    Params p = make_params(3, 2, 1);
    PartialDesign empty = make_design(p, 5, {});
    CHECK(neighborhood(empty, from_vertices({0, 1})) == 0);

    PartialDesign f = oracle::fano();
    CHECK(neighborhood(f, from_vertices({0, 1})) == from_vertices({0, 1, 2}));

    PartialDesign two = make_design(make_params(3, 2, 2), 4,
                                    {from_vertices({0, 1, 2}), from_vertices({0, 1, 3})});
    CHECK(neighborhood(two, from_vertices({0, 1})) == from_vertices({0, 1, 2, 3}));

    CHECK_THROWS_AS(neighborhood(f, from_vertices({0, 1, 2})), ArityError);
}

TEST_CASE("encode builds the full function table") {
    Params p = make_params(3, 2, 1);

    ClosureStructure single = encode(make_design(p, 3, {from_vertices({0, 1, 2})}));
    REQUIRE(single.table.size() == 3); // the three pair-sets inside the block
    for (const FunctionEntry& e : single.table) CHECK(e.value == from_vertices({0, 1, 2}));

    CHECK(encode(make_design(p, 4, {})).table.empty());

    ClosureStructure f = encode(oracle::fano());
    CHECK(f.table.size() == 21); // every pair of the 7 points is covered
    for (const FunctionEntry& e : f.table) CHECK(set_size(e.value) == 3);

    CHECK_THROWS_AS(
        encode(make_design(p, 4, {from_vertices({0, 1, 2}), from_vertices({0, 1, 3})})),
        InvalidDesign);
}

TEST_CASE("decode round trip and consistency check") {
    OrderedDesign f = make_ordered(oracle::fano(), {6, 5, 4, 3, 2, 1, 0});
    CHECK(decode(encode(f)) == f);
    OrderedDesign empty = make_ordered(make_design(make_params(3, 2, 1), 4, {}));
    CHECK(decode(encode(empty)) == empty);

    ClosureStructure tampered = encode(oracle::fano());
    tampered.table.pop_back();
    CHECK_THROWS_AS(decode(tampered), InconsistentStructure);
}

TEST_CASE("round trip for all designs with at most 2 blocks on <= 6 vertices") {
    Params p = make_params(3, 2, 1);
    for (int n = 0; n <= 6; ++n) {
        for (const PartialDesign& d : oracle::all_labeled_designs(p, n)) {
            if (d.blocks.size() > 2) continue;
            OrderedDesign od = make_ordered(d);
            CHECK(decode(encode(od)) == od);
        }
    }
}

TEST_CASE("neighborhood size law and monotonicity on the small corpus") {
    Params p = make_params(3, 2, 1);
    for (int n = 2; n <= 5; ++n) {
        for (const PartialDesign& d : oracle::all_labeled_designs(p, n)) {
            for_each_subset(full_set(n), p.t, [&](VertexSet tset) {
                int size = set_size(neighborhood(d, tset));
                CHECK((size == 0 || (size >= p.k && size <= p.K)));
            });
            // Adding any block never shrinks a neighborhood.
            for_each_subset(full_set(n), p.k, [&](VertexSet b) {
                std::vector<VertexSet> blocks = d.blocks;
                blocks.push_back(b);
                PartialDesign bigger = make_design(p, n, blocks);
                for_each_subset(full_set(n), p.t, [&](VertexSet tset) {
                    CHECK(is_subset(neighborhood(d, tset), neighborhood(bigger, tset)));
                });
            });
        }
    }
}

TEST_CASE("design file format is canonical") {
    OrderedDesign f = make_ordered(oracle::fano(), {3, 1, 4, 0, 5, 2, 6});
    std::string text = write_design(f);
    std::istringstream in(text);
    OrderedDesign back = read_design(in);
    CHECK(back == f);
    CHECK(write_design(back) == text);

    // Absent order line means natural order, and stays absent on rewrite.
    OrderedDesign plain = make_ordered(oracle::fano());
    std::string plain_text = write_design(plain);
    CHECK(plain_text.find("order") == std::string::npos);
    std::istringstream in2(plain_text);
    CHECK(write_design(read_design(in2)) == plain_text);
}

TEST_CASE("design file parse errors") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_design(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("3 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse("3 2 1 4\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("3 2 1 4\n0 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse("3 2 1 4\n0 1 9\n"), ParseError);
    CHECK_THROWS_AS(parse("3 2 1 4\norder 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("3 1 1 4\n"), ParseError);
}

TEST_CASE("structure text round trip") {
    OrderedDesign f = make_ordered(oracle::fano(), {6, 0, 1, 2, 3, 4, 5});
    OrderedStructure s = encode(f);
    std::string text = write_structure(s);
    std::istringstream in(text);
    OrderedStructure back = read_structure(in);
    CHECK(back == s);
    CHECK(decode(back) == f);
}
