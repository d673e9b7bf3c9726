#include <catch2/catch_amalgamated.hpp>

#include "hypercover/matching_structure.hpp"

using namespace hypercover;

TEST_CASE("classifying the simplex around one edge") {
    for (int r = 3; r <= 6; ++r) {
        Hypergraph h = builtin_instance("simplex(" + std::to_string(r) + ")");
        auto [matching, s] = classify_maximum(h);
        REQUIRE(matching.size() == 1);
        CHECK(s.type1[0].size() == static_cast<std::size_t>(r));
        CHECK(s.level[0] == r);
        CHECK(s.heavy[0]);
        // All other edges contain the vertex r+1, which is outside edge 1..r.
        CHECK(s.hub[0].kind == Hub::Kind::ExternalVertex);
        CHECK(s.hub[0].vertex == r + 1);
        for (int f = 0; f < h.size(); ++f)
            CHECK(s.type_of[f] == (f == matching[0] ? 0 : 1));
    }
}

TEST_CASE("single edge is level 0") {
    Hypergraph h = parse_hg1("6 4\n1 2 3 4\n");
    auto [matching, s] = classify_maximum(h);
    REQUIRE(matching == std::vector<int>{0});
    CHECK(s.type1[0].empty());
    CHECK(s.level[0] == 0);
    CHECK(s.hub[0].kind == Hub::Kind::None);
    CHECK_FALSE(s.heavy[0]);
}

TEST_CASE("seven-edge instance: every edge pair shares exactly two vertices") {
    Hypergraph h = builtin_instance("seven_edge");
    // At m = 3 every pair of edges is compatible, so all seven edges match.
    auto [matching, s] = classify_maximum(h);
    CHECK(matching.size() == 7);

    // With the caller certificate M = {1234}, the other edges meet it in only
    // two vertices, so none is type-1 and they all classify as type 0.
    MatchingStructure fixed = classify(h, {0}, /*accept_maximum_certificate=*/true);
    CHECK(fixed.type1[0].empty());
    CHECK(fixed.level[0] == 0);
    for (int f = 1; f < h.size(); ++f) {
        CHECK(intersection_size(h.edge(f), h.edge(0)) == 2);
        CHECK(fixed.type_of[f] == 0);
    }
}

TEST_CASE("classify validates its matching argument") {
    Hypergraph h = complete_hypergraph(6, 3);
    CHECK_THROWS_AS(classify(h, {0, 1}), InputError);   // 123 and 124 share a pair
    CHECK_THROWS_AS(classify(h, {0, 0}), InputError);   // repeated edge
    CHECK_THROWS_AS(classify(h, {99}), InputError);     // out of range
    Hypergraph two(8, 3, {{1, 2, 3}, {5, 6, 7}});
    CHECK_THROWS_AS(classify(two, {0}), InputError);    // valid but not maximum
}

TEST_CASE("shared-set case and the level-1 shared set") {
    // Two type-1 edges through the same pair 1,2 of the matching edge 123.
    Hypergraph h(6, 3, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
    auto [matching, s] = classify_maximum(h);
    REQUIRE(matching.size() == 1);
    CHECK(s.level[0] == 1);
    CHECK(s.hub[0].kind == Hub::Kind::SharedSet);
    CHECK(s.hub[0].shared_set == VertexSet{1, 2});
    REQUIRE(s.m1_shared[0].has_value());
    CHECK(*s.m1_shared[0] == VertexSet{1, 2});
}

TEST_CASE("external-vertex case") {
    // Type-1 edges 124 and 134 meet e = 123 in different pairs, both contain 4.
    Hypergraph h(6, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
    auto [matching, s] = classify_maximum(h);
    REQUIRE(matching.size() == 1);
    CHECK(s.level[0] == 2);
    CHECK(s.hub[0].kind == Hub::Kind::ExternalVertex);
    CHECK(s.hub[0].vertex == 4);
}

TEST_CASE("classification invariants hold on random instances") {
    int done = 0;
    for (std::uint64_t seed = 1; done < 120; ++seed) {
        SplitMix64 rng(seed);
        int r = 3 + static_cast<int>(rng.next() % 4);
        int n = r + 2 + static_cast<int>(rng.next() % 7);
        Hypergraph h = random_hypergraph(n, r, make_rational(1, 5), rng.next(), 40);
        if (h.empty()) continue;
        ++done;
        auto [matching, s] = classify_maximum(h);
        std::vector<int> types(h.r() + 1, 0);
        for (int f = 0; f < h.size(); ++f) {
            REQUIRE(s.type_of[f] <= h.r());
            ++types[s.type_of[f]];
        }
        // matching edges are exactly the type-0 ones
        CHECK(types[0] == static_cast<int>(matching.size()));
        for (std::size_t p = 0; p < matching.size(); ++p) {
            CHECK(s.level[p] <= h.r());
            CHECK(s.level[p] == static_cast<int>(s.indispensable[p].size()));
            if (!s.type1[p].empty()) CHECK(s.hub[p].kind != Hub::Kind::None);
        }
    }
}
