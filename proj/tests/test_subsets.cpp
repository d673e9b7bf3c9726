#include <catch2/catch_amalgamated.hpp>

#include "hypercover/subsets.hpp"

using namespace hypercover;

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 4) == 15);
    CHECK(binomial(8, 5) == 56);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(24, 12) == 2704156);
}

TEST_CASE("subset enumeration is lexicographic and complete") {
    auto subs = subsets_of_range(5, 3);
    REQUIRE(subs.size() == 10);
    CHECK(subs.front() == VertexSet{1, 2, 3});
    CHECK(subs.back() == VertexSet{3, 4, 5});
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    for (std::size_t i = 0; i < subs.size(); ++i)
        CHECK(lex_rank(subs[i], 5) == i);
}

TEST_CASE("sorted-vector set operations") {
    VertexSet a{1, 3, 5, 7}, b{3, 4, 5};
    CHECK(intersection_size(a, b) == 2);
    CHECK(set_intersection(a, b) == VertexSet{3, 5});
    CHECK(set_union(a, b) == VertexSet{1, 3, 4, 5, 7});
    CHECK(set_difference(a, b) == VertexSet{1, 7});
    CHECK(is_subset({3, 5}, a));
    CHECK_FALSE(is_subset({3, 4}, a));
    CHECK(contains_vertex(a, 7));
    CHECK_FALSE(contains_vertex(a, 2));
    CHECK(is_strictly_increasing({1, 2, 9}));
    CHECK_FALSE(is_strictly_increasing({1, 1, 2}));
}
