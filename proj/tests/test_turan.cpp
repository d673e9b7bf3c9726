#include <catch2/catch_amalgamated.hpp>

#include "hypercover/turan.hpp"

using namespace hypercover;

namespace {

// Tiny-scale oracle: scan all subsets of the r-sets of [n] for the largest
// K_k^r-free family. Usable up to a dozen candidate edges.
int oracle_turan(int n, int r, int k) {
    auto rsets = subsets_of_range(n, r);
    auto ksets = subsets_of_range(n, k);
    const int e = static_cast<int>(rsets.size());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << e); ++mask) {
        bool free = true;
        for (const VertexSet& u : ksets) {
            bool complete = true;
            for_each_subset(u, r, [&](const VertexSet& s) {
                if (!complete) return;
                std::uint64_t bit = std::uint64_t(1) << lex_rank(s, n);
                if (!(mask & bit)) complete = false;
            });
            if (complete) { free = false; break; }
        }
        if (free) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("small Turan numbers against the subset-scan oracle") {
    CHECK(oracle_turan(4, 2, 3) == 4);
    CHECK(turan_number(4, 2, 3) == 4);
    CHECK(oracle_turan(4, 3, 4) == 3);
    CHECK(turan_number(4, 3, 4) == 3);
    CHECK(turan_number(3, 2, 3) == 2);
    CHECK(oracle_turan(5, 3, 4) == turan_number(5, 3, 4));
    CHECK(oracle_turan(4, 2, 4) == turan_number(4, 2, 4));
}

TEST_CASE("triangle-free graphs follow the bipartite count") {
    // ex_2(n,3) = floor(n^2/4)
    for (int n = 3; n <= 8; ++n) CHECK(turan_number(n, 2, 3) == n * n / 4);
}

TEST_CASE("covering numbers at tiny sizes") {
    CHECK(covering_design_number(4, 4, 3) == 1);
    CHECK(covering_design_number(3, 3, 2) == 1);
    CHECK(covering_design_number(5, 4, 3) == 3);
}

TEST_CASE("the covering and Turan searches complement each other") {
    for (int n = 3; n <= 7; ++n)
        for (int r = 1; r <= std::min(4, n - 1); ++r)
            for (int k = r + 1; k <= n; ++k)
                CHECK(covering_design_number(n, k, r) + turan_number(n, r, k) ==
                      static_cast<int>(binomial(n, r)));
}

TEST_CASE("monotone in n and k") {
    for (int r = 2; r <= 3; ++r)
        for (int k = r + 1; k <= 6; ++k)
            for (int n = k; n < 7; ++n) {
                CHECK(turan_number(n + 1, r, k) >= turan_number(n, r, k));
                if (k + 1 <= n)
                    CHECK(turan_number(n, r, k + 1) >= turan_number(n, r, k));
            }
}

TEST_CASE("capacity guardrails") {
    CHECK_THROWS_AS(turan_number(11, 3, 4), CapacityError);
    CHECK_THROWS_AS(turan_number(10, 4, 5), CapacityError);
    CHECK_THROWS_AS(turan_number(6, 3, 3), InputError);
    CHECK_THROWS_AS(covering_design_number(6, 7, 3), InputError);
}
