#include <catch2/catch_amalgamated.hpp>

#include "hypercover/prng.hpp"
#include "hypercover/simplex.hpp"

using namespace hypercover;

TEST_CASE("box LP") {
    PackingLp lp(2, 2);
    lp.set_coefficient(0, 0, 1);
    lp.set_coefficient(1, 1, 1);
    lp.set_rhs(0, 1);
    lp.set_rhs(1, 1);
    lp.set_objective(0, 1);
    lp.set_objective(1, 1);
    LpResult r = lp.solve();
    CHECK(r.value == 2);
    CHECK(r.primal == std::vector<Rational>{1, 1});
    CHECK(r.dual == std::vector<Rational>{1, 1});
}

TEST_CASE("fractional optimum: edge packing of a triangle") {
    // max x12 + x13 + x23 subject to pairwise sums <= 1 at each vertex.
    PackingLp lp(3, 3);
    int touch[3][2] = {{0, 1}, {0, 2}, {1, 2}};  // variable -> constraints
    for (int v = 0; v < 3; ++v) lp.set_rhs(v, 1);
    for (int x = 0; x < 3; ++x) {
        lp.set_objective(x, 1);
        lp.set_coefficient(touch[x][0], x, 1);
        lp.set_coefficient(touch[x][1], x, 1);
    }
    LpResult r = lp.solve();
    CHECK(r.value == make_rational(3, 2));
    for (const Rational& x : r.primal) CHECK(x == make_rational(1, 2));
}

TEST_CASE("zero objective and empty problems") {
    PackingLp lp(2, 1);
    lp.set_coefficient(0, 0, 1);
    lp.set_coefficient(0, 1, 1);
    lp.set_rhs(0, 5);
    LpResult r = lp.solve();
    CHECK(r.value == 0);

    PackingLp none(0, 0);
    CHECK(none.solve().value == 0);
}

TEST_CASE("optimality certificates on random 0/1 packing LPs") {
    int solved = 0;
    for (std::uint64_t seed = 1; solved < 40; ++seed) {
        SplitMix64 rng(seed);
        int n = 2 + static_cast<int>(rng.next() % 5);
        int m = 2 + static_cast<int>(rng.next() % 5);
        PackingLp lp(n, m);
        std::vector<std::vector<int>> a(m, std::vector<int>(n, 0));
        std::vector<int> b(m), c(n);
        for (int i = 0; i < m; ++i) {
            b[i] = 1 + static_cast<int>(rng.next() % 3);
            lp.set_rhs(i, b[i]);
            for (int j = 0; j < n; ++j)
                if (rng.next() % 2) {
                    a[i][j] = 1;
                    lp.set_coefficient(i, j, 1);
                }
        }
        for (int j = 0; j < n; ++j) {
            c[j] = 1 + static_cast<int>(rng.next() % 2);
            lp.set_objective(j, c[j]);
        }

        bool bounded = true;  // a zero column makes the problem unbounded
        for (int j = 0; j < n; ++j) {
            bool hit = false;
            for (int i = 0; i < m; ++i) hit |= a[i][j] == 1;
            if (!hit) bounded = false;
        }
        if (!bounded) continue;
        ++solved;

        LpResult r = lp.solve();
        Rational primal_obj = 0, dual_obj = 0;
        for (int j = 0; j < n; ++j) {
            CHECK(r.primal[j] >= 0);
            primal_obj += c[j] * r.primal[j];
        }
        for (int i = 0; i < m; ++i) {
            CHECK(r.dual[i] >= 0);
            dual_obj += b[i] * r.dual[i];
            Rational lhs = 0;
            for (int j = 0; j < n; ++j)
                if (a[i][j]) lhs += r.primal[j];
            CHECK(lhs <= b[i]);
        }
        for (int j = 0; j < n; ++j) {
            Rational col = 0;
            for (int i = 0; i < m; ++i)
                if (a[i][j]) col += r.dual[i];
            CHECK(col >= c[j]);
        }
        CHECK(primal_obj == r.value);
        CHECK(dual_obj == r.value);
    }
}
