#include <catch2/catch_amalgamated.hpp>

#include "hypercover/exact_params.hpp"
#include "support/naive.hpp"

using namespace hypercover;

TEST_CASE("matching numbers on the named instances") {
    for (int r = 2; r <= 6; ++r) {
        auto res = matching_number(builtin_instance("simplex(" + std::to_string(r) + ")"), r - 1);
        CHECK(res.value == 1);
        CHECK(res.witness == std::vector<int>{0});
    }
    CHECK(matching_number(builtin_instance("seven_edge"), 2).value == 1);
    CHECK(matching_number(Hypergraph(4, 3, {}), 2).value == 0);
    CHECK(matching_number(Hypergraph(4, 3, {}), 2).witness.empty());
}

TEST_CASE("matching witness is the lexicographically first maximum matching") {
    // Edges 123 and 145 conflict at m=1 only; at m=2 all are compatible except 123/124.
    Hypergraph h(6, 3, {{1, 2, 3}, {1, 2, 4}, {4, 5, 6}});
    auto res = matching_number(h, 2);
    CHECK(res.value == 2);
    CHECK(res.witness == std::vector<int>{0, 2});
}

TEST_CASE("cover numbers on the named instances") {
    CHECK(cover_number(builtin_instance("k6_quad"), 2).value == 3);
    CHECK(cover_number(parse_hg1("6 4\n1 2 3 4\n"), 2).value == 1);
    CHECK(cover_number(parse_hg1("6 4\n1 2 3 4\n"), 3).value == 1);
    // Independent brute-force oracle fixes tau^(2) of the seven-edge instance.
    Hypergraph seven = builtin_instance("seven_edge");
    CHECK(testing::naive_cover_number(seven, 2) == 4);
    auto res = cover_number(seven, 2);
    CHECK(res.value == 4);
    auto cert = verify_cover(seven, 2, res.witness);
    CHECK(cert.verified);
    CHECK(cert.size == 4);
}

TEST_CASE("fractional numbers on the named instances") {
    for (int r = 3; r <= 6; ++r) {
        auto res = fractional_numbers(builtin_instance("simplex(" + std::to_string(r) + ")"), r - 1);
        CHECK(res.value == make_rational(r + 1, 2));
    }
    CHECK(fractional_numbers(builtin_instance("seven_edge"), 2).value == make_rational(7, 2));
    CHECK(fractional_numbers(builtin_instance("k6_quad"), 2).value == make_rational(5, 2));
    CHECK(fractional_numbers(Hypergraph(5, 3, {}), 2).value == 0);
}

TEST_CASE("verify_cover accepts the blown-up maximum matching") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Hypergraph h = random_hypergraph(8, 3, make_rational(1, 4), seed);
        int m = 2;
        auto mr = matching_number(h, m);
        std::vector<MSet> blowup;
        for (int i : mr.witness)
            for (const VertexSet& x : subsets_of(h.edge(i), m)) blowup.push_back(x);
        auto cert = verify_cover(h, m, blowup);
        CHECK(cert.verified);
        CHECK(cert.size == static_cast<long>(binomial(h.r(), m)) * mr.value);
    }
}

TEST_CASE("verify_cover accepts the uniform simplex cover and rejects the empty one") {
    int r = 4;
    Hypergraph h = builtin_instance("simplex(4)");
    FractionalCover cov;
    cov.m = r - 1;
    for (const VertexSet& x : subsets_of_range(r + 1, r - 1)) cov.weight[x] = make_rational(1, r);
    auto cert = verify_cover(h, r - 1, cov);
    CHECK(cert.verified);
    CHECK(cert.size == make_rational(r + 1, 2));

    auto bad = verify_cover(h, r - 1, FractionalCover{r - 1, {}});
    CHECK_FALSE(bad.verified);
    CHECK(bad.transcript.size() >= 2);
}

TEST_CASE("verify_cover respects an explicit bound") {
    Hypergraph h = parse_hg1("4 2\n1 2\n");
    auto ok = verify_cover(h, 1, std::vector<MSet>{{1}}, Rational(1));
    CHECK(ok.verified);
    auto too_small = verify_cover(h, 1, std::vector<MSet>{{1}, {3}}, Rational(1));
    CHECK_FALSE(too_small.verified);
}

TEST_CASE("transcript round trip") {
    Hypergraph h = builtin_instance("simplex(3)");
    FractionalCover cov;
    cov.m = 2;
    for (const VertexSet& x : subsets_of_range(4, 2)) cov.weight[x] = make_rational(1, 3);
    auto cert = verify_cover(h, 2, cov, Rational(2));
    REQUIRE(cert.verified);
    ParsedCover back = parse_cover_transcript(cert.transcript_text(), 2);
    CHECK(back.cover.weight == cov.weight);
    REQUIRE(back.bound.has_value());
    CHECK(*back.bound == 2);
}

TEST_CASE("chain inequality on random instances") {
    int done = 0;
    for (std::uint64_t seed = 1; done < 60; ++seed) {
        SplitMix64 rng(seed);
        int n = 5 + static_cast<int>(rng.next() % 4);
        int r = 2 + static_cast<int>(rng.next() % 3);
        if (r > n) continue;
        Hypergraph h = random_hypergraph(n, r, make_rational(1, 3), rng.next());
        if (h.size() > 25) continue;
        ++done;
        for (int m = 1; m <= r; ++m) {
            auto nu = matching_number(h, m).value;
            auto tau = cover_number(h, m).value;
            auto star = fractional_numbers(h, m).value;
            CHECK(Rational(nu) <= star);
            CHECK(star <= Rational(tau));
            CHECK(Rational(tau) <= Rational(nu) * static_cast<long>(binomial(r, m)));
        }
    }
}

TEST_CASE("solvers agree with the naive oracles on tiny instances") {
    int done = 0;
    for (std::uint64_t seed = 1; done < 30; ++seed) {
        SplitMix64 rng(seed);
        int n = 4 + static_cast<int>(rng.next() % 3);
        int r = 2 + static_cast<int>(rng.next() % 3);
        if (r > n) continue;
        Hypergraph h = random_hypergraph(n, r, make_rational(1, 3), rng.next(), 8);
        ++done;
        for (int m = 1; m <= r; ++m) {
            CHECK(matching_number(h, m).value == testing::naive_matching_number(h, m));
            CHECK(cover_number(h, m).value == testing::naive_cover_number(h, m));
        }
    }
}

TEST_CASE("dual support count matches C(r,m) nu* under strict complementarity") {
    // When every positively weighted edge has all of its m-subsets positively
    // weighted in the cover, the number of positive cover weights equals
    // C(r,m) times the optimum.
    auto check = [](const Hypergraph& h, int m) {
        auto fr = fractional_numbers(h, m);
        bool strict = true;
        for (int i = 0; i < h.size(); ++i) {
            if (fr.primal.edge_weight[i] == 0) continue;
            for_each_subset(h.edge(i), m, [&](const VertexSet& x) {
                auto it = fr.dual.weight.find(x);
                if (it == fr.dual.weight.end() || it->second == 0) strict = false;
            });
        }
        if (!strict) return;
        long support = 0;
        for (const auto& [x, w] : fr.dual.weight)
            if (w > 0) ++support;
        CHECK(Rational(support) == static_cast<long>(binomial(h.r(), m)) * fr.value);
    };
    check(builtin_instance("seven_edge"), 2);
    check(builtin_instance("k6_quad"), 2);
    for (int r = 3; r <= 5; ++r) check(builtin_instance("simplex(" + std::to_string(r) + ")"), r - 1);
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        check(random_hypergraph(8, 3, make_rational(1, 3), seed * 401, 15), 2);
}

TEST_CASE("ratio reports") {
    auto k6 = ratio_report(builtin_instance("k6_quad"), 2);
    CHECK(k6.ratios_defined);
    CHECK(k6.taustar_over_nu == make_rational(5, 2));
    auto seven = ratio_report(builtin_instance("seven_edge"), 2);
    CHECK(seven.taustar_over_nu == make_rational(7, 2));
    auto s3 = ratio_report(builtin_instance("simplex(3)"), 2);
    CHECK(s3.tau_over_nu == 2);
    auto none = ratio_report(Hypergraph(4, 3, {}), 2);
    CHECK_FALSE(none.ratios_defined);
    CHECK(none.nu == 0);
}

TEST_CASE("capacity and precondition errors") {
    Hypergraph h = parse_hg1("4 3\n1 2 3\n");
    CHECK_THROWS_AS(matching_number(h, 0), InputError);
    CHECK_THROWS_AS(matching_number(h, 4), InputError);
    CHECK_THROWS_AS(fractional_numbers(h, 0), InputError);
    CHECK_THROWS_AS(matching_number(complete_hypergraph(21, 4), 3), CapacityError);
    CHECK_THROWS_AS(derive(Hypergraph(500, 2, {}), 2), CapacityError);
    CHECK_THROWS_AS(complete_hypergraph(600, 2), CapacityError);
}
