#include <catch2/catch_amalgamated.hpp>

#include "hypercover/clique_cover.hpp"
#include "hypercover/prng.hpp"

using namespace hypercover;

namespace {

Graph random_graph(int n, const Rational& p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("cover of the complete graph on six vertices") {
    auto cert = cover_42_clique(Graph::complete(6));
    REQUIRE(cert.verified);
    CHECK(cert.size <= 4);
}

TEST_CASE("graphs without a K4 get the empty cover") {
    Graph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    auto cert = cover_42_clique(c5);
    CHECK(cert.verified);
    CHECK(cert.size == 0);
    auto tiny = cover_42_clique(Graph(3, {{1, 2}, {2, 3}}));
    CHECK(tiny.verified);
    CHECK(tiny.size == 0);
}

TEST_CASE("two K6 blocks sharing one vertex") {
    std::vector<std::pair<int, int>> edges;
    auto add_clique = [&](std::vector<int> vs) {
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                edges.emplace_back(std::min(vs[a], vs[b]), std::max(vs[a], vs[b]));
    };
    add_clique({1, 2, 3, 4, 5, 6});
    add_clique({6, 7, 8, 9, 10, 11});
    Graph g(11, std::move(edges));
    auto cert = cover_42_clique(g);
    REQUIRE(cert.verified);
    int nu = matching_number(clique_hypergraph(g, 4), 2).value;
    CHECK(nu == 2);
    CHECK(cert.size <= 4 * nu);
}

TEST_CASE("the (4,2) classification sees the disjoint-pair link in a K6") {
    Hypergraph h = clique_hypergraph(Graph::complete(6), 4);
    MatchingResult mr = matching_number(h, 2);
    REQUIRE(mr.value == 1);
    CliqueMatchingStructure s = classify_42(h, mr.witness);
    // e = 1234; pairs 12 and 34 are indispensable with witnesses meeting in 56.
    auto q = disjoint_pair_link(h, s, 0, {1, 2}, {3, 4});
    REQUIRE(q.has_value());
    CHECK(*q == VertexSet{5, 6});
    // The induced hypergraph on e and the link is the complete 4-graph on 6 vertices.
    VertexSet block = set_union(h.edge(mr.witness[0]), *q);
    CHECK(induced(h, block).sub == complete_hypergraph(6, 4));
}

TEST_CASE("random graphs stay within four times the matching number") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = random_graph(4 + static_cast<int>(seed % 9), make_rational(1, 2), seed * 31);
        auto cert = cover_42_clique(g);
        INFO(serialize_gr1(g));
        INFO(cert.transcript_text());
        REQUIRE(cert.verified);
        if (g.n() >= 4) {
            int nu = matching_number(clique_hypergraph(g, 4), 2).value;
            CHECK(cert.size <= 4 * nu);
        }
    }
}
