// hypergraph.hpp - r-uniform hypergraphs, graphs, generators and text formats.
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hypercover/errors.hpp"
#include "hypercover/prng.hpp"
#include "hypercover/rational.hpp"
#include "hypercover/subsets.hpp"

namespace hypercover {

using Edge = VertexSet;

// Desk-scale guardrail shared by derive() and the generators.
inline constexpr std::uint64_t kMaxGeneratedSize = 100000;

// Immutable r-uniform hypergraph on vertices 1..n. The edge list is kept in
// canonical form: every edge strictly increasing, edges distinct and sorted
// lexicographically. Equality is list equality.
class Hypergraph {
public:
    Hypergraph(int n, int r, std::vector<Edge> edges) : n_(n), r_(r), edges_(std::move(edges)) {
        if (n_ < 1) throw InputError("vertex count must be positive");
        if (r_ < 1 || r_ > n_) throw InputError("uniformity must satisfy 1 <= r <= n");
        for (Edge& e : edges_) {
            if (static_cast<int>(e.size()) != r_) throw InputError("edge of wrong arity");
            if (!is_strictly_increasing(e)) throw InputError("edge vertices not strictly increasing");
            if (e.front() < 1 || e.back() > n_) throw InputError("edge vertex out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw InputError("duplicate edge");
    }

    int n() const { return n_; }
    int r() const { return r_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    bool has_edge(const Edge& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    int r_;
    std::vector<Edge> edges_;
};

// Simple graph on 1..n, edges stored as sorted (u, v) pairs with u < v.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 1) throw InputError("vertex count must be positive");
        for (auto& [u, v] : edges_) {
            if (u >= v) throw InputError("graph edge must satisfy u < v");
            if (u < 1 || v > n_) throw InputError("graph edge vertex out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw InputError("duplicate graph edge");
    }

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
    }

    static Graph complete(int n) {
        std::vector<std::pair<int, int>> es;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) es.emplace_back(u, v);
        return Graph(n, std::move(es));
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

// ---------------------------------------------------------------------------
// HG1 text format: '#' comment lines, then "n r", then one edge per line as r
// ascending ids. LF endings; the serializer emits canonical edge order.

inline Hypergraph parse_hg1(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, r = -1;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& msg) {
        throw InputError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> r)) fail("malformed header, expected 'n r'");
            std::string rest;
            if (ls >> rest) fail("malformed header, expected 'n r'");
            if (n < 1 || r < 1 || r > n) fail("header out of range (need 1 <= r <= n)");
            continue;
        }
        Edge e;
        int v;
        while (ls >> v) e.push_back(v);
        if (!ls.eof()) fail("non-numeric token in edge");
        if (static_cast<int>(e.size()) != r)
            fail("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
        if (!is_strictly_increasing(e)) fail("edge vertices not strictly increasing");
        if (e.front() < 1 || e.back() > n) fail("vertex out of range 1.." + std::to_string(n));
        for (const Edge& prev : edges)
            if (prev == e) fail("duplicate edge");
        edges.push_back(std::move(e));
    }
    if (n < 0) throw InputError("empty input, expected HG1 header");
    return Hypergraph(n, r, std::move(edges));
}

inline Hypergraph parse_hg1(const std::string& text) {
    std::istringstream in(text);
    return parse_hg1(in);
}

inline std::string serialize_hg1(const Hypergraph& h) {
    std::ostringstream out;
    out << h.n() << ' ' << h.r() << '\n';
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

// GR1: "n" then one "u v" line per edge, u < v.
inline Graph parse_gr1(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    auto fail = [&](const std::string& msg) {
        throw InputError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) fail("malformed header, expected 'n'");
            if (n < 1) fail("vertex count must be positive");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) fail("malformed edge, expected 'u v'");
        if (u >= v) fail("edge must satisfy u < v");
        if (u < 1 || v > n) fail("vertex out of range");
        if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end())
            fail("duplicate graph edge");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw InputError("empty input, expected GR1 header");
    return Graph(n, std::move(edges));
}

inline Graph parse_gr1(const std::string& text) {
    std::istringstream in(text);
    return parse_gr1(in);
}

inline std::string serialize_gr1(const Graph& g) {
    std::ostringstream out;
    out << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Generators and derived hypergraphs.

inline Hypergraph complete_hypergraph(int n, int r) {
    if (n < 1 || r < 1 || r > n) throw InputError("complete hypergraph needs 1 <= r <= n");
    if (binomial(n, r) > kMaxGeneratedSize)
        throw CapacityError("complete hypergraph would exceed " + std::to_string(kMaxGeneratedSize) + " edges");
    return Hypergraph(n, r, subsets_of_range(n, r));
}

// H^(m): vertices are the m-subsets of [n], identified with their 1-based
// lexicographic rank; each original edge maps to the set of ranks of its
// m-subsets. Distinct edges stay distinct (asserted).
inline Hypergraph derive(const Hypergraph& h, int m) {
    if (m < 1 || m > h.r()) throw InputError("derive needs 1 <= m <= r");
    std::uint64_t derived_n = binomial(h.n(), m);
    if (derived_n > kMaxGeneratedSize)
        throw CapacityError("derived hypergraph would have " + std::to_string(derived_n) + " vertices");
    std::vector<Edge> edges;
    edges.reserve(h.size());
    for (const Edge& e : h.edges()) {
        Edge de;
        for_each_subset(e, m, [&](const VertexSet& s) {
            de.push_back(static_cast<int>(lex_rank(s, h.n())) + 1);
        });
        std::sort(de.begin(), de.end());
        edges.push_back(std::move(de));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw TheoremViolation("distinct edges collapsed in derived hypergraph");
    int nn = static_cast<int>(derived_n);
    int rr = static_cast<int>(binomial(h.r(), m));
    return Hypergraph(nn, rr, std::move(edges));
}

inline Hypergraph complement(const Hypergraph& h) {
    std::vector<Edge> edges;
    for_each_subset(range_set(h.n()), h.r(), [&](const VertexSet& s) {
        if (!h.has_edge(s)) edges.push_back(s);
    });
    return Hypergraph(h.n(), h.r(), std::move(edges));
}

// H(G, r): edges are the r-cliques of g.
inline Hypergraph clique_hypergraph(const Graph& g, int r) {
    if (r < 2) throw InputError("clique hypergraph needs r >= 2");
    if (r > g.n()) throw InputError("clique hypergraph needs r <= n");
    std::vector<Edge> edges;
    VertexSet cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) { edges.push_back(cur); return; }
        for (int v = start; v <= g.n() - (r - static_cast<int>(cur.size())) + 1; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return Hypergraph(g.n(), r, std::move(edges));
}

struct InducedSubhypergraph {
    Hypergraph sub;
    // original_vertex[i] is the original id of sub vertex i+1.
    std::vector<int> original_vertex;
};

// Edges of h contained in x, relabeled by rank within x.
inline InducedSubhypergraph induced(const Hypergraph& h, const VertexSet& x) {
    if (!is_strictly_increasing(x)) throw InputError("induced vertex set must be strictly increasing");
    if (!x.empty() && (x.front() < 1 || x.back() > h.n())) throw InputError("induced vertex out of range");
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
        if (!is_subset(e, x)) continue;
        Edge rel;
        for (int v : e)
            rel.push_back(static_cast<int>(std::lower_bound(x.begin(), x.end(), v) - x.begin()) + 1);
        edges.push_back(std::move(rel));
    }
    int nn = std::max<int>(1, static_cast<int>(x.size()));
    int rr = edges.empty() ? std::min(h.r(), nn) : h.r();
    return InducedSubhypergraph{Hypergraph(nn, rr, std::move(edges)), x};
}

// Named instances: "k6_quad", "seven_edge", "simplex(r)".
inline Hypergraph builtin_instance(const std::string& name) {
    if (name == "k6_quad") return complete_hypergraph(6, 4);
    if (name == "seven_edge") {
        std::vector<Edge> edges = {{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}, {1, 3, 6, 7},
                                   {2, 4, 6, 7}, {1, 4, 5, 7}, {2, 3, 5, 7}};
        return Hypergraph(7, 4, std::move(edges));
    }
    if (name.rfind("simplex(", 0) == 0 && name.back() == ')') {
        const std::string arg = name.substr(8, name.size() - 9);
        int r;
        try {
            r = std::stoi(arg);
        } catch (...) {
            throw InputError("bad simplex argument: '" + arg + "'");
        }
        if (r < 1) throw InputError("simplex needs r >= 1");
        return complete_hypergraph(r + 1, r);
    }
    throw InputError("unknown builtin instance: '" + name + "'");
}

// Each r-subset of [n] included independently with probability p, drawn from
// the deterministic generator. Byte-identical output per seed.
inline Hypergraph random_hypergraph(int n, int r, const Rational& p, std::uint64_t seed,
                                    std::optional<int> max_edges = std::nullopt) {
    if (n < 1 || r < 1 || r > n) throw InputError("random hypergraph needs 1 <= r <= n");
    if (p < 0 || p > 1) throw InputError("edge probability must be in [0, 1]");
    if (binomial(n, r) > kMaxGeneratedSize)
        throw CapacityError("random hypergraph over " + std::to_string(kMaxGeneratedSize) + " candidate edges");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for_each_subset(range_set(n), r, [&](const VertexSet& s) {
        if (max_edges && static_cast<int>(edges.size()) >= *max_edges) return;
        if (rng.bernoulli(p)) edges.push_back(s);
    });
    return Hypergraph(n, r, std::move(edges));
}

}  // namespace hypercover
