// exact_params.hpp - Exact m-matching / m-cover numbers, their fractional
// analogues via the packing LP of H^(m), and cover certificates.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hypercover/errors.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/rational.hpp"
#include "hypercover/simplex.hpp"
#include "hypercover/subsets.hpp"

namespace hypercover {

inline constexpr int kMaxIlpEdges = 5000;
inline constexpr std::uint64_t kMaxLpSize = 100000;

using MSet = VertexSet;

struct FractionalMatching {
    int m = 0;
    std::vector<Rational> edge_weight;  // aligned with the ambient edge list

    Rational size() const {
        Rational s = 0;
        for (const Rational& w : edge_weight) s += w;
        return s;
    }
};

struct FractionalCover {
    int m = 0;
    std::map<MSet, Rational> weight;  // sparse, absent = 0

    Rational size() const {
        Rational s = 0;
        for (const auto& [x, w] : weight) s += w;
        return s;
    }
};

struct CoverCertificate {
    std::variant<std::vector<MSet>, FractionalCover> cover;
    Rational size = 0;
    Rational bound = 0;
    bool verified = false;
    std::vector<std::string> transcript;

    std::string transcript_text() const {
        std::string out;
        for (const std::string& line : transcript) { out += line; out += '\n'; }
        return out;
    }
};

namespace detail {

using Mask = std::vector<std::uint64_t>;

inline Mask make_mask(int bits) { return Mask((bits + 63) / 64, 0); }
inline void mask_set(Mask& m, int i) { m[i / 64] |= std::uint64_t(1) << (i % 64); }
inline void mask_clear(Mask& m, int i) { m[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }
inline bool mask_test(const Mask& m, int i) { return (m[i / 64] >> (i % 64)) & 1; }

inline int mask_count(const Mask& m) {
    int c = 0;
    for (std::uint64_t w : m) c += __builtin_popcountll(w);
    return c;
}

inline int mask_first(const Mask& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) return static_cast<int>(i * 64 + __builtin_ctzll(m[i]));
    return -1;
}

inline void mask_and_not(Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] &= ~b[i];
}

inline bool mask_empty(const Mask& m) {
    for (std::uint64_t w : m) if (w) return false;
    return true;
}

// conflict_mask[i] has bit j set when edges i and j share >= m vertices.
inline std::vector<Mask> conflict_masks(const Hypergraph& h, int m) {
    const int e = h.size();
    std::vector<Mask> conf(e, make_mask(e));
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
            if (intersection_size(h.edge(i), h.edge(j)) >= m) {
                mask_set(conf[i], j);
                mask_set(conf[j], i);
            }
    return conf;
}

inline void check_ilp_capacity(const Hypergraph& h, int m) {
    if (m < 1 || m > h.r()) throw InputError("need 1 <= m <= r");
    if (h.size() > kMaxIlpEdges)
        throw CapacityError("instance has " + std::to_string(h.size()) + " edges, ILP limit is " +
                            std::to_string(kMaxIlpEdges));
}

}  // namespace detail

struct MatchingResult {
    int value = 0;
    std::vector<int> witness;  // edge indices, ascending

    std::vector<Edge> witness_edges(const Hypergraph& h) const {
        std::vector<Edge> out;
        for (int i : witness) out.push_back(h.edge(i));
        return out;
    }
};

// Maximum set of edges pairwise intersecting in < m vertices. Depth-first
// branch and bound over edges in canonical order, include branch first, so the
// first optimum found (and returned) is the lexicographically first one.
inline MatchingResult matching_number(const Hypergraph& h, int m) {
    detail::check_ilp_capacity(h, m);
    const int e = h.size();
    auto conf = detail::conflict_masks(h, m);

    MatchingResult best;
    std::vector<int> chosen;
    detail::Mask avail = detail::make_mask(e);
    for (int i = 0; i < e; ++i) detail::mask_set(avail, i);

    auto rec = [&](auto&& self, detail::Mask av) -> void {
        if (static_cast<int>(chosen.size()) + detail::mask_count(av) <= best.value) return;
        int i = detail::mask_first(av);
        if (i < 0) {
            if (static_cast<int>(chosen.size()) > best.value) {
                best.value = static_cast<int>(chosen.size());
                best.witness = chosen;
            }
            return;
        }
        detail::Mask inc = av;
        detail::mask_clear(inc, i);
        detail::mask_and_not(inc, conf[i]);
        chosen.push_back(i);
        self(self, std::move(inc));
        chosen.pop_back();
        detail::mask_clear(av, i);
        self(self, std::move(av));
    };
    rec(rec, std::move(avail));
    return best;
}

struct CoverResult {
    int value = 0;
    std::vector<MSet> witness;  // m-sets
};

namespace detail {

inline Mask edges_containing(const Hypergraph& h, const MSet& x) {
    Mask out = make_mask(h.size());
    for (int i = 0; i < h.size(); ++i)
        if (is_subset(x, h.edge(i))) mask_set(out, i);
    return out;
}

// Greedy m-matching restricted to the uncovered edges: a valid lower bound on
// the number of m-sets still needed, since no m-set lies in two edges that
// share < m vertices.
inline int packing_lower_bound(const std::vector<Mask>& conf, const Mask& uncovered) {
    int count = 0;
    Mask av = uncovered;
    for (;;) {
        int i = mask_first(av);
        if (i < 0) break;
        ++count;
        mask_clear(av, i);
        mask_and_not(av, conf[i]);
    }
    return count;
}

}  // namespace detail

// Minimum number of m-sets hitting every edge. Branches on the m-subsets of
// the first uncovered edge (any minimal cover only uses m-subsets of edges),
// in lexicographic order, seeded with a greedy cover.
inline CoverResult cover_number(const Hypergraph& h, int m) {
    detail::check_ilp_capacity(h, m);
    const int e = h.size();
    if (e == 0) return {};
    auto conf = detail::conflict_masks(h, m);

    detail::Mask all = detail::make_mask(e);
    for (int i = 0; i < e; ++i) detail::mask_set(all, i);

    std::map<MSet, detail::Mask> cover_mask_cache;
    auto cover_mask = [&](const MSet& x) -> const detail::Mask& {
        auto it = cover_mask_cache.find(x);
        if (it == cover_mask_cache.end())
            it = cover_mask_cache.emplace(x, detail::edges_containing(h, x)).first;
        return it->second;
    };

    // Greedy: largest coverage first, lexicographically smallest on ties.
    CoverResult best;
    {
        detail::Mask uncovered = all;
        while (!detail::mask_empty(uncovered)) {
            MSet pick;
            int pick_cov = -1;
            for (int i = 0; i < e; ++i) {
                if (!detail::mask_test(uncovered, i)) continue;
                for_each_subset(h.edge(i), m, [&](const VertexSet& x) {
                    detail::Mask both = cover_mask(x);
                    for (std::size_t w = 0; w < both.size(); ++w) both[w] &= uncovered[w];
                    int cov = detail::mask_count(both);
                    if (cov > pick_cov || (cov == pick_cov && x < pick)) {
                        pick_cov = cov;
                        pick = x;
                    }
                });
            }
            best.witness.push_back(pick);
            detail::mask_and_not(uncovered, cover_mask(pick));
        }
        best.value = static_cast<int>(best.witness.size());
    }

    std::vector<MSet> chosen;
    auto rec = [&](auto&& self, const detail::Mask& uncovered) -> void {
        if (detail::mask_empty(uncovered)) {
            if (static_cast<int>(chosen.size()) < best.value) {
                best.value = static_cast<int>(chosen.size());
                best.witness = chosen;
            }
            return;
        }
        int lb = detail::packing_lower_bound(conf, uncovered);
        if (static_cast<int>(chosen.size()) + lb >= best.value) return;
        int i = detail::mask_first(uncovered);
        for_each_subset(h.edge(i), m, [&](const VertexSet& x) {
            detail::Mask next = uncovered;
            detail::mask_and_not(next, cover_mask(x));
            chosen.push_back(x);
            self(self, next);
            chosen.pop_back();
        });
    };
    rec(rec, all);
    return best;
}

struct FractionalResult {
    Rational value;  // nu*^(m) = tau*^(m)
    FractionalMatching primal;
    FractionalCover dual;
};

// nu*^(m) = tau*^(m) by exact LP. The packing orientation of the covering LP
// of H^(m) is solved (its slack basis is feasible); the final tableau yields
// the optimal fractional matching and, through the duals, the optimal
// fractional cover. m-sets lying in a single edge are collapsed into one
// s_e <= 1 row per edge, which changes neither the feasible region nor the
// optimum; each such row reports its cover weight on a representative m-set
// private to that edge. Feasibility, equal objectives and complementary
// slackness of the returned pair are re-verified exactly before returning.
inline FractionalResult fractional_numbers(const Hypergraph& h, int m) {
    if (m < 1 || m > h.r()) throw InputError("need 1 <= m <= r");
    const int e = h.size();

    std::map<MSet, std::vector<int>> active;  // m-set -> containing edges
    for (int i = 0; i < e; ++i)
        for_each_subset(h.edge(i), m, [&](const VertexSet& x) { active[x].push_back(i); });

    struct Row {
        MSet representative;
        std::vector<int> cols;
    };
    std::vector<Row> rows;
    for (const auto& [x, es] : active)
        if (es.size() >= 2) rows.push_back({x, es});
    for (int i = 0; i < e; ++i) {
        MSet rep;
        for_each_subset(h.edge(i), m, [&](const VertexSet& x) {
            if (rep.empty() && active.at(x).size() == 1) rep = x;
        });
        if (!rep.empty()) rows.push_back({rep, {i}});
    }

    if (static_cast<std::uint64_t>(rows.size()) + e > kMaxLpSize)
        throw CapacityError("LP size exceeds " + std::to_string(kMaxLpSize));

    PackingLp lp(e, static_cast<int>(rows.size()));
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        lp.set_rhs(i, 1);
        for (int j : rows[i].cols) lp.set_coefficient(i, j, 1);
    }
    for (int j = 0; j < e; ++j) lp.set_objective(j, 1);
    LpResult sol = lp.solve();

    FractionalResult res;
    res.value = sol.value;
    res.primal.m = m;
    res.primal.edge_weight = sol.primal;
    res.dual.m = m;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        if (sol.dual[i] != 0) res.dual.weight[rows[i].representative] += sol.dual[i];

    // Exact verification of the returned optimal pair.
    for (const Rational& w : res.primal.edge_weight)
        if (w < 0) throw TheoremViolation("negative matching weight");
    for (const auto& [x, w] : res.dual.weight)
        if (w < 0) throw TheoremViolation("negative cover weight");
    for (const auto& [x, es] : active) {
        Rational s = 0;
        for (int i : es) s += res.primal.edge_weight[i];
        if (s > 1) throw TheoremViolation("fractional matching constraint violated");
    }
    Rational primal_size = 0;
    for (const Rational& w : res.primal.edge_weight) primal_size += w;
    Rational dual_size = res.dual.size();
    if (primal_size != res.value || dual_size != res.value)
        throw TheoremViolation("LP duality gap in returned pair");
    for (int i = 0; i < e; ++i) {
        Rational covered = 0;
        for_each_subset(h.edge(i), m, [&](const VertexSet& x) {
            auto it = res.dual.weight.find(x);
            if (it != res.dual.weight.end()) covered += it->second;
        });
        if (covered < 1) throw TheoremViolation("fractional cover constraint violated");
        if (res.primal.edge_weight[i] > 0 && covered != 1)
            throw TheoremViolation("complementary slackness violated at an edge");
    }
    for (const auto& [x, w] : res.dual.weight) {
        if (w == 0) continue;
        Rational s = 0;
        for (int i : active.at(x)) s += res.primal.edge_weight[i];
        if (s != 1) throw TheoremViolation("complementary slackness violated at an m-set");
    }
    return res;
}

// ---------------------------------------------------------------------------
// Cover verification and certificates.

inline CoverCertificate verify_cover(const Hypergraph& h, int m,
                                     const std::variant<std::vector<MSet>, FractionalCover>& cover,
                                     std::optional<Rational> bound = std::nullopt) {
    if (m < 1 || m > h.r()) throw InputError("need 1 <= m <= r");

    std::map<MSet, Rational> weight;
    if (std::holds_alternative<std::vector<MSet>>(cover)) {
        for (const MSet& x : std::get<std::vector<MSet>>(cover)) weight[x] = 1;
    } else {
        weight = std::get<FractionalCover>(cover).weight;
    }

    CoverCertificate cert;
    cert.cover = cover;
    bool valid = true;
    for (const auto& [x, w] : weight) {
        std::ostringstream line;
        line << "w " << format_rational(w) << " :";
        for (int v : x) line << ' ' << v;
        cert.transcript.push_back(line.str());
        cert.size += w;
        if (static_cast<int>(x.size()) != m || !is_strictly_increasing(x) || x.front() < 1 ||
            x.back() > h.n()) {
            valid = false;
            cert.transcript.push_back("invalid m-set above");
        }
        if (w < 0) {
            valid = false;
            cert.transcript.push_back("negative weight above");
        }
    }
    for (const Edge& e : h.edges()) {
        Rational covered = 0;
        for_each_subset(e, m, [&](const VertexSet& x) {
            auto it = weight.find(x);
            if (it != weight.end()) covered += it->second;
        });
        if (covered < 1) {
            valid = false;
            std::ostringstream line;
            line << "violated edge:";
            for (int v : e) line << ' ' << v;
            line << " (covered " << format_rational(covered) << ")";
            cert.transcript.push_back(line.str());
        }
    }
    cert.bound = bound.value_or(cert.size);
    cert.verified = valid && cert.size <= cert.bound;
    std::ostringstream tail;
    tail << "size=" << format_rational(cert.size) << " bound=" << format_rational(cert.bound)
         << " valid=" << (cert.verified ? 1 : 0);
    cert.transcript.push_back(tail.str());
    return cert;
}

// Reads weight lines of a certificate transcript ("w p/q : v1 v2 ...") plus an
// optional trailing "size=... bound=... valid=..." record.
struct ParsedCover {
    FractionalCover cover;
    std::optional<Rational> bound;
};

inline ParsedCover parse_cover_transcript(std::istream& in, int m) {
    ParsedCover out;
    out.cover.m = m;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("size=", 0) == 0) {
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok)
                if (tok.rfind("bound=", 0) == 0) out.bound = parse_rational(tok.substr(6));
            continue;
        }
        std::istringstream ls(line);
        std::string w, weight_text, colon;
        if (!(ls >> w >> weight_text >> colon) || w != "w" || colon != ":")
            throw InputError("line " + std::to_string(lineno) + ": expected 'w <p>/<q> : v1 v2 ...'");
        Rational weight = parse_rational(weight_text);
        MSet x;
        int v;
        while (ls >> v) x.push_back(v);
        if (!ls.eof()) throw InputError("line " + std::to_string(lineno) + ": bad vertex id");
        out.cover.weight[x] += weight;
    }
    return out;
}

inline ParsedCover parse_cover_transcript(const std::string& text, int m) {
    std::istringstream in(text);
    return parse_cover_transcript(in, m);
}

// ---------------------------------------------------------------------------

struct RatioReport {
    int nu = 0;
    int tau = 0;
    Rational nustar;  // = taustar
    bool ratios_defined = false;
    Rational tau_over_nu, taustar_over_nu, tau_over_nustar;
};

inline RatioReport ratio_report(const Hypergraph& h, int m) {
    RatioReport rep;
    MatchingResult mr = matching_number(h, m);
    CoverResult cr = cover_number(h, m);
    FractionalResult fr = fractional_numbers(h, m);
    rep.nu = mr.value;
    rep.tau = cr.value;
    rep.nustar = fr.value;
    if (rep.nu >= 1) {
        rep.ratios_defined = true;
        rep.tau_over_nu = make_rational(rep.tau, rep.nu);
        rep.taustar_over_nu = rep.nustar / rep.nu;
        rep.tau_over_nustar = Rational(rep.tau) / rep.nustar;
    }
    return rep;
}

}  // namespace hypercover
