// clique_cover.hpp - Fractional 2-covers of clique 4-graphs via a maximum
// 2-matching and a two-pair patch per matching edge.
#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hypercover/exact_params.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/subsets.hpp"

namespace hypercover {

// Classification of a maximum 2-matching of a 4-graph. Type-1 here means:
// meets one matching edge in >= 2 vertices and every other in <= 1.
struct CliqueMatchingStructure {
    std::vector<int> matching;
    std::vector<std::vector<int>> type1;                // per matching position
    std::vector<std::vector<VertexSet>> indispensable;  // pairs p with f cap e = p
    std::vector<std::vector<int>> witness_of;           // first witness per pair
};

inline CliqueMatchingStructure classify_42(const Hypergraph& h, const std::vector<int>& matching) {
    if (h.r() != 4) throw InputError("the (4,2) classification needs a 4-graph");
    CliqueMatchingStructure s;
    s.matching = matching;
    std::sort(s.matching.begin(), s.matching.end());
    const int msize = static_cast<int>(s.matching.size());
    s.type1.assign(msize, {});
    s.indispensable.assign(msize, {});
    s.witness_of.assign(msize, {});

    std::vector<char> in_matching(h.size(), 0);
    for (int i : s.matching) in_matching[i] = 1;

    for (int f = 0; f < h.size(); ++f) {
        if (in_matching[f]) continue;
        std::vector<int> met;
        for (int p = 0; p < msize; ++p)
            if (intersection_size(h.edge(f), h.edge(s.matching[p])) >= 2) met.push_back(p);
        if (met.size() == 1) s.type1[met[0]].push_back(f);
    }

    for (int p = 0; p < msize; ++p) {
        const Edge& e = h.edge(s.matching[p]);
        const auto& t1 = s.type1[p];
        for (std::size_t a = 0; a < t1.size(); ++a)
            for (std::size_t b = a + 1; b < t1.size(); ++b)
                if (intersection_size(h.edge(t1[a]), h.edge(t1[b])) < 2)
                    throw TheoremViolation("two (4,2) type-1 edges at one matching edge share < 2 vertices");
        for (int f : t1) {
            VertexSet x = set_intersection(h.edge(f), e);
            if (x.size() != 2) continue;
            if (std::find(s.indispensable[p].begin(), s.indispensable[p].end(), x) ==
                s.indispensable[p].end()) {
                s.indispensable[p].push_back(x);
                s.witness_of[p].push_back(f);
            }
        }
        // Disjoint indispensable pairs: their witnesses meet in a pair outside e.
        for (std::size_t a = 0; a < s.indispensable[p].size(); ++a)
            for (std::size_t b = a + 1; b < s.indispensable[p].size(); ++b) {
                if (intersection_size(s.indispensable[p][a], s.indispensable[p][b]) != 0) continue;
                VertexSet q = set_intersection(h.edge(s.witness_of[p][a]), h.edge(s.witness_of[p][b]));
                if (q.size() != 2 || intersection_size(q, e) != 0)
                    throw TheoremViolation("witnesses of disjoint indispensable pairs do not meet outside e");
            }
    }
    return s;
}

// Intersection of the witnesses of two disjoint indispensable pairs of e.
inline std::optional<VertexSet> disjoint_pair_link(const Hypergraph& h,
                                                   const CliqueMatchingStructure& s, int p,
                                                   const VertexSet& p1, const VertexSet& p2) {
    if (intersection_size(p1, p2) != 0) return std::nullopt;
    auto find = [&](const VertexSet& x) -> int {
        for (std::size_t i = 0; i < s.indispensable[p].size(); ++i)
            if (s.indispensable[p][i] == x) return s.witness_of[p][i];
        return -1;
    };
    int f1 = find(p1), f2 = find(p2);
    if (f1 < 0 || f2 < 0) return std::nullopt;
    return set_intersection(h.edge(f1), h.edge(f2));
}

// Cover of the clique 4-graph of g: 1/2 on every pair of every matching edge,
// plus per matching edge up to two pairs at 1/2 chosen so that every type-1
// edge meeting e in exactly two vertices contains one of them (edges meeting e
// in three vertices already carry weight 3/2 from the base). The pairs are
// found by exhaustive search in lexicographic order over pairs occurring
// inside type-1 edges. Valid with size at most 4|M|.
inline CoverCertificate cover_42_clique(const Graph& g) {
    if (g.n() < 4) {
        CoverCertificate cert;
        cert.cover = FractionalCover{2, {}};
        cert.verified = true;
        cert.transcript.push_back("size=0/1 bound=0/1 valid=1");
        return cert;
    }
    Hypergraph h = clique_hypergraph(g, 4);
    MatchingResult mr = matching_number(h, 2);
    CliqueMatchingStructure s = classify_42(h, mr.witness);

    std::map<VertexSet, Rational> w;
    for (int p = 0; p < static_cast<int>(s.matching.size()); ++p) {
        const Edge& e = h.edge(s.matching[p]);
        for_each_subset(e, 2, [&](const VertexSet& x) { w[x] += make_rational(1, 2); });

        std::vector<int> narrow;  // type-1 edges meeting e in exactly two vertices
        for (int f : s.type1[p])
            if (intersection_size(h.edge(f), e) == 2) narrow.push_back(f);
        if (narrow.empty()) continue;

        std::set<VertexSet> candidate_set;
        for (int f : s.type1[p])
            for_each_subset(h.edge(f), 2, [&](const VertexSet& x) { candidate_set.insert(x); });
        std::vector<VertexSet> candidates(candidate_set.begin(), candidate_set.end());

        bool found = false;
        for (std::size_t i = 0; i < candidates.size() && !found; ++i) {
            for (std::size_t j = i; j < candidates.size() && !found; ++j) {
                bool all = true;
                for (int f : narrow)
                    if (!is_subset(candidates[i], h.edge(f)) && !is_subset(candidates[j], h.edge(f))) {
                        all = false;
                        break;
                    }
                if (!all) continue;
                found = true;
                w[candidates[i]] += make_rational(1, 2);
                if (j != i) w[candidates[j]] += make_rational(1, 2);
            }
        }
        if (!found)
            throw TheoremViolation("no two pairs cover the type-1 edges of a clique 4-graph matching edge");
    }

    FractionalCover cover;
    cover.m = 2;
    cover.weight = std::move(w);
    return verify_cover(h, 2, cover, Rational(4) * static_cast<long>(s.matching.size()));
}

}  // namespace hypercover
