// matching_covers.hpp - Constructive fractional (r-1)-covers built from a maximum
// (r-1)-matching: the 3r/4 cover, the dedicated 3- and 4-uniform schedules and
// the general schedule for r >= 5. Every constructor verifies its cover and
// its size bound exactly before returning the certificate.
#pragma once

#include <optional>
#include <set>
#include <vector>

#include "hypercover/exact_params.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/matching_structure.hpp"
#include "hypercover/rational.hpp"

namespace hypercover {

namespace detail {

class WeightBuilder {
public:
    void add(const VertexSet& x, const Rational& w) {
        weights_[x] += w;
        edge_total_ += w;
    }

    // Per-matching-edge budget assertions from the schedule tables.
    void begin_edge() { edge_total_ = 0; }
    void end_edge(const Rational& budget, const char* what) {
        if (edge_total_ > budget)
            throw TheoremViolation(std::string("per-edge schedule weight exceeds its budget: ") + what);
    }

    FractionalCover take(int m) {
        FractionalCover c;
        c.m = m;
        c.weight = std::move(weights_);
        return c;
    }

private:
    std::map<VertexSet, Rational> weights_;
    Rational edge_total_ = 0;
};

// One (r-1)-set per pair of type-1 edges taken in index order; an unpaired
// edge contributes its lexicographically smallest (r-1)-subset. Every type-1
// edge at e contains one of the returned sets.
inline std::vector<VertexSet> pairing_cover_sets(const Hypergraph& h, const std::vector<int>& t1) {
    std::set<VertexSet> out;
    const int r = h.r();
    for (std::size_t a = 0; a + 1 < t1.size(); a += 2) {
        VertexSet y = set_intersection(h.edge(t1[a]), h.edge(t1[a + 1]));
        if (static_cast<int>(y.size()) != r - 1)
            throw TheoremViolation("paired type-1 edges do not share an (r-1)-set");
        out.insert(y);
    }
    if (t1.size() % 2 == 1) {
        const Edge& f = h.edge(t1.back());
        out.insert(VertexSet(f.begin(), f.end() - 1));
    }
    return {out.begin(), out.end()};
}

inline int require_external_vertex(const MatchingStructure& s, int p) {
    if (s.hub[p].kind != Hub::Kind::ExternalVertex)
        throw TheoremViolation("matching edge lacks the required external vertex");
    return s.hub[p].vertex;
}

inline CoverCertificate finish(const Hypergraph& h, WeightBuilder& wb, const Rational& bound) {
    return verify_cover(h, h.r() - 1, wb.take(h.r() - 1), bound);
}

}  // namespace detail

// Weight 1/2 on every (r-1)-subset of every matching edge; then, per matching
// edge, 1/2 on the shared set or a 1/(2(r-1)) spread around the external
// vertex. Valid with size at most (3r/4)|M|.
inline CoverCertificate weak_cover(const Hypergraph& h) {
    const int r = h.r();
    if (r < 2) throw InputError("weak cover needs r >= 2");
    auto [matching, s] = classify_maximum(h);
    detail::WeightBuilder wb;
    const Rational budget = make_rational(3 * r, 4);
    for (std::size_t p = 0; p < matching.size(); ++p) {
        const Edge& e = h.edge(matching[p]);
        wb.begin_edge();
        for_each_subset(e, r - 1, [&](const VertexSet& x) { wb.add(x, make_rational(1, 2)); });
        if (!s.type1[p].empty()) {
            if (s.hub[p].kind == Hub::Kind::SharedSet) {
                wb.add(s.hub[p].shared_set, make_rational(1, 2));
            } else {
                const int v = detail::require_external_vertex(s, static_cast<int>(p));
                for_each_subset(e, r - 2, [&](const VertexSet& d) {
                    wb.add(set_union(d, {v}), make_rational(1, 2 * (r - 1)));
                });
            }
        }
        wb.end_edge(budget, "weak");
    }
    return detail::finish(h, wb, budget * static_cast<long>(matching.size()));
}

// The four-case schedule for 3-graphs. Valid with size at most 2|M|.
inline CoverCertificate cover_r3(const Hypergraph& h) {
    if (h.r() != 3) throw InputError("this cover needs a 3-uniform hypergraph");
    auto [matching, s] = classify_maximum(h);
    detail::WeightBuilder wb;
    for (std::size_t p = 0; p < matching.size(); ++p) {
        const Edge& e = h.edge(matching[p]);
        wb.begin_edge();
        switch (s.level[p]) {
            case 0:
                for_each_subset(e, 2, [&](const VertexSet& x) { wb.add(x, make_rational(2, 3)); });
                break;
            case 1: {
                for_each_subset(e, 2, [&](const VertexSet& x) { wb.add(x, make_rational(1, 2)); });
                if (s.m1_shared[p]) {
                    wb.add(*s.m1_shared[p], make_rational(1, 2));
                } else {
                    const Edge& f = h.edge(s.type1[p].at(0));
                    for_each_subset(f, 2, [&](const VertexSet& x) { wb.add(x, make_rational(1, 6)); });
                }
                break;
            }
            case 2: {
                for_each_subset(e, 2, [&](const VertexSet& x) { wb.add(x, make_rational(1, 2)); });
                if (s.type1[p].size() != 2)
                    throw TheoremViolation("level-2 edge in a 3-graph without two type-1 edges");
                VertexSet y = set_intersection(h.edge(s.type1[p][0]), h.edge(s.type1[p][1]));
                if (y.size() != 2) throw TheoremViolation("type-1 pair overlap is not a pair");
                wb.add(y, make_rational(1, 2));
                break;
            }
            case 3: {
                const int v = detail::require_external_vertex(s, static_cast<int>(p));
                for_each_subset(set_union(e, {v}), 2,
                                [&](const VertexSet& x) { wb.add(x, make_rational(1, 3)); });
                break;
            }
            default:
                throw TheoremViolation("impossible level in a 3-graph");
        }
        wb.end_edge(2, "r3 schedule");
    }
    return detail::finish(h, wb, Rational(2) * static_cast<long>(matching.size()));
}

// The five-case schedule for 4-graphs. Valid with size at most (8/3)|M|.
inline CoverCertificate cover_r4(const Hypergraph& h) {
    if (h.r() != 4) throw InputError("this cover needs a 4-uniform hypergraph");
    auto [matching, s] = classify_maximum(h);
    detail::WeightBuilder wb;
    const Rational budget = make_rational(8, 3);
    for (std::size_t p = 0; p < matching.size(); ++p) {
        const Edge& e = h.edge(matching[p]);
        wb.begin_edge();
        if (s.heavy[p]) {
            for_each_subset(e, 3, [&](const VertexSet& x) { wb.add(x, make_rational(1, 3)); });
            for (const VertexSet& y : detail::pairing_cover_sets(h, s.type1[p]))
                wb.add(y, make_rational(2, 3));
        } else {
            switch (s.level[p]) {
                case 0:
                    for_each_subset(e, 3, [&](const VertexSet& x) { wb.add(x, make_rational(2, 3)); });
                    break;
                case 1: {
                    for_each_subset(e, 3, [&](const VertexSet& x) { wb.add(x, make_rational(1, 2)); });
                    if (s.m1_shared[p]) {
                        wb.add(*s.m1_shared[p], make_rational(1, 2));
                    } else {
                        const Edge& f = h.edge(s.type1[p].at(0));
                        for_each_subset(f, 3, [&](const VertexSet& x) { wb.add(x, make_rational(1, 6)); });
                    }
                    break;
                }
                case 2: {
                    for_each_subset(e, 3, [&](const VertexSet& x) { wb.add(x, make_rational(1, 2)); });
                    if (s.type1[p].size() != 2)
                        throw TheoremViolation("level-2 edge in a 4-graph without two type-1 edges");
                    VertexSet y = set_intersection(h.edge(s.type1[p][0]), h.edge(s.type1[p][1]));
                    if (y.size() != 3) throw TheoremViolation("type-1 pair overlap is not a triple");
                    wb.add(y, make_rational(1, 2));
                    if (!s.bad[p].empty()) wb.add(s.bad_hitting[p].at(0), make_rational(1, 6));
                    break;
                }
                default:
                    throw TheoremViolation("light level above 2 in a 4-graph");
            }
        }
        wb.end_edge(budget, "r4 schedule");
    }
    return detail::finish(h, wb, budget * static_cast<long>(matching.size()));
}

inline Rational general_alpha(int r) {
    return r % 2 == 0 ? make_rational(r + 2, 2 * (r + 1)) : make_rational(r + 3, 2 * (r + 2));
}

inline Rational general_bound_per_edge(int r) {
    // 3r/4 - r/(4(r+1)) for even r, 3r/4 - r/(4(r+2)) for odd r.
    return r % 2 == 0 ? make_rational(3 * r, 4) - make_rational(r, 4 * (r + 1))
                      : make_rational(3 * r, 4) - make_rational(r, 4 * (r + 2));
}

// The five-case schedule for r >= 5.
inline CoverCertificate cover_general(const Hypergraph& h) {
    const int r = h.r();
    if (r < 5) throw InputError("the general cover needs r >= 5");
    auto [matching, s] = classify_maximum(h);
    const Rational alpha = general_alpha(r);
    const Rational per_edge = general_bound_per_edge(r);
    detail::WeightBuilder wb;
    for (std::size_t p = 0; p < matching.size(); ++p) {
        const Edge& e = h.edge(matching[p]);
        const int lvl = s.level[p];
        wb.begin_edge();
        if (s.heavy[p]) {
            const int v = detail::require_external_vertex(s, static_cast<int>(p));
            for_each_subset(e, r - 1, [&](const VertexSet& x) { wb.add(x, 1 - alpha); });
            for_each_subset(e, r - 2, [&](const VertexSet& d) {
                wb.add(set_union(d, {v}), alpha / (r - 1));
            });
            wb.end_edge(r * (1 - alpha) + static_cast<long>(binomial(r, 2)) * alpha / (r - 1),
                        "general heavy");
        } else if (lvl == 0) {
            for_each_subset(e, r - 1, [&](const VertexSet& x) { wb.add(x, alpha); });
            wb.end_edge(r * alpha, "general level 0");
        } else if (lvl == 1) {
            for_each_subset(e, r - 1, [&](const VertexSet& x) { wb.add(x, make_rational(1, 2)); });
            if (s.m1_shared[p]) {
                wb.add(*s.m1_shared[p], make_rational(1, 2));
            } else {
                const Edge& f = h.edge(s.type1[p].at(0));
                for_each_subset(f, r - 1,
                                [&](const VertexSet& x) { wb.add(x, make_rational(1, 2 * r)); });
            }
            wb.end_edge(make_rational(r + 1, 2), "general level 1");
        } else if (lvl <= r - 3) {
            for_each_subset(e, r - 1, [&](const VertexSet& x) { wb.add(x, alpha); });
            for (const VertexSet& y : detail::pairing_cover_sets(h, s.type1[p]))
                wb.add(y, 1 - alpha);
            wb.end_edge(r * alpha + (1 - alpha) * ((lvl + 1) / 2), "general middle");
        } else {  // lvl == r - 2
            for_each_subset(e, r - 1, [&](const VertexSet& x) { wb.add(x, make_rational(1, 2)); });
            for (const VertexSet& y : detail::pairing_cover_sets(h, s.type1[p]))
                wb.add(y, make_rational(1, 2));
            if (!s.bad[p].empty()) wb.add(s.bad_hitting[p].at(0), alpha - make_rational(1, 2));
            wb.end_edge(make_rational(r, 2) + make_rational((r - 1) / 2, 2) + alpha - make_rational(1, 2),
                        "general level r-2");
        }
    }
    return detail::finish(h, wb, per_edge * static_cast<long>(matching.size()));
}

}  // namespace hypercover
