// matching_structure.hpp - Classification of a maximum (r-1)-matching: edge
// types, indispensable (r-1)-sets, the shared-set / external-vertex dichotomy,
// the level partition of the matching and the bad-edge structure. Violations
// of facts that are theorems raise TheoremViolation.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypercover/errors.hpp"
#include "hypercover/exact_params.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/subsets.hpp"

namespace hypercover {

// The structure every type-1 edge at a matching edge shares: either one
// (r-1)-set inside the matching edge, or one vertex outside it.
struct Hub {
    enum class Kind { None, SharedSet, ExternalVertex };
    Kind kind = Kind::None;
    VertexSet shared_set;  // SharedSet payload
    int vertex = 0;        // ExternalVertex payload
};

struct MatchingStructure {
    std::vector<int> matching;  // edge indices of the maximum (r-1)-matching, ascending
    std::vector<int> type_of;   // per ambient edge: 0 for matching edges, else the type i >= 1

    // Indexed by position within `matching`.
    std::vector<std::vector<int>> type1;               // T_1(e) as ambient edge indices
    std::vector<std::vector<VertexSet>> indispensable; // indispensable (r-1)-subsets of e
    std::vector<std::vector<int>> witness_of;          // one witness edge per indispensable set
    std::vector<Hub> hub;
    std::vector<int> level;                            // number of indispensable sets
    std::vector<char> heavy;                           // level == 3 for r = 3, level >= r-1 for r >= 4
    std::vector<std::vector<int>> bad;                 // bad type-2 edges touching e
    std::vector<std::vector<VertexSet>> bad_hitting;   // (r-1)-sets hitting all of bad(e), light edges
    std::vector<std::optional<VertexSet>> m1_shared;   // level-1 edges: common (r-1)-set of T1(e) and bad(e)

    int position_of(int edge_index) const {
        auto it = std::lower_bound(matching.begin(), matching.end(), edge_index);
        return it != matching.end() && *it == edge_index
                   ? static_cast<int>(it - matching.begin())
                   : -1;
    }
};

namespace detail {

// Lexicographically smallest (r-1)-set contained in every member, or nothing.
inline std::optional<VertexSet> common_subset(const Hypergraph& h, const std::vector<int>& members,
                                              int size) {
    if (members.empty()) return std::nullopt;
    std::optional<VertexSet> found;
    for_each_subset(h.edge(members.front()), size, [&](const VertexSet& x) {
        if (found) return;
        for (int i : members)
            if (!is_subset(x, h.edge(i))) return;
        found = x;
    });
    return found;
}

}  // namespace detail

// Validates M and computes the full classification. M is always checked to be
// a valid (r-1)-matching; the maximality certificate costs one solver call and
// can be skipped by callers that just computed M themselves.
inline MatchingStructure classify(const Hypergraph& h, const std::vector<int>& matching,
                                  bool accept_maximum_certificate = false) {
    const int r = h.r();
    if (r < 2) throw InputError("classification needs r >= 2");
    MatchingStructure s;
    s.matching = matching;
    std::sort(s.matching.begin(), s.matching.end());
    if (std::adjacent_find(s.matching.begin(), s.matching.end()) != s.matching.end())
        throw InputError("matching contains a repeated edge");
    for (int i : s.matching)
        if (i < 0 || i >= h.size()) throw InputError("matching edge index out of range");
    for (std::size_t a = 0; a < s.matching.size(); ++a)
        for (std::size_t b = a + 1; b < s.matching.size(); ++b)
            if (intersection_size(h.edge(s.matching[a]), h.edge(s.matching[b])) >= r - 1)
                throw InputError("not an (r-1)-matching: two edges share r-1 vertices");
    if (!accept_maximum_certificate &&
        matching_number(h, r - 1).value != static_cast<int>(s.matching.size()))
        throw InputError("matching is not maximum");

    const int msize = static_cast<int>(s.matching.size());
    s.type_of.assign(h.size(), 0);
    s.type1.assign(msize, {});
    s.indispensable.assign(msize, {});
    s.witness_of.assign(msize, {});
    s.hub.assign(msize, {});
    s.level.assign(msize, 0);
    s.heavy.assign(msize, 0);
    s.bad.assign(msize, {});
    s.bad_hitting.assign(msize, {});
    s.m1_shared.assign(msize, std::nullopt);

    std::vector<char> in_matching(h.size(), 0);
    for (int i : s.matching) in_matching[i] = 1;

    // Edge types, and T_1(e) for the unique touched matching edge. Under a
    // true maximum matching every non-matching edge meets some matching edge
    // in r-1 vertices; with a caller-supplied certificate an untouched edge
    // just classifies as type 0.
    std::vector<std::vector<int>> touches(h.size());  // matching positions met in r-1 vertices
    for (int f = 0; f < h.size(); ++f) {
        if (in_matching[f]) continue;
        for (int p = 0; p < msize; ++p)
            if (intersection_size(h.edge(f), h.edge(s.matching[p])) == r - 1)
                touches[f].push_back(p);
        s.type_of[f] = static_cast<int>(touches[f].size());
        if (s.type_of[f] == 1) s.type1[touches[f][0]].push_back(f);
    }

    for (int p = 0; p < msize; ++p) {
        const Edge& e = h.edge(s.matching[p]);
        const auto& t1 = s.type1[p];

        // Pairwise overlap of type-1 edges at e.
        for (std::size_t a = 0; a < t1.size(); ++a)
            for (std::size_t b = a + 1; b < t1.size(); ++b)
                if (intersection_size(h.edge(t1[a]), h.edge(t1[b])) < r - 1)
                    throw TheoremViolation("two type-1 edges at one matching edge share < r-1 vertices");

        // Indispensable sets with their first witnesses.
        for (int f : t1) {
            VertexSet x = set_intersection(h.edge(f), e);
            auto it = std::find(s.indispensable[p].begin(), s.indispensable[p].end(), x);
            if (it == s.indispensable[p].end()) {
                s.indispensable[p].push_back(x);
                s.witness_of[p].push_back(f);
            }
        }
        s.level[p] = static_cast<int>(s.indispensable[p].size());
        s.heavy[p] = r == 3 ? s.level[p] == 3 : (r >= 4 && s.level[p] >= r - 1);

        // Shared-set / external-vertex dichotomy.
        if (!t1.empty()) {
            VertexSet common = e;
            for (int f : t1) common = set_intersection(common, h.edge(f));
            if (static_cast<int>(common.size()) == r - 1) {
                s.hub[p] = {Hub::Kind::SharedSet, common, 0};
            } else {
                VertexSet outside = set_difference(h.edge(t1[0]), e);
                for (int f : t1) outside = set_intersection(outside, h.edge(f));
                outside = set_difference(outside, e);
                if (outside.size() != 1)
                    throw TheoremViolation("type-1 edges share neither an (r-1)-set nor an external vertex");
                s.hub[p] = {Hub::Kind::ExternalVertex, {}, outside[0]};
            }
            if (t1.size() > 1) {
                if (s.hub[p].kind == Hub::Kind::SharedSet) {
                    // Exactly one of the two cases may hold.
                    VertexSet outside = set_difference(h.edge(t1[0]), e);
                    for (int f : t1) outside = set_intersection(outside, h.edge(f));
                    outside = set_difference(outside, e);
                    if (!outside.empty())
                        throw TheoremViolation("both shared-set and external-vertex cases hold");
                } else {
                    if (static_cast<int>(t1.size()) != s.level[p])
                        throw TheoremViolation("external-vertex case: witness count differs from level");
                    for (std::size_t a = 0; a < t1.size(); ++a)
                        for (std::size_t b = a + 1; b < t1.size(); ++b) {
                            VertexSet i3 = set_intersection(
                                set_intersection(h.edge(t1[a]), h.edge(t1[b])), e);
                            if (static_cast<int>(i3.size()) != r - 2)
                                throw TheoremViolation("external-vertex case: triple overlap is not r-2");
                        }
                }
            }
        }
    }

    // Bad type-2 edges: those connecting a heavy and a light matching edge.
    for (int g = 0; g < h.size(); ++g) {
        if (s.type_of[g] != 2) continue;
        int pa = touches[g][0], pb = touches[g][1];
        if (s.heavy[pa] && s.heavy[pb])
            throw TheoremViolation("a type-2 edge connects two heavy matching edges");
        if (s.heavy[pa] != s.heavy[pb]) {
            s.bad[pa].push_back(g);
            s.bad[pb].push_back(g);
        }
    }

    for (int p = 0; p < msize; ++p) {
        const Edge& e = h.edge(s.matching[p]);
        const auto& t1 = s.type1[p];

        if (!s.heavy[p] && s.level[p] >= 1)
            for (int g : s.bad[p])
                for (int f : t1)
                    if (intersection_size(h.edge(g), h.edge(f)) < r - 1)
                        throw TheoremViolation("bad edge misses a type-1 edge at a light matching edge");

        if (s.level[p] == 1) {
            std::vector<int> members = t1;
            members.insert(members.end(), s.bad[p].begin(), s.bad[p].end());
            s.m1_shared[p] = detail::common_subset(h, members, r - 1);
            if (!s.m1_shared[p] && t1.size() != 1)
                throw TheoremViolation("level-1 edge with several witnesses but no common (r-1)-set");
        }

        if (!s.heavy[p] && s.level[p] >= 2 && !s.bad[p].empty()) {
            if (r == 3)
                throw TheoremViolation("bad edge at a level-2 matching edge in a 3-graph");
            if (s.hub[p].kind != Hub::Kind::ExternalVertex)
                throw TheoremViolation("bad edges at a light edge without an external vertex");
            const int v = s.hub[p].vertex;
            for (int g : s.bad[p]) {
                VertexSet out = set_difference(h.edge(g), e);
                if (out != VertexSet{v})
                    throw TheoremViolation("bad edge does not leave through the external vertex");
            }
            // (r-2)-subsets of e inside no indispensable set, extended by v.
            for_each_subset(e, r - 2, [&](const VertexSet& d) {
                for (const VertexSet& x : s.indispensable[p])
                    if (is_subset(d, x)) return;
                VertexSet z = set_union(d, {v});
                s.bad_hitting[p].push_back(z);
            });
            const int i = s.level[p];
            const long cap = static_cast<long>(binomial(r, 2)) - static_cast<long>(i) * (r - 1) +
                             static_cast<long>(binomial(i, 2));
            if (static_cast<long>(s.bad_hitting[p].size()) > cap)
                throw TheoremViolation("bad-edge hitting family larger than its bound");
            if (s.level[p] == r - 2 && s.bad_hitting[p].size() != 1)
                throw TheoremViolation("level r-2 edge without a single common bad-edge set");
            for (int g : s.bad[p]) {
                bool hit = false;
                for (const VertexSet& z : s.bad_hitting[p])
                    if (is_subset(z, h.edge(g))) { hit = true; break; }
                if (!hit) throw TheoremViolation("bad edge escapes the hitting family");
            }
        }
    }
    return s;
}

// Computes the lexicographically first maximum (r-1)-matching and classifies it.
struct ClassifiedMatching {
    std::vector<int> matching;
    MatchingStructure structure;
};

inline ClassifiedMatching classify_maximum(const Hypergraph& h) {
    MatchingResult mr = matching_number(h, h.r() - 1);
    return {mr.witness, classify(h, mr.witness, /*accept_maximum_certificate=*/true)};
}

}  // namespace hypercover
