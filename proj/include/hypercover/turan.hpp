// turan.hpp - Exact Turan numbers ex_r(n,k) and covering numbers T(n,k,r) at
// desk scale, by two independent exhaustive searches over the complete
// instance: one grows clique-free families, the other covers k-sets.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hypercover/errors.hpp"
#include "hypercover/subsets.hpp"

namespace hypercover {

namespace detail {

struct TuranInstance {
    int n, r, k;
    int num_rsets, num_ksets;
    std::vector<std::vector<int>> rsubs_of_kset;  // k-set -> its r-subset ids
    std::vector<std::vector<int>> ksets_of_rset;  // r-set -> containing k-set ids
    std::vector<std::vector<int>> max_shared;     // k-set pair -> largest common r-subset id, -1 if none
    int ksets_per_rset;                           // C(n-r, k-r)
};

inline void check_turan_capacity(int n, int r, int k) {
    if (r < 1) throw InputError("uniformity must be positive");
    if (!(r < k && k <= n)) throw InputError("need r < k <= n");
    const int ceiling = r >= 4 ? 9 : 10;
    if (n > ceiling)
        throw CapacityError("Turan search supports n <= " + std::to_string(ceiling) +
                            " for r = " + std::to_string(r));
}

inline TuranInstance build_turan_instance(int n, int r, int k) {
    TuranInstance ti;
    ti.n = n;
    ti.r = r;
    ti.k = k;
    auto rsets = subsets_of_range(n, r);
    auto ksets = subsets_of_range(n, k);
    ti.num_rsets = static_cast<int>(rsets.size());
    ti.num_ksets = static_cast<int>(ksets.size());
    ti.rsubs_of_kset.resize(ti.num_ksets);
    ti.ksets_of_rset.resize(ti.num_rsets);
    for (int ki = 0; ki < ti.num_ksets; ++ki)
        for_each_subset(ksets[ki], r, [&](const VertexSet& s) {
            int ri = static_cast<int>(lex_rank(s, n));
            ti.rsubs_of_kset[ki].push_back(ri);
            ti.ksets_of_rset[ri].push_back(ki);
        });
    ti.max_shared.assign(ti.num_ksets, std::vector<int>(ti.num_ksets, -1));
    for (int a = 0; a < ti.num_ksets; ++a)
        for (int b = a + 1; b < ti.num_ksets; ++b) {
            int mx = -1;
            for (int x : ti.rsubs_of_kset[a])
                if (std::binary_search(ti.rsubs_of_kset[b].begin(), ti.rsubs_of_kset[b].end(), x))
                    mx = std::max(mx, x);
            ti.max_shared[a][b] = ti.max_shared[b][a] = mx;
        }
    ti.ksets_per_rset = static_cast<int>(binomial(n - r, k - r));
    return ti;
}

// Branch and bound for the largest K_k^r-free family, deciding r-sets in
// lexicographic order with the include branch first. Every k-set that has no
// excluded r-subset yet still needs one among the undecided suffix, which
// gives the counting and packing bounds below. The instance is
// vertex-transitive, so the lex-first r-set may be assumed included.
class MaxFreeSearch {
public:
    explicit MaxFreeSearch(const TuranInstance& ti)
        : ti_(ti), inc_cnt_(ti.num_ksets, 0), exc_cnt_(ti.num_ksets, 0), alive_(ti.num_ksets) {}

    int run() {
        best_ = 0;
        dfs(0, 0);
        return best_;
    }

private:
    int forced_exclusions(int idx) const {
        int by_count = (alive_ + ti_.ksets_per_rset - 1) / ti_.ksets_per_rset;
        int by_packing = 0;
        std::vector<int> packed;
        for (int ki = 0; ki < ti_.num_ksets; ++ki) {
            if (exc_cnt_[ki]) continue;
            bool independent = true;
            for (int pj : packed)
                if (ti_.max_shared[ki][pj] >= idx) { independent = false; break; }
            if (independent) {
                packed.push_back(ki);
                ++by_packing;
            }
        }
        return std::max(by_count, by_packing);
    }

    void dfs(int idx, int included) {
        if (idx == ti_.num_rsets) {
            best_ = std::max(best_, included);
            return;
        }
        if (included + (ti_.num_rsets - idx) - forced_exclusions(idx) <= best_) return;

        const int full = static_cast<int>(ti_.rsubs_of_kset.empty() ? 0 : ti_.rsubs_of_kset[0].size());
        bool can_include = true;
        for (int ki : ti_.ksets_of_rset[idx])
            if (exc_cnt_[ki] == 0 && inc_cnt_[ki] == full - 1) { can_include = false; break; }
        if (can_include) {
            for (int ki : ti_.ksets_of_rset[idx]) ++inc_cnt_[ki];
            dfs(idx + 1, included + 1);
            for (int ki : ti_.ksets_of_rset[idx]) --inc_cnt_[ki];
        }
        if (idx == 0) return;  // wlog the lex-first r-set is in some optimal family
        for (int ki : ti_.ksets_of_rset[idx]) {
            if (exc_cnt_[ki] == 0) --alive_;
            ++exc_cnt_[ki];
        }
        dfs(idx + 1, included);
        for (int ki : ti_.ksets_of_rset[idx]) {
            --exc_cnt_[ki];
            if (exc_cnt_[ki] == 0) ++alive_;
        }
    }

    const TuranInstance& ti_;
    std::vector<int> inc_cnt_, exc_cnt_;
    int alive_;
    int best_ = 0;
};

// Branch and bound for the smallest family of r-sets meeting every k-set:
// branches on the r-subsets of the first uncovered k-set, lexicographically,
// seeded with a greedy cover. Lower bounds: a prefix sum of the largest
// remaining coverage gains and a greedy packing of uncovered k-sets that
// pairwise share no r-subset. The first block may be fixed by symmetry.
class MinCoverSearch {
public:
    explicit MinCoverSearch(const TuranInstance& ti)
        : ti_(ti), cover_cnt_(ti.num_ksets, 0), gain_(ti.num_rsets), uncovered_(ti.num_ksets) {
        for (int e = 0; e < ti_.num_rsets; ++e)
            gain_[e] = static_cast<int>(ti_.ksets_of_rset[e].size());
    }

    int run() {
        best_ = greedy();
        dfs(0, true);
        return best_;
    }

private:
    int greedy() const {
        std::vector<char> covered(ti_.num_ksets, 0);
        int left = ti_.num_ksets, used = 0;
        while (left > 0) {
            int pick = -1, pick_gain = -1;
            for (int e = 0; e < ti_.num_rsets; ++e) {
                int g = 0;
                for (int ki : ti_.ksets_of_rset[e])
                    if (!covered[ki]) ++g;
                if (g > pick_gain) { pick_gain = g; pick = e; }
            }
            for (int ki : ti_.ksets_of_rset[pick])
                if (!covered[ki]) { covered[ki] = 1; --left; }
            ++used;
        }
        return used;
    }

    int lower_bound() const {
        std::vector<int> gains;
        for (int e = 0; e < ti_.num_rsets; ++e)
            if (gain_[e] > 0) gains.push_back(gain_[e]);
        if (gains.empty()) return uncovered_ ? ti_.num_rsets + 1 : 0;
        std::sort(gains.begin(), gains.end(), std::greater<int>());
        int need = 0, acc = 0;
        for (int g : gains) {
            acc += g;
            ++need;
            if (acc >= uncovered_) break;
        }
        if (acc < uncovered_) return ti_.num_rsets + 1;

        int packing = 0;
        std::vector<int> packed;
        for (int ki = 0; ki < ti_.num_ksets; ++ki) {
            if (cover_cnt_[ki]) continue;
            bool independent = true;
            for (int pj : packed)
                if (ti_.max_shared[ki][pj] >= 0) { independent = false; break; }
            if (independent) {
                packed.push_back(ki);
                ++packing;
            }
        }
        return std::max(need, packing);
    }

    void take(int e) {
        for (int ki : ti_.ksets_of_rset[e]) {
            if (cover_cnt_[ki] == 0) {
                --uncovered_;
                for (int e2 : ti_.rsubs_of_kset[ki]) --gain_[e2];
            }
            ++cover_cnt_[ki];
        }
    }

    void untake(int e) {
        for (int ki : ti_.ksets_of_rset[e]) {
            --cover_cnt_[ki];
            if (cover_cnt_[ki] == 0) {
                ++uncovered_;
                for (int e2 : ti_.rsubs_of_kset[ki]) ++gain_[e2];
            }
        }
    }

    void dfs(int chosen, bool root) {
        if (uncovered_ == 0) {
            best_ = std::min(best_, chosen);
            return;
        }
        if (chosen + lower_bound() >= best_) return;
        int first = 0;
        while (cover_cnt_[first] != 0) ++first;
        if (root) {
            // complete, vertex-transitive instance: fix the first block
            take(ti_.rsubs_of_kset[first][0]);
            dfs(chosen + 1, false);
            untake(ti_.rsubs_of_kset[first][0]);
            return;
        }
        for (int e : ti_.rsubs_of_kset[first]) {
            take(e);
            dfs(chosen + 1, false);
            untake(e);
        }
    }

    const TuranInstance& ti_;
    std::vector<int> cover_cnt_;
    std::vector<int> gain_;
    int uncovered_;
    int best_ = 0;
};

}  // namespace detail

// Maximum number of edges of an r-graph on n vertices with no K_k^r.
inline int turan_number(int n, int r, int k) {
    detail::check_turan_capacity(n, r, k);
    auto ti = detail::build_turan_instance(n, r, k);
    return detail::MaxFreeSearch(ti).run();
}

// Minimum number of edges such that every k-subset of [n] contains one.
// Complements turan_number: T(n,k,r) + ex_r(n,k) = C(n,r).
inline int covering_design_number(int n, int k, int r) {
    detail::check_turan_capacity(n, r, k);
    auto ti = detail::build_turan_instance(n, r, k);
    return detail::MinCoverSearch(ti).run();
}

}  // namespace hypercover
