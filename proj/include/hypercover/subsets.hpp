// subsets.hpp - Sorted-vector set utilities and k-subset enumeration.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "hypercover/errors.hpp"

namespace hypercover {

// Vertex sets are strictly increasing vectors of 1-based ids.
using VertexSet = std::vector<int>;

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (int i = 0; i < k; ++i) c = c * static_cast<std::uint64_t>(n - i) / (i + 1);
    return c;
}

inline int intersection_size(const VertexSet& a, const VertexSet& b) {
    int i = 0, j = 0, c = 0;
    while (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
        if (a[i] == b[j]) { ++c; ++i; ++j; }
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return c;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool contains_vertex(const VertexSet& a, int v) {
    return std::binary_search(a.begin(), a.end(), v);
}

inline bool is_strictly_increasing(const VertexSet& a) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i - 1] >= a[i]) return false;
    return true;
}

// Visits the k-subsets of `base` in lexicographic order.
inline void for_each_subset(const VertexSet& base, int k,
                            const std::function<void(const VertexSet&)>& visit) {
    if (k < 0 || k > static_cast<int>(base.size())) return;
    VertexSet cur;
    cur.reserve(k);
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(cur.size()) == k) { visit(cur); return; }
        std::size_t need = k - cur.size();
        for (std::size_t i = start; i + need <= base.size(); ++i) {
            cur.push_back(base[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

inline std::vector<VertexSet> subsets_of(const VertexSet& base, int k) {
    std::vector<VertexSet> out;
    for_each_subset(base, k, [&](const VertexSet& s) { out.push_back(s); });
    return out;
}

inline VertexSet range_set(int n) {
    VertexSet out(n);
    for (int i = 0; i < n; ++i) out[i] = i + 1;
    return out;
}

// All k-subsets of [n] in lexicographic order.
inline std::vector<VertexSet> subsets_of_range(int n, int k) {
    return subsets_of(range_set(n), k);
}

// 0-based position of a k-subset of [n] in lexicographic order.
inline std::uint64_t lex_rank(const VertexSet& s, int n) {
    std::uint64_t rank = 0;
    int prev = 0;
    int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < s[i]; ++v) rank += binomial(n - v, k - i - 1);
        prev = s[i];
    }
    return rank;
}

}  // namespace hypercover
