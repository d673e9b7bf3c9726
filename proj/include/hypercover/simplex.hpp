// simplex.hpp - Exact rational simplex with Bland's anti-cycling rule.
#pragma once

#include <cstdint>
#include <vector>

#include "hypercover/errors.hpp"
#include "hypercover/rational.hpp"

namespace hypercover {

struct LpResult {
    Rational value;
    std::vector<Rational> primal;  // optimal x, one per variable
    std::vector<Rational> dual;    // optimal y, one per constraint
};

// Solves  max c^T x  s.t.  A x <= b,  x >= 0  for b >= 0, so the slack basis
// is feasible and no phase-1 is needed. Dense tableau over exact rationals;
// Bland's rule (smallest-index entering and leaving variable) guarantees
// termination. Throws on unbounded problems; callers here never build one.
class PackingLp {
public:
    PackingLp(int num_vars, int num_constraints)
        : n_(num_vars), m_(num_constraints), a_(num_constraints, std::vector<Rational>(num_vars, 0)),
          b_(num_constraints, 0), c_(num_vars, 0) {}

    void set_coefficient(int row, int col, const Rational& v) { a_[row][col] = v; }
    void set_rhs(int row, const Rational& v) { b_[row] = v; }
    void set_objective(int col, const Rational& v) { c_[col] = v; }

    LpResult solve() const {
        const int cols = n_ + m_ + 1;  // structurals, slacks, rhs
        std::vector<std::vector<Rational>> t(m_ + 1, std::vector<Rational>(cols, 0));
        for (int i = 0; i < m_; ++i) {
            if (b_[i] < 0) throw InputError("packing LP requires b >= 0");
            for (int j = 0; j < n_; ++j) t[i + 1][j] = a_[i][j];
            t[i + 1][n_ + i] = 1;
            t[i + 1][cols - 1] = b_[i];
        }
        for (int j = 0; j < n_; ++j) t[0][j] = -c_[j];

        std::vector<int> basis(m_);
        for (int i = 0; i < m_; ++i) basis[i] = n_ + i;

        for (;;) {
            int enter = -1;
            for (int j = 0; j < n_ + m_; ++j)
                if (t[0][j] < 0) { enter = j; break; }
            if (enter < 0) break;

            int leave = -1;
            Rational best_ratio;
            for (int i = 1; i <= m_; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][cols - 1] / t[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i - 1] < basis[leave - 1])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw TheoremViolation("packing LP unbounded");

            pivot(t, leave, enter);
            basis[leave - 1] = enter;
        }

        LpResult res;
        res.value = t[0][cols - 1];
        res.primal.assign(n_, 0);
        for (int i = 0; i < m_; ++i)
            if (basis[i] < n_) res.primal[basis[i]] = t[i + 1][cols - 1];
        res.dual.assign(m_, 0);
        for (int i = 0; i < m_; ++i) res.dual[i] = t[0][n_ + i];
        return res;
    }

private:
    static void pivot(std::vector<std::vector<Rational>>& t, int prow, int pcol) {
        const int cols = static_cast<int>(t[0].size());
        const Rational inv = 1 / t[prow][pcol];
        for (int j = 0; j < cols; ++j) t[prow][j] *= inv;
        for (int i = 0; i < static_cast<int>(t.size()); ++i) {
            if (i == prow || t[i][pcol] == 0) continue;
            const Rational f = t[i][pcol];
            for (int j = 0; j < cols; ++j)
                if (t[prow][j] != 0) t[i][j] -= f * t[prow][j];
        }
    }

    int n_, m_;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::vector<Rational> c_;
};

}  // namespace hypercover
