#pragma once

// Exact dense linear algebra over Q(i). Elimination is ordinary
// Gaussian elimination with exact field arithmetic: only rows with a
// nonzero entry in the pivot column are touched, which keeps the cost
// proportional to the actual coupling of the system (the window-solve
// rows carry at most a couple of nonzeros each).

#include "virbialg/scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace virbialg {

using ScalarRow = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarRow>;

struct LinSolveResult {
    bool consistent = false;
    std::vector<Scalar> solution;  // free variables pinned to 0
    std::size_t rank_a = 0;
    std::size_t rank_ab = 0;
    std::size_t unknowns = 0;
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> gauss_forward(ScalarMatrix& m,
                                                                      std::size_t ncols_total) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < ncols_total && prow < m.size(); ++col) {
        std::size_t sel = prow;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[prow], m[sel]);
        const Scalar inv_piv = m[prow][col].inv();
        for (std::size_t i = prow + 1; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            Scalar f = m[i][col] * inv_piv;
            m[i][col] = Scalar(0);
            for (std::size_t j = col + 1; j < ncols_total; ++j) {
                if (m[prow][j].is_zero()) continue;
                m[i][j] -= f * m[prow][j];
            }
        }
        pivots.emplace_back(prow, col);
        ++prow;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(ScalarMatrix m) {
    if (m.empty()) return 0;
    return detail::gauss_forward(m, m[0].size()).size();
}

/// Solve A x = b; when the system is underdetermined the free
/// variables are set to 0, so the result is one exact solution.
inline LinSolveResult solve(ScalarMatrix a, const std::vector<Scalar>& b) {
    LinSolveResult res;
    std::size_t ncols = a.empty() ? 0 : a[0].size();
    res.unknowns = ncols;
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);

    auto pivots = detail::gauss_forward(a, ncols + 1);
    res.rank_ab = pivots.size();
    res.rank_a = res.rank_ab;
    if (!pivots.empty() && pivots.back().second == ncols) {
        res.rank_a = res.rank_ab - 1;  // a pivot in the rhs column: inconsistent
        res.consistent = false;
        return res;
    }
    res.consistent = true;
    res.solution.assign(ncols, Scalar(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [row, col] = *it;
        Scalar acc = a[row][ncols];
        for (std::size_t j = col + 1; j < ncols; ++j) {
            if (!a[row][j].is_zero() && !res.solution[j].is_zero())
                acc -= a[row][j] * res.solution[j];
        }
        res.solution[col] = acc / a[row][col];
    }
    return res;
}

}  // namespace virbialg
