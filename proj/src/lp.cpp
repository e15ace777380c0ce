#include "hellycover/lp.hpp"

#include <cstddef>

#include "hellycover/errors.hpp"

namespace hellycover {

LpResult simplex_max(const std::vector<std::vector<Rat>>& A,
                     const std::vector<Rat>& b, const std::vector<Rat>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (const auto& row : A)
        if (row.size() != n) throw input_error("simplex: ragged constraint matrix");
    if (b.size() != m) throw input_error("simplex: rhs size mismatch");
    for (const auto& bi : b)
        if (bi < 0) throw input_error("simplex: negative rhs not supported");

    const std::size_t cols = n + m + 1;  // vars, slacks, rhs
    const std::size_t rhs = n + m;
    std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1;
        t[i][rhs] = b[i];
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    LpResult out;
    for (;;) {
        // Bland: entering = lowest-index column with negative objective row
        std::size_t enter = cols;
        for (std::size_t j = 0; j < n + m; ++j)
            if (t[m][j] < 0) { enter = j; break; }
        if (enter == cols) break;

        // ratio test; ties resolved by smallest basic-variable index (Bland)
        std::size_t leave = m;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] > 0) {
                Rat ratio = t[i][rhs] / t[i][enter];
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == m)
            throw invariant_violation("simplex: LP unbounded (unexpected for cover LPs)");

        // pivot on (leave, enter)
        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            if (t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
        ++out.pivots;
    }

    out.value = t[m][rhs];
    out.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) out.x[basis[i]] = t[i][rhs];
    out.dual.assign(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) out.dual[i] = t[m][n + i];
    return out;
}

}  // namespace hellycover
