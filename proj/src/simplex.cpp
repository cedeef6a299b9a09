#include "flatnorm/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "flatnorm/errors.hpp"

namespace flatnorm {

namespace {
constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-10;
}

LpSolution solve_lp(const LpProblem& lp, const std::vector<int>& initial_basis,
                    std::int64_t max_pivots) {
    const int m = lp.rows, n = lp.cols;
    if (static_cast<int>(initial_basis.size()) != m)
        throw std::invalid_argument("initial basis size mismatch");

    // tableau: m constraint rows + reduced-cost row, each with n + 1 entries
    const int stride = n + 1;
    std::vector<double> tab(static_cast<std::size_t>(m + 1) * stride, 0.0);
    auto row = [&](int i) { return tab.data() + static_cast<std::size_t>(i) * stride; };

    std::vector<int> basis = initial_basis;
    for (int i = 0; i < m; ++i) {
        double* r = row(i);
        for (int j = 0; j < n; ++j) r[j] = lp.at(i, j);
        r[n] = lp.rhs[i];
        double piv = r[basis[i]];
        if (std::abs(piv) < kPivotTol)
            throw std::invalid_argument("initial basis column is singular in its row");
        if (piv != 1.0)
            for (int j = 0; j <= n; ++j) r[j] /= piv;
        if (r[n] < 0.0)
            throw std::invalid_argument("initial basis is infeasible");
    }

    // reduced costs r_j = c_j - c_B . B^-1 A_j ; r[n] = -objective
    double* cost_row = row(m);
    for (int j = 0; j < n; ++j) cost_row[j] = lp.cost[j];
    for (int i = 0; i < m; ++i) {
        double cb = lp.cost[basis[i]];
        if (cb == 0.0) continue;
        const double* r = row(i);
        for (int j = 0; j <= n; ++j) cost_row[j] -= cb * r[j];
    }

    std::int64_t pivots = 0;
    for (;;) {
        // Bland: lowest-index column with negative reduced cost
        int enter = -1;
        for (int j = 0; j < n; ++j)
            if (cost_row[j] < -kReducedCostTol) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            double aij = row(i)[enter];
            if (aij > kPivotTol) {
                double ratio = row(i)[n] / aij;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 &&
                     (leave < 0 || basis[i] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0)
            throw std::invalid_argument("LP is unbounded"); // cannot happen: cost >= 0

        if (++pivots > max_pivots)
            throw ResourceError("simplex pivot cap exceeded", -cost_row[n]);

        double* pr = row(leave);
        double piv = pr[enter];
        if (piv != 1.0) {
            double inv = 1.0 / piv;
            for (int j = 0; j <= n; ++j) pr[j] *= inv;
        }
        pr[enter] = 1.0;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            double* r = row(i);
            double f = r[enter];
            if (f == 0.0) continue;
            for (int j = 0; j <= n; ++j) r[j] -= f * pr[j];
            r[enter] = 0.0;
        }
        basis[leave] = enter;
    }

    LpSolution sol;
    sol.iterations = pivots;
    sol.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i) sol.x[basis[i]] = row(i)[n];
    sol.objective = -cost_row[n];
    return sol;
}

} // namespace flatnorm
