#pragma once

#include <cstdint>
#include <vector>

namespace flatnorm {

/**
 * Dense equality-form linear program
 *     min  cost . x   s.t.  A x = rhs,  x >= 0
 * with A stored row-major. The flat-norm instances built on top of this
 * have entries in {-1, 0, +1} and integral right-hand sides, but the
 * solver itself is generic.
 */
struct LpProblem {
    int rows = 0;
    int cols = 0;
    std::vector<double> cost;   // cols
    std::vector<double> a;      // rows * cols
    std::vector<double> rhs;    // rows

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

struct LpSolution {
    double objective = 0.0;
    std::vector<double> x;
    std::int64_t iterations = 0;
};

/**
 * Primal simplex with Bland's rule: entering variable = lowest index with
 * negative reduced cost, leaving variable = lowest-index basic variable
 * among minimum-ratio rows. Fully deterministic; the pivot path (and hence
 * the reported optimal vertex) is a function of the input alone.
 *
 * `initial_basis[i]` must name a column whose only nonzero entry is in row
 * i, and the implied basic solution must be feasible; the flat-norm
 * split-variable encoding provides such a basis directly.
 *
 * Throws ResourceError with the best objective so far when the pivot cap
 * is exceeded.
 */
LpSolution solve_lp(const LpProblem& lp, const std::vector<int>& initial_basis,
                    std::int64_t max_pivots = 2'000'000);

} // namespace flatnorm
