#include "flatnorm/flatnorm_lp.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "flatnorm/errors.hpp"
#include "flatnorm/simplex.hpp"

namespace flatnorm {

namespace {

constexpr double kIntegralityTol = 1e-7;

void require_solver_input(const ComplexPtr& k, const Chain& t, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if (t.dim() != 1) throw std::invalid_argument("flat norm input must be a 1-chain");
    if (t.complex()->id() != k->id())
        throw std::invalid_argument("input chain does not live on the given complex");
}

FlatNormResult zero_result(const ComplexPtr& k, double lambda, const char* method) {
    FlatNormResult r(Chain(k, 2), Chain(k, 1));
    r.lambda = lambda;
    r.method = method;
    r.stencil = "none";
    return r;
}

/// Builds the result from an integer 2-chain minimizer; value and masses
/// are recomputed exactly from the chains.
FlatNormResult assemble(const Chain& t, double lambda, Chain s,
                        const char* method) {
    Chain residual = subtract(t, boundary(s));
    FlatNormResult r(std::move(s), std::move(residual));
    r.lambda = lambda;
    r.method = method;
    r.stencil = "none";
    r.mass_s = mass(r.s_chain);
    r.mass_residual = mass(r.residual_chain);
    r.value = r.mass_residual + lambda * r.mass_s;
    r.max_s_coeff = r.s_chain.max_abs_coeff();
    return r;
}

} // namespace

FlatNormResult flatnorm_lp(const ComplexPtr& k, const Chain& t, double lambda,
                           std::int64_t max_pivots) {
    require_solver_input(k, t, lambda);
    if (t.is_zero()) return zero_result(k, lambda, "lp");

    const int m = k->num_edges();
    const int f = k->num_faces();
    const int n = 2 * m + 2 * f;

    LpProblem lp;
    lp.rows = m;
    lp.cols = n;
    lp.cost.assign(n, 0.0);
    lp.a.assign(static_cast<std::size_t>(m) * n, 0.0);
    lp.rhs.assign(m, 0.0);

    for (int e = 0; e < m; ++e) {
        double w = k->edge_weight(e);
        lp.cost[e] = w;          // x+
        lp.cost[m + e] = w;      // x-
        lp.at(e, e) = 1.0;
        lp.at(e, m + e) = -1.0;
    }
    for (int j = 0; j < f; ++j) {
        double v = lambda * k->face_weight(j);
        lp.cost[2 * m + j] = v;      // y+
        lp.cost[2 * m + f + j] = v;  // y-
        auto b = k->face_boundary(j);
        for (int s = 0; s < b.entries; ++s) {
            lp.at(b.edge[s], 2 * m + j) += b.sign[s];
            lp.at(b.edge[s], 2 * m + f + j) -= b.sign[s];
        }
    }
    for (const auto& [e, c] : t.cells()) lp.rhs[e] = static_cast<double>(c);

    // S = 0, x = t is a basic feasible start: pick x+ or x- per row by sign
    std::vector<int> basis(m);
    for (int e = 0; e < m; ++e) basis[e] = lp.rhs[e] >= 0.0 ? e : m + e;

    LpSolution sol = solve_lp(lp, basis, max_pivots);

    double gap = 0.0;
    Chain s(k, 2);
    for (int j = 0; j < f; ++j) {
        double y = sol.x[2 * m + j] - sol.x[2 * m + f + j];
        double rounded = std::nearbyint(y);
        gap = std::max(gap, std::abs(y - rounded));
        if (rounded != 0.0) s.add_cell(j, static_cast<std::int64_t>(rounded));
    }

    if (gap <= kIntegralityTol) {
        FlatNormResult r = assemble(t, lambda, std::move(s), "lp");
        r.integrality_gap = gap;
        r.iterations = sol.iterations;
        return r;
    }

    // Not expected on these complexes; return the raw relaxation optimum.
    Chain residual = subtract(t, boundary(s));
    FlatNormResult r(std::move(s), std::move(residual));
    r.lambda = lambda;
    r.method = "lp";
    r.stencil = "none";
    r.integral = false;
    r.integrality_gap = gap;
    r.iterations = sol.iterations;
    double mass_x = 0.0, mass_y = 0.0;
    for (int e = 0; e < m; ++e)
        mass_x += k->edge_weight(e) * (sol.x[e] + sol.x[m + e]);
    for (int j = 0; j < f; ++j)
        mass_y += k->face_weight(j) * (sol.x[2 * m + j] + sol.x[2 * m + f + j]);
    r.mass_residual = mass_x;
    r.mass_s = mass_y;
    r.value = sol.objective;
    r.max_s_coeff = r.s_chain.max_abs_coeff();
    return r;
}

FlatNormResult exhaustive_oracle(const ComplexPtr& k, const Chain& t, double lambda,
                                 std::int64_t coeff_range) {
    require_solver_input(k, t, lambda);
    if (coeff_range < 1) throw std::invalid_argument("oracle coefficient range must be >= 1");
    const int f = k->num_faces();
    if (f > 20)
        throw ResourceError("exhaustive oracle supports at most 20 faces, got " +
                            std::to_string(f));
    if (t.is_zero()) return zero_result(k, lambda, "oracle");

    const int m = k->num_edges();
    std::vector<double> w(m), v(f);
    for (int e = 0; e < m; ++e) w[e] = k->edge_weight(e);
    for (int j = 0; j < f; ++j) v[j] = k->face_weight(j);

    std::vector<std::int64_t> tvec(m, 0);
    for (const auto& [e, c] : t.cells()) tvec[e] = c;

    // residual x = t - B y, maintained incrementally as the odometer steps
    std::vector<std::int64_t> y(f, -coeff_range), x(tvec);
    double sum_x = 0.0, sum_y = 0.0;
    for (int j = 0; j < f; ++j) {
        auto b = k->face_boundary(j);
        for (int s = 0; s < b.entries; ++s) x[b.edge[s]] -= b.sign[s] * y[j];
    }
    for (int e = 0; e < m; ++e) sum_x += w[e] * std::llabs(x[e]);
    for (int j = 0; j < f; ++j) sum_y += v[j] * std::llabs(y[j]);

    double best = sum_x + lambda * sum_y;
    std::vector<std::int64_t> best_y = y;

    auto bump = [&](int j, std::int64_t delta) {
        auto b = k->face_boundary(j);
        for (int s = 0; s < b.entries; ++s) {
            int e = b.edge[s];
            sum_x -= w[e] * std::llabs(x[e]);
            x[e] -= b.sign[s] * delta;
            sum_x += w[e] * std::llabs(x[e]);
        }
        sum_y -= v[j] * std::llabs(y[j]);
        y[j] += delta;
        sum_y += v[j] * std::llabs(y[j]);
    };

    for (;;) {
        // odometer increment, least-significant face first
        int j = 0;
        while (j < f && y[j] == coeff_range) {
            bump(j, -2 * coeff_range);
            ++j;
        }
        if (j == f) break;
        bump(j, 1);
        double val = sum_x + lambda * sum_y;
        if (val < best - 1e-12) {
            best = val;
            best_y = y;
        }
    }

    Chain s(k, 2);
    for (int j = 0; j < f; ++j)
        if (best_y[j] != 0) s.add_cell(j, best_y[j]);
    return assemble(t, lambda, std::move(s), "oracle");
}

} // namespace flatnorm
