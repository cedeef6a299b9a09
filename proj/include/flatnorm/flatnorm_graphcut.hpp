#pragma once

#include <array>

#include "flatnorm/binary_shape.hpp"
#include "flatnorm/flatnorm_result.hpp"
#include "flatnorm/stencil.hpp"

namespace flatnorm {

/**
 * Flat norm of the boundary of a pixel set via the L1TV equivalence:
 * minimize Per(Sigma) + lambda * area(Sigma symdiff Omega) by s-t min-cut.
 * Sigma is the source side of the canonical minimum cut (nodes reachable
 * from the source in the final residual graph), the unique inclusion-
 * minimal minimizer, so identical inputs give identical output bytes.
 *
 * Returned pieces: S = [Omega] - [Sigma] as a 2-chain, residual = the
 * boundary chain of Sigma, value = cut capacity. With N4 the value equals
 * flatnorm_lp on the matching cubical complex exactly.
 */
FlatNormResult flatnorm_graphcut(const BinaryShape& s, double lambda,
                                 const NeighborhoodStencil& stencil);

/// Full solver output for callers that also need Sigma or the raw flow.
struct GraphcutSolve {
    FlatNormResult result;
    BinaryShape sigma;
    double flow_value = 0.0; // max-flow; equals result.value up to roundoff
};

GraphcutSolve graphcut_solve(const BinaryShape& s, double lambda,
                             const NeighborhoodStencil& stencil);

/// The minimizing set Sigma itself (the L1TV denoising of the input).
BinaryShape l1tv_denoise(const BinaryShape& s, double lambda,
                         const NeighborhoodStencil& stencil);

/**
 * Checks the corner-rounding behaviour of the flat norm on an axis-aligned
 * a x a square: for lambda >= (2+sqrt(pi))/a the minimizer shaves each
 * corner with a circular arc of radius 1/lambda, giving
 *     value = 4a + (pi - 4)/lambda.
 * Runs the N16 graph cut, compares the value at 3% tolerance, and fits a
 * circle to the computed boundary near each corner, comparing the fitted
 * radius to 1/lambda at 15% tolerance.
 */
struct CornerRoundingReport {
    double side = 0.0;
    double lambda = 0.0;
    double resolution = 0.0;
    double value = 0.0;
    double expected_value = 0.0;
    double value_rel_err = 0.0;
    std::array<double, 4> fitted_radius{}; // one per corner, ccw from lower-left
    double max_radius_rel_dev = 0.0;
    double value_tol = 0.03;
    double radius_tol = 0.15;
    bool value_ok = false;
    bool radius_ok = false;
    bool pass = false;
};

CornerRoundingReport corner_rounding_check(double side, double lambda,
                                           double resolution);

} // namespace flatnorm
