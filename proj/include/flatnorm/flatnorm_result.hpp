#pragma once

#include <cstdint>
#include <string>

#include "flatnorm/chain.hpp"

namespace flatnorm {

/**
 * Value and minimizing pieces of one flat-norm decomposition
 * value = mass_residual + lambda * mass_s, where residual_chain is exactly
 * the input 1-chain minus boundary(s_chain) in integer chain arithmetic.
 *
 * For graph-cut results the two mass fields are measured in the stencil's
 * cut metric (identical to chain mass for N4; a Euclidean perimeter
 * estimate for N8/N16), so the identity above always holds for the value
 * the solver actually minimized.
 */
struct FlatNormResult {
    double lambda = 0.0;
    double value = 0.0;
    double mass_residual = 0.0;
    double mass_s = 0.0;
    Chain s_chain;
    Chain residual_chain;
    std::string method;       // "lp", "oracle" or "graphcut"
    std::string stencil;      // "N4" | "N8" | "N16", "none" for lp
    bool integral = true;     // LP relaxation optimum was integral
    bool layered = false;     // graph-cut distance via two nested level cuts
    double integrality_gap = 0.0; // max distance of raw LP coeffs to integers
    std::int64_t max_s_coeff = 0;
    std::int64_t iterations = 0;  // simplex pivots / augmenting paths

    FlatNormResult(Chain s, Chain residual)
        : s_chain(std::move(s)), residual_chain(std::move(residual)) {}
};

} // namespace flatnorm
