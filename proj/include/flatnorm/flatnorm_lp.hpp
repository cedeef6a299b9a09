#pragma once

#include <cstdint>

#include "flatnorm/chain.hpp"
#include "flatnorm/flatnorm_result.hpp"

namespace flatnorm {

/**
 * Exact flat norm of a 1-chain t on its complex:
 *     min over 2-chains S of  mass(t - boundary(S)) + lambda * mass(S)
 * solved as the LP relaxation in split-variable form
 *     x+ - x- + B (y+ - y-) = t,   all variables >= 0,
 * where B is the signed face-to-edge incidence matrix. The simplex always
 * returns a basic optimum, and on these complexes the constraint matrix is
 * totally unimodular, so the optimum is expected to be integral; the result
 * carries `integral` / `integrality_gap` so that tests can assert it. When
 * the relaxed optimum is integral within 1e-7 the coefficients are rounded
 * to exact integers and the value is recomputed from the rounded chains;
 * otherwise the result is flagged non-integral and keeps the raw LP value.
 */
FlatNormResult flatnorm_lp(const ComplexPtr& k, const Chain& t, double lambda,
                           std::int64_t max_pivots = 2'000'000);

/**
 * Brute-force ground truth: global minimum over all 2-chains with
 * coefficients in [-coeff_range, +coeff_range]. Only for tiny complexes
 * (at most 20 faces); larger inputs raise ResourceError. Enumeration order
 * is fixed, so the reported minimizer is deterministic.
 */
FlatNormResult exhaustive_oracle(const ComplexPtr& k, const Chain& t, double lambda,
                                 std::int64_t coeff_range = 1);

} // namespace flatnorm
