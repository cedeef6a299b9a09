#pragma once

#include <string>
#include <variant>
#include <vector>

#include "flatnorm/binary_shape.hpp"
#include "flatnorm/chain.hpp"
#include "flatnorm/flatnorm_result.hpp"
#include "flatnorm/stencil.hpp"

namespace flatnorm {

enum class Method { Lp, Graphcut };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// One lambda scale sweep: (lambda, value) pairs with method provenance
/// and a digest of the input for traceability.
struct SweepCurve {
    std::vector<std::pair<double, double>> points; // lambda strictly increasing
    std::string method;
    std::string stencil;
    std::string input_digest;
};

/**
 * Flat-norm distance between two shapes: F_lambda of the difference of
 * their boundary chains. Shapes must share spacing, with origins offset by
 * integer pixel multiples; they are padded to a common bounding box.
 *
 * The LP path is exact. The graph-cut path decomposes the three-valued
 * difference chi_a - chi_b into two nested binary level problems
 * ({f >= 1} and, via complement, {f >= 0}) and sums the two cut values;
 * such results are flagged `layered`.
 */
FlatNormResult flat_distance(const BinaryShape& a, const BinaryShape& b,
                             double lambda, Method method,
                             StencilKind stencil = StencilKind::N4);

/// Pads both shapes onto their common pixel grid (background fill).
/// Rejects incompatible spacings or non-pixel-aligned origin offsets.
std::pair<BinaryShape, BinaryShape> pad_to_common(const BinaryShape& a,
                                                  const BinaryShape& b);

/// One flat-norm solve per lambda. Entries may be computed concurrently
/// (FLATNORM_THREADS caps the worker count); the curve is assembled in
/// lambda order either way.
SweepCurve lambda_sweep(const BinaryShape& input, const std::vector<double>& lambdas,
                        Method method, StencilKind stencil = StencilKind::N4);
SweepCurve lambda_sweep(const Chain& input, const std::vector<double>& lambdas,
                        Method method, StencilKind stencil = StencilKind::N4);

std::string sweep_to_csv(const SweepCurve& c);
std::string sweep_to_json(const SweepCurve& c);

// closed-form oracles used throughout the tests
double disk_flatnorm(double radius, double lambda);
double square_flatnorm_l1(double side, double lambda);
/// Rounded-corner square cost 4a + (pi-4)/lambda; only valid in the regime
/// lambda >= (2+sqrt(pi))/a, rejected otherwise.
double square_flatnorm_euclid(double side, double lambda);

} // namespace flatnorm
