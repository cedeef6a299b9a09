#pragma once

#include <string>

#include "flatnorm/flatnorm_result.hpp"

namespace flatnorm {

/// Cross-solver comparison attached by the CLI's `--method both` mode.
struct AgreementReport {
    double lp_value = 0.0;
    double graphcut_value = 0.0;
    double delta = 0.0;
};

/**
 * Result wire format, fixed key order, 12-significant-digit floats:
 *   {"lambda": ..., "value": ..., "mass_residual": ..., "mass_s": ...,
 *    "s_chain": {...}, "residual_chain": {...},
 *    "method": "...", "stencil": "..."}
 * plus `"layered": true` for layered graph-cut distances and an
 * `"agreement"` object when one is supplied. Output is byte-deterministic.
 */
std::string result_to_json(const FlatNormResult& r,
                           const AgreementReport* agreement = nullptr);

/**
 * SVG 1.1 rendering of a decomposition: the input chain T = residual + dS
 * in one stroke class, the residual T - dS in another, and S as filled
 * cells with opacity graded by |coefficient|. Fixed-precision coordinates
 * make the output byte-deterministic.
 */
std::string result_to_svg(const FlatNormResult& r);

void export_json(const FlatNormResult& r, const std::string& path,
                 const AgreementReport* agreement = nullptr);
void export_svg(const FlatNormResult& r, const std::string& path);

/// Writes via a temp file in the same directory plus atomic rename, so a
/// failed run never leaves a partial file behind.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace flatnorm
