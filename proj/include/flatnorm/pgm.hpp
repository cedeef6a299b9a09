#pragma once

#include <string>

#include "flatnorm/binary_shape.hpp"

namespace flatnorm {

/**
 * Loads a plain (P2) or raw (P5) PGM with maxval <= 255. A pixel is
 * foreground iff its value >= threshold. PGM rows run top to bottom; they
 * are flipped into the bottom-up BinaryShape convention. Malformed input
 * raises ParseError with the offending byte offset.
 */
BinaryShape load_pgm(const std::string& path, int threshold = 128,
                     double spacing = 1.0);

/// Writes a shape as plain (P2, binary=false raw P5 otherwise) PGM with
/// values 255/0. Row order is flipped back to top-down.
void write_pgm(const BinaryShape& s, const std::string& path, bool plain = true);

} // namespace flatnorm
