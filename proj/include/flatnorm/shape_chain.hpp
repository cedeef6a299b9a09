#pragma once

#include "flatnorm/binary_shape.hpp"
#include "flatnorm/chain.hpp"

namespace flatnorm {

/// Grid complex whose cells coincide with the shape's pixel grid.
ComplexPtr complex_for(const BinaryShape& s, Topology topology = Topology::Cubical);

/**
 * 2-chain with coefficient 1 on every foreground cell of s. The complex
 * must match the bit grid (width, height and spacing); on a triangulated
 * complex each pixel maps to both of its triangles.
 */
Chain to_2chain(const BinaryShape& s, const ComplexPtr& k);

/// boundary(to_2chain(s, k)): the oriented 1-boundary of the pixel set.
Chain boundary_chain(const BinaryShape& s, const ComplexPtr& k);

} // namespace flatnorm
