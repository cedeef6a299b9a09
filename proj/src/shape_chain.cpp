#include "flatnorm/shape_chain.hpp"

#include <cmath>
#include <stdexcept>

namespace flatnorm {

ComplexPtr complex_for(const BinaryShape& s, Topology topology) {
    return build_grid_complex(s.width, s.height, s.spacing, topology);
}

namespace {

void require_grid_match(const BinaryShape& s, const GridComplex2& k) {
    if (k.width() != s.width || k.height() != s.height)
        throw std::invalid_argument("complex dimensions do not match the bit grid");
    if (std::abs(k.spacing() - s.spacing) > 1e-12 * s.spacing)
        throw std::invalid_argument("complex spacing does not match the bit grid");
}

} // namespace

Chain to_2chain(const BinaryShape& s, const ComplexPtr& k) {
    require_grid_match(s, *k);
    Chain c(k, 2);
    for (int y = 0; y < s.height; ++y)
        for (int x = 0; x < s.width; ++x) {
            if (!s.bit(x, y)) continue;
            if (k->topology() == Topology::Cubical) {
                c.add_cell(k->face_index(x, y), 1);
            } else {
                c.add_cell(k->tri_face_index(x, y, true), 1);
                c.add_cell(k->tri_face_index(x, y, false), 1);
            }
        }
    return c;
}

Chain boundary_chain(const BinaryShape& s, const ComplexPtr& k) {
    return boundary(to_2chain(s, k));
}

} // namespace flatnorm
