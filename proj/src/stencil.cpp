#include "flatnorm/stencil.hpp"

#include <cmath>
#include <stdexcept>

namespace flatnorm {

std::string stencil_name(StencilKind k) {
    switch (k) {
        case StencilKind::N4: return "N4";
        case StencilKind::N8: return "N8";
        default: return "N16";
    }
}

StencilKind stencil_from_name(const std::string& name) {
    if (name == "N4") return StencilKind::N4;
    if (name == "N8") return StencilKind::N8;
    if (name == "N16") return StencilKind::N16;
    throw std::invalid_argument("unknown stencil: " + name + " (want N4|N8|N16)");
}

NeighborhoodStencil make_stencil(StencilKind kind, double spacing) {
    if (!(spacing > 0.0)) throw std::invalid_argument("stencil spacing must be > 0");
    const double h = spacing;
    NeighborhoodStencil s{kind, {}};

    auto crofton = [&](int dx, int dy, double dtheta) {
        double len = h * std::sqrt(double(dx * dx + dy * dy));
        s.links.push_back({dx, dy, h * h * dtheta / (2.0 * len)});
    };

    switch (kind) {
        case StencilKind::N4:
            s.links = {{1, 0, h}, {0, 1, h}};
            break;
        case StencilKind::N8: {
            const double dt = M_PI / 4.0;
            crofton(1, 0, dt);
            crofton(0, 1, dt);
            crofton(1, 1, dt);
            crofton(1, -1, dt);
            break;
        }
        case StencilKind::N16: {
            // angular cells: axis directions sit between the two knight
            // angles +-atan(1/2); diagonals between atan(1/2) and atan(2)
            const double knight = std::atan(0.5);          // 0.46365
            const double dt_axis = knight;                 // half-gap both sides
            const double dt_diag = M_PI / 4.0 - knight;    // 0.32175
            const double dt_knight = M_PI / 8.0;
            crofton(1, 0, dt_axis);
            crofton(0, 1, dt_axis);
            crofton(1, 1, dt_diag);
            crofton(1, -1, dt_diag);
            crofton(2, 1, dt_knight);
            crofton(1, 2, dt_knight);
            crofton(2, -1, dt_knight);
            crofton(1, -2, dt_knight);
            break;
        }
    }
    return s;
}

} // namespace flatnorm
