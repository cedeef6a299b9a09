#pragma once

#include <string>
#include <vector>

namespace flatnorm {

enum class StencilKind { N4, N8, N16 };

std::string stencil_name(StencilKind k);
StencilKind stencil_from_name(const std::string& name);

/**
 * Pixel-neighborhood system defining the cut metric. Offsets are stored
 * once per undirected direction (the negated offset is implied), each with
 * the capacity of one pixel-pair link.
 *
 * N4 uses weight = spacing per link, which makes the cut value the exact
 * cubical (l1) perimeter -- identical to the chain mass the LP solver
 * minimizes. N8 and N16 use Cauchy-Crofton weights
 *     w_k = spacing^2 * dtheta_k / (2 |e_k|),
 * where dtheta_k is the angular cell around direction k and |e_k| the
 * physical offset length, approximating the Euclidean perimeter.
 */
struct NeighborhoodStencil {
    StencilKind kind;
    struct Link {
        int dx;
        int dy;
        double weight;
    };
    std::vector<Link> links;
};

NeighborhoodStencil make_stencil(StencilKind kind, double spacing);

} // namespace flatnorm
