#include "flatnorm/flatnorm_graphcut.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "flatnorm/maxflow.hpp"
#include "flatnorm/shape_chain.hpp"

namespace flatnorm {

namespace {

FlatNormResult empty_result(const BinaryShape& s, double lambda,
                            const NeighborhoodStencil& stencil) {
    ComplexPtr k = complex_for(s);
    FlatNormResult r(Chain(k, 2), Chain(k, 1));
    r.lambda = lambda;
    r.method = "graphcut";
    r.stencil = stencil_name(stencil.kind);
    return r;
}

} // namespace

GraphcutSolve graphcut_solve(const BinaryShape& s, double lambda,
                             const NeighborhoodStencil& stencil) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if (s.width < 1 || s.height < 1)
        throw std::invalid_argument("degenerate shape grid");

    const int w = s.width, h = s.height;
    const int npix = w * h;
    const int source = npix, sink = npix + 1;
    const double tcap = lambda * s.spacing * s.spacing;

    if (s.empty_foreground())
        return {empty_result(s, lambda, stencil), BinaryShape(w, h, s.spacing, s.origin_x, s.origin_y), 0.0};

    auto pix = [w](int x, int y) { return y * w + x; };

    // degree pass, then identical fill pass: arc order is fixed by the
    // pixel-major, link-major enumeration below
    std::vector<int> degree(npix + 2, 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int p = pix(x, y);
            ++degree[p];
            ++degree[s.bit(x, y) ? source : sink];
            for (const auto& link : stencil.links) {
                int qx = x + link.dx, qy = y + link.dy;
                if (qx < 0 || qx >= w || qy < 0 || qy >= h) continue;
                ++degree[p];
                ++degree[pix(qx, qy)];
            }
        }

    FlowNetwork net(npix + 2, degree);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int p = pix(x, y);
            if (s.bit(x, y))
                net.add_edge(source, p, tcap, 0.0);
            else
                net.add_edge(p, sink, tcap, 0.0);
            for (const auto& link : stencil.links) {
                int qx = x + link.dx, qy = y + link.dy;
                if (qx < 0 || qx >= w || qy < 0 || qy >= h) continue;
                net.add_edge(p, pix(qx, qy), link.weight, link.weight);
            }
        }

    const double flow = net.max_flow(source, sink);
    const auto side = net.min_cut_source_side(source);

    BinaryShape sigma(w, h, s.spacing, s.origin_x, s.origin_y);
    for (int p = 0; p < npix; ++p)
        if (side[p]) sigma.bits[p] = 1;

    // recompute the cut capacity from original weights: the perimeter part
    // from severed n-links, the area part from pixels whose side disagrees
    // with their t-link
    double perimeter = 0.0;
    std::int64_t symdiff = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int p = pix(x, y);
            if ((side[p] != 0) != s.bit(x, y)) ++symdiff;
            for (const auto& link : stencil.links) {
                int qx = x + link.dx, qy = y + link.dy;
                if (qx < 0 || qx >= w || qy < 0 || qy >= h) continue;
                if (side[p] != side[pix(qx, qy)]) perimeter += link.weight;
            }
        }

    ComplexPtr k = complex_for(s);
    Chain s_chain = subtract(to_2chain(s, k), to_2chain(sigma, k));
    Chain residual = boundary_chain(sigma, k);

    FlatNormResult r(std::move(s_chain), std::move(residual));
    r.lambda = lambda;
    r.method = "graphcut";
    r.stencil = stencil_name(stencil.kind);
    r.mass_s = static_cast<double>(symdiff) * s.spacing * s.spacing;
    r.mass_residual = perimeter;
    r.value = r.mass_residual + lambda * r.mass_s;
    r.max_s_coeff = r.s_chain.max_abs_coeff();
    r.iterations = net.augmentations();
    return {std::move(r), std::move(sigma), flow};
}

FlatNormResult flatnorm_graphcut(const BinaryShape& s, double lambda,
                                 const NeighborhoodStencil& stencil) {
    return graphcut_solve(s, lambda, stencil).result;
}

BinaryShape l1tv_denoise(const BinaryShape& s, double lambda,
                         const NeighborhoodStencil& stencil) {
    return graphcut_solve(s, lambda, stencil).sigma;
}

namespace {

/// Least-squares (Kasa) circle fit; returns the fitted radius or a
/// negative value when the system is singular.
double fit_circle_radius(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 8) return -1.0;
    double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0;
    double sxz = 0, syz = 0, sz = 0;
    const double n = static_cast<double>(pts.size());
    for (const auto& [x, y] : pts) {
        double z = x * x + y * y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        sx += x;
        sy += y;
        sxz += x * z;
        syz += y * z;
        sz += z;
    }
    // normal equations for z + D x + E y + F = 0
    double m[3][4] = {{sxx, sxy, sx, -sxz},
                      {sxy, syy, sy, -syz},
                      {sx, sy, n, -sz}};
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (std::abs(m[piv][c]) < 1e-12) return -1.0;
        if (piv != c)
            for (int j = c; j < 4; ++j) std::swap(m[piv][j], m[c][j]);
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            double f = m[r][c] / m[c][c];
            for (int j = c; j < 4; ++j) m[r][j] -= f * m[c][j];
        }
    }
    double d = m[0][3] / m[0][0];
    double e = m[1][3] / m[1][1];
    double f = m[2][3] / m[2][2];
    double r2 = (d * d + e * e) / 4.0 - f;
    return r2 > 0.0 ? std::sqrt(r2) : -1.0;
}

} // namespace

CornerRoundingReport corner_rounding_check(double side, double lambda,
                                           double resolution) {
    if (!(side > 0.0)) throw std::invalid_argument("square side must be > 0");
    const double threshold = (2.0 + std::sqrt(M_PI)) / side;
    if (!(lambda >= threshold))
        throw std::invalid_argument(
            "corner rounding requires lambda >= (2+sqrt(pi))/a = " +
            std::to_string(threshold) + "; below that the full fill is cheaper");
    if (!(resolution >= 256.0))
        throw std::invalid_argument("corner rounding requires resolution >= 256");

    PolygonShape square{{{0.0, 0.0}, {side, 0.0}, {side, side}, {0.0, side}}};
    BinaryShape omega = rasterize(square, resolution);
    NeighborhoodStencil stencil = make_stencil(StencilKind::N16, omega.spacing);
    GraphcutSolve solve = graphcut_solve(omega, lambda, stencil);

    CornerRoundingReport rep;
    rep.side = side;
    rep.lambda = lambda;
    rep.resolution = resolution;
    rep.value = solve.result.value;
    rep.expected_value = 4.0 * side + (M_PI - 4.0) / lambda;
    rep.value_rel_err = std::abs(rep.value - rep.expected_value) / rep.expected_value;
    rep.value_ok = rep.value_rel_err <= rep.value_tol;

    // boundary pixel centers of Sigma
    const BinaryShape& sg = solve.sigma;
    std::vector<std::pair<double, double>> boundary_pts;
    for (int y = 0; y < sg.height; ++y)
        for (int x = 0; x < sg.width; ++x) {
            if (!sg.bit(x, y)) continue;
            if (sg.bit_or_false(x - 1, y) && sg.bit_or_false(x + 1, y) &&
                sg.bit_or_false(x, y - 1) && sg.bit_or_false(x, y + 1))
                continue;
            boundary_pts.emplace_back(sg.pixel_cx(x), sg.pixel_cy(y));
        }

    const double r_target = 1.0 / lambda;
    const double window = 0.95 * r_target; // arc only; excludes straight sides
    const double corners[4][2] = {
        {0.0, 0.0}, {side, 0.0}, {side, side}, {0.0, side}};
    rep.max_radius_rel_dev = 0.0;
    rep.radius_ok = true;
    for (int c = 0; c < 4; ++c) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& [px, py] : boundary_pts)
            if (std::abs(px - corners[c][0]) <= window &&
                std::abs(py - corners[c][1]) <= window)
                pts.emplace_back(px, py);
        double r = fit_circle_radius(pts);
        rep.fitted_radius[c] = r;
        double dev = r > 0.0 ? std::abs(r - r_target) / r_target : 1.0;
        rep.max_radius_rel_dev = std::max(rep.max_radius_rel_dev, dev);
        if (dev > rep.radius_tol) rep.radius_ok = false;
    }
    rep.pass = rep.value_ok && rep.radius_ok;
    return rep;
}

} // namespace flatnorm
