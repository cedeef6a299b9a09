#include "flatnorm/euclidean_length.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatnorm {

namespace {

struct Direction {
    int dx;
    int dy;
    double inv_len;  // 1 / |e| in pixel units
    double defect;   // crossing deficit per +90 degree corner
};

struct CroftonWeights {
    double axis;
    double diag;
    double knight;
};

/// Solves for the angular weights: axis directions exact, diagonal
/// directions exact, total weight pi.
CroftonWeights calibrated_weights() {
    const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0), s10 = std::sqrt(10.0);
    double m[3][4] = {{1.0, s2, 6.0 / s5, 2.0},
                      {s2, 1.0, 8.0 / s10, 2.0},
                      {1.0, 1.0, 2.0, M_PI / 2.0}};
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        for (int j = c; j < 4; ++j) std::swap(m[piv][j], m[c][j]);
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            double f = m[r][c] / m[c][c];
            for (int j = c; j < 4; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

/// Net +90-degree turning of the level-set boundary via the standard 2x2
/// pattern census (diagonal-touch patterns count both corners).
std::int64_t turning_census(const std::vector<std::uint8_t>& mask, int w, int h) {
    std::int64_t t = 0;
    auto at = [&](int x, int y) -> int {
        return (x >= 0 && x < w && y >= 0 && y < h)
                   ? mask[static_cast<std::size_t>(y) * w + x]
                   : 0;
    };
    for (int y = -1; y < h; ++y)
        for (int x = -1; x < w; ++x) {
            int a = at(x, y), b = at(x + 1, y), c = at(x, y + 1), d = at(x + 1, y + 1);
            int n = a + b + c + d;
            if (n == 1)
                ++t;
            else if (n == 3)
                --t;
            else if (n == 2 && a == d && b == c)
                t += 2;
        }
    return t;
}

double crofton_perimeter(const std::vector<std::uint8_t>& mask, int w, int h,
                         double spacing) {
    static const CroftonWeights cw = calibrated_weights();
    const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
    const Direction dirs[8] = {
        {1, 0, 1.0, 0.0},        {0, 1, 1.0, 0.0},
        {1, 1, 1.0 / s2, 0.5},   {1, -1, 1.0 / s2, 0.5},
        {2, 1, 1.0 / s5, 1.0},   {1, 2, 1.0 / s5, 1.0},
        {2, -1, 1.0 / s5, 1.0},  {1, -2, 1.0 / s5, 1.0}};
    const double wclass[8] = {cw.axis, cw.axis, cw.diag, cw.diag,
                              cw.knight, cw.knight, cw.knight, cw.knight};

    auto at = [&](int x, int y) -> int {
        return (x >= 0 && x < w && y >= 0 && y < h)
                   ? mask[static_cast<std::size_t>(y) * w + x]
                   : 0;
    };

    const std::int64_t turning = turning_census(mask, w, h);
    double total = 0.0;
    for (int d = 0; d < 8; ++d) {
        const auto& dir = dirs[d];
        std::int64_t pairs = 0;
        // pairs reaching out of the grid still matter: scan a 2-pixel apron
        for (int y = -2; y < h + 2; ++y)
            for (int x = -2; x < w + 2; ++x)
                if (at(x, y) != at(x + dir.dx, y + dir.dy)) ++pairs;
        double count = static_cast<double>(pairs) +
                       dir.defect * static_cast<double>(turning);
        total += wclass[d] * dir.inv_len * 0.5 * spacing * count;
    }
    return total;
}

} // namespace

double euclidean_length(const Chain& c) {
    if (c.dim() != 1)
        throw std::invalid_argument("euclidean_length expects a 1-chain");
    if (c.complex()->topology() != Topology::Cubical)
        throw std::invalid_argument("euclidean_length expects a cubical complex");
    if (c.is_zero()) return 0.0;

    Chain b = boundary(c);
    if (!b.is_zero()) {
        const auto& first = *b.cells().begin();
        throw std::invalid_argument(
            "chain is not closed: 0-boundary has " +
            std::to_string(b.support_size()) + " nonzero vertices, e.g. vertex " +
            std::to_string(first.first) + " with coefficient " +
            std::to_string(first.second));
    }

    const GridComplex2& k = *c.complex();
    const int w = k.width(), h = k.height();

    // winding function u with c = boundary(u), integrated across the
    // vertical edges of each row; unique since the complex is a disk
    std::vector<std::int64_t> u(static_cast<std::size_t>(w) * h, 0);
    auto uat = [&](int x, int y) -> std::int64_t& {
        return u[static_cast<std::size_t>(y) * w + x];
    };
    for (int y = 0; y < h; ++y) {
        std::int64_t acc = 0;
        for (int x = 0; x < w; ++x) {
            acc -= c.coeff(k.v_edge_index(x, y));
            uat(x, y) = acc;
        }
    }

    std::int64_t umin = 0, umax = 0;
    for (auto v : u) {
        umin = std::min(umin, v);
        umax = std::max(umax, v);
    }

    double total = 0.0;
    std::vector<std::uint8_t> mask(u.size());
    for (std::int64_t level = umin + 1; level <= umax; ++level) {
        if (level <= 0) {
            // complement form: {u >= level} includes the outside, so
            // measure the finite set {u <= level - 1} instead
            for (std::size_t i = 0; i < u.size(); ++i) mask[i] = u[i] <= level - 1;
        } else {
            for (std::size_t i = 0; i < u.size(); ++i) mask[i] = u[i] >= level;
        }
        total += crofton_perimeter(mask, w, h, k.spacing());
    }
    return total;
}

} // namespace flatnorm
