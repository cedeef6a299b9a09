#include "flatnorm/binary_shape.hpp"

#include <cmath>
#include <stdexcept>

namespace flatnorm {

BinaryShape::BinaryShape(int w, int h, double s, double ox, double oy)
    : width(w), height(h), spacing(s), origin_x(ox), origin_y(oy),
      bits(static_cast<std::size_t>(w) * h, 0) {
    if (w < 1 || h < 1) throw std::invalid_argument("shape grid must be >= 1x1");
    if (!(s > 0.0)) throw std::invalid_argument("shape spacing must be > 0");
}

std::int64_t BinaryShape::foreground_count() const {
    std::int64_t n = 0;
    for (auto b : bits) n += b;
    return n;
}

namespace {

double signed_area(const PolygonShape& p) {
    double a = 0.0;
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& [x1, y1] = v[i];
        const auto& [x2, y2] = v[(i + 1) % v.size()];
        a += x1 * y2 - x2 * y1;
    }
    return a / 2.0;
}

// proper crossing of open segments (shared endpoints of adjacent edges allowed)
bool segments_cross(double ax, double ay, double bx, double by,
                    double cx, double cy, double dx, double dy) {
    auto orient = [](double px, double py, double qx, double qy, double rx, double ry) {
        return (qx - px) * (ry - py) - (qy - py) * (rx - px);
    };
    double o1 = orient(ax, ay, bx, by, cx, cy);
    double o2 = orient(ax, ay, bx, by, dx, dy);
    double o3 = orient(cx, cy, dx, dy, ax, ay);
    double o4 = orient(cx, cy, dx, dy, bx, by);
    return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) &&
           o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

bool point_in_polygon(const PolygonShape& p, double px, double py) {
    bool inside = false;
    const auto& v = p.vertices;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        const auto& [xi, yi] = v[i];
        const auto& [xj, yj] = v[j];
        if ((yi > py) != (yj > py)) {
            double xint = xi + (py - yi) * (xj - xi) / (yj - yi);
            if (px < xint) inside = !inside;
        }
    }
    return inside;
}

struct Box {
    double x0, y0, x1, y1;
};

Box bounding_box(const PolygonShape& p) {
    Box b{p.vertices[0].first, p.vertices[0].second,
          p.vertices[0].first, p.vertices[0].second};
    for (const auto& [x, y] : p.vertices) {
        b.x0 = std::min(b.x0, x);
        b.y0 = std::min(b.y0, y);
        b.x1 = std::max(b.x1, x);
        b.y1 = std::max(b.y1, y);
    }
    return b;
}

// bounding box snapped outward to the lattice, plus a fixed 2-pixel margin
BinaryShape grid_for_box(const Box& b, double resolution) {
    if (!(resolution > 0.0))
        throw std::invalid_argument("rasterize resolution must be > 0");
    double h = 1.0 / resolution;
    int ix0 = static_cast<int>(std::floor(b.x0 / h)) - 2;
    int iy0 = static_cast<int>(std::floor(b.y0 / h)) - 2;
    int ix1 = static_cast<int>(std::ceil(b.x1 / h)) + 2;
    int iy1 = static_cast<int>(std::ceil(b.y1 / h)) + 2;
    return BinaryShape(ix1 - ix0, iy1 - iy0, h, ix0 * h, iy0 * h);
}

template <typename Inside>
void fill(BinaryShape& s, Inside inside) {
    for (int y = 0; y < s.height; ++y)
        for (int x = 0; x < s.width; ++x)
            if (inside(s.pixel_cx(x), s.pixel_cy(y))) s.set_bit(x, y, true);
}

} // namespace

void validate_polygon(const PolygonShape& p) {
    const auto& v = p.vertices;
    if (v.size() < 3)
        throw std::invalid_argument("polygon needs at least 3 vertices");
    double a = signed_area(p);
    if (std::abs(a) < 1e-12)
        throw std::invalid_argument("polygon is degenerate (zero area)");
    if (a < 0.0)
        throw std::invalid_argument("polygon must be counterclockwise");
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const auto& [ax, ay] = v[i];
            const auto& [bx, by] = v[(i + 1) % v.size()];
            const auto& [cx, cy] = v[j];
            const auto& [dx, dy] = v[(j + 1) % v.size()];
            if (segments_cross(ax, ay, bx, by, cx, cy, dx, dy))
                throw std::invalid_argument("polygon is self-intersecting");
        }
}

BinaryShape rasterize(const PolygonShape& p, double resolution) {
    validate_polygon(p);
    BinaryShape s = grid_for_box(bounding_box(p), resolution);
    fill(s, [&](double x, double y) { return point_in_polygon(p, x, y); });
    return s;
}

BinaryShape rasterize(const Disk& d, double resolution) {
    if (!(d.radius > 0.0)) throw std::invalid_argument("disk radius must be > 0");
    BinaryShape s = grid_for_box(
        {d.cx - d.radius, d.cy - d.radius, d.cx + d.radius, d.cy + d.radius},
        resolution);
    double r2 = d.radius * d.radius;
    fill(s, [&](double x, double y) {
        double dx = x - d.cx, dy = y - d.cy;
        return dx * dx + dy * dy < r2;
    });
    return s;
}

BinaryShape rasterize_onto(const PolygonShape& p, int width, int height,
                           double spacing, double origin_x, double origin_y) {
    validate_polygon(p);
    BinaryShape s(width, height, spacing, origin_x, origin_y);
    fill(s, [&](double x, double y) { return point_in_polygon(p, x, y); });
    return s;
}

BinaryShape rasterize_onto(const Disk& d, int width, int height,
                           double spacing, double origin_x, double origin_y) {
    if (!(d.radius > 0.0)) throw std::invalid_argument("disk radius must be > 0");
    BinaryShape s(width, height, spacing, origin_x, origin_y);
    double r2 = d.radius * d.radius;
    fill(s, [&](double x, double y) {
        double dx = x - d.cx, dy = y - d.cy;
        return dx * dx + dy * dy < r2;
    });
    return s;
}

} // namespace flatnorm
