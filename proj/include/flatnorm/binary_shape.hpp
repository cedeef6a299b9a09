#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace flatnorm {

/**
 * A rasterized subset of the plane: a w x h bit grid with physical pixel
 * spacing and the physical coordinates of its lower-left corner. Row 0 is
 * the bottom row; pixel (x, y) covers
 * [origin_x + x*spacing, origin_x + (x+1)*spacing) x [... same in y).
 */
struct BinaryShape {
    int width = 0;
    int height = 0;
    double spacing = 1.0;
    double origin_x = 0.0;
    double origin_y = 0.0;
    std::vector<std::uint8_t> bits; // width*height, row-major from the bottom

    BinaryShape() = default;
    BinaryShape(int w, int h, double s, double ox = 0.0, double oy = 0.0);

    bool bit(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set_bit(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    /// Bounds-checked read; out-of-grid pixels are background.
    bool bit_or_false(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height && bit(x, y);
    }

    std::int64_t foreground_count() const;
    double area() const { return static_cast<double>(foreground_count()) * spacing * spacing; }
    bool empty_foreground() const { return foreground_count() == 0; }

    /// Physical center of pixel (x, y).
    double pixel_cx(int x) const { return origin_x + (x + 0.5) * spacing; }
    double pixel_cy(int y) const { return origin_y + (y + 0.5) * spacing; }

    bool operator==(const BinaryShape& o) const = default;
};

/// Simple counterclockwise polygon, closed implicitly.
struct PolygonShape {
    std::vector<std::pair<double, double>> vertices;
};

struct Disk {
    double cx = 0.0;
    double cy = 0.0;
    double radius = 1.0;
};

/// Validates a polygon: >= 3 vertices, positive (counterclockwise) signed
/// area, no self-intersection. Throws std::invalid_argument otherwise.
void validate_polygon(const PolygonShape& p);

/**
 * Point-in-shape rasterization at `resolution` cells per unit length. A
 * pixel is foreground iff its center lies inside the shape; polygon
 * membership uses the even-odd crossing rule with half-open edges (points
 * on top/right boundary edges count as outside). The grid is the shape's
 * bounding box snapped outward to the pixel lattice plus a 2-pixel margin.
 */
BinaryShape rasterize(const PolygonShape& p, double resolution);
BinaryShape rasterize(const Disk& d, double resolution);

/// Rasterize onto a caller-specified grid (shared grids let several shapes
/// be compared pixel-for-pixel regardless of their own bounding boxes).
BinaryShape rasterize_onto(const PolygonShape& p, int width, int height,
                           double spacing, double origin_x, double origin_y);
BinaryShape rasterize_onto(const Disk& d, int width, int height,
                           double spacing, double origin_x, double origin_y);

} // namespace flatnorm
