#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace flatnorm {

enum class Topology { Cubical, RightTriangulated };

std::string topology_name(Topology t);
Topology topology_from_name(const std::string& name);

/**
 * A finite oriented 2-D grid complex over a width x height block of cells.
 *
 * Indexing is row-major with the origin at the lower-left corner:
 *   vertices   v(x, y) = y*(w+1) + x,          x in [0,w],  y in [0,h]
 *   h-edges    from (x,y) to (x+1,y),          x in [0,w),  y in [0,h]
 *   v-edges    from (x,y) to (x,y+1),          x in [0,w],  y in [0,h)
 *   d-edges    from (x,y) to (x+1,y+1)         (triangulated only)
 *   faces      cell (x,y) = y*w + x  (cubical), or the lower/upper triangle
 *              pair 2*(y*w+x), 2*(y*w+x)+1 of that cell (triangulated).
 *
 * Orientation convention, fixed once for the whole project: edges point
 * toward +x / +y (diagonals toward +x+y), faces are counterclockwise.
 * An edge's boundary is head - tail; a face's boundary lists each of its
 * edges with +1 when the counterclockwise traversal agrees with the edge
 * direction and -1 otherwise.
 *
 * Weights: edge weight = physical length (spacing, or spacing*sqrt(2) for
 * diagonals); face weight = physical area (spacing^2, halved for triangles).
 *
 * Instances are immutable after construction and identified by an opaque
 * id so that chains from different complexes can never be combined, even
 * when the complexes are structurally identical.
 */
class GridComplex2 {
public:
    GridComplex2(int width, int height, double spacing, Topology topology);

    std::uint64_t id() const { return id_; }
    int width() const { return width_; }
    int height() const { return height_; }
    double spacing() const { return spacing_; }
    Topology topology() const { return topology_; }

    int num_vertices() const { return (width_ + 1) * (height_ + 1); }
    int num_edges() const { return static_cast<int>(edge_tail_.size()); }
    int num_faces() const { return num_faces_; }
    int num_cells(int dim) const;

    // index helpers
    int vertex_index(int x, int y) const { return y * (width_ + 1) + x; }
    int h_edge_index(int x, int y) const { return y * width_ + x; }
    int v_edge_index(int x, int y) const {
        return width_ * (height_ + 1) + y * (width_ + 1) + x;
    }
    int d_edge_index(int x, int y) const {
        return width_ * (height_ + 1) + (width_ + 1) * height_ + y * width_ + x;
    }
    /// Cubical face of cell (x,y).
    int face_index(int x, int y) const { return y * width_ + x; }
    /// Triangle of cell (x,y); lower-right triangle for lower=true.
    int tri_face_index(int x, int y, bool lower) const {
        return 2 * (y * width_ + x) + (lower ? 0 : 1);
    }

    double edge_weight(int e) const { return edge_weight_[e]; }
    double face_weight(int f) const { return face_weight_[f]; }
    double cell_weight(int dim, int idx) const;

    int edge_tail(int e) const { return edge_tail_[e]; }
    int edge_head(int e) const { return edge_head_[e]; }

    /// Signed boundary incidence of face f: up to 4 (edge, sign) entries;
    /// entries() gives the count (3 for triangles, 4 for squares).
    struct FaceBoundary {
        std::array<int, 4> edge;
        std::array<int, 4> sign;
        int entries;
    };
    FaceBoundary face_boundary(int f) const;

    // geometry (physical coordinates, origin at (0,0))
    double vertex_x(int v) const { return spacing_ * (v % (width_ + 1)); }
    double vertex_y(int v) const { return spacing_ * (v / (width_ + 1)); }
    /// Corner vertices of face f in counterclockwise order.
    std::vector<int> face_vertices(int f) const;

private:
    std::uint64_t id_;
    int width_;
    int height_;
    double spacing_;
    Topology topology_;
    int num_faces_;

    std::vector<int> edge_tail_;
    std::vector<int> edge_head_;
    std::vector<double> edge_weight_;
    std::vector<double> face_weight_;
    // stride-4 flattened (edge, sign) incidence per face; edge = -1 pads
    std::vector<int> face_edge_;
    std::vector<std::int8_t> face_sign_;
};

using ComplexPtr = std::shared_ptr<const GridComplex2>;

/// Factory for the shared-ownership form all chain operations use.
ComplexPtr build_grid_complex(int width, int height, double spacing, Topology topology);

} // namespace flatnorm
