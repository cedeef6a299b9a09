#include "flatnorm/grid_complex.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace flatnorm {

namespace {
std::atomic<std::uint64_t> next_complex_id{1};
}

std::string topology_name(Topology t) {
    return t == Topology::Cubical ? "cubical" : "right-triangulated";
}

Topology topology_from_name(const std::string& name) {
    if (name == "cubical") return Topology::Cubical;
    if (name == "right-triangulated") return Topology::RightTriangulated;
    throw std::invalid_argument("unknown topology: " + name);
}

GridComplex2::GridComplex2(int width, int height, double spacing, Topology topology)
    : id_(next_complex_id.fetch_add(1)),
      width_(width),
      height_(height),
      spacing_(spacing),
      topology_(topology) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("grid complex dimensions must be >= 1");
    if (!(spacing > 0.0))
        throw std::invalid_argument("grid complex spacing must be > 0");

    const int w = width_, h = height_;
    const int n_h_edges = w * (h + 1);
    const int n_v_edges = (w + 1) * h;
    const bool tri = topology_ == Topology::RightTriangulated;
    const int n_d_edges = tri ? w * h : 0;
    const int n_edges = n_h_edges + n_v_edges + n_d_edges;

    edge_tail_.resize(n_edges);
    edge_head_.resize(n_edges);
    edge_weight_.resize(n_edges);

    for (int y = 0; y <= h; ++y)
        for (int x = 0; x < w; ++x) {
            int e = h_edge_index(x, y);
            edge_tail_[e] = vertex_index(x, y);
            edge_head_[e] = vertex_index(x + 1, y);
            edge_weight_[e] = spacing_;
        }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x <= w; ++x) {
            int e = v_edge_index(x, y);
            edge_tail_[e] = vertex_index(x, y);
            edge_head_[e] = vertex_index(x, y + 1);
            edge_weight_[e] = spacing_;
        }
    if (tri) {
        const double diag = spacing_ * std::sqrt(2.0);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                int e = d_edge_index(x, y);
                edge_tail_[e] = vertex_index(x, y);
                edge_head_[e] = vertex_index(x + 1, y + 1);
                edge_weight_[e] = diag;
            }
    }

    num_faces_ = tri ? 2 * w * h : w * h;
    face_weight_.assign(num_faces_, tri ? spacing_ * spacing_ / 2.0
                                        : spacing_ * spacing_);
    face_edge_.assign(static_cast<std::size_t>(num_faces_) * 4, -1);
    face_sign_.assign(static_cast<std::size_t>(num_faces_) * 4, 0);

    auto put = [&](int f, int slot, int edge, int sign) {
        face_edge_[static_cast<std::size_t>(f) * 4 + slot] = edge;
        face_sign_[static_cast<std::size_t>(f) * 4 + slot] =
            static_cast<std::int8_t>(sign);
    };

    if (!tri) {
        // counterclockwise: bottom, right, top(reversed), left(reversed)
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                int f = face_index(x, y);
                put(f, 0, h_edge_index(x, y), +1);
                put(f, 1, v_edge_index(x + 1, y), +1);
                put(f, 2, h_edge_index(x, y + 1), -1);
                put(f, 3, v_edge_index(x, y), -1);
            }
    } else {
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                // lower-right triangle (x,y) -> (x+1,y) -> (x+1,y+1)
                int f = tri_face_index(x, y, true);
                put(f, 0, h_edge_index(x, y), +1);
                put(f, 1, v_edge_index(x + 1, y), +1);
                put(f, 2, d_edge_index(x, y), -1);
                // upper-left triangle (x,y) -> (x+1,y+1) -> (x,y+1)
                f = tri_face_index(x, y, false);
                put(f, 0, d_edge_index(x, y), +1);
                put(f, 1, h_edge_index(x, y + 1), -1);
                put(f, 2, v_edge_index(x, y), -1);
            }
    }
}

int GridComplex2::num_cells(int dim) const {
    switch (dim) {
        case 0: return num_vertices();
        case 1: return num_edges();
        case 2: return num_faces();
        default: throw std::invalid_argument("chain dimension must be 0, 1 or 2");
    }
}

double GridComplex2::cell_weight(int dim, int idx) const {
    switch (dim) {
        case 0: return 1.0;
        case 1: return edge_weight_[idx];
        case 2: return face_weight_[idx];
        default: throw std::invalid_argument("chain dimension must be 0, 1 or 2");
    }
}

GridComplex2::FaceBoundary GridComplex2::face_boundary(int f) const {
    FaceBoundary b{};
    b.entries = topology_ == Topology::RightTriangulated ? 3 : 4;
    for (int s = 0; s < b.entries; ++s) {
        b.edge[s] = face_edge_[static_cast<std::size_t>(f) * 4 + s];
        b.sign[s] = face_sign_[static_cast<std::size_t>(f) * 4 + s];
    }
    return b;
}

std::vector<int> GridComplex2::face_vertices(int f) const {
    if (topology_ == Topology::Cubical) {
        int x = f % width_, y = f / width_;
        return {vertex_index(x, y), vertex_index(x + 1, y),
                vertex_index(x + 1, y + 1), vertex_index(x, y + 1)};
    }
    int cell = f / 2;
    int x = cell % width_, y = cell / width_;
    if (f % 2 == 0)
        return {vertex_index(x, y), vertex_index(x + 1, y), vertex_index(x + 1, y + 1)};
    return {vertex_index(x, y), vertex_index(x + 1, y + 1), vertex_index(x, y + 1)};
}

ComplexPtr build_grid_complex(int width, int height, double spacing, Topology topology) {
    return std::make_shared<const GridComplex2>(width, height, spacing, topology);
}

} // namespace flatnorm
