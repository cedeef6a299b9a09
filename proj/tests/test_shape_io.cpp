#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "flatnorm/binary_shape.hpp"
#include "flatnorm/errors.hpp"
#include "flatnorm/pgm.hpp"
#include "flatnorm/result_io.hpp"
#include "flatnorm/shape_chain.hpp"
#include "flatnorm/util.hpp"

using namespace flatnorm;

namespace {

std::string temp_path(const std::string& name) {
    return std::string("shapeio_") + name;
}

void write_bytes(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("P2 parsing: values, row flip, threshold") {
    const std::string path = temp_path("a.pgm");
    write_bytes(path, "P2\n# comment\n2 2\n255\n255 0\n0 255\n");
    BinaryShape s = load_pgm(path);
    CHECK(s.width == 2);
    CHECK(s.height == 2);
    // file rows are top-down: top-left and bottom-right are set
    CHECK(s.bit(0, 1));
    CHECK_FALSE(s.bit(1, 1));
    CHECK_FALSE(s.bit(0, 0));
    CHECK(s.bit(1, 0));
    std::remove(path.c_str());
}

TEST_CASE("P5 and P2 encodings of the same image load identically") {
    const std::string p2 = temp_path("b2.pgm"), p5 = temp_path("b5.pgm");
    write_bytes(p2, "P2\n3 2\n255\n255 0 128\n7 200 0\n");
    write_bytes(p5, std::string("P5\n3 2\n255\n") +
                        std::string("\xff\x00\x80\x07\xc8\x00", 6));
    CHECK(load_pgm(p2) == load_pgm(p5));
    std::remove(p2.c_str());
    std::remove(p5.c_str());
}

TEST_CASE("all-background image is a valid empty shape") {
    const std::string path = temp_path("zero.pgm");
    write_bytes(path, "P2\n4 3\n255\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
    BinaryShape s = load_pgm(path);
    CHECK(s.empty_foreground());
    std::remove(path.c_str());
}

TEST_CASE("pgm writer round-trips through the loader") {
    BinaryShape s(5, 4, 1.0);
    s.set_bit(0, 0, true);
    s.set_bit(4, 3, true);
    s.set_bit(2, 1, true);
    for (bool plain : {true, false}) {
        const std::string path = temp_path(plain ? "rt2.pgm" : "rt5.pgm");
        write_pgm(s, path, plain);
        CHECK(load_pgm(path) == s);
        std::remove(path.c_str());
    }
}

TEST_CASE("malformed PGM inputs carry byte offsets") {
    const std::string path = temp_path("bad.pgm");
    write_bytes(path, "P3\n2 2\n255\n");
    CHECK_THROWS_AS(load_pgm(path), ParseError);
    write_bytes(path, "P2\n2 2\n");
    CHECK_THROWS_AS(load_pgm(path), ParseError);
    write_bytes(path, "P2\n2 2\n70000\n1 2 3 4\n");
    CHECK_THROWS_AS(load_pgm(path), ParseError);
    write_bytes(path, "P5\n2 2\n255\n\x01\x02"); // truncated payload
    try {
        load_pgm(path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() > 0);
    }
    std::remove(path.c_str());
}

TEST_CASE("grid-aligned unit square rasterizes to exactly 256 pixels") {
    PolygonShape square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    BinaryShape s = rasterize(square, 16);
    CHECK(s.foreground_count() == 256);
}

TEST_CASE("disk area converges at the perimeter-band rate") {
    for (double res : {64.0, 128.0, 256.0}) {
        BinaryShape s = rasterize(Disk{0, 0, 1.0}, res);
        double err = std::abs(s.area() - M_PI);
        CHECK(err <= 3.0 * (2.0 * M_PI) * s.spacing);
    }
    BinaryShape s = rasterize(Disk{0, 0, 1.0}, 256);
    CHECK(std::abs(s.area() - M_PI) / M_PI < 0.01);
}

TEST_CASE("triangle area lands within 2 percent") {
    PolygonShape tri{{{0, 0}, {1, 0}, {0, 1}}};
    BinaryShape s = rasterize(tri, 64);
    CHECK(std::abs(s.area() - 0.5) / 0.5 < 0.02);
}

TEST_CASE("degenerate polygons are rejected") {
    CHECK_THROWS_AS(rasterize(PolygonShape{{{0, 0}, {1, 1}}}, 8), std::invalid_argument);
    CHECK_THROWS_AS(rasterize(PolygonShape{{{0, 0}, {1, 0}, {2, 0}}}, 8),
                    std::invalid_argument);
    // clockwise
    CHECK_THROWS_AS(rasterize(PolygonShape{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}, 8),
                    std::invalid_argument);
    // bowtie
    CHECK_THROWS_AS(rasterize(PolygonShape{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}}, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(rasterize(Disk{0, 0, 1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("shared polygon edges never double-count pixels") {
    // split the unit square into two triangles along the diagonal; the
    // half-open rule assigns every pixel to exactly one side
    PolygonShape lower{{{0, 0}, {1, 0}, {1, 1}}};
    PolygonShape upper{{{0, 0}, {1, 1}, {0, 1}}};
    BinaryShape grid(20, 20, 1.0 / 16, -2.0 / 16, -2.0 / 16);
    BinaryShape a = rasterize_onto(lower, grid.width, grid.height, grid.spacing,
                                   grid.origin_x, grid.origin_y);
    BinaryShape b = rasterize_onto(upper, grid.width, grid.height, grid.spacing,
                                   grid.origin_x, grid.origin_y);
    std::int64_t overlap = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i) overlap += a.bits[i] & b.bits[i];
    CHECK(overlap == 0);
    CHECK(a.foreground_count() + b.foreground_count() == 256);
}

TEST_CASE("single pixel becomes the counterclockwise unit loop") {
    BinaryShape s(3, 3, 1.0);
    s.set_bit(1, 1, true);
    auto k = complex_for(s);
    Chain b = boundary_chain(s, k);
    CHECK(b.support_size() == 4);
    CHECK(b.coeff(k->h_edge_index(1, 1)) == 1);
    CHECK(b.coeff(k->v_edge_index(2, 1)) == 1);
    CHECK(b.coeff(k->h_edge_index(1, 2)) == -1);
    CHECK(b.coeff(k->v_edge_index(1, 1)) == -1);
    CHECK(mass(b) == doctest::Approx(4.0));
}

TEST_CASE("full foreground grid leaves only the perimeter rectangle") {
    BinaryShape s(4, 3, 0.5);
    for (auto& b : s.bits) b = 1;
    auto k = complex_for(s);
    Chain b = boundary_chain(s, k);
    CHECK(b.support_size() == 2 * (4 + 3));
    CHECK(mass(b) == doctest::Approx(2 * (4 + 3) * 0.5));
    CHECK(boundary(b).is_zero());
}

TEST_CASE("checkerboard yields two disjoint unit loops") {
    BinaryShape s(2, 2, 1.0);
    s.set_bit(0, 0, true);
    s.set_bit(1, 1, true);
    auto k = complex_for(s);
    Chain b = boundary_chain(s, k);
    CHECK(b.support_size() == 8);
    CHECK(mass(b) == doctest::Approx(8.0));
    CHECK(boundary(b).is_zero());
}

TEST_CASE("to_2chain on a triangulated complex covers both triangles") {
    BinaryShape s(2, 1, 1.0);
    s.set_bit(0, 0, true);
    auto k = complex_for(s, Topology::RightTriangulated);
    Chain c = to_2chain(s, k);
    CHECK(c.coeff(k->tri_face_index(0, 0, true)) == 1);
    CHECK(c.coeff(k->tri_face_index(0, 0, false)) == 1);
    CHECK(mass(c) == doctest::Approx(1.0));
    // diagonal cancels between the two triangles
    Chain b = boundary(c);
    CHECK(b.coeff(k->d_edge_index(0, 0)) == 0);
    CHECK(b.support_size() == 4);
}

TEST_CASE("to_2chain rejects mismatched complexes") {
    BinaryShape s(3, 3, 1.0);
    auto wrong_size = build_grid_complex(4, 3, 1.0, Topology::Cubical);
    auto wrong_spacing = build_grid_complex(3, 3, 0.5, Topology::Cubical);
    CHECK_THROWS_AS(to_2chain(s, wrong_size), std::invalid_argument);
    CHECK_THROWS_AS(to_2chain(s, wrong_spacing), std::invalid_argument);
}

TEST_CASE("to_2chain is a bijection on foreground sets") {
    SplitMix64 rng(5);
    BinaryShape s(6, 5, 1.0);
    for (auto& b : s.bits) b = rng.range(0, 1);
    auto k = complex_for(s);
    Chain c = to_2chain(s, k);
    BinaryShape back(6, 5, 1.0);
    for (const auto& [f, coeff] : c.cells()) {
        CHECK(coeff == 1);
        back.bits[f] = 1;
    }
    CHECK(back == s);
}
