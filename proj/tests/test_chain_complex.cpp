#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "flatnorm/chain.hpp"
#include "flatnorm/chain_json.hpp"
#include "flatnorm/errors.hpp"
#include "flatnorm/grid_complex.hpp"
#include "flatnorm/selftest.hpp"
#include "flatnorm/util.hpp"

using namespace flatnorm;

TEST_CASE("complex cell counts match hand counting") {
    auto k = build_grid_complex(2, 2, 1.0, Topology::Cubical);
    CHECK(k->num_vertices() == 9);
    CHECK(k->num_edges() == 12);
    CHECK(k->num_faces() == 4);

    auto t = build_grid_complex(1, 1, 1.0, Topology::RightTriangulated);
    CHECK(t->num_vertices() == 4);
    CHECK(t->num_edges() == 5);
    CHECK(t->num_faces() == 2);

    auto r = build_grid_complex(3, 2, 0.5, Topology::Cubical);
    CHECK(r->num_vertices() == 12);
    CHECK(r->num_edges() == 17);
    CHECK(r->num_faces() == 6);
    for (int e = 0; e < r->num_edges(); ++e) CHECK(r->edge_weight(e) == 0.5);
    for (int f = 0; f < r->num_faces(); ++f) CHECK(r->face_weight(f) == 0.25);
}

TEST_CASE("degenerate complex parameters are rejected") {
    CHECK_THROWS_AS(build_grid_complex(0, 2, 1.0, Topology::Cubical), std::invalid_argument);
    CHECK_THROWS_AS(build_grid_complex(2, -1, 1.0, Topology::Cubical), std::invalid_argument);
    CHECK_THROWS_AS(build_grid_complex(2, 2, 0.0, Topology::Cubical), std::invalid_argument);
    CHECK_THROWS_AS(build_grid_complex(2, 2, -0.5, Topology::Cubical), std::invalid_argument);
}

TEST_CASE("triangulated complex carries diagonal weights") {
    auto k = build_grid_complex(2, 3, 0.5, Topology::RightTriangulated);
    CHECK(k->num_edges() == 2 * 4 + 3 * 3 + 6);
    CHECK(k->num_faces() == 12);
    CHECK(k->edge_weight(k->d_edge_index(1, 2)) == doctest::Approx(0.5 * std::sqrt(2.0)));
    CHECK(k->face_weight(0) == doctest::Approx(0.125));
}

TEST_CASE("single face boundary is the counterclockwise edge loop") {
    auto k = build_grid_complex(3, 3, 0.5, Topology::Cubical);
    Chain f(k, 2);
    f.add_cell(k->face_index(1, 1), 1);
    Chain b = boundary(f);
    CHECK(b.support_size() == 4);
    CHECK(b.coeff(k->h_edge_index(1, 1)) == 1);   // bottom, along +x
    CHECK(b.coeff(k->v_edge_index(2, 1)) == 1);   // right, along +y
    CHECK(b.coeff(k->h_edge_index(1, 2)) == -1);  // top, against +x
    CHECK(b.coeff(k->v_edge_index(1, 1)) == -1);  // left, against +y
    CHECK(mass(b) == doctest::Approx(4 * 0.5));
    CHECK(boundary(b).is_zero());
}

TEST_CASE("interior edges cancel in a 2x2 face block") {
    auto k = build_grid_complex(4, 4, 1.0, Topology::Cubical);
    Chain block(k, 2);
    for (int y = 1; y <= 2; ++y)
        for (int x = 1; x <= 2; ++x) block.add_cell(k->face_index(x, y), 1);
    Chain b = boundary(block);
    CHECK(b.support_size() == 8);
    CHECK(mass(b) == doctest::Approx(8.0));
    // interior cross of edges is gone
    CHECK(b.coeff(k->h_edge_index(1, 2)) == 0);
    CHECK(b.coeff(k->h_edge_index(2, 2)) == 0);
    CHECK(b.coeff(k->v_edge_index(2, 1)) == 0);
    CHECK(b.coeff(k->v_edge_index(2, 2)) == 0);
}

TEST_CASE("boundary of boundary vanishes for every single cell") {
    for (Topology topo : {Topology::Cubical, Topology::RightTriangulated}) {
        auto k = build_grid_complex(5, 4, 1.0, topo);
        for (int f = 0; f < k->num_faces(); ++f) {
            Chain c(k, 2);
            c.add_cell(f, 1);
            CHECK(boundary(boundary(c)).is_zero());
        }
    }
}

TEST_CASE("boundary of boundary vanishes on random chains") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        int w = static_cast<int>(rng.range(1, 32));
        int h = static_cast<int>(rng.range(1, 32));
        Topology topo = rng.range(0, 1) ? Topology::Cubical : Topology::RightTriangulated;
        auto k = build_grid_complex(w, h, 0.25, topo);
        Chain c = random_chain(k, 2, static_cast<int>(rng.range(1, 20)), 4, rng);
        CHECK(boundary(boundary(c)).is_zero());
    }
}

TEST_CASE("boundary is linear") {
    SplitMix64 rng(11);
    auto k = build_grid_complex(6, 6, 1.0, Topology::RightTriangulated);
    for (int i = 0; i < 50; ++i) {
        Chain a = random_chain(k, 2, 8, 3, rng);
        Chain b = random_chain(k, 2, 8, 3, rng);
        std::int64_t m = rng.range(-4, 4);
        CHECK(boundary(add(a, b)) == add(boundary(a), boundary(b)));
        CHECK(boundary(scale(a, m)) == scale(boundary(a), m));
    }
}

TEST_CASE("chain arithmetic identities") {
    auto k = build_grid_complex(4, 4, 1.0, Topology::Cubical);
    SplitMix64 rng(3);
    Chain t = random_chain(k, 1, 9, 3, rng);
    CHECK(add(t, scale(t, -1)).is_zero());
    CHECK(mass(Chain(k, 1)) == 0.0);
    CHECK(mass(scale(t, -7)) == doctest::Approx(7.0 * mass(t)));

    Chain a = random_chain(k, 1, 9, 3, rng);
    CHECK(mass(add(t, a)) <= mass(t) + mass(a) + 1e-12);

    // disjoint supports add masses exactly
    Chain left(k, 2), right(k, 2);
    left.add_cell(k->face_index(0, 0), 2);
    right.add_cell(k->face_index(3, 3), -3);
    CHECK(mass(add(left, right)) == doctest::Approx(mass(left) + mass(right)));
}

TEST_CASE("multiplicities stack where chains overlap") {
    // disk plus its upper half carries multiplicity 2 above, 1 below
    auto k = build_grid_complex(4, 4, 1.0, Topology::Cubical);
    Chain whole(k, 2), upper(k, 2);
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) whole.add_cell(k->face_index(x, y), 1);
    for (int y = 2; y < 4; ++y)
        for (int x = 0; x < 4; ++x) upper.add_cell(k->face_index(x, y), 1);
    Chain sum = add(whole, upper);
    CHECK(sum.coeff(k->face_index(1, 3)) == 2);
    CHECK(sum.coeff(k->face_index(1, 0)) == 1);
    CHECK(mass(sum) == doctest::Approx(16.0 + 8.0));
}

TEST_CASE("chains from different complexes or dims never combine") {
    auto k1 = build_grid_complex(2, 2, 1.0, Topology::Cubical);
    auto k2 = build_grid_complex(2, 2, 1.0, Topology::Cubical); // structurally equal
    Chain a(k1, 1), b(k2, 1), c(k1, 2);
    a.add_cell(0, 1);
    b.add_cell(0, 1);
    c.add_cell(0, 1);
    CHECK_THROWS_AS(add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(add(a, c), std::invalid_argument);
    CHECK_THROWS_AS(boundary(Chain(k1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(a.add_cell(k1->num_edges(), 1), std::invalid_argument);
}

TEST_CASE("chain JSON round-trips exactly") {
    auto k = build_grid_complex(5, 3, 0.125, Topology::RightTriangulated);
    SplitMix64 rng(21);
    Chain c = random_chain(k, 1, 12, 5, rng);
    std::string text = chain_to_json(c);
    Chain back = chain_from_json(text);
    CHECK(back.dim() == c.dim());
    CHECK(back.cells() == c.cells());
    CHECK(back.complex()->width() == 5);
    CHECK(back.complex()->topology() == Topology::RightTriangulated);
    CHECK(back.complex()->spacing() == doctest::Approx(0.125).epsilon(1e-12));
    // indices are emitted sorted ascending
    std::size_t cells_at = text.find("\"cells\"");
    REQUIRE(cells_at != std::string::npos);
    int last = -1;
    for (const auto& [idx, coeff] : back.cells()) {
        CHECK(idx > last);
        last = idx;
        CHECK(coeff != 0);
    }
}

TEST_CASE("malformed chain JSON is rejected") {
    CHECK_THROWS_AS(chain_from_json("{"), ParseError);
    CHECK_THROWS_AS(
        chain_from_json(R"({"complex": {"width": 2, "height": 2, "spacing": 1.0,
            "topology": "cubical"}, "dim": 1, "cells": [[3, 1], [1, 1]]})"),
        ParseError);
    CHECK_THROWS_AS(
        chain_from_json(R"({"complex": {"width": 2, "height": 2, "spacing": 1.0,
            "topology": "cubical"}, "dim": 1, "cells": [[1, 0]]})"),
        ParseError);
}
