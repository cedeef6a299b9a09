#include "flatnorm/selftest.hpp"

#include <cmath>
#include <sstream>

#include "flatnorm/analysis.hpp"
#include "flatnorm/euclidean_length.hpp"
#include "flatnorm/flatnorm_graphcut.hpp"
#include "flatnorm/flatnorm_lp.hpp"
#include "flatnorm/shape_chain.hpp"

namespace flatnorm {

Chain random_chain(const ComplexPtr& k, int dim, int support,
                   std::int64_t max_coeff, SplitMix64& rng) {
    Chain c(k, dim);
    const int cells = k->num_cells(dim);
    for (int i = 0; i < support; ++i) {
        int idx = static_cast<int>(rng.range(0, cells - 1));
        std::int64_t coeff = rng.range(-max_coeff, max_coeff);
        if (coeff == 0) coeff = max_coeff;
        c.add_cell(idx, coeff);
    }
    return c;
}

BinaryShape random_shape(int width, int height, double spacing, int count,
                         SplitMix64& rng) {
    BinaryShape s(width, height, spacing);
    for (int i = 0; i < count; ++i)
        s.set_bit(static_cast<int>(rng.range(0, width - 1)),
                  static_cast<int>(rng.range(0, height - 1)), true);
    // two dilation rounds make blobs instead of salt noise
    for (int round = 0; round < 2; ++round) {
        BinaryShape grown = s;
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                if (s.bit(x, y)) {
                    if (x + 1 < width) grown.set_bit(x + 1, y, true);
                    if (y + 1 < height) grown.set_bit(x, y + 1, true);
                }
        s = grown;
    }
    return s;
}

bool SelftestReport::all_ok() const {
    for (const auto& s : suites)
        if (!s.ok()) return false;
    return true;
}

std::string SelftestReport::table() const {
    std::ostringstream out;
    for (const auto& s : suites) {
        out << (s.ok() ? "[PASS] " : "[FAIL] ") << s.name;
        for (std::size_t i = s.name.size(); i < 28; ++i) out << ' ';
        out << s.passed << "/" << s.total;
        if (!s.ok() && !s.detail.empty()) out << "  " << s.detail;
        out << "\n";
    }
    out << (all_ok() ? "selftest: all suites passed\n" : "selftest: FAILURES\n");
    return out.str();
}

namespace {

struct Check {
    SelftestSuite suite;
    explicit Check(std::string name) { suite.name = std::move(name); }
    void expect(bool ok, const std::string& detail) {
        ++suite.total;
        if (ok) {
            ++suite.passed;
        } else if (suite.detail.empty()) {
            suite.detail = detail;
        }
    }
};

} // namespace

SelftestReport run_selftest(std::uint64_t seed) {
    SelftestReport report;
    SplitMix64 rng(seed);

    {
        Check c("boundary_of_boundary");
        for (int i = 0; i < 200; ++i) {
            int w = static_cast<int>(rng.range(1, 16));
            int h = static_cast<int>(rng.range(1, 16));
            Topology topo = rng.range(0, 1) ? Topology::Cubical
                                            : Topology::RightTriangulated;
            ComplexPtr k = build_grid_complex(w, h, 1.0, topo);
            Chain t = random_chain(k, 2, static_cast<int>(rng.range(1, 12)), 3, rng);
            c.expect(boundary(boundary(t)).is_zero(), "dd != 0 at case " + std::to_string(i));
        }
        report.suites.push_back(c.suite);
    }

    {
        Check c("boundary_linearity");
        for (int i = 0; i < 100; ++i) {
            ComplexPtr k = build_grid_complex(6, 5, 0.5, Topology::Cubical);
            Chain a = random_chain(k, 2, 6, 2, rng);
            Chain b = random_chain(k, 2, 6, 2, rng);
            std::int64_t m = rng.range(-3, 3);
            bool ok = boundary(add(a, b)) == add(boundary(a), boundary(b)) &&
                      boundary(scale(a, m)) == scale(boundary(a), m);
            c.expect(ok, "linearity broke at case " + std::to_string(i));
        }
        report.suites.push_back(c.suite);
    }

    {
        Check c("mass_axioms");
        for (int i = 0; i < 100; ++i) {
            ComplexPtr k = build_grid_complex(8, 8, 0.25, Topology::Cubical);
            Chain a = random_chain(k, 1, 10, 2, rng);
            Chain b = random_chain(k, 1, 10, 2, rng);
            std::int64_t m = rng.range(-4, 4);
            bool ok = mass(add(a, b)) <= mass(a) + mass(b) + 1e-12 &&
                      std::abs(mass(scale(a, m)) -
                               std::abs(static_cast<double>(m)) * mass(a)) < 1e-12;
            c.expect(ok, "mass axiom broke at case " + std::to_string(i));
        }
        report.suites.push_back(c.suite);
    }

    {
        Check c("lp_integrality");
        const double lambdas[3] = {0.1, 1.0, 10.0};
        for (int i = 0; i < 20; ++i) {
            Topology topo = i % 2 ? Topology::Cubical : Topology::RightTriangulated;
            ComplexPtr k = build_grid_complex(4, 4, 1.0, topo);
            Chain t = random_chain(k, 1, 8, 2, rng);
            FlatNormResult r = flatnorm_lp(k, t, lambdas[i % 3]);
            c.expect(r.integral && r.integrality_gap <= 1e-7,
                     "non-integral optimum at case " + std::to_string(i));
        }
        report.suites.push_back(c.suite);
    }

    {
        Check c("lp_vs_oracle");
        for (int i = 0; i < 20; ++i) {
            int n = 2 + static_cast<int>(rng.range(0, 1));
            ComplexPtr k = build_grid_complex(n, n, 1.0, Topology::Cubical);
            Chain t = random_chain(k, 1, 6, 2, rng);
            double lambda = 0.1 + 0.4 * static_cast<double>(rng.range(0, 9));
            FlatNormResult lp = flatnorm_lp(k, t, lambda);
            FlatNormResult oracle = exhaustive_oracle(k, t, lambda,
                                                      std::max<std::int64_t>(2, t.max_abs_coeff()));
            c.expect(std::abs(lp.value - oracle.value) <= 1e-7,
                     "lp/oracle mismatch at case " + std::to_string(i));
        }
        report.suites.push_back(c.suite);
    }

    {
        Check c("lp_vs_graphcut_n4");
        for (int i = 0; i < 10; ++i) {
            BinaryShape s = random_shape(8, 8, 1.0, 5, rng);
            double lambda = i % 2 ? 0.5 : 2.0;
            ComplexPtr k = complex_for(s);
            FlatNormResult lp = flatnorm_lp(k, boundary_chain(s, k), lambda);
            FlatNormResult gc =
                flatnorm_graphcut(s, lambda, make_stencil(StencilKind::N4, s.spacing));
            c.expect(std::abs(lp.value - gc.value) <= 1e-6,
                     "solver disagreement at case " + std::to_string(i));
        }
        report.suites.push_back(c.suite);
    }

    {
        Check c("disk_oracle_n16");
        BinaryShape disk = rasterize(Disk{0.0, 0.0, 1.0}, 128);
        NeighborhoodStencil st = make_stencil(StencilKind::N16, disk.spacing);
        for (double lambda : {1.0, 3.0}) {
            double v = flatnorm_graphcut(disk, lambda, st).value;
            double want = disk_flatnorm(1.0, lambda);
            c.expect(std::abs(v - want) / want <= 0.03,
                     "disk value off at lambda " + fmt_g12(lambda));
        }
        report.suites.push_back(c.suite);
    }

    {
        Check c("euclid_square_exact");
        for (int a : {3, 7, 12}) {
            PolygonShape sq{{{0.0, 0.0}, {double(a), 0.0}, {double(a), double(a)}, {0.0, double(a)}}};
            BinaryShape s = rasterize(sq, 1.0);
            ComplexPtr k = complex_for(s);
            double len = euclidean_length(boundary_chain(s, k));
            c.expect(std::abs(len - 4.0 * a) <= 1e-9,
                     "square length off at a = " + std::to_string(a));
        }
        report.suites.push_back(c.suite);
    }

    return report;
}

} // namespace flatnorm
