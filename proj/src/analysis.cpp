#include "flatnorm/analysis.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "flatnorm/chain_json.hpp"
#include "flatnorm/flatnorm_graphcut.hpp"
#include "flatnorm/flatnorm_lp.hpp"
#include "flatnorm/shape_chain.hpp"
#include "flatnorm/util.hpp"

namespace flatnorm {

std::string method_name(Method m) { return m == Method::Lp ? "lp" : "graphcut"; }

Method method_from_name(const std::string& name) {
    if (name == "lp") return Method::Lp;
    if (name == "graphcut") return Method::Graphcut;
    throw std::invalid_argument("unknown method: " + name + " (want lp|graphcut)");
}

std::pair<BinaryShape, BinaryShape> pad_to_common(const BinaryShape& a,
                                                  const BinaryShape& b) {
    if (std::abs(a.spacing - b.spacing) > 1e-12 * a.spacing)
        throw std::invalid_argument("shapes have incompatible spacing");
    const double h = a.spacing;
    double fx = (b.origin_x - a.origin_x) / h;
    double fy = (b.origin_y - a.origin_y) / h;
    double rx = std::nearbyint(fx), ry = std::nearbyint(fy);
    if (std::abs(fx - rx) > 1e-9 || std::abs(fy - ry) > 1e-9)
        throw std::invalid_argument(
            "shape origins must differ by integer pixel multiples (no resampling)");
    const int bx = static_cast<int>(rx), by = static_cast<int>(ry);

    const int x0 = std::min(0, bx), y0 = std::min(0, by);
    const int x1 = std::max(a.width, bx + b.width);
    const int y1 = std::max(a.height, by + b.height);

    BinaryShape pa(x1 - x0, y1 - y0, h, a.origin_x + x0 * h, a.origin_y + y0 * h);
    BinaryShape pb = pa;
    for (int y = 0; y < a.height; ++y)
        for (int x = 0; x < a.width; ++x)
            if (a.bit(x, y)) pa.set_bit(x - x0, y - y0, true);
    for (int y = 0; y < b.height; ++y)
        for (int x = 0; x < b.width; ++x)
            if (b.bit(x, y)) pb.set_bit(x + bx - x0, y + by - y0, true);
    return {std::move(pa), std::move(pb)};
}

namespace {

BinaryShape set_difference(const BinaryShape& a, const BinaryShape& b) {
    BinaryShape out(a.width, a.height, a.spacing, a.origin_x, a.origin_y);
    for (std::size_t i = 0; i < out.bits.size(); ++i)
        out.bits[i] = a.bits[i] && !b.bits[i];
    return out;
}

} // namespace

FlatNormResult flat_distance(const BinaryShape& a, const BinaryShape& b,
                             double lambda, Method method, StencilKind stencil) {
    auto [pa, pb] = pad_to_common(a, b);
    ComplexPtr k = complex_for(pa);

    if (method == Method::Lp) {
        Chain t = boundary(subtract(to_2chain(pa, k), to_2chain(pb, k)));
        return flatnorm_lp(k, t, lambda);
    }

    // layered decomposition of chi_a - chi_b into the nested levels
    // {f >= 1} = a\b and {f >= 0} = complement of b\a; the second level is
    // solved on b\a and complemented back, which leaves the cut unchanged
    NeighborhoodStencil st = make_stencil(stencil, pa.spacing);
    GraphcutSolve lvl1 = graphcut_solve(set_difference(pa, pb), lambda, st);
    GraphcutSolve lvl0 = graphcut_solve(set_difference(pb, pa), lambda, st);

    Chain s = add(lvl1.result.s_chain, scale(lvl0.result.s_chain, -1));
    Chain residual = subtract(lvl1.result.residual_chain, lvl0.result.residual_chain);
    FlatNormResult r(std::move(s), std::move(residual));
    r.lambda = lambda;
    r.method = "graphcut";
    r.stencil = stencil_name(stencil);
    r.layered = true;
    r.mass_residual = lvl1.result.mass_residual + lvl0.result.mass_residual;
    r.mass_s = lvl1.result.mass_s + lvl0.result.mass_s;
    r.value = r.mass_residual + lambda * r.mass_s;
    r.max_s_coeff = r.s_chain.max_abs_coeff();
    r.iterations = lvl1.result.iterations + lvl0.result.iterations;
    return r;
}

namespace {

void validate_lambdas(const std::vector<double>& lambdas) {
    if (lambdas.empty()) throw std::invalid_argument("lambda list is empty");
    double prev = 0.0;
    for (double l : lambdas) {
        if (!(l > 0.0)) throw std::invalid_argument("lambdas must be positive");
        if (!(l > prev)) throw std::invalid_argument("lambdas must be strictly increasing");
        prev = l;
    }
}

int worker_count(std::size_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("FLATNORM_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 64) n = static_cast<unsigned>(v);
    }
    return static_cast<int>(std::min<std::size_t>(n, jobs));
}

/// Runs solve(i) for i in [0, jobs) on a small worker pool; results land
/// in index order, so the curve is identical for any worker count.
template <typename Solve>
std::vector<double> run_indexed(std::size_t jobs, Solve solve) {
    std::vector<double> values(jobs, 0.0);
    int workers = worker_count(jobs);
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) values[i] = solve(i);
        return values;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs) return;
                try {
                    values[i] = solve(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return values;
}

SweepCurve assemble_curve(const std::vector<double>& lambdas,
                          std::vector<double> values, Method method,
                          StencilKind stencil, std::uint64_t digest) {
    SweepCurve c;
    c.method = method_name(method);
    c.stencil = method == Method::Lp ? "none" : stencil_name(stencil);
    c.input_digest = hex64(digest);
    c.points.reserve(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        c.points.emplace_back(lambdas[i], values[i]);
    return c;
}

std::uint64_t shape_digest(const BinaryShape& s) {
    std::uint64_t d = fnv1a64(s.bits.data(), s.bits.size());
    double meta[4] = {static_cast<double>(s.width), static_cast<double>(s.height),
                      s.spacing, s.origin_x + 1e-3 * s.origin_y};
    return fnv1a64(meta, sizeof(meta), d);
}

} // namespace

SweepCurve lambda_sweep(const BinaryShape& input, const std::vector<double>& lambdas,
                        Method method, StencilKind stencil) {
    validate_lambdas(lambdas);
    if (method == Method::Graphcut) {
        NeighborhoodStencil st = make_stencil(stencil, input.spacing);
        auto values = run_indexed(lambdas.size(), [&](std::size_t i) {
            return flatnorm_graphcut(input, lambdas[i], st).value;
        });
        return assemble_curve(lambdas, std::move(values), method, stencil,
                              shape_digest(input));
    }
    ComplexPtr k = complex_for(input);
    Chain t = boundary_chain(input, k);
    auto values = run_indexed(lambdas.size(), [&](std::size_t i) {
        return flatnorm_lp(k, t, lambdas[i]).value;
    });
    return assemble_curve(lambdas, std::move(values), method, stencil,
                          shape_digest(input));
}

SweepCurve lambda_sweep(const Chain& input, const std::vector<double>& lambdas,
                        Method method, StencilKind stencil) {
    validate_lambdas(lambdas);
    if (method != Method::Lp)
        throw std::invalid_argument("chain inputs sweep via the lp method only");
    std::string serialized = chain_to_json(input);
    auto values = run_indexed(lambdas.size(), [&](std::size_t i) {
        return flatnorm_lp(input.complex(), input, lambdas[i]).value;
    });
    return assemble_curve(lambdas, std::move(values), Method::Lp, stencil,
                          fnv1a64(serialized.data(), serialized.size()));
}

std::string sweep_to_csv(const SweepCurve& c) {
    std::ostringstream out;
    out << "lambda,value,method,stencil\n";
    for (const auto& [l, v] : c.points)
        out << fmt_g12(l) << "," << fmt_g12(v) << "," << c.method << "," << c.stencil
            << "\n";
    return out.str();
}

std::string sweep_to_json(const SweepCurve& c) {
    std::ostringstream out;
    out << "{\"method\": \"" << c.method << "\", \"stencil\": \"" << c.stencil
        << "\", \"input_digest\": \"" << c.input_digest << "\", \"points\": [";
    bool first = true;
    for (const auto& [l, v] : c.points) {
        if (!first) out << ", ";
        first = false;
        out << "[" << fmt_g12(l) << ", " << fmt_g12(v) << "]";
    }
    out << "]}\n";
    return out.str();
}

double disk_flatnorm(double radius, double lambda) {
    if (!(radius > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("disk oracle needs positive radius and lambda");
    return std::min(2.0 * M_PI * radius, lambda * M_PI * radius * radius);
}

double square_flatnorm_l1(double side, double lambda) {
    if (!(side > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("square oracle needs positive side and lambda");
    return std::min(4.0 * side, lambda * side * side);
}

double square_flatnorm_euclid(double side, double lambda) {
    if (!(side > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("square oracle needs positive side and lambda");
    const double threshold = (2.0 + std::sqrt(M_PI)) / side;
    if (!(lambda >= threshold))
        throw std::invalid_argument(
            "rounded-square oracle is only valid for lambda >= (2+sqrt(pi))/a = " +
            std::to_string(threshold));
    return 4.0 * side + (M_PI - 4.0) / lambda;
}

} // namespace flatnorm
