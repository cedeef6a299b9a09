#include "flatnorm/result_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "flatnorm/chain_json.hpp"
#include "flatnorm/errors.hpp"
#include "flatnorm/util.hpp"

namespace flatnorm {

std::string result_to_json(const FlatNormResult& r, const AgreementReport* agreement) {
    std::ostringstream out;
    std::string s_json = chain_to_json(r.s_chain);
    std::string resid_json = chain_to_json(r.residual_chain);
    // chain_to_json ends with a newline meant for standalone files
    if (!s_json.empty() && s_json.back() == '\n') s_json.pop_back();
    if (!resid_json.empty() && resid_json.back() == '\n') resid_json.pop_back();

    out << "{\"lambda\": " << fmt_g12(r.lambda) << ", \"value\": " << fmt_g12(r.value)
        << ", \"mass_residual\": " << fmt_g12(r.mass_residual)
        << ", \"mass_s\": " << fmt_g12(r.mass_s) << ", \"s_chain\": " << s_json
        << ", \"residual_chain\": " << resid_json << ", \"method\": \"" << r.method
        << "\", \"stencil\": \"" << r.stencil << "\"";
    if (r.layered) out << ", \"layered\": true";
    if (!r.integral) out << ", \"integral\": false";
    if (agreement) {
        out << ", \"agreement\": {\"lp_value\": " << fmt_g12(agreement->lp_value)
            << ", \"graphcut_value\": " << fmt_g12(agreement->graphcut_value)
            << ", \"delta\": " << fmt_g12(agreement->delta) << "}";
    }
    out << "}\n";
    return out.str();
}

namespace {

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

} // namespace

std::string result_to_svg(const FlatNormResult& r) {
    const GridComplex2& k = *r.s_chain.complex();
    const double pw = k.width() * k.spacing();
    const double ph = k.height() * k.spacing();
    const double scale = 640.0 / std::max(pw, ph);
    const double pad = 10.0;
    const double cw = pw * scale + 2 * pad;
    const double ch = ph * scale + 2 * pad;

    auto sx = [&](double x) { return pad + x * scale; };
    auto sy = [&](double y) { return pad + (ph - y) * scale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt_coord(cw) << "\" height=\"" << fmt_coord(ch) << "\" viewBox=\"0 0 "
        << fmt_coord(cw) << " " << fmt_coord(ch) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << fmt_coord(cw) << "\" height=\""
        << fmt_coord(ch) << "\" fill=\"#ffffff\"/>\n";

    // S cells, opacity graded by |coefficient|
    out << "<g id=\"s-cells\" stroke=\"none\">\n";
    for (const auto& [f, coeff] : r.s_chain.cells()) {
        double mag = static_cast<double>(coeff < 0 ? -coeff : coeff);
        double opacity = std::min(0.85, 0.30 + 0.18 * (mag - 1.0));
        out << "<polygon points=\"";
        bool first = true;
        for (int v : k.face_vertices(f)) {
            if (!first) out << " ";
            first = false;
            out << fmt_coord(sx(k.vertex_x(v))) << "," << fmt_coord(sy(k.vertex_y(v)));
        }
        out << "\" fill=\"" << (coeff > 0 ? "#3b6ea5" : "#a54242")
            << "\" fill-opacity=\"" << fmt_coord(opacity) << "\"/>\n";
    }
    out << "</g>\n";

    auto edge_path = [&](const Chain& c) {
        std::ostringstream d;
        for (const auto& [e, coeff] : c.cells()) {
            (void)coeff;
            int a = k.edge_tail(e), b = k.edge_head(e);
            d << "M" << fmt_coord(sx(k.vertex_x(a))) << " " << fmt_coord(sy(k.vertex_y(a)))
              << "L" << fmt_coord(sx(k.vertex_x(b))) << " " << fmt_coord(sy(k.vertex_y(b)));
        }
        return d.str();
    };

    Chain input = add(r.residual_chain, boundary(r.s_chain));
    out << "<g id=\"input\"><path d=\"" << edge_path(input)
        << "\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"2.5\"/></g>\n";
    out << "<g id=\"residual\"><path d=\"" << edge_path(r.residual_chain)
        << "\" fill=\"none\" stroke=\"#e07a18\" stroke-width=\"1.2\"/></g>\n";
    out << "</svg>\n";
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open file for writing", tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw IoError("write failed", tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("atomic rename failed", path);
    }
}

void export_json(const FlatNormResult& r, const std::string& path,
                 const AgreementReport* agreement) {
    write_file_atomic(path, result_to_json(r, agreement));
}

void export_svg(const FlatNormResult& r, const std::string& path) {
    write_file_atomic(path, result_to_svg(r));
}

} // namespace flatnorm
