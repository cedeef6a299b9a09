#include "flatnorm/chain_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "flatnorm/errors.hpp"
#include "flatnorm/util.hpp"

namespace flatnorm {

std::string chain_to_json(const Chain& c) {
    const GridComplex2& k = *c.complex();
    std::ostringstream out;
    out << "{\"complex\": {\"width\": " << k.width() << ", \"height\": " << k.height()
        << ", \"spacing\": " << fmt_g12(k.spacing()) << ", \"topology\": \""
        << topology_name(k.topology()) << "\"}, \"dim\": " << c.dim() << ", \"cells\": [";
    bool first = true;
    for (const auto& [idx, coeff] : c.cells()) {
        if (!first) out << ", ";
        first = false;
        out << "[" << idx << ", " << coeff << "]";
    }
    out << "]}\n";
    return out.str();
}

Chain chain_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("chain JSON: ") + e.what(), e.byte);
    }
    try {
        const auto& jc = j.at("complex");
        ComplexPtr k = build_grid_complex(
            jc.at("width").get<int>(), jc.at("height").get<int>(),
            jc.at("spacing").get<double>(),
            topology_from_name(jc.at("topology").get<std::string>()));
        Chain c(k, j.at("dim").get<int>());
        int last = -1;
        for (const auto& cell : j.at("cells")) {
            if (!cell.is_array() || cell.size() != 2)
                throw std::invalid_argument("cells entries must be [index, coeff] pairs");
            int idx = cell[0].get<int>();
            std::int64_t coeff = cell[1].get<std::int64_t>();
            if (idx <= last)
                throw std::invalid_argument("cell indices must be strictly ascending");
            if (coeff == 0)
                throw std::invalid_argument("cell coefficients must be nonzero");
            last = idx;
            c.add_cell(idx, coeff);
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("chain JSON: ") + e.what(), 0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("chain JSON: ") + e.what(), 0);
    }
}

Chain load_chain_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open chain JSON", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return chain_from_json(buf.str());
}

void save_chain_json(const Chain& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing", path);
    out << chain_to_json(c);
    if (!out) throw IoError("write failed", path);
}

} // namespace flatnorm
