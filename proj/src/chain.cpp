#include "flatnorm/chain.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace flatnorm {

namespace {

void require_same_universe(const Chain& a, const Chain& b) {
    if (a.complex()->id() != b.complex()->id())
        throw std::invalid_argument("chains live on different complexes");
    if (a.dim() != b.dim())
        throw std::invalid_argument("chains have different dimensions");
}

} // namespace

Chain::Chain(ComplexPtr complex, int dim) : complex_(std::move(complex)), dim_(dim) {
    if (!complex_)
        throw std::invalid_argument("chain requires a complex");
    if (dim_ < 0 || dim_ > 2)
        throw std::invalid_argument("chain dimension must be 0, 1 or 2");
}

void Chain::add_cell(int idx, std::int64_t delta) {
    if (idx < 0 || idx >= complex_->num_cells(dim_))
        throw std::invalid_argument("cell index " + std::to_string(idx) +
                                    " out of range for dim " + std::to_string(dim_));
    if (delta == 0) return;
    auto [it, inserted] = cells_.try_emplace(idx, delta);
    if (!inserted) {
        it->second += delta;
        if (it->second == 0) cells_.erase(it);
    }
}

std::int64_t Chain::max_abs_coeff() const {
    std::int64_t m = 0;
    for (const auto& [idx, c] : cells_) m = std::max(m, std::abs(c));
    return m;
}

bool Chain::operator==(const Chain& other) const {
    return complex_->id() == other.complex_->id() && dim_ == other.dim_ &&
           cells_ == other.cells_;
}

Chain boundary(const Chain& c) {
    if (c.dim() == 0)
        throw std::invalid_argument("boundary of a 0-chain is undefined");
    const GridComplex2& k = *c.complex();
    Chain out(c.complex(), c.dim() - 1);
    if (c.dim() == 1) {
        for (const auto& [e, coeff] : c.cells()) {
            out.add_cell(k.edge_head(e), coeff);
            out.add_cell(k.edge_tail(e), -coeff);
        }
    } else {
        for (const auto& [f, coeff] : c.cells()) {
            auto b = k.face_boundary(f);
            for (int s = 0; s < b.entries; ++s)
                out.add_cell(b.edge[s], coeff * b.sign[s]);
        }
    }
    return out;
}

double mass(const Chain& c) {
    const GridComplex2& k = *c.complex();
    double total = 0.0;
    for (const auto& [idx, coeff] : c.cells())
        total += static_cast<double>(std::abs(coeff)) * k.cell_weight(c.dim(), idx);
    return total;
}

Chain add(const Chain& a, const Chain& b) {
    require_same_universe(a, b);
    Chain out = a;
    for (const auto& [idx, coeff] : b.cells()) out.add_cell(idx, coeff);
    return out;
}

Chain scale(const Chain& a, std::int64_t k) {
    Chain out(a.complex(), a.dim());
    if (k == 0) return out;
    for (const auto& [idx, coeff] : a.cells()) out.add_cell(idx, coeff * k);
    return out;
}

} // namespace flatnorm
