#pragma once

#include <cstdint>
#include <map>

#include "flatnorm/grid_complex.hpp"

namespace flatnorm {

/**
 * An integer-coefficient formal sum of oriented cells of one dimension --
 * the computational stand-in for an integral current. Stored coefficients
 * are always nonzero; arithmetic is exact.
 */
class Chain {
public:
    Chain(ComplexPtr complex, int dim);

    const ComplexPtr& complex() const { return complex_; }
    int dim() const { return dim_; }
    const std::map<int, std::int64_t>& cells() const { return cells_; }

    bool is_zero() const { return cells_.empty(); }
    std::size_t support_size() const { return cells_.size(); }

    std::int64_t coeff(int idx) const {
        auto it = cells_.find(idx);
        return it == cells_.end() ? 0 : it->second;
    }

    /// Adds delta to the coefficient of cell idx, dropping it when it
    /// cancels to zero. Throws std::invalid_argument on an out-of-range index.
    void add_cell(int idx, std::int64_t delta);

    std::int64_t max_abs_coeff() const;

    bool operator==(const Chain& other) const;

private:
    ComplexPtr complex_;
    int dim_;
    std::map<int, std::int64_t> cells_;
};

/// Signed incidence transpose applied to c; dim drops by one. [dim 0 rejected]
Chain boundary(const Chain& c);

/// Multiplicity-weighted volume: sum of |coefficient| * cell weight.
double mass(const Chain& c);

Chain add(const Chain& a, const Chain& b);
Chain scale(const Chain& a, std::int64_t k);
inline Chain subtract(const Chain& a, const Chain& b) { return add(a, scale(b, -1)); }

} // namespace flatnorm
