#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flatnorm/binary_shape.hpp"
#include "flatnorm/chain.hpp"
#include "flatnorm/util.hpp"

namespace flatnorm {

/// Random chain with `support` cells of dimension `dim` and coefficients
/// in [-max_coeff, max_coeff] \ {0}. Deterministic for a given rng state.
Chain random_chain(const ComplexPtr& k, int dim, int support,
                   std::int64_t max_coeff, SplitMix64& rng);

/// Random pixel blob: `count` pixels seeded uniformly, grown by a few
/// dilation rounds. Deterministic for a given rng state.
BinaryShape random_shape(int width, int height, double spacing, int count,
                         SplitMix64& rng);

struct SelftestSuite {
    std::string name;
    int passed = 0;
    int total = 0;
    std::string detail; // first failure, when any
    bool ok() const { return passed == total; }
};

struct SelftestReport {
    std::vector<SelftestSuite> suites;
    bool all_ok() const;
    /// Fixed-width pass/fail table; byte-identical for identical seeds.
    std::string table() const;
};

/**
 * Runs the library's invariant suites on seeded random inputs: chain
 * algebra identities, LP integrality, LP vs. brute-force oracle, LP vs.
 * N4 graph cut, analytic disk/square oracles, and length-estimator
 * exactness.
 */
SelftestReport run_selftest(std::uint64_t seed);

} // namespace flatnorm
