#pragma once

#include "brst/poly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace brst {

// Deterministic random probes for identity checks.
class ProbeGenerator {
public:
    explicit ProbeGenerator(std::uint64_t seed = 0x5eed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    long integer(long lo, long hi);
    Scalar small_scalar(bool complex);
    Monomial monomial(std::size_t nvars, unsigned degree);
    // Up to `terms` terms of total degree <= max_degree, possibly zero
    // coefficients dropped. Never returns the zero polynomial.
    Poly poly(const ContextPtr& ctx, unsigned max_degree, std::size_t terms, bool complex = false);
    Poly homogeneous(const ContextPtr& ctx, unsigned degree, std::size_t terms, bool complex = false);
    // Monomials with weight zero under every row of the context weights.
    Poly invariant(const ContextPtr& ctx, unsigned max_degree, std::size_t terms, bool complex = false);

private:
    std::mt19937_64 rng_;
};

// Every monomial of exactly the given degree in n variables, in grlex
// descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

} // namespace brst
