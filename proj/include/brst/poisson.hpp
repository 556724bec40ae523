#pragma once

#include "brst/lie.hpp"
#include "brst/linalg.hpp"
#include "brst/report.hpp"
#include "brst/series.hpp"

#include <memory>
#include <unordered_map>
#include <vector>

namespace brst {

// Constant Poisson bivector Lambda^{ij} in the coordinates of a context.
class PoissonData {
public:
    struct Entry {
        std::size_t i, j;
        Scalar value;
    };

    PoissonData() = default;
    // Throws ConfigError unless the matrix is antisymmetric and invertible.
    PoissonData(ContextPtr ctx, DenseMatrix lambda);

    const ContextPtr& context() const { return ctx_; }
    const DenseMatrix& matrix() const { return lambda_; }
    // Nonzero entries, both (i,j) and (j,i).
    const std::vector<Entry>& entries() const { return entries_; }
    PoissonData negated() const;

private:
    ContextPtr ctx_;
    DenseMatrix lambda_;
    std::vector<Entry> entries_;
};

// Builds Lambda from the brackets {x_i, x_j} = v of selected coordinate pairs.
PoissonData poisson_from_pairs(ContextPtr ctx, const std::vector<PoissonData::Entry>& pairs);

// {f, g} = sum Lambda^{ij} d_i f d_j g.
Poly poisson_bracket(const Poly& f, const Poly& g, const PoissonData& lambda);

// Moyal-Weyl product truncated at order N:
//   f * g = sum_k (nu/2)^k / k! Lambda^{i1 j1} ... Lambda^{ik jk} (d_I f)(d_J g).
// Products of monomial pairs are memoized; one instance is not meant to be
// shared between threads.
class MoyalStar {
public:
    MoyalStar(PoissonData lambda, int order);

    const PoissonData& poisson() const { return lambda_; }
    int order() const { return order_; }

    Series operator()(const Poly& f, const Poly& g) const;
    Series operator()(const Series& f, const Series& g) const;
    // f * g - g * f.
    Series commutator(const Series& f, const Series& g) const;

    std::size_t cache_size() const { return cache_.size(); }

private:
    struct Term {
        int nu;
        Monomial m;
        Scalar c;
    };
    struct PairHash {
        std::size_t operator()(const std::pair<Monomial, Monomial>& p) const
        {
            return p.first.hash() * 31u + p.second.hash();
        }
    };

    const std::vector<Term>& monomial_product(const Monomial& a, const Monomial& b) const;

    PoissonData lambda_;
    int order_;
    mutable std::unordered_map<std::pair<Monomial, Monomial>, std::vector<Term>, PairHash> cache_;
};

Series moyal_star(const Poly& f, const Poly& g, const PoissonData& lambda, int order);

// J_a * J_b - J_b * J_a - nu sum_c f_ab^c J_c for every pair a < b.
CheckRecord check_quantum_covariance(const MomentMapData& J, const MoyalStar& star);

// J_a * f - f * J_a - nu {J_a, f} for every component and probe.
CheckRecord check_strong_invariance(const MomentMapData& J, const MoyalStar& star, const std::vector<Poly>& probes);

// {J_a, J_b} - sum_c f_ab^c J_c for every pair.
CheckRecord check_classical_equivariance(const MomentMapData& J, const PoissonData& lambda);

} // namespace brst
