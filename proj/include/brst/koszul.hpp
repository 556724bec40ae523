#pragma once

#include "brst/hpt.hpp"
#include "brst/lie.hpp"
#include "brst/super.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace brst {

// Koszul chain: antighost set e_A (bitmask) -> polynomial coefficient.
using KoszulChain = std::map<std::uint16_t, Poly>;

int homological_degree(std::uint16_t antighosts);
std::string chain_str(const KoszulChain& x);
bool chain_is_zero(const KoszulChain& x);

// d = sum_a J_a i^a on A[[nu]] (ghost signs included); no homogeneity needed.
SuperElement koszul_diff(const SuperElement& x, const MomentMapData& J);

struct HomologyEntry {
    int weight;              // polynomial degree plus generator degrees of e_A
    int degree;              // homological degree i
    std::size_t chain_dim;   // dim C_i in this weight
    std::size_t homology;    // dim H_i in this weight
};

struct AcyclicityReport {
    int degree_bound = 0;
    std::vector<HomologyEntry> entries;
    // A cycle that is not a boundary, if one was found.
    std::string witness;

    bool acyclic() const;
    std::size_t total_homology(int degree) const;
    CheckRecord record(const std::string& id, const std::string& anchor) const;
};

// The Koszul complex of a moment map with homogeneous components, built
// slice by slice up to a total weight bound. A slice collects the chains
// m e_A of one total weight deg(m) + sum_{a in A} deg J_a and one fine
// weight: m's pairing with a basis of the lattice orthogonal to every
// monomial occurring in J. Multiplication by J_a preserves both, so all
// operators act slicewise, and torus weights are among the fine weights.
//
// res is reduction modulo the ideal slice to the span of its non-leading
// monomials, prol is the inclusion of that span, and h is built from
// canonical solves so that sc1-sc3 hold without normalization.
class KoszulComplex {
public:
    KoszulComplex(MomentMapData J, int degree_bound);
    ~KoszulComplex();
    KoszulComplex(const KoszulComplex&) = delete;
    KoszulComplex& operator=(const KoszulComplex&) = delete;

    const MomentMapData& moment_map() const { return J_; }
    const ContextPtr& context() const { return ctx_; }
    int degree_bound() const { return bound_; }
    std::size_t rank() const { return J_.dim(); }
    const std::vector<std::vector<long>>& fine_grading() const { return fine_; }

    KoszulChain diff(const KoszulChain& x) const;
    Poly res(const Poly& f) const;
    Poly prol(const Poly& f) const;
    KoszulChain h(const KoszulChain& x) const;
    bool in_complement(const Poly& f) const { return res(f) == f; }

    // Extensions to A[[nu]]: ghosts are spectators, nu-coefficients are
    // treated separately. h(e^G x) = (-1)^{|G|} e^G h(x); res is zero on
    // terms carrying antighosts.
    SuperElement diff(const SuperElement& x) const;
    SuperElement res(const SuperElement& x) const;
    SuperElement prol(const SuperElement& x) const;
    SuperElement h(const SuperElement& x) const;

    // (antighost-free part, 0) <- (A, d) with the maps above.
    Contraction<SuperElement> contraction() const;

    // Normal monomials of polynomial degree w (all fine weights), descending.
    std::vector<Monomial> complement_basis(int w) const;

    AcyclicityReport check_acyclicity() const;

private:
    struct Slice;
    using FineKey = std::vector<long>;

    FineKey fine_weight(const Monomial& m) const;
    int mask_weight(std::uint16_t mask) const;
    const std::vector<Monomial>& monomials(int degree, const FineKey& fine) const;
    const Slice& slice(int w, const FineKey& fine) const;
    // Groups chain terms of homological degree i by slice.
    std::map<std::pair<int, FineKey>, Vector> split(const KoszulChain& x, int i) const;
    void require_bound(int w) const;

    MomentMapData J_;
    ContextPtr ctx_;
    int bound_;
    std::vector<int> gen_degree_;
    std::vector<std::vector<long>> fine_;

    mutable std::map<int, std::map<FineKey, std::vector<Monomial>>> monomials_;
    mutable std::map<std::pair<int, FineKey>, std::unique_ptr<Slice>> slices_;
};

} // namespace brst
