#pragma once

#include "brst/brst_classical.hpp"
#include "brst/super.hpp"

#include <vector>

namespace brst {

// theta_nu = theta + nu/2 sum_a f_ab^b e^a; the correction vanishes for
// unimodular g.
SuperElement quantum_charge(const MomentMapData& J, int order);

// Graded quantum BRST data mod nu^{N+1}. Operators taking nu^{-1} work one
// order higher internally and treat their input as exact in nu.
class QuantumBrst {
public:
    QuantumBrst(MomentMapData J, PoissonData lambda, int order, TensorSign sign = TensorSign::koszul);
    // The representation refers back to this object.
    QuantumBrst(const QuantumBrst&) = delete;
    QuantumBrst& operator=(const QuantumBrst&) = delete;

    const MomentMapData& moment_map() const { return J_; }
    const SuperStar& star() const { return star_; }
    int order() const { return order_; }
    const SuperElement& charge() const { return theta_; }

    // nu^{-1} [theta_nu, x] (graded commutator).
    SuperElement D(const SuperElement& x) const;
    // nu^{-1} [J_a, s] on coefficients.
    Series act(std::size_t a, const Series& s) const;
    const Representation& representation() const { return rep_; }
    // Chevalley-Eilenberg codifferential with the action above.
    SuperElement delta(const SuperElement& x) const;
    // R x = sum_a (i^a x) * J_a.
    SuperElement R(const SuperElement& x) const;
    // d_nu = R + nu (u/2 - q) with u = sum f_ab^b i^a and
    // q = -1/2 sum f_ab^c e_c i^a i^b.
    SuperElement koszul(const SuperElement& x) const;

    // Graded commutator for elements of mixed parity.
    SuperElement commutator(const SuperElement& x, const SuperElement& y) const;

private:
    MomentMapData J_;
    int order_;
    SuperStar star_;
    SuperStar star_up_;
    SuperElement theta_;
    SuperElement theta_up_;
    Representation rep_;
};

// theta_nu * theta_nu = 0.
CheckRecord check_charge_square(const QuantumBrst& q);

// D_nu - delta_nu - 2 d_nu, delta_nu^2, d_nu^2 and delta_nu d_nu + d_nu delta_nu.
CheckRecord check_quantum_splitting(const QuantumBrst& q, const std::vector<SuperElement>& probes);

// (x * y) * z - x * (y * z) on triples of consecutive probes.
CheckRecord check_super_associativity(const SuperStar& star, const std::vector<SuperElement>& probes);

} // namespace brst
