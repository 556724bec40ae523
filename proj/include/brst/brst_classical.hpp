#pragma once

#include "brst/hpt.hpp"
#include "brst/koszul.hpp"
#include "brst/poisson.hpp"
#include "brst/super.hpp"

#include <functional>
#include <string>
#include <vector>

namespace brst {

// Action of the basis element e_a of g on coefficient series.
struct Representation {
    std::string name;
    std::size_t dim = 0;
    std::function<Series(std::size_t, const Series&)> act;
};

// L_a f = {J_a, f}.
Representation poisson_representation(const MomentMapData& J, const PoissonData& lambda);

// theta = -1/4 sum f_ab^c e^a e^b e_c + sum_a J_a e^a.
SuperElement classical_charge(const MomentMapData& J, int order = 0);

// D x = {theta, x}.
SuperElement classical_brst_diff(const SuperElement& x, const SuperElement& theta, const PoissonData& lambda);

// Chevalley-Eilenberg codifferential of the g-module S(g[1]) with coefficient
// action `rep`:
//   delta x = -1/2 f_ab^c e^a e^b i_c x + f_ab^c e^a e_c i^b x + e^a L_a x.
SuperElement ce_codifferential(const SuperElement& x, const LieAlgebraData& lie, const Representation& rep);

// {theta, theta} = 0.
CheckRecord check_charge_closed(const SuperElement& theta, const PoissonData& lambda);

// Residuals of D - delta - 2d, delta^2, d^2, delta d + d delta and D^2 on probes.
CheckRecord check_classical_splitting(const SuperElement& theta, const MomentMapData& J, const PoissonData& lambda,
                                      const std::vector<SuperElement>& probes);

// Transfer of (A, D) onto Lie algebra cochains with values in the quotient
// model: the first perturbation lemma applied to
// (res, prol, h/2, 0, 2d) with initiator delta.
class ClassicalReduction {
public:
    ClassicalReduction(const KoszulComplex& koszul, const PoissonData& lambda, const ProbeSet<SuperElement>& probes);

    const Contraction<SuperElement>& contraction() const { return transferred_; }
    const Contraction<SuperElement>& koszul_contraction() const { return scaled_; }
    const LinearOp<SuperElement>& delta() const { return delta_; }
    const LinearOp<SuperElement>& cochain_diff() const { return d_; }

    SuperElement Phi(const SuperElement& x) const { return transferred_.i(x); }
    SuperElement H(const SuperElement& x) const { return transferred_.h(x); }

    // H = 1/2 h sum_{j <= l} (-1/2)^j (h delta + delta h)^j and
    // Phi = prol - H(delta prol - prol d), evaluated directly.
    SuperElement H_closed_form(const SuperElement& x) const;
    SuperElement Phi_closed_form(const SuperElement& x) const;

    // res {J_a, prol f} == 0 for all a.
    bool invariant(const Poly& f) const;
    // [res {Phi f, Phi g}] on invariant f, g; throws InvarianceError otherwise.
    Poly reduced_poisson(const Poly& f, const Poly& g) const;

private:
    const KoszulComplex& koszul_;
    PoissonData lambda_;
    Representation rep_;
    LinearOp<SuperElement> delta_;
    LinearOp<SuperElement> d_;
    Contraction<SuperElement> scaled_;
    Contraction<SuperElement> transferred_;
};

} // namespace brst
