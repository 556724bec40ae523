#pragma once

#include "brst/brst_quantum.hpp"
#include "brst/koszul.hpp"

#include <map>
#include <utility>
#include <vector>

namespace brst {

// Quantum reduction on top of a Koszul complex and the quantum BRST data:
//   deformed   (res_nu, prol, h_nu) for (A[[nu]], d_nu), from the second
//              perturbation lemma with t = d_nu - d and t_X = 0;
//   transferred (res_nu, Phi_nu, H_nu) between Lie algebra cochains with
//              values in the quotient model and (A[[nu]], D_nu), from the
//              first lemma applied to (res_nu, prol, h_nu/2, 0, 2 d_nu) with
//              initiator delta_nu.
// Both objects must outlive this one.
class QuantumReduction {
public:
    QuantumReduction(const KoszulComplex& koszul, const QuantumBrst& brst, const ProbeSet<SuperElement>& probes);
    QuantumReduction(const QuantumReduction&) = delete;
    QuantumReduction& operator=(const QuantumReduction&) = delete;

    const KoszulComplex& koszul() const { return koszul_; }
    const QuantumBrst& brst() const { return brst_; }
    int order() const { return brst_.order(); }

    const Contraction<SuperElement>& deformed() const { return deformed_; }
    const Contraction<SuperElement>& transferred() const { return transferred_; }

    SuperElement res_nu(const SuperElement& x) const { return deformed_.p(x); }
    // res (id + (d_nu - d) h)^{-1} evaluated by direct iteration.
    SuperElement res_nu_closed_form(const SuperElement& x) const;

    SuperElement Phi(const SuperElement& x) const { return transferred_.i(x); }
    SuperElement H(const SuperElement& x) const { return transferred_.h(x); }
    // H_nu = 1/2 h_nu sum_{j <= l} (-1/2)^j (h_nu delta_nu + delta_nu h_nu)^j,
    // Phi_nu = prol - H_nu (delta_nu prol - prol dd).
    SuperElement H_closed_form(const SuperElement& x) const;
    SuperElement Phi_closed_form(const SuperElement& x) const;
    // dd = res_nu delta_nu prol on cochains.
    SuperElement cochain_diff(const SuperElement& x) const { return transferred_.dX(x); }

    // res_nu (nu^-1 [J_a, prol f]) and res {J_a, prol f}.
    Series quantized_rep(std::size_t a, const Series& f) const;
    Series classical_rep(std::size_t a, const Series& f) const;

    // Every component annihilates f under the quantized representation.
    bool invariant(const Series& f) const;

    // res_nu (Phi_nu f * Phi_nu g) for invariant f, g in the quotient model.
    // Memoized on pairs of normal monomials. Throws InvarianceError.
    Series reduced_star(const Series& f, const Series& g) const;
    // res_nu (prol f * prol g) without the transfer or the memo.
    Series reduced_star_closed_form(const Series& f, const Series& g) const;
    // res_nu (F * G) for arbitrary representatives F, G in A[[nu]].
    Series reduced_star_representatives(const Series& F, const Series& G) const;
    // [a] * [b] = [res_nu (Phi_nu a * Phi_nu b)] on dd-closed cochains;
    // throws ClosednessError otherwise.
    SuperElement reduced_star_cochains(const SuperElement& a, const SuperElement& b) const;

    std::size_t memo_size() const { return memo_.size(); }

private:
    bool monomial_invariant(const Monomial& m) const;
    const Series& monomial_product(const Monomial& a, const Monomial& b) const;

    const KoszulComplex& koszul_;
    const QuantumBrst& brst_;
    LinearOp<SuperElement> tY_;
    LinearOp<SuperElement> delta_;
    Contraction<SuperElement> deformed_;
    Contraction<SuperElement> scaled_;
    Contraction<SuperElement> transferred_;

    mutable std::map<std::pair<Monomial, Monomial>, Series> memo_;
    mutable std::map<Monomial, bool> invariant_monomials_;
};

} // namespace brst
