#include "brst/reduction.hpp"

#include "brst/errors.hpp"

namespace brst {

namespace {

Series map_series(const Series& s, const std::function<Poly(const Poly&)>& f)
{
    Series r(s.context(), s.order());
    for (int k = 0; k <= s.order(); ++k)
        if (!s[k].is_zero())
            r[k] = f(s[k]);
    r.set_reliable_order(s.reliable_order());
    return r;
}

// The antighost-free, ghost-free coefficient; throws if anything else remains.
Series scalar_only(const SuperElement& x, const char* what)
{
    for (const auto& [k, s] : x.terms())
        if (k != SuperKey{})
            throw ShapeError(std::string(what) + " left a term with ghost content " + k.str());
    return x.scalar_part();
}

} // namespace

QuantumReduction::QuantumReduction(const KoszulComplex& koszul, const QuantumBrst& brst,
                                   const ProbeSet<SuperElement>& probes)
    : koszul_(koszul), brst_(brst)
{
    const KoszulComplex* k = &koszul;
    const QuantumBrst* q = &brst;
    // d_nu - d is O(nu): it raises the nu-filtration.
    tY_ = LinearOp<SuperElement>(
        "(d_nu - d)", [k, q](const SuperElement& x) { return q->koszul(x) - k->diff(x); }, 1, true);
    deformed_ = perturb_v2(koszul.contraction(), tY_, LinearOp<SuperElement>::zero(), probes);
    deformed_.dY = deformed_.dY.renamed("d_nu");

    delta_ = LinearOp<SuperElement>(
        "delta_nu", [q](const SuperElement& x) { return q->delta(x); }, 1, true);
    scaled_ = deformed_;
    scaled_.h = (Scalar(1, 2) * deformed_.h).with_degree(-1);
    scaled_.dY = (Scalar(2) * deformed_.dY).with_degree(1);
    const LinearOp<SuperElement> dd = (deformed_.p * delta_ * deformed_.i).renamed("dd");
    transferred_ = perturb_v1(scaled_, delta_, dd, probes);
}

SuperElement QuantumReduction::res_nu_closed_form(const SuperElement& x) const
{
    SuperElement x0(x.context(), x.order());
    for (const auto& [key, s] : x.terms())
        if (key.antighosts == 0)
            x0.add_term(key, s);
    SuperElement sum = x0, term = x0;
    for (int k = 1; !term.is_zero(); ++k) {
        if (k > order() + 1)
            throw FiltrationError("deformed restriction did not terminate within the truncation order");
        term = -tY_(koszul_.h(term));
        sum += term;
    }
    return koszul_.res(sum);
}

SuperElement QuantumReduction::H_closed_form(const SuperElement& x) const
{
    const auto& h = deformed_.h;
    SuperElement term = x, sum = x;
    for (std::size_t j = 1; j <= koszul_.rank(); ++j) {
        term = (h(delta_(term)) + delta_(h(term))) * Scalar(-1, 2);
        sum += term;
    }
    return h(sum) * Scalar(1, 2);
}

SuperElement QuantumReduction::Phi_closed_form(const SuperElement& x) const
{
    const SuperElement px = koszul_.prol(x);
    return px - H_closed_form(delta_(px) - koszul_.prol(cochain_diff(x)));
}

Series QuantumReduction::quantized_rep(std::size_t a, const Series& f) const
{
    const Series pf = map_series(f, [&](const Poly& p) { return koszul_.prol(p); });
    return scalar_only(res_nu(SuperElement::from_series(brst_.act(a, pf))), "quantized representation");
}

Series QuantumReduction::classical_rep(std::size_t a, const Series& f) const
{
    const Poly& Ja = koszul_.moment_map().J.at(a);
    const PoissonData& lambda = brst_.star().poisson();
    return map_series(f, [&](const Poly& p) { return koszul_.res(poisson_bracket(Ja, koszul_.prol(p), lambda)); });
}

bool QuantumReduction::invariant(const Series& f) const
{
    for (std::size_t a = 0; a < koszul_.rank(); ++a)
        if (!quantized_rep(a, f).is_zero())
            return false;
    return true;
}

bool QuantumReduction::monomial_invariant(const Monomial& m) const
{
    auto it = invariant_monomials_.find(m);
    if (it != invariant_monomials_.end())
        return it->second;
    const bool inv = invariant(Series(Poly::term(koszul_.context(), m, Scalar(1)), order()));
    invariant_monomials_.emplace(m, inv);
    return inv;
}

const Series& QuantumReduction::monomial_product(const Monomial& a, const Monomial& b) const
{
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;
    const auto& ctx = koszul_.context();
    const SuperElement pa = Phi(SuperElement::from_poly(Poly::term(ctx, a, Scalar(1)), order()));
    const SuperElement pb = Phi(SuperElement::from_poly(Poly::term(ctx, b, Scalar(1)), order()));
    Series r = scalar_only(res_nu(brst_.star()(pa, pb)), "reduced star product");
    return memo_.emplace(key, std::move(r)).first->second;
}

Series QuantumReduction::reduced_star(const Series& f, const Series& g) const
{
    for (const Series* s : {&f, &g}) {
        if (s->order() != order())
            throw TruncationError("reduced star product input has the wrong truncation order");
        bool all_monomials = true;
        for (const auto& c : s->coefficients()) {
            if (!koszul_.in_complement(c))
                throw ShapeError("reduced star product input is not in the quotient model: " + c.str());
            for (const auto& [m, coef] : c.terms())
                all_monomials = all_monomials && monomial_invariant(m);
        }
        if (!all_monomials && !invariant(*s))
            throw InvarianceError("reduced star product input is not invariant: " + s->str());
    }
    Series out(koszul_.context(), order());
    for (int i = 0; i <= order(); ++i)
        for (const auto& [ma, ca] : f[i].terms())
            for (int j = 0; i + j <= order(); ++j)
                for (const auto& [mb, cb] : g[j].terms())
                    out += monomial_product(ma, mb).shifted(i + j) * (ca * cb);
    return out;
}

Series QuantumReduction::reduced_star_closed_form(const Series& f, const Series& g) const
{
    auto prol = [&](const Series& s) {
        return SuperElement::from_series(map_series(s, [&](const Poly& p) { return koszul_.prol(p); }));
    };
    return scalar_only(res_nu_closed_form(brst_.star()(prol(f), prol(g))), "reduced star product");
}

Series QuantumReduction::reduced_star_representatives(const Series& F, const Series& G) const
{
    return scalar_only(res_nu(brst_.star()(SuperElement::from_series(F), SuperElement::from_series(G))),
                       "reduced star product");
}

SuperElement QuantumReduction::reduced_star_cochains(const SuperElement& a, const SuperElement& b) const
{
    for (const SuperElement* x : {&a, &b})
        if (!cochain_diff(*x).is_zero())
            throw ClosednessError("cochain is not closed: " + x->str());
    return res_nu(brst_.star()(Phi(a), Phi(b)));
}

} // namespace brst
