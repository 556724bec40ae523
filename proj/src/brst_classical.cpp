#include "brst/brst_classical.hpp"

#include "brst/errors.hpp"

namespace brst {

Representation poisson_representation(const MomentMapData& J, const PoissonData& lambda)
{
    Representation rep;
    rep.name = "Poisson action";
    rep.dim = J.dim();
    rep.act = [J = J.J, lambda](std::size_t a, const Series& s) {
        Series r(s.context() ? s.context() : J[a].context(), s.order());
        for (int k = 0; k <= s.order(); ++k)
            if (!s[k].is_zero())
                r[k] = poisson_bracket(J[a], s[k], lambda);
        r.set_reliable_order(s.reliable_order());
        return r;
    };
    return rep;
}

SuperElement classical_charge(const MomentMapData& J, int order)
{
    const auto& ctx = J.context();
    SuperElement theta(ctx, order);
    const Poly one = Poly::constant(ctx, Scalar(1));
    for (const auto& e : J.lie.entries()) {
        auto k = key_mul(SuperKey::ghost(e.a), SuperKey::ghost(e.b));
        if (!k)
            continue;
        auto k2 = key_mul(k->second, SuperKey::antighost(e.c));
        if (!k2)
            continue;
        theta.add_term(k2->second, Series(one, order) * (e.value * Scalar(-k->first * k2->first, 4)));
    }
    for (std::size_t a = 0; a < J.dim(); ++a)
        theta.add_term(SuperKey::ghost(a), Series(J.J[a], order));
    return theta;
}

SuperElement classical_brst_diff(const SuperElement& x, const SuperElement& theta, const PoissonData& lambda)
{
    return graded_poisson(theta, x, lambda);
}

SuperElement ce_codifferential(const SuperElement& x, const LieAlgebraData& lie, const Representation& rep)
{
    SuperElement out(x.context(), x.order());
    for (const auto& e : lie.entries()) {
        // -1/2 f_ab^c e^a e^b i_c x
        SuperElement y = contract_ghost(e.c, x);
        if (!y.is_zero()) {
            y = key_left_mul(SuperKey::ghost(e.b), Scalar(1), y);
            out += key_left_mul(SuperKey::ghost(e.a), e.value * Scalar(-1, 2), y);
        }
        // f_ab^c e^a e_c i^b x
        SuperElement z = contract_antighost(e.b, x);
        if (!z.is_zero()) {
            z = key_left_mul(SuperKey::antighost(e.c), Scalar(1), z);
            out += key_left_mul(SuperKey::ghost(e.a), e.value, z);
        }
    }
    for (std::size_t a = 0; a < rep.dim; ++a) {
        SuperElement l = map_coefficients(x, [&](const Series& s) { return rep.act(a, s); });
        out += key_left_mul(SuperKey::ghost(a), Scalar(1), l);
    }
    return out;
}

CheckRecord check_charge_closed(const SuperElement& theta, const PoissonData& lambda)
{
    Stopwatch clock;
    ResidualTally tally;
    tally.add("theta", graded_poisson(theta, theta, lambda));
    CheckRecord rec = make_record("charge-closed", "classical BRST charge");
    tally.finish(rec);
    rec.wall_ms = clock.elapsed_ms();
    return rec;
}

CheckRecord check_classical_splitting(const SuperElement& theta, const MomentMapData& J, const PoissonData& lambda,
                                      const std::vector<SuperElement>& probes)
{
    Stopwatch clock;
    ResidualTally tally;
    const Representation rep = poisson_representation(J, lambda);
    auto D = [&](const SuperElement& x) { return classical_brst_diff(x, theta, lambda); };
    auto delta = [&](const SuperElement& x) { return ce_codifferential(x, J.lie, rep); };
    auto d = [&](const SuperElement& x) { return koszul_diff(x, J); };
    for (std::size_t k = 0; k < probes.size(); ++k) {
        const auto& x = probes[k];
        const std::string tag = "probe " + std::to_string(k);
        try {
            const SuperElement dx = d(x), deltax = delta(x), Dx = D(x);
            tally.add(tag + " (D - delta - 2d)", Dx - deltax - dx * Scalar(2));
            tally.add(tag + " (delta delta)", delta(deltax));
            tally.add(tag + " (d d)", d(dx));
            tally.add(tag + " (delta d + d delta)", delta(dx) + d(deltax));
            tally.add(tag + " (D D)", D(Dx));
        } catch (const Error& e) {
            tally.fail(tag, e.what());
        }
    }
    CheckRecord rec = make_record("classical-splitting", "classical BRST differential splitting");
    tally.finish(rec);
    rec.wall_ms = clock.elapsed_ms();
    return rec;
}

ClassicalReduction::ClassicalReduction(const KoszulComplex& koszul, const PoissonData& lambda,
                                       const ProbeSet<SuperElement>& probes)
    : koszul_(koszul), lambda_(lambda), rep_(poisson_representation(koszul.moment_map(), lambda))
{
    const LieAlgebraData lie = koszul.moment_map().lie;
    const Representation rep = rep_;
    // delta adds one ghost to every term, so it raises the ghost filtration.
    delta_ = LinearOp<SuperElement>(
        "delta", [lie, rep](const SuperElement& x) { return ce_codifferential(x, lie, rep); }, 1, true);

    const auto kc = koszul.contraction();
    scaled_ = kc;
    scaled_.h = (Scalar(1, 2) * kc.h).with_degree(-1);
    scaled_.dY = (Scalar(2) * kc.dY).with_degree(1);
    d_ = (kc.p * delta_ * kc.i).renamed("d");
    transferred_ = perturb_v1(scaled_, delta_, d_, probes);
}

SuperElement ClassicalReduction::H_closed_form(const SuperElement& x) const
{
    SuperElement term = x;
    SuperElement sum = x;
    for (std::size_t j = 1; j <= koszul_.rank(); ++j) {
        term = (koszul_.h(delta_(term)) + delta_(koszul_.h(term))) * Scalar(-1, 2);
        sum += term;
    }
    return koszul_.h(sum) * Scalar(1, 2);
}

SuperElement ClassicalReduction::Phi_closed_form(const SuperElement& x) const
{
    const SuperElement px = koszul_.prol(x);
    return px - H_closed_form(delta_(px) - koszul_.prol(d_(x)));
}

bool ClassicalReduction::invariant(const Poly& f) const
{
    for (const auto& Ja : koszul_.moment_map().J)
        if (!koszul_.res(poisson_bracket(Ja, koszul_.prol(f), lambda_)).is_zero())
            return false;
    return true;
}

Poly ClassicalReduction::reduced_poisson(const Poly& f, const Poly& g) const
{
    for (const Poly* x : {&f, &g})
        if (!invariant(*x))
            throw InvarianceError("reduced bracket input is not invariant: " + x->str());
    const SuperElement pf = Phi(SuperElement::from_poly(f, 0));
    const SuperElement pg = Phi(SuperElement::from_poly(g, 0));
    return koszul_.res(graded_poisson(pf, pg, lambda_)).scalar_part()[0];
}

} // namespace brst
