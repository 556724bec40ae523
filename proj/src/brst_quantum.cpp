#include "brst/brst_quantum.hpp"

#include "brst/errors.hpp"

namespace brst {

namespace {

SuperElement div_nu(const SuperElement& x, int order)
{
    return map_coefficients(x, [](const Series& s) { return series_div_nu(s); }).with_order(order);
}

std::pair<SuperElement, SuperElement> split_parity(const SuperElement& x)
{
    SuperElement even(x.context(), x.order()), odd(x.context(), x.order());
    for (const auto& [k, s] : x.terms())
        (k.odd() ? odd : even).add_term(k, s);
    return {even, odd};
}

} // namespace

SuperElement quantum_charge(const MomentMapData& J, int order)
{
    SuperElement theta = classical_charge(J, order);
    for (std::size_t a = 0; a < J.dim(); ++a) {
        const Scalar t = J.lie.trace(a);
        if (!t.is_zero())
            theta.add_term(SuperKey::ghost(a),
                           Series::nu_power(J.context(), order, 1, Poly::constant(J.context(), t * Scalar(1, 2))));
    }
    return theta;
}

QuantumBrst::QuantumBrst(MomentMapData J, PoissonData lambda, int order, TensorSign sign)
    : J_(std::move(J)),
      order_(order),
      star_(MoyalStar(lambda, order), sign),
      star_up_(MoyalStar(lambda, order + 1), sign),
      theta_(quantum_charge(J_, order)),
      theta_up_(quantum_charge(J_, order + 1))
{
    rep_.name = "nu^-1 ad_* J";
    rep_.dim = J_.dim();
    rep_.act = [this](std::size_t a, const Series& s) { return act(a, s); };
}

SuperElement QuantumBrst::commutator(const SuperElement& x, const SuperElement& y) const
{
    const auto& st = x.order() == order_ ? star_ : star_up_;
    auto [xe, xo] = split_parity(x);
    auto [ye, yo] = split_parity(y);
    SuperElement r(x.context(), x.order());
    for (const SuperElement* a : {&xe, &xo})
        for (const SuperElement* b : {&ye, &yo})
            if (!a->is_zero() && !b->is_zero())
                r += st.supercommutator(*a, *b);
    return r;
}

SuperElement QuantumBrst::D(const SuperElement& x) const
{
    return div_nu(commutator(theta_up_, x.padded_exact(order_ + 1)), order_);
}

Series QuantumBrst::act(std::size_t a, const Series& s) const
{
    const Series up = s.padded_exact(order_ + 1);
    const Series j(J_.J.at(a), order_ + 1);
    return series_div_nu(star_up_.moyal().commutator(j, up)).with_order(order_);
}

SuperElement QuantumBrst::delta(const SuperElement& x) const
{
    return ce_codifferential(x, J_.lie, rep_);
}

SuperElement QuantumBrst::R(const SuperElement& x) const
{
    SuperElement r(x.context(), x.order());
    for (std::size_t a = 0; a < J_.dim(); ++a) {
        const SuperElement c = contract_antighost(a, x);
        if (c.is_zero())
            continue;
        const Series j(J_.J[a], x.order());
        r += map_coefficients(c, [&](const Series& s) { return star_.moyal()(s, j); });
    }
    return r;
}

SuperElement QuantumBrst::koszul(const SuperElement& x) const
{
    SuperElement corr(x.context(), x.order());
    for (std::size_t a = 0; a < J_.dim(); ++a) {
        const Scalar t = J_.lie.trace(a);
        if (!t.is_zero())
            corr += contract_antighost(a, x) * (t * Scalar(1, 2));
    }
    for (const auto& e : J_.lie.entries()) {
        // -q = 1/2 f_ab^c e_c i^a i^b
        const SuperElement y = contract_antighost(e.a, contract_antighost(e.b, x));
        if (!y.is_zero())
            corr += key_left_mul(SuperKey::antighost(e.c), e.value * Scalar(1, 2), y);
    }
    return R(x) + corr.shifted(1);
}

CheckRecord check_charge_square(const QuantumBrst& q)
{
    Stopwatch clock;
    ResidualTally tally;
    tally.add("theta_nu", q.star()(q.charge(), q.charge()));
    CheckRecord rec = make_record("quantum-charge-square", "quantum BRST charge squares to zero");
    tally.finish(rec);
    rec.wall_ms = clock.elapsed_ms();
    return rec;
}

CheckRecord check_quantum_splitting(const QuantumBrst& q, const std::vector<SuperElement>& probes)
{
    Stopwatch clock;
    ResidualTally tally;
    for (std::size_t k = 0; k < probes.size(); ++k) {
        const auto& x = probes[k];
        const std::string tag = "probe " + std::to_string(k);
        try {
            const SuperElement dx = q.koszul(x), deltax = q.delta(x);
            tally.add(tag + " (D - delta - 2d)", q.D(x) - deltax - dx * Scalar(2));
            tally.add(tag + " (delta delta)", q.delta(deltax));
            tally.add(tag + " (d d)", q.koszul(dx));
            tally.add(tag + " (delta d + d delta)", q.delta(dx) + q.koszul(deltax));
        } catch (const Error& e) {
            tally.fail(tag, e.what());
        }
    }
    CheckRecord rec = make_record("quantum-splitting", "quantum BRST differential splitting");
    tally.finish(rec);
    rec.wall_ms = clock.elapsed_ms();
    return rec;
}

CheckRecord check_super_associativity(const SuperStar& star, const std::vector<SuperElement>& probes)
{
    Stopwatch clock;
    ResidualTally tally;
    for (std::size_t k = 0; k + 2 < probes.size(); k += 3) {
        const auto &x = probes[k], &y = probes[k + 1], &z = probes[k + 2];
        tally.add("triple " + std::to_string(k / 3), star(star(x, y), z) - star(x, star(y, z)));
    }
    CheckRecord rec = make_record("super-star-associativity", "associativity of the graded star product");
    tally.finish(rec);
    rec.wall_ms = clock.elapsed_ms();
    return rec;
}

} // namespace brst
