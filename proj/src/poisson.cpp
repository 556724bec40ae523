#include "brst/poisson.hpp"

#include "brst/errors.hpp"

#include <array>
#include <functional>

namespace brst {

PoissonData::PoissonData(ContextPtr ctx, DenseMatrix lambda) : ctx_(std::move(ctx)), lambda_(std::move(lambda))
{
    const std::size_t n = ctx_ ? ctx_->size() : 0;
    if (lambda_.rows() != n || lambda_.cols() != n)
        throw ConfigError("Poisson matrix must be square of the variable count");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (lambda_(i, j) != -lambda_(j, i))
                throw ConfigError("Poisson matrix is not antisymmetric");
            if (!lambda_(i, j).is_zero())
                entries_.push_back({i, j, lambda_(i, j)});
        }
    if (determinant(lambda_).is_zero())
        throw ConfigError("Poisson matrix is degenerate");
}

PoissonData PoissonData::negated() const
{
    DenseMatrix m = lambda_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = -m(i, j);
    return PoissonData(ctx_, std::move(m));
}

PoissonData poisson_from_pairs(ContextPtr ctx, const std::vector<PoissonData::Entry>& pairs)
{
    DenseMatrix m(ctx->size(), ctx->size());
    for (const auto& e : pairs) {
        if (e.i >= ctx->size() || e.j >= ctx->size() || e.i == e.j)
            throw ConfigError("invalid Poisson pair");
        m(e.i, e.j) = e.value;
        m(e.j, e.i) = -e.value;
    }
    return PoissonData(std::move(ctx), std::move(m));
}

Poly poisson_bracket(const Poly& f, const Poly& g, const PoissonData& lambda)
{
    Poly r(common_context(f.context(), g.context()));
    if (f.is_zero() || g.is_zero())
        return r;
    const std::size_t n = lambda.context()->size();
    std::vector<Poly> df(n), dg(n);
    std::vector<bool> have_f(n, false), have_g(n, false);
    for (const auto& e : lambda.entries()) {
        if (!have_f[e.i]) {
            df[e.i] = poly_diff(f, e.i);
            have_f[e.i] = true;
        }
        if (df[e.i].is_zero())
            continue;
        if (!have_g[e.j]) {
            dg[e.j] = poly_diff(g, e.j);
            have_g[e.j] = true;
        }
        if (dg[e.j].is_zero())
            continue;
        r += (df[e.i] * dg[e.j]) * e.value;
    }
    return r;
}

MoyalStar::MoyalStar(PoissonData lambda, int order) : lambda_(std::move(lambda)), order_(order)
{
    if (order < 0)
        throw TruncationError("negative truncation order");
}

const std::vector<MoyalStar::Term>& MoyalStar::monomial_product(const Monomial& a, const Monomial& b) const
{
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;

    const auto& edges = lambda_.entries();
    std::vector<Term> out;
    std::array<unsigned, kMaxVars> alpha{}, beta{};
    // Enumerate multiplicities kappa_e of each bivector entry; the weight
    // (1/2)^k prod Lambda_e^kappa_e / kappa_e! collects the exponential series.
    std::function<void(std::size_t, int, Scalar)> rec = [&](std::size_t e, int k, Scalar w) {
        if (e == edges.size()) {
            Scalar c = w;
            Monomial m;
            for (std::size_t v = 0; v < kMaxVars; ++v) {
                if (alpha[v])
                    c *= falling_factorial(a[v], alpha[v]);
                if (beta[v])
                    c *= falling_factorial(b[v], beta[v]);
                unsigned ex = a[v] - alpha[v] + b[v] - beta[v];
                if (ex)
                    m.set(v, ex);
            }
            if (!c.is_zero())
                out.push_back({k, m, c});
            return;
        }
        rec(e + 1, k, w);
        const auto& ed = edges[e];
        Scalar pw = w;
        unsigned used = 0;
        for (unsigned kap = 1; k + static_cast<int>(kap) <= order_; ++kap) {
            if (alpha[ed.i] + 1 > a[ed.i] || beta[ed.j] + 1 > b[ed.j])
                break;
            ++alpha[ed.i];
            ++beta[ed.j];
            ++used;
            pw *= ed.value * Scalar(1, 2 * static_cast<long>(kap));
            rec(e + 1, k + static_cast<int>(kap), pw);
        }
        alpha[ed.i] -= used;
        beta[ed.j] -= used;
    };
    rec(0, 0, Scalar(1));
    return cache_.emplace(key, std::move(out)).first->second;
}

Series MoyalStar::operator()(const Poly& f, const Poly& g) const
{
    Series r(common_context(f.context(), g.context()), order_);
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms()) {
            Scalar c = ca * cb;
            for (const auto& t : monomial_product(ma, mb))
                r[t.nu].add_term(t.m, c * t.c);
        }
    return r;
}

Series MoyalStar::operator()(const Series& f, const Series& g) const
{
    if (f.order() != order_ || g.order() != order_)
        throw TruncationError("star product order mismatch");
    Series r(common_context(f.context(), g.context()), order_);
    for (int i = 0; i <= order_; ++i) {
        if (f[i].is_zero())
            continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (g[j].is_zero())
                continue;
            for (const auto& [ma, ca] : f[i].terms())
                for (const auto& [mb, cb] : g[j].terms()) {
                    Scalar c = ca * cb;
                    for (const auto& t : monomial_product(ma, mb)) {
                        int k = i + j + t.nu;
                        if (k <= order_)
                            r[k].add_term(t.m, c * t.c);
                    }
                }
        }
    }
    r.set_reliable_order(std::min(f.reliable_order(), g.reliable_order()));
    return r;
}

Series MoyalStar::commutator(const Series& f, const Series& g) const
{
    return (*this)(f, g) - (*this)(g, f);
}

Series moyal_star(const Poly& f, const Poly& g, const PoissonData& lambda, int order)
{
    return MoyalStar(lambda, order)(f, g);
}

CheckRecord check_quantum_covariance(const MomentMapData& J, const MoyalStar& star)
{
    CheckRecord rec = make_record("quantum-covariance", "quantum moment map covariance J(X)*J(Y) - J(Y)*J(X) = nu J([X,Y])");
    Stopwatch sw;
    ResidualTally tally;
    const int N = star.order();
    for (std::size_t a = 0; a < J.dim(); ++a)
        for (std::size_t b = a + 1; b < J.dim(); ++b) {
            Series lhs = star.commutator(Series(J.J[a], N), Series(J.J[b], N));
            Poly rhs(J.context());
            for (std::size_t c = 0; c < J.dim(); ++c)
                if (!J.lie.f(a, b, c).is_zero())
                    rhs += J.J[c] * J.lie.f(a, b, c);
            lhs -= Series::nu_power(J.context(), N, 1, rhs);
            tally.add("(J" + std::to_string(a + 1) + ", J" + std::to_string(b + 1) + ")", lhs);
        }
    tally.finish(rec);
    rec.wall_ms = sw.elapsed_ms();
    return rec;
}

CheckRecord check_strong_invariance(const MomentMapData& J, const MoyalStar& star, const std::vector<Poly>& probes)
{
    CheckRecord rec = make_record("strong-invariance", "strong invariance J(X)*f - f*J(X) = nu {J(X), f}");
    Stopwatch sw;
    ResidualTally tally;
    const int N = star.order();
    for (std::size_t a = 0; a < J.dim(); ++a)
        for (const auto& f : probes) {
            Series lhs = star.commutator(Series(J.J[a], N), Series(f, N));
            lhs -= Series::nu_power(J.context(), N, 1, poisson_bracket(J.J[a], f, star.poisson()));
            tally.add("(J" + std::to_string(a + 1) + ", " + ResidualTally::truncate_text(f.str(), 80) + ")", lhs);
        }
    tally.finish(rec);
    rec.wall_ms = sw.elapsed_ms();
    return rec;
}

CheckRecord check_classical_equivariance(const MomentMapData& J, const PoissonData& lambda)
{
    CheckRecord rec = make_record("classical-equivariance", "equivariant moment map {J_a, J_b} = f_ab^c J_c");
    Stopwatch sw;
    ResidualTally tally;
    for (std::size_t a = 0; a < J.dim(); ++a)
        for (std::size_t b = a + 1; b < J.dim(); ++b) {
            Poly r = poisson_bracket(J.J[a], J.J[b], lambda);
            for (std::size_t c = 0; c < J.dim(); ++c)
                if (!J.lie.f(a, b, c).is_zero())
                    r -= J.J[c] * J.lie.f(a, b, c);
            tally.add("(J" + std::to_string(a + 1) + ", J" + std::to_string(b + 1) + ")", r);
        }
    tally.finish(rec);
    rec.wall_ms = sw.elapsed_ms();
    return rec;
}

} // namespace brst
