#include "brst/probes.hpp"

#include "brst/errors.hpp"

#include <algorithm>
#include <functional>

namespace brst {

long ProbeGenerator::integer(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Scalar ProbeGenerator::small_scalar(bool complex)
{
    long num = 0;
    while (num == 0)
        num = integer(-5, 5);
    Scalar s(num, integer(1, 3));
    if (complex && integer(0, 2) == 0)
        s += Scalar::i() * Scalar(integer(-3, 3));
    return s.is_zero() ? Scalar(1) : s;
}

Monomial ProbeGenerator::monomial(std::size_t nvars, unsigned degree)
{
    Monomial m;
    for (unsigned k = 0; k < degree; ++k) {
        auto v = static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1));
        m.set(v, m[v] + 1);
    }
    return m;
}

Poly ProbeGenerator::poly(const ContextPtr& ctx, unsigned max_degree, std::size_t terms, bool complex)
{
    Poly p(ctx);
    while (p.is_zero())
        for (std::size_t t = 0; t < terms; ++t)
            p.add_term(monomial(ctx->size(), static_cast<unsigned>(integer(0, max_degree))), small_scalar(complex));
    return p;
}

Poly ProbeGenerator::homogeneous(const ContextPtr& ctx, unsigned degree, std::size_t terms, bool complex)
{
    Poly p(ctx);
    while (p.is_zero())
        for (std::size_t t = 0; t < terms; ++t)
            p.add_term(monomial(ctx->size(), degree), small_scalar(complex));
    return p;
}

Poly ProbeGenerator::invariant(const ContextPtr& ctx, unsigned max_degree, std::size_t terms, bool complex)
{
    std::vector<Monomial> pool;
    for (unsigned d = 0; d <= max_degree; ++d)
        for (const auto& m : monomials_of_degree(ctx->size(), d)) {
            bool zero = true;
            for (const auto& row : ctx->weights())
                zero = zero && m.weight(row) == 0;
            if (zero)
                pool.push_back(m);
        }
    Poly p(ctx);
    while (p.is_zero())
        for (std::size_t t = 0; t < terms; ++t)
            p.add_term(pool[static_cast<std::size_t>(integer(0, static_cast<long>(pool.size()) - 1))],
                       small_scalar(complex));
    return p;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree)
{
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0)
            out.emplace_back();
        return out;
    }
    Monomial m;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
        if (v + 1 == nvars) {
            m.set(v, left);
            out.push_back(m);
            m.set(v, 0);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            m.set(v, e);
            rec(v + 1, left - e);
        }
        m.set(v, 0);
    };
    rec(0, degree);
    return out;
}

} // namespace brst
