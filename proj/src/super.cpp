#include "brst/super.hpp"

#include "brst/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace brst {

int SuperKey::ghost_count() const
{
    return std::popcount(ghosts);
}

int SuperKey::antighost_count() const
{
    return std::popcount(antighosts);
}

std::string SuperKey::str() const
{
    std::string out;
    for (std::size_t a = 0; a < kMaxLieDim; ++a)
        if (has_ghost(a))
            out += "e^" + std::to_string(a + 1);
    for (std::size_t a = 0; a < kMaxLieDim; ++a)
        if (has_antighost(a))
            out += "e_" + std::to_string(a + 1);
    return out.empty() ? "1" : out;
}

namespace {

// Sign of merging two ascending index sets into one: one factor -1 for every
// pair (i in x, j in y) with i > j.
int merge_sign(std::uint16_t x, std::uint16_t y)
{
    int inversions = 0;
    for (std::size_t j = 0; j < kMaxLieDim; ++j)
        if ((y >> j) & 1u)
            inversions += std::popcount(static_cast<std::uint16_t>(x >> (j + 1)));
    return inversions % 2 ? -1 : 1;
}

int below(std::uint16_t set, std::size_t a)
{
    return std::popcount(static_cast<std::uint16_t>(set & ((1u << a) - 1u)));
}

} // namespace

std::optional<std::pair<int, SuperKey>> key_mul(const SuperKey& x, const SuperKey& y)
{
    if ((x.ghosts & y.ghosts) || (x.antighosts & y.antighosts))
        return std::nullopt;
    // e^{G1} e_{A1} e^{G2} e_{A2}: move e^{G2} past e_{A1}, then merge.
    int sign = (x.antighost_count() * y.ghost_count()) % 2 ? -1 : 1;
    sign *= merge_sign(x.ghosts, y.ghosts);
    sign *= merge_sign(x.antighosts, y.antighosts);
    return std::make_pair(sign, SuperKey{static_cast<std::uint16_t>(x.ghosts | y.ghosts),
                                         static_cast<std::uint16_t>(x.antighosts | y.antighosts)});
}

std::optional<std::pair<int, SuperKey>> key_contract_antighost(std::size_t a, const SuperKey& x)
{
    if (!x.has_antighost(a))
        return std::nullopt;
    int passed = x.ghost_count() + below(x.antighosts, a);
    SuperKey r = x;
    r.antighosts = static_cast<std::uint16_t>(r.antighosts & ~(1u << a));
    return std::make_pair(passed % 2 ? -1 : 1, r);
}

std::optional<std::pair<int, SuperKey>> key_contract_ghost(std::size_t a, const SuperKey& x)
{
    if (!x.has_ghost(a))
        return std::nullopt;
    int passed = below(x.ghosts, a);
    SuperKey r = x;
    r.ghosts = static_cast<std::uint16_t>(r.ghosts & ~(1u << a));
    return std::make_pair(passed % 2 ? -1 : 1, r);
}

SuperElement SuperElement::from_series(const Series& s)
{
    SuperElement x(s.context(), s.order());
    x.add_term(SuperKey{}, s);
    return x;
}

SuperElement SuperElement::basis(ContextPtr ctx, int order, SuperKey key, const Poly& coeff)
{
    SuperElement x(ctx, order);
    x.add_term(key, Series(coeff, order));
    return x;
}

Series SuperElement::coefficient(const SuperKey& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Series(ctx_, order_) : it->second;
}

void SuperElement::add_term(const SuperKey& k, const Series& s)
{
    if (s.order() != order_)
        throw TruncationError("coefficient order " + std::to_string(s.order()) + " does not match element order " +
                              std::to_string(order_));
    ctx_ = common_context(ctx_, s.context());
    if (s.is_zero()) {
        if (s.reliable_order() < order_) {
            auto it = terms_.find(k);
            if (it != terms_.end())
                it->second.set_reliable_order(std::min(it->second.reliable_order(), s.reliable_order()));
        }
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void require_same_order(const SuperElement& x, const SuperElement& y)
{
    if (x.order() != y.order())
        throw TruncationError("element orders differ: " + std::to_string(x.order()) + " vs " +
                              std::to_string(y.order()));
}

SuperElement& SuperElement::operator+=(const SuperElement& o)
{
    require_same_order(*this, o);
    for (const auto& [k, s] : o.terms_)
        add_term(k, s);
    return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o)
{
    require_same_order(*this, o);
    for (const auto& [k, s] : o.terms_)
        add_term(k, -s);
    return *this;
}

SuperElement& SuperElement::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, s] : terms_)
        s *= c;
    return *this;
}

SuperElement SuperElement::operator-() const
{
    SuperElement r = *this;
    for (auto& [k, s] : r.terms_)
        s = -s;
    return r;
}

bool operator==(const SuperElement& a, const SuperElement& b)
{
    return a.order_ == b.order_ && a.terms_ == b.terms_;
}

SuperElement SuperElement::shifted(int k) const
{
    return map_coefficients(*this, [k](const Series& s) { return s.shifted(k); });
}

SuperElement SuperElement::with_order(int n) const
{
    SuperElement r(ctx_, n);
    for (const auto& [k, s] : terms_)
        r.add_term(k, s.with_order(n));
    return r;
}

SuperElement SuperElement::padded_exact(int n) const
{
    SuperElement r(ctx_, n);
    for (const auto& [k, s] : terms_)
        r.add_term(k, s.padded_exact(n));
    return r;
}

SuperElement SuperElement::truncated(int k) const
{
    return map_coefficients(*this, [k](const Series& s) { return s.truncated(k); });
}

SuperElement SuperElement::nu_coefficient(int k) const
{
    return map_coefficients(*this, [&](const Series& s) { return Series(s[k], order_); });
}

int SuperElement::reliable_order() const
{
    int r = order_;
    for (const auto& [k, s] : terms_)
        r = std::min(r, s.reliable_order());
    return r;
}

SuperElement SuperElement::degree_part(int d) const
{
    SuperElement r(ctx_, order_);
    for (const auto& [k, s] : terms_)
        if (k.degree() == d)
            r.terms_.emplace(k, s);
    return r;
}

std::vector<int> SuperElement::degrees() const
{
    std::set<int> ds;
    for (const auto& [k, s] : terms_)
        ds.insert(k.degree());
    return {ds.begin(), ds.end()};
}

bool SuperElement::odd() const
{
    if (terms_.empty())
        return false;
    const bool p = terms_.begin()->first.odd();
    for (const auto& [k, s] : terms_)
        if (k.odd() != p)
            throw ShapeError("parity of an element with even and odd terms");
    return p;
}

std::size_t SuperElement::term_count() const
{
    std::size_t n = 0;
    for (const auto& [k, s] : terms_)
        n += s.term_count();
    return n;
}

int SuperElement::max_poly_degree() const
{
    int d = -1;
    for (const auto& [k, s] : terms_)
        d = std::max(d, s.max_poly_degree());
    return d;
}

std::string SuperElement::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [k, s] : terms_) {
        if (!out.empty())
            out += " + ";
        out += "(" + s.str() + ")";
        if (k != SuperKey{})
            out += "*" + k.str();
    }
    return out;
}

SuperElement super_mul(const SuperElement& x, const SuperElement& y)
{
    require_same_order(x, y);
    SuperElement r(common_context(x.context(), y.context()), x.order());
    for (const auto& [kx, sx] : x.terms())
        for (const auto& [ky, sy] : y.terms()) {
            auto prod = key_mul(kx, ky);
            if (!prod)
                continue;
            Series s = sx * sy;
            if (prod->first < 0)
                s = -s;
            r.add_term(prod->second, s);
        }
    return r;
}

SuperElement key_left_mul(const SuperKey& k, const Scalar& c, const SuperElement& x)
{
    SuperElement r(x.context(), x.order());
    if (c.is_zero())
        return r;
    for (const auto& [kx, sx] : x.terms()) {
        auto prod = key_mul(k, kx);
        if (prod)
            r.add_term(prod->second, sx * (prod->first < 0 ? -c : c));
    }
    return r;
}

SuperElement apply_contraction_derivation(DerivationKind kind, std::size_t a, const SuperElement& x)
{
    if (a >= kMaxLieDim)
        throw ShapeError("contraction index out of range");
    SuperElement r(x.context(), x.order());
    for (const auto& [k, s] : x.terms()) {
        auto c = kind == DerivationKind::antighost_contraction ? key_contract_antighost(a, k)
                                                               : key_contract_ghost(a, k);
        if (c)
            r.add_term(c->second, c->first < 0 ? -s : s);
    }
    return r;
}

SuperElement contract_antighost(std::size_t a, const SuperElement& x)
{
    return apply_contraction_derivation(DerivationKind::antighost_contraction, a, x);
}

SuperElement contract_ghost(std::size_t a, const SuperElement& x)
{
    return apply_contraction_derivation(DerivationKind::ghost_contraction, a, x);
}

Series series_poisson(const Series& a, const Series& b, const PoissonData& lambda)
{
    if (a.order() != b.order())
        throw TruncationError("series orders differ");
    Series r(common_context(a.context(), b.context()), a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j <= a.order(); ++j)
            if (!b[j].is_zero())
                r[i + j] += poisson_bracket(a[i], b[j], lambda);
    }
    r.set_reliable_order(std::min(a.reliable_order(), b.reliable_order()));
    return r;
}

namespace {

// {X, Y} for basis monomials, as signed keys with integer coefficients.
std::vector<std::pair<Scalar, SuperKey>> key_bracket(const SuperKey& x, const SuperKey& y)
{
    std::vector<std::pair<Scalar, SuperKey>> out;
    const int sx = x.odd() ? -1 : 1;
    const int sxy = (x.odd() && y.odd()) ? -1 : 1;
    const int sy = y.odd() ? -1 : 1;
    for (std::size_t a = 0; a < kMaxLieDim; ++a) {
        // (-1)^{|X|} (i^a X)(i_a Y)
        if (auto ix = key_contract_antighost(a, x))
            if (auto iy = key_contract_ghost(a, y))
                if (auto p = key_mul(ix->second, iy->second))
                    out.emplace_back(Scalar(-2 * sx * ix->first * iy->first * p->first), p->second);
        // - (-1)^{|X||Y| + |Y|} (i^a Y)(i_a X)
        if (auto iy = key_contract_antighost(a, y))
            if (auto ix = key_contract_ghost(a, x))
                if (auto p = key_mul(iy->second, ix->second))
                    out.emplace_back(Scalar(2 * sxy * sy * iy->first * ix->first * p->first), p->second);
    }
    return out;
}

} // namespace

SuperElement graded_poisson(const SuperElement& x, const SuperElement& y, const PoissonData& lambda)
{
    require_same_order(x, y);
    SuperElement r(common_context(x.context(), y.context()), x.order());
    for (const auto& [kx, sx] : x.terms())
        for (const auto& [ky, sy] : y.terms()) {
            if (auto p = key_mul(kx, ky)) {
                Series b = series_poisson(sx, sy, lambda);
                if (!b.is_zero())
                    r.add_term(p->second, p->first < 0 ? -b : b);
            }
            auto kb = key_bracket(kx, ky);
            if (kb.empty())
                continue;
            Series prod = sx * sy;
            for (const auto& [c, k] : kb)
                r.add_term(k, prod * c);
        }
    return r;
}

std::vector<CliffordTerm> clifford_basis_product(const SuperKey& x, const SuperKey& y, TensorSign sign)
{
    std::map<std::pair<SuperKey, SuperKey>, Scalar> state{{{x, y}, Scalar(1)}};
    std::map<std::pair<int, SuperKey>, Scalar> acc;
    Scalar weight(1);
    for (int k = 0; !state.empty(); ++k) {
        if (k > 0)
            weight *= Scalar(-2, k);
        for (const auto& [pair, c] : state)
            if (auto p = key_mul(pair.first, pair.second))
                acc[{k, p->second}] += weight * c * Scalar(p->first);
        std::map<std::pair<SuperKey, SuperKey>, Scalar> next;
        for (const auto& [pair, c] : state) {
            const auto& [kx, ky] = pair;
            const int koszul = (sign == TensorSign::koszul && kx.odd()) ? -1 : 1;
            for (std::size_t a = 0; a < kMaxLieDim; ++a) {
                auto ix = key_contract_antighost(a, kx);
                if (!ix)
                    continue;
                auto iy = key_contract_ghost(a, ky);
                if (!iy)
                    continue;
                next[{ix->second, iy->second}] += c * Scalar(koszul * ix->first * iy->first);
            }
        }
        std::erase_if(next, [](const auto& e) { return e.second.is_zero(); });
        state = std::move(next);
    }
    std::vector<CliffordTerm> out;
    for (const auto& [kk, c] : acc)
        if (!c.is_zero())
            out.push_back({kk.first, kk.second, c});
    return out;
}

SuperElement clifford_mul(const SuperElement& x, const SuperElement& y, TensorSign sign)
{
    require_same_order(x, y);
    SuperElement r(common_context(x.context(), y.context()), x.order());
    for (const auto& [kx, sx] : x.terms())
        for (const auto& [ky, sy] : y.terms()) {
            Series prod = sx * sy;
            for (const auto& t : clifford_basis_product(kx, ky, sign))
                if (t.nu <= x.order())
                    r.add_term(t.key, prod.shifted(t.nu) * t.c);
        }
    return r;
}

const std::vector<CliffordTerm>& SuperStar::clifford(const SuperKey& x, const SuperKey& y) const
{
    auto key = std::make_pair(x, y);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    return cache_.emplace(key, clifford_basis_product(x, y, sign_)).first->second;
}

SuperElement SuperStar::operator()(const SuperElement& x, const SuperElement& y) const
{
    require_same_order(x, y);
    if (x.order() != order())
        throw TruncationError("graded star product order mismatch");
    SuperElement r(common_context(x.context(), y.context()), x.order());
    for (const auto& [kx, sx] : x.terms())
        for (const auto& [ky, sy] : y.terms()) {
            const auto& cl = clifford(kx, ky);
            if (cl.empty())
                continue;
            Series prod = star_(sx, sy);
            for (const auto& t : cl)
                if (t.nu <= order())
                    r.add_term(t.key, t.nu == 0 ? prod * t.c : prod.shifted(t.nu) * t.c);
        }
    return r;
}

SuperElement SuperStar::supercommutator(const SuperElement& x, const SuperElement& y) const
{
    SuperElement xy = (*this)(x, y);
    SuperElement yx = (*this)(y, x);
    return (x.odd() && y.odd()) ? xy + yx : xy - yx;
}

SuperElement super_star(const SuperElement& x, const SuperElement& y, const PoissonData& lambda, int order)
{
    return SuperStar(MoyalStar(lambda, order))(x, y);
}

SuperElement random_super_element(ProbeGenerator& gen, const ContextPtr& ctx, std::size_t dim, int order,
                                  unsigned max_poly, std::size_t terms, std::optional<int> ghost_degree)
{
    if (dim > kMaxLieDim)
        throw ShapeError("Lie algebra dimension exceeds " + std::to_string(kMaxLieDim));
    if (ghost_degree && std::abs(*ghost_degree) > static_cast<int>(dim))
        throw ShapeError("no ghost monomial of degree " + std::to_string(*ghost_degree));
    const long top = (1L << dim) - 1;
    SuperElement x(ctx, order);
    for (std::size_t t = 0; t < terms; ++t) {
        SuperKey k;
        do {
            k = SuperKey{static_cast<std::uint16_t>(gen.integer(0, top)), static_cast<std::uint16_t>(gen.integer(0, top))};
        } while (ghost_degree && k.degree() != *ghost_degree);
        Series s(ctx, order);
        for (int j = 0; j <= order; ++j)
            s[j] = gen.poly(ctx, max_poly, 2, true);
        x.add_term(k, s);
    }
    return x;
}

} // namespace brst
