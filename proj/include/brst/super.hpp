#pragma once

#include "brst/lie.hpp"
#include "brst/poisson.hpp"
#include "brst/probes.hpp"
#include "brst/series.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brst {

inline constexpr std::size_t kMaxLieDim = 16;

// Basis monomial e^G e_A of the ghost/antighost exterior algebra. Bit a of
// `ghosts` stands for e^{a+1}, bit a of `antighosts` for e_{a+1}. The
// canonical order is all ghosts ascending, then all antighosts ascending.
struct SuperKey {
    std::uint16_t ghosts = 0;
    std::uint16_t antighosts = 0;

    static SuperKey ghost(std::size_t a) { return {static_cast<std::uint16_t>(1u << a), 0}; }
    static SuperKey antighost(std::size_t a) { return {0, static_cast<std::uint16_t>(1u << a)}; }

    int ghost_count() const;
    int antighost_count() const;
    int degree() const { return ghost_count() - antighost_count(); }
    bool odd() const { return (ghost_count() + antighost_count()) % 2 != 0; }
    bool has_ghost(std::size_t a) const { return (ghosts >> a) & 1u; }
    bool has_antighost(std::size_t a) const { return (antighosts >> a) & 1u; }

    friend auto operator<=>(const SuperKey&, const SuperKey&) = default;

    std::string str() const;
};

// Signed product of basis monomials; nullopt when an index repeats.
std::optional<std::pair<int, SuperKey>> key_mul(const SuperKey& x, const SuperKey& y);

// i^a: contraction of the antighost e_a. Sign from passing the ghosts and
// the antighosts before e_a.
std::optional<std::pair<int, SuperKey>> key_contract_antighost(std::size_t a, const SuperKey& x);
// i_a: contraction of the ghost e^a.
std::optional<std::pair<int, SuperKey>> key_contract_ghost(std::size_t a, const SuperKey& x);

// Element of A[[nu]] = S(g[1] + g*[-1]) with Series coefficients, all at one
// truncation order. Zero coefficients are never stored.
class SuperElement {
public:
    using TermMap = std::map<SuperKey, Series>;

    SuperElement() = default;
    SuperElement(ContextPtr ctx, int order) : ctx_(std::move(ctx)), order_(order) {}

    static SuperElement from_series(const Series& s);
    static SuperElement from_poly(const Poly& p, int order) { return from_series(Series(p, order)); }
    static SuperElement basis(ContextPtr ctx, int order, SuperKey key, const Poly& coeff);

    const ContextPtr& context() const { return ctx_; }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Series coefficient(const SuperKey& k) const;
    // Ghost-free, antighost-free coefficient.
    Series scalar_part() const { return coefficient(SuperKey{}); }

    void add_term(const SuperKey& k, const Series& s);

    SuperElement& operator+=(const SuperElement& o);
    SuperElement& operator-=(const SuperElement& o);
    SuperElement& operator*=(const Scalar& c);
    SuperElement operator-() const;

    friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
    friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
    friend SuperElement operator*(SuperElement a, const Scalar& c) { return a *= c; }
    friend SuperElement operator*(const Scalar& c, SuperElement a) { return a *= c; }
    friend bool operator==(const SuperElement& a, const SuperElement& b);
    friend bool operator!=(const SuperElement& a, const SuperElement& b) { return !(a == b); }

    // Multiplies every coefficient by nu^k (truncating).
    SuperElement shifted(int k) const;
    SuperElement with_order(int n) const;
    SuperElement padded_exact(int n) const;
    SuperElement truncated(int k) const;
    // Coefficient of nu^k as a nu-free element at the same order.
    SuperElement nu_coefficient(int k) const;
    int reliable_order() const;

    // Terms of total degree d (ghosts minus antighosts).
    SuperElement degree_part(int d) const;
    std::vector<int> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }
    // Common parity of all terms; throws ShapeError on mixed parity.
    bool odd() const;

    std::size_t term_count() const;
    int max_poly_degree() const;
    std::string str() const;

private:
    ContextPtr ctx_;
    int order_ = 0;
    TermMap terms_;
};

// Throws TruncationError on order mismatch.
void require_same_order(const SuperElement& x, const SuperElement& y);

// Supercommutative product mu.
SuperElement super_mul(const SuperElement& x, const SuperElement& y);
// Left multiplication by c e^G e_A.
SuperElement key_left_mul(const SuperKey& k, const Scalar& c, const SuperElement& x);

enum class DerivationKind { antighost_contraction, ghost_contraction };
// i^a (kind antighost_contraction) or i_a (ghost_contraction); a is 0-based.
SuperElement apply_contraction_derivation(DerivationKind kind, std::size_t a, const SuperElement& x);
SuperElement contract_antighost(std::size_t a, const SuperElement& x);
SuperElement contract_ghost(std::size_t a, const SuperElement& x);

// Applies a coefficient map termwise (ghost content untouched).
template <class F>
SuperElement map_coefficients(const SuperElement& x, F&& f)
{
    SuperElement r(x.context(), x.order());
    for (const auto& [k, s] : x.terms())
        r.add_term(k, f(s));
    return r;
}

// Poisson bracket of nu-series coefficientwise: sum nu^{i+j} {a_i, b_j}.
Series series_poisson(const Series& a, const Series& b, const PoissonData& lambda);

// Graded Poisson bracket: the nu-linear part of the graded commutator of the
// star product below, {fX, gY} = {f,g} XY + fg {X,Y}, with {e^a, e_b} = 2 delta.
SuperElement graded_poisson(const SuperElement& x, const SuperElement& y, const PoissonData& lambda);

// Sign in (i^a (x) i_a)(x (x) y): `koszul` uses (-1)^{|x|}; `naive` drops it
// and exists only as a negative control.
enum class TensorSign { koszul, naive };

struct CliffordTerm {
    int nu;
    SuperKey key;
    Scalar c;
};

// mu(exp(-2 nu sum_a i^a (x) i_a)(x (x) y)) for basis monomials.
std::vector<CliffordTerm> clifford_basis_product(const SuperKey& x, const SuperKey& y, TensorSign sign);

SuperElement clifford_mul(const SuperElement& x, const SuperElement& y, TensorSign sign = TensorSign::koszul);

// Graded star product (fX) * (gY) = (f star g)(X . Y) on A[[nu]].
class SuperStar {
public:
    SuperStar(MoyalStar star, TensorSign sign = TensorSign::koszul) : star_(std::move(star)), sign_(sign) {}

    const MoyalStar& moyal() const { return star_; }
    const PoissonData& poisson() const { return star_.poisson(); }
    int order() const { return star_.order(); }
    TensorSign sign() const { return sign_; }

    SuperElement operator()(const SuperElement& x, const SuperElement& y) const;
    // x * y - (-1)^{|x||y|} y * x for x, y of definite parity.
    SuperElement supercommutator(const SuperElement& x, const SuperElement& y) const;

    // The same product at another truncation order, sharing no caches.
    SuperStar at_order(int order) const { return SuperStar(MoyalStar(star_.poisson(), order), sign_); }

private:
    const std::vector<CliffordTerm>& clifford(const SuperKey& x, const SuperKey& y) const;

    MoyalStar star_;
    TensorSign sign_;
    mutable std::map<std::pair<SuperKey, SuperKey>, std::vector<CliffordTerm>> cache_;
};

SuperElement super_star(const SuperElement& x, const SuperElement& y, const PoissonData& lambda, int order);

// Random element with `terms` ghost monomials over a Lie algebra of dimension
// `dim`, coefficients of polynomial degree <= max_poly in every nu-order.
// With `ghost_degree` set, every term has that ghost minus antighost count.
SuperElement random_super_element(ProbeGenerator& gen, const ContextPtr& ctx, std::size_t dim, int order,
                                  unsigned max_poly, std::size_t terms = 3, std::optional<int> ghost_degree = {});

} // namespace brst
