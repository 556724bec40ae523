#pragma once

#include "brst/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace brst {

inline constexpr std::size_t kMaxVars = 16;

// Ordered variable list plus an optional integer weight matrix (one row per
// torus generator). Shared by every polynomial built over it.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names, std::vector<std::vector<long>> weights = {});

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    // Throws ContextError for unknown names.
    std::size_t index(const std::string& name) const;
    bool has(const std::string& name) const;

    std::size_t weight_rows() const { return weights_.size(); }
    const std::vector<std::vector<long>>& weights() const { return weights_; }

    bool same_as(const VarContext& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<long>> weights_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names, std::vector<std::vector<long>> weights = {});

class Monomial {
public:
    Monomial() { exps_.fill(0); }
    explicit Monomial(std::span<const unsigned> exps);

    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned degree() const { return degree_; }

    void set(std::size_t i, unsigned e);

    Monomial operator*(const Monomial& o) const;
    // False when some exponent of `o` exceeds ours.
    bool divisible_by(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;

    // Weight under one row of the context's weight matrix.
    long weight(std::span<const long> row) const;
    std::vector<long> weights(const VarContext& ctx) const;

    // Graded lexicographic comparison on the declared variable order.
    friend bool operator<(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.exps_ == b.exps_;
    }

    std::string str(const VarContext& ctx) const;
    std::size_t hash() const;

private:
    std::array<std::uint8_t, kMaxVars> exps_;
    std::uint16_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Leading term first.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

// Sparse multivariate polynomial over Scalar. No zero coefficient is ever
// stored; iteration goes from the leading (grlex-largest) term down.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar, GrlexDescending>;

    Poly() = default;
    explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Poly constant(ContextPtr ctx, const Scalar& c);
    static Poly variable(ContextPtr ctx, std::size_t index);
    static Poly term(ContextPtr ctx, const Monomial& m, const Scalar& c);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int max_poly_degree() const { return degree(); }

    // -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Scalar coefficient(const Monomial& m) const;
    Scalar constant_term() const { return coefficient(Monomial()); }

    void add_term(const Monomial& m, const Scalar& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Terms of total degree exactly d.
    Poly homogeneous_part(unsigned d) const;
    // Decomposition into homogeneous slices, keyed by degree.
    std::map<unsigned, Poly> slices() const;

    std::string str() const;

private:
    ContextPtr ctx_;
    TermMap terms_;
};

// Throws ContextError when both contexts are set and differ.
const ContextPtr& common_context(const ContextPtr& a, const ContextPtr& b);

enum class ArithKind { add, mul, scale };

// Single entry point used by tests and the CLI; `scale` multiplies f by the
// constant term of g.
Poly poly_arith(const Poly& f, const Poly& g, ArithKind kind);

// Formal partial derivative.
Poly poly_diff(const Poly& f, std::size_t var);
Poly pow(const Poly& f, unsigned exp);

} // namespace brst
