#pragma once

#include "brst/poly.hpp"

#include <string>
#include <vector>

namespace brst {

// Truncated power series c_0 + c_1 nu + ... + c_N nu^N with Poly coefficients.
// `reliable` is the highest order whose coefficient is known to be correct;
// it only drops below `order` after dividing by nu.
class Series {
public:
    Series() = default;
    Series(ContextPtr ctx, int order);
    // Embeds a polynomial as the nu^0 coefficient.
    Series(const Poly& p, int order);

    static Series nu_power(ContextPtr ctx, int order, int k, const Poly& p);

    const ContextPtr& context() const { return ctx_; }
    int order() const { return order_; }
    int reliable_order() const { return reliable_; }
    void set_reliable_order(int r) { reliable_ = r; }

    const Poly& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    Poly& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<Poly>& coefficients() const { return c_; }

    bool is_zero() const;
    // Lowest k with c_k != 0, or -1 for zero.
    int valuation() const;
    int max_poly_degree() const;
    std::size_t term_count() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Scalar& s);
    Series operator-() const;

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Scalar& s) { return a *= s; }
    friend Series operator*(const Scalar& s, Series a) { return a *= s; }
    // Cauchy product truncated at the common order.
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Poly& p);
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    // Multiplies by nu^k, dropping what falls past the order.
    Series shifted(int k) const;
    // Same coefficients at a different order: truncates or pads with zeros.
    Series with_order(int n) const;
    // Like with_order, but the dropped tail is declared to be zero, so the
    // padded slots count as reliable. Used for polynomial inputs.
    Series padded_exact(int n) const;
    // Coefficients at orders <= k.
    Series truncated(int k) const;

    std::string str() const;

private:
    ContextPtr ctx_;
    int order_ = 0;
    int reliable_ = 0;
    std::vector<Poly> c_{Poly()};
};

enum class SeriesKind { add, mul };

// Throws TruncationError when the orders differ.
Series series_arith(const Series& a, const Series& b, SeriesKind kind);

// Exact division by nu. Throws DivisibilityError when c_0 != 0. The result
// keeps the order but its reliable order drops by one.
Series series_div_nu(const Series& a);

} // namespace brst
