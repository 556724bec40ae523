#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace brst {

using Rational = mpq_class;

// Exact Gaussian rational re + im*I. Purely real values (the common case) skip
// the imaginary arithmetic entirely. Both parts are kept canonical by GMP.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(const Rational& re) : re_(re) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    Scalar(long num, long den);

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return is_real() && re_ == 1; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    Scalar operator-() const;
    Scalar conj() const { return Scalar(re_, -im_); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical text form, parseable by the polynomial grammar: "3/4",
    // "-I", "(1/2+3*I)".
    std::string str() const;
    // True when str() needs parentheses as a factor.
    bool needs_parens() const;

    // Order-independent hash of the canonical value.
    std::size_t hash() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar pow(const Scalar& base, unsigned exp);

// Falling factorial n (n-1) ... (n-k+1) as an integer scalar.
Scalar falling_factorial(unsigned n, unsigned k);
Rational factorial(unsigned n);

} // namespace brst
