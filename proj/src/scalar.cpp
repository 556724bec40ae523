#include "brst/scalar.hpp"

#include "brst/errors.hpp"

#include <functional>
#include <ostream>

namespace brst {

Scalar::Scalar(long num, long den)
{
    if (den == 0)
        throw Error("zero denominator");
    re_ = Rational(num, den);
    re_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    if (!o.is_real())
        im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    if (!o.is_real())
        im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw Error("division by zero scalar");
    if (o.is_real()) {
        re_ /= o.re_;
        if (!is_real())
            im_ /= o.re_;
        return *this;
    }
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

Scalar Scalar::operator-() const
{
    return Scalar(-re_, -im_);
}

bool Scalar::needs_parens() const
{
    return !is_real() && sgn(re_) != 0;
}

namespace {

std::string imag_part(const Rational& im)
{
    if (im == 1)
        return "I";
    if (im == -1)
        return "-I";
    return im.get_str() + "*I";
}

} // namespace

std::string Scalar::str() const
{
    if (is_real())
        return re_.get_str();
    if (sgn(re_) == 0)
        return imag_part(im_);
    std::string im = imag_part(im_);
    if (im[0] != '-')
        im = "+" + im;
    return "(" + re_.get_str() + im + ")";
}

std::size_t Scalar::hash() const
{
    std::hash<std::string> h;
    return h(str());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.str();
}

Scalar pow(const Scalar& base, unsigned exp)
{
    Scalar result(1);
    Scalar b = base;
    while (exp) {
        if (exp & 1u)
            result *= b;
        exp >>= 1u;
        if (exp)
            b *= b;
    }
    return result;
}

Scalar falling_factorial(unsigned n, unsigned k)
{
    if (k > n)
        return Scalar(0);
    mpz_class r = 1;
    for (unsigned j = 0; j < k; ++j)
        r *= (n - j);
    return Scalar(Rational(r));
}

Rational factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

} // namespace brst
