#include "brst/lie.hpp"

#include "brst/errors.hpp"

namespace brst {

LieAlgebraData::LieAlgebraData(std::size_t dim) : dim_(dim), f_(dim * dim * dim) {}

void LieAlgebraData::set(std::size_t a, std::size_t b, std::size_t c, const Scalar& v)
{
    if (a >= dim_ || b >= dim_ || c >= dim_)
        throw ConfigError("structure constant index out of range");
    if (a == b && !v.is_zero())
        throw ConfigError("f_aa^c must vanish");
    f_[(a * dim_ + b) * dim_ + c] = v;
    f_[(b * dim_ + a) * dim_ + c] = -v;
}

bool LieAlgebraData::abelian() const
{
    for (const auto& v : f_)
        if (!v.is_zero())
            return false;
    return true;
}

Scalar LieAlgebraData::trace(std::size_t a) const
{
    Scalar t;
    for (std::size_t b = 0; b < dim_; ++b)
        t += f(a, b, b);
    return t;
}

bool LieAlgebraData::unimodular() const
{
    for (std::size_t a = 0; a < dim_; ++a)
        if (!trace(a).is_zero())
            return false;
    return true;
}

void LieAlgebraData::validate() const
{
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t c = 0; c < dim_; ++c)
                if (f(a, b, c) != -f(b, a, c))
                    throw ConfigError("structure constants are not antisymmetric");
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t c = 0; c < dim_; ++c)
                for (std::size_t e = 0; e < dim_; ++e) {
                    Scalar s;
                    for (std::size_t d = 0; d < dim_; ++d)
                        s += f(a, b, d) * f(d, c, e) + f(b, c, d) * f(d, a, e) + f(c, a, d) * f(d, b, e);
                    if (!s.is_zero())
                        throw ConfigError("structure constants violate the Jacobi identity");
                }
}

std::vector<LieAlgebraData::Entry> LieAlgebraData::entries() const
{
    std::vector<Entry> out;
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t c = 0; c < dim_; ++c)
                if (!f(a, b, c).is_zero())
                    out.push_back({a, b, c, f(a, b, c)});
    return out;
}

unsigned MomentMapData::degree() const
{
    if (J.empty())
        throw ConfigError("moment map has no components");
    int d = -1;
    for (const auto& j : J) {
        if (j.is_zero() || !j.is_homogeneous())
            throw ConfigError("moment map components must be nonzero homogeneous polynomials");
        if (d >= 0 && j.degree() != d)
            throw ConfigError("moment map components have different degrees");
        d = j.degree();
    }
    return static_cast<unsigned>(d);
}

} // namespace brst
