#pragma once

#include "brst/poly.hpp"

#include <string>
#include <vector>

namespace brst {

// Structure constants f_ab^c of a Lie algebra in a fixed basis, indices 0-based.
class LieAlgebraData {
public:
    LieAlgebraData() = default;
    explicit LieAlgebraData(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Scalar& f(std::size_t a, std::size_t b, std::size_t c) const { return f_[(a * dim_ + b) * dim_ + c]; }
    // Sets f_ab^c and f_ba^c = -f_ab^c.
    void set(std::size_t a, std::size_t b, std::size_t c, const Scalar& v);

    bool abelian() const;
    // Sum over b of f_ab^b.
    Scalar trace(std::size_t a) const;
    bool unimodular() const;

    // Throws ConfigError on antisymmetry or Jacobi violations.
    void validate() const;

    // Nonzero (a, b, c, f_ab^c) entries, all orderings of a and b.
    struct Entry {
        std::size_t a, b, c;
        Scalar value;
    };
    std::vector<Entry> entries() const;

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> f_;
};

// Components J_a of an equivariant moment map together with the Lie data and
// the reason the components are taken to generate the vanishing ideal.
struct MomentMapData {
    std::vector<Poly> J;
    LieAlgebraData lie;
    std::string justification;

    std::size_t dim() const { return J.size(); }
    const ContextPtr& context() const { return J.at(0).context(); }
    // Common total degree of the components; throws ConfigError when the
    // components are not homogeneous of one degree.
    unsigned degree() const;
};

} // namespace brst
