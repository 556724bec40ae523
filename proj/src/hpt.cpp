#include "brst/hpt.hpp"

namespace brst {

namespace {

void require_same_length(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw ShapeError("vector lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

} // namespace

Vector ElementOps<Vector>::add(const Vector& a, const Vector& b)
{
    require_same_length(a, b);
    Vector r = a;
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] += b[k];
    return r;
}

Vector ElementOps<Vector>::sub(const Vector& a, const Vector& b)
{
    require_same_length(a, b);
    Vector r = a;
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] -= b[k];
    return r;
}

Vector ElementOps<Vector>::scale(const Vector& a, const Scalar& c)
{
    Vector r = a;
    for (auto& v : r)
        v *= c;
    return r;
}

void ElementOps<Vector>::tally(ResidualTally& t, const std::string& input, const Vector& r)
{
    std::size_t nonzero = 0;
    std::string text;
    for (std::size_t k = 0; k < r.size(); ++k)
        if (!r[k].is_zero()) {
            ++nonzero;
            if (!text.empty())
                text += ", ";
            text += "[" + std::to_string(k) + "] " + r[k].str();
        }
    t.add_summary(input, nonzero, nonzero ? 0 : -1, text);
}

LinearOp<Vector> matrix_op(std::string name, DenseMatrix m, int degree, bool raises_filtration)
{
    return LinearOp<Vector>(
        std::move(name),
        [m = std::move(m)](const Vector& x) {
            if (x.size() != m.cols())
                throw ShapeError("operator expects length " + std::to_string(m.cols()) + ", got " +
                                 std::to_string(x.size()));
            return m.apply(x);
        },
        degree, raises_filtration);
}

} // namespace brst
