#include "brst/series.hpp"

#include "brst/errors.hpp"

#include <algorithm>

namespace brst {

Series::Series(ContextPtr ctx, int order)
    : ctx_(std::move(ctx)), order_(order), reliable_(order)
{
    if (order < 0)
        throw TruncationError("negative truncation order");
    c_.assign(static_cast<std::size_t>(order + 1), Poly(ctx_));
}

Series::Series(const Poly& p, int order) : Series(p.context(), order)
{
    c_[0] = p;
}

Series Series::nu_power(ContextPtr ctx, int order, int k, const Poly& p)
{
    Series s(std::move(ctx), order);
    if (k <= order)
        s.c_[static_cast<std::size_t>(k)] = p;
    return s;
}

bool Series::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_zero(); });
}

int Series::valuation() const
{
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero())
            return static_cast<int>(k);
    return -1;
}

int Series::max_poly_degree() const
{
    int d = -1;
    for (const auto& p : c_)
        d = std::max(d, p.degree());
    return d;
}

std::size_t Series::term_count() const
{
    std::size_t n = 0;
    for (const auto& p : c_)
        n += p.size();
    return n;
}

namespace {

void require_same_order(const Series& a, const Series& b)
{
    if (a.order() != b.order())
        throw TruncationError("series orders differ: " + std::to_string(a.order()) + " vs " +
                              std::to_string(b.order()));
}

} // namespace

Series& Series::operator+=(const Series& o)
{
    require_same_order(*this, o);
    ctx_ = common_context(ctx_, o.ctx_);
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!o.c_[k].is_zero())
            c_[k] += o.c_[k];
    reliable_ = std::min(reliable_, o.reliable_);
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    require_same_order(*this, o);
    ctx_ = common_context(ctx_, o.ctx_);
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!o.c_[k].is_zero())
            c_[k] -= o.c_[k];
    reliable_ = std::min(reliable_, o.reliable_);
    return *this;
}

Series& Series::operator*=(const Scalar& s)
{
    for (auto& p : c_)
        p *= s;
    return *this;
}

Series Series::operator-() const
{
    Series r = *this;
    for (auto& p : r.c_)
        p = -p;
    return r;
}

Series operator*(const Series& a, const Series& b)
{
    require_same_order(a, b);
    Series r(common_context(a.ctx_, b.ctx_), a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (int j = 0; i + j <= a.order_; ++j)
            if (!b.c_[j].is_zero())
                r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.reliable_ = std::min(a.reliable_, b.reliable_);
    return r;
}

Series operator*(const Series& a, const Poly& p)
{
    Series r = a;
    r.ctx_ = common_context(a.ctx_, p.context());
    for (auto& c : r.c_)
        if (!c.is_zero())
            c = c * p;
    return r;
}

bool operator==(const Series& a, const Series& b)
{
    return a.order_ == b.order_ && a.c_ == b.c_;
}

Series Series::shifted(int k) const
{
    Series r(ctx_, order_);
    r.reliable_ = reliable_;
    for (int j = 0; j <= order_ && j + k <= order_; ++j)
        if (j + k >= 0)
            r.c_[j + k] = c_[j];
    return r;
}

Series Series::with_order(int n) const
{
    Series r(ctx_, n);
    for (int k = 0; k <= std::min(n, order_); ++k)
        r.c_[k] = c_[k];
    r.reliable_ = std::min(n, reliable_);
    return r;
}

Series Series::padded_exact(int n) const
{
    Series r = with_order(n);
    if (n > order_ && reliable_ == order_)
        r.reliable_ = n;
    return r;
}

Series Series::truncated(int k) const
{
    Series r = *this;
    for (int j = k + 1; j <= order_; ++j)
        r.c_[j] = Poly(ctx_);
    return r;
}

std::string Series::str() const
{
    std::string out;
    for (int k = 0; k <= order_; ++k) {
        if (c_[k].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        std::string body = c_[k].str();
        if (k == 0) {
            out += body;
            continue;
        }
        std::string nu = k == 1 ? "nu" : "nu^" + std::to_string(k);
        out += nu + "*(" + body + ")";
    }
    return out.empty() ? "0" : out;
}

Series series_arith(const Series& a, const Series& b, SeriesKind kind)
{
    require_same_order(a, b);
    return kind == SeriesKind::add ? a + b : a * b;
}

Series series_div_nu(const Series& a)
{
    if (!a[0].is_zero())
        throw DivisibilityError("series is not divisible by nu: constant term " + a[0].str());
    Series r = a.shifted(-1);
    r.set_reliable_order(std::max(0, a.reliable_order() - 1));
    return r;
}

} // namespace brst
