#include "brst/poly.hpp"

#include "brst/errors.hpp"

#include <algorithm>
#include <sstream>

namespace brst {

VarContext::VarContext(std::vector<std::string> names, std::vector<std::vector<long>> weights)
    : names_(std::move(names)), weights_(std::move(weights))
{
    if (names_.size() > kMaxVars)
        throw ContextError("at most " + std::to_string(kMaxVars) + " variables are supported");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw ContextError("duplicate variable name '" + names_[i] + "'");
    for (const auto& row : weights_)
        if (row.size() != names_.size())
            throw ContextError("weight row length does not match variable count");
}

std::size_t VarContext::index(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw ContextError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

bool VarContext::has(const std::string& name) const
{
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

ContextPtr make_context(std::vector<std::string> names, std::vector<std::vector<long>> weights)
{
    return std::make_shared<const VarContext>(std::move(names), std::move(weights));
}

Monomial::Monomial(std::span<const unsigned> exps)
{
    if (exps.size() > kMaxVars)
        throw ContextError("exponent vector too long");
    exps_.fill(0);
    for (std::size_t i = 0; i < exps.size(); ++i)
        set(i, exps[i]);
}

void Monomial::set(std::size_t i, unsigned e)
{
    if (e > 255)
        throw DegreeOverflow("exponent exceeds 255");
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
    exps_[i] = static_cast<std::uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned e = unsigned(exps_[i]) + o.exps_[i];
        if (e > 255)
            throw DegreeOverflow("exponent exceeds 255");
        r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const
{
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (o.exps_[i] > exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - o.exps_[i]);
    r.degree_ = static_cast<std::uint16_t>(degree_ - o.degree_);
    return r;
}

long Monomial::weight(std::span<const long> row) const
{
    long w = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
        w += row[i] * exps_[i];
    return w;
}

std::vector<long> Monomial::weights(const VarContext& ctx) const
{
    std::vector<long> w;
    w.reserve(ctx.weight_rows());
    for (const auto& row : ctx.weights())
        w.push_back(weight(row));
    return w;
}

bool operator<(const Monomial& a, const Monomial& b)
{
    if (a.degree_ != b.degree_)
        return a.degree_ < b.degree_;
    return a.exps_ < b.exps_;
}

std::string Monomial::str(const VarContext& ctx) const
{
    std::string out;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ctx.name(i);
        if (exps_[i] > 1)
            out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

std::size_t Monomial::hash() const
{
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

const ContextPtr& common_context(const ContextPtr& a, const ContextPtr& b)
{
    if (!a)
        return b;
    if (!b || a == b)
        return a;
    if (!a->same_as(*b))
        throw ContextError("polynomials live over different variable contexts");
    return a;
}

Poly Poly::constant(ContextPtr ctx, const Scalar& c)
{
    Poly p(std::move(ctx));
    p.add_term(Monomial(), c);
    return p;
}

Poly Poly::variable(ContextPtr ctx, std::size_t index)
{
    if (!ctx || index >= ctx->size())
        throw ContextError("variable index out of range");
    Monomial m;
    m.set(index, 1);
    return term(std::move(ctx), m, Scalar(1));
}

Poly Poly::term(ContextPtr ctx, const Monomial& m, const Scalar& c)
{
    Poly p(std::move(ctx));
    p.add_term(m, c);
    return p;
}

int Poly::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, int(m.degree()));
    return d;
}

bool Poly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    unsigned d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Scalar Poly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    ctx_ = common_context(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    ctx_ = common_context(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [m, v] : r.terms_)
        v = -v;
    return r;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r(common_context(a.ctx_, b.ctx_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

bool operator==(const Poly& a, const Poly& b)
{
    common_context(a.ctx_, b.ctx_);
    return a.terms_ == b.terms_;
}

Poly Poly::homogeneous_part(unsigned d) const
{
    Poly r(ctx_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d)
            r.terms_.emplace(m, c);
    return r;
}

std::map<unsigned, Poly> Poly::slices() const
{
    std::map<unsigned, Poly> out;
    for (const auto& [m, c] : terms_) {
        auto [it, _] = out.try_emplace(m.degree(), ctx_);
        it->second.terms_.emplace(m, c);
    }
    return out;
}

std::string Poly::str() const
{
    if (terms_.empty())
        return "0";
    static const VarContext empty_ctx({});
    const VarContext& ctx = ctx_ ? *ctx_ : empty_ctx;
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar coef = c;
        bool negative = coef.is_real() ? sgn(coef.re()) < 0 : (sgn(coef.re()) == 0 && sgn(coef.im()) < 0);
        if (negative)
            coef = -coef;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool unit = coef.is_one();
        if (m.degree() == 0) {
            os << coef.str();
            continue;
        }
        if (!unit)
            os << coef.str() << '*';
        os << m.str(ctx);
    }
    return os.str();
}

Poly poly_arith(const Poly& f, const Poly& g, ArithKind kind)
{
    switch (kind) {
    case ArithKind::add:
        return f + g;
    case ArithKind::mul:
        return f * g;
    case ArithKind::scale:
        if (g.degree() > 0)
            throw ContextError("scale expects a constant polynomial");
        common_context(f.context(), g.context());
        return f * g.constant_term();
    }
    return Poly();
}

Poly poly_diff(const Poly& f, std::size_t var)
{
    if (f.context() && var >= f.context()->size())
        throw ContextError("variable index out of range");
    Poly r(f.context());
    for (const auto& [m, c] : f.terms()) {
        unsigned e = m[var];
        if (e == 0)
            continue;
        Monomial d = m;
        d.set(var, e - 1);
        r.add_term(d, c * Scalar(long(e)));
    }
    return r;
}

Poly pow(const Poly& f, unsigned exp)
{
    Poly r = Poly::constant(f.context(), Scalar(1));
    for (unsigned i = 0; i < exp; ++i)
        r = r * f;
    return r;
}

} // namespace brst
