#pragma once

// Contractions of cochain complexes and the two perturbation lemmas, generic
// over the element type. A contraction is
//   (X, d_X) <-p- (Y, d_Y) with i : X -> Y and h : Y -> Y[-1],
//   p i = id,  d_Y h + h d_Y = id - i p.
// Side conditions: sc1 h h = 0, sc2 h i = 0, sc3 p h = 0.

#include "brst/errors.hpp"
#include "brst/linalg.hpp"
#include "brst/report.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace brst {

template <class E>
struct ElementOps {
    static E add(const E& a, const E& b) { return a + b; }
    static E sub(const E& a, const E& b) { return a - b; }
    static E scale(const E& a, const Scalar& c) { return a * c; }
    static bool is_zero(const E& a) { return a.is_zero(); }
    static void tally(ResidualTally& t, const std::string& input, const E& r) { t.add(input, r); }
};

template <>
struct ElementOps<Vector> {
    static Vector add(const Vector& a, const Vector& b);
    static Vector sub(const Vector& a, const Vector& b);
    static Vector scale(const Vector& a, const Scalar& c);
    static bool is_zero(const Vector& a) { return brst::is_zero(a); }
    static void tally(ResidualTally& t, const std::string& input, const Vector& r);
};

template <class E>
class LinearOp {
public:
    using Fn = std::function<E(const E&)>;

    LinearOp() = default;
    LinearOp(std::string name, Fn fn, int degree = 0, bool raises_filtration = false)
        : name_(std::move(name)), fn_(std::move(fn)), degree_(degree), raises_(raises_filtration)
    {
    }

    static LinearOp identity() { return LinearOp("id", [](const E& x) { return x; }); }
    static LinearOp zero()
    {
        return LinearOp("0", [](const E& x) { return ElementOps<E>::sub(x, x); }, 0, true);
    }

    const std::string& name() const { return name_; }
    int degree() const { return degree_; }
    bool raises_filtration() const { return raises_; }
    bool defined() const { return static_cast<bool>(fn_); }

    E operator()(const E& x) const
    {
        if (!fn_)
            throw ShapeError("operator '" + name_ + "' is undefined");
        return fn_(x);
    }

    LinearOp renamed(std::string name) const
    {
        LinearOp r = *this;
        r.name_ = std::move(name);
        return r;
    }
    LinearOp with_degree(int degree) const
    {
        LinearOp r = *this;
        r.degree_ = degree;
        return r;
    }
    LinearOp flagged(bool raises_filtration) const
    {
        LinearOp r = *this;
        r.raises_ = raises_filtration;
        return r;
    }

    // a * b is the composite a after b.
    friend LinearOp operator*(const LinearOp& a, const LinearOp& b)
    {
        return LinearOp(a.name_ + " " + b.name_, [a, b](const E& x) { return a(b(x)); }, a.degree_ + b.degree_,
                        a.raises_ || b.raises_);
    }
    friend LinearOp operator+(const LinearOp& a, const LinearOp& b)
    {
        return LinearOp("(" + a.name_ + " + " + b.name_ + ")",
                        [a, b](const E& x) { return ElementOps<E>::add(a(x), b(x)); }, a.degree_,
                        a.raises_ && b.raises_);
    }
    friend LinearOp operator-(const LinearOp& a, const LinearOp& b)
    {
        return LinearOp("(" + a.name_ + " - " + b.name_ + ")",
                        [a, b](const E& x) { return ElementOps<E>::sub(a(x), b(x)); }, a.degree_,
                        a.raises_ && b.raises_);
    }
    friend LinearOp operator*(const Scalar& c, const LinearOp& a)
    {
        return LinearOp(c.str() + " " + a.name_, [a, c](const E& x) { return ElementOps<E>::scale(a(x), c); },
                        a.degree_, a.raises_);
    }

private:
    std::string name_;
    Fn fn_;
    int degree_ = 0;
    bool raises_ = false;
};

inline constexpr std::size_t kNeumannCap = 256;

// (id + T)^{-1} = sum_k (-T)^k, summed until a term vanishes.
template <class E>
LinearOp<E> neumann_inverse(const LinearOp<E>& t, std::size_t cap = kNeumannCap)
{
    if (!t.raises_filtration())
        throw FiltrationError("'" + t.name() + "' is not marked as raising a filtration");
    return LinearOp<E>("(id + " + t.name() + ")^-1", [t, cap](const E& x) {
        E sum = x;
        E term = x;
        for (std::size_t k = 1;; ++k) {
            term = t(term);
            if (ElementOps<E>::is_zero(term))
                return sum;
            if (k >= cap)
                throw FiltrationError("Neumann series of '" + t.name() + "' did not terminate after " +
                                      std::to_string(cap) + " terms");
            sum = (k % 2) ? ElementOps<E>::sub(sum, term) : ElementOps<E>::add(sum, term);
        }
    });
}

template <class E>
struct Contraction {
    LinearOp<E> p;  // Y -> X
    LinearOp<E> i;  // X -> Y
    LinearOp<E> h;  // Y -> Y[-1]
    LinearOp<E> dX;
    LinearOp<E> dY;
    bool sc1 = false;
    bool sc2 = false;
    bool sc3 = false;

    bool all_side_conditions() const { return sc1 && sc2 && sc3; }
};

// Probe elements of X and of Y used to verify hypotheses and axioms.
template <class E>
struct ProbeSet {
    std::vector<E> x;
    std::vector<E> y;
};

namespace detail {

template <class E, class F>
void require_on(const std::string& identity, const std::vector<E>& probes, F residual)
{
    for (std::size_t k = 0; k < probes.size(); ++k)
        if (!ElementOps<E>::is_zero(residual(probes[k])))
            throw LemmaHypothesisError("hypothesis '" + identity + "' fails on probe " + std::to_string(k));
}

template <class E>
void require_differentials(const LinearOp<E>& DX, const LinearOp<E>& DY, const ProbeSet<E>& probes)
{
    require_on("D_Y D_Y = 0", probes.y, [&](const E& y) { return DY(DY(y)); });
    require_on("D_X D_X = 0", probes.x, [&](const E& x) { return DX(DX(x)); });
}

} // namespace detail

// Perturbs d_Y by t_Y keeping p. Requires sc3 and t_X p = p t_Y.
template <class E>
Contraction<E> perturb_v1(const Contraction<E>& c, const LinearOp<E>& tY, const LinearOp<E>& tX,
                          const ProbeSet<E>& probes, std::size_t cap = kNeumannCap)
{
    if (!c.sc3)
        throw LemmaHypothesisError("hypothesis 'p h = 0' (sc3) is not established for the input contraction");
    const LinearOp<E> DY = (c.dY + tY).renamed("D_Y");
    const LinearOp<E> DX = (c.dX + tX).renamed("D_X");
    detail::require_on("p h = 0", probes.y, [&](const E& y) { return c.p(c.h(y)); });
    detail::require_on("t_X p = p t_Y", probes.y,
                       [&](const E& y) { return ElementOps<E>::sub(tX(c.p(y)), c.p(tY(y))); });
    detail::require_differentials(DX, DY, probes);

    auto inv = neumann_inverse((tY * c.h + c.h * tY).flagged(tY.raises_filtration() || c.h.raises_filtration()), cap);
    LinearOp<E> H = (c.h * inv).renamed("H_Y");
    LinearOp<E> i = c.i;
    LinearOp<E> I("I", [H, i, tX, tY](const E& x) {
        E ix = i(x);
        return ElementOps<E>::sub(ix, H(ElementOps<E>::sub(tY(ix), i(tX(x)))));
    });
    Contraction<E> out{c.p, I, H.with_degree(c.h.degree()), DX, DY};
    out.sc3 = true;
    out.sc1 = out.sc2 = c.all_side_conditions();
    return out;
}

// Perturbs d_Y by t_Y keeping i. Requires sc2 and t_Y i = i t_X.
template <class E>
Contraction<E> perturb_v2(const Contraction<E>& c, const LinearOp<E>& tY, const LinearOp<E>& tX,
                          const ProbeSet<E>& probes, std::size_t cap = kNeumannCap)
{
    if (!c.sc2)
        throw LemmaHypothesisError("hypothesis 'h i = 0' (sc2) is not established for the input contraction");
    const LinearOp<E> DY = (c.dY + tY).renamed("D_Y");
    const LinearOp<E> DX = (c.dX + tX).renamed("D_X");
    detail::require_on("h i = 0", probes.x, [&](const E& x) { return c.h(c.i(x)); });
    detail::require_on("t_Y i = i t_X", probes.x,
                       [&](const E& x) { return ElementOps<E>::sub(tY(c.i(x)), c.i(tX(x))); });
    detail::require_differentials(DX, DY, probes);

    auto inv = neumann_inverse((tY * c.h + c.h * tY).flagged(tY.raises_filtration() || c.h.raises_filtration()), cap);
    Contraction<E> out{(c.p * inv).renamed("P"), c.i, (c.h * inv).renamed("H'_Y").with_degree(c.h.degree()), DX, DY};
    out.sc2 = true;
    out.sc1 = out.sc3 = c.all_side_conditions();
    return out;
}

// Replaces h by h' = (dh + hd) h (dh + hd), then h'' = h' d h', which
// satisfies all three side conditions.
template <class E>
Contraction<E> enforce_side_conditions(const Contraction<E>& c)
{
    LinearOp<E> hd = c.dY * c.h + c.h * c.dY;
    LinearOp<E> h1 = hd * c.h * hd;
    Contraction<E> out = c;
    out.h = (h1 * c.dY * h1).renamed("h''").with_degree(c.h.degree());
    out.sc1 = out.sc2 = out.sc3 = true;
    return out;
}

// Checks the contraction axioms, plus each side condition whose flag is set.
template <class E>
CheckRecord check_contraction(const Contraction<E>& c, const ProbeSet<E>& probes, const std::string& id,
                              const std::string& anchor)
{
    using Ops = ElementOps<E>;
    Stopwatch clock;
    ResidualTally tally;
    auto run = [&](const std::string& name, const std::vector<E>& pr, auto residual) {
        for (std::size_t k = 0; k < pr.size(); ++k) {
            try {
                Ops::tally(tally, name + " on probe " + std::to_string(k), residual(pr[k]));
            } catch (const Error& e) {
                tally.fail(name + " on probe " + std::to_string(k), e.what());
            }
        }
    };
    run("p i = id", probes.x, [&](const E& x) { return Ops::sub(c.p(c.i(x)), x); });
    run("i d_X = d_Y i", probes.x, [&](const E& x) { return Ops::sub(c.i(c.dX(x)), c.dY(c.i(x))); });
    run("p d_Y = d_X p", probes.y, [&](const E& y) { return Ops::sub(c.p(c.dY(y)), c.dX(c.p(y))); });
    run("d_Y h + h d_Y = id - i p", probes.y, [&](const E& y) {
        E lhs = Ops::add(c.dY(c.h(y)), c.h(c.dY(y)));
        return Ops::add(Ops::sub(lhs, y), c.i(c.p(y)));
    });
    run("d_Y d_Y = 0", probes.y, [&](const E& y) { return c.dY(c.dY(y)); });
    run("d_X d_X = 0", probes.x, [&](const E& x) { return c.dX(c.dX(x)); });
    if (c.sc1)
        run("h h = 0", probes.y, [&](const E& y) { return c.h(c.h(y)); });
    if (c.sc2)
        run("h i = 0", probes.x, [&](const E& x) { return c.h(c.i(x)); });
    if (c.sc3)
        run("p h = 0", probes.y, [&](const E& y) { return c.p(c.h(y)); });
    CheckRecord rec = make_record(id, anchor);
    tally.finish(rec);
    rec.wall_ms = clock.elapsed_ms();
    return rec;
}

// Wraps a dense matrix as an operator on coordinate vectors.
LinearOp<Vector> matrix_op(std::string name, DenseMatrix m, int degree = 0, bool raises_filtration = false);

} // namespace brst
