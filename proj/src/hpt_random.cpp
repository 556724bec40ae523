#include "brst/hpt_random.hpp"

#include <optional>

namespace brst {

namespace {

struct BasisVector {
    int degree;
    int level;
    bool in_x;
};

DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b)
{
    DenseMatrix r = a;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            r(i, j) -= b(i, j);
    return r;
}

DenseMatrix block(const DenseMatrix& m, std::size_t rows, std::size_t cols)
{
    DenseMatrix r(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            r(i, j) = m(i, j);
    return r;
}

// id + random entries at (r, c) where `allowed(r, c)` holds; the caller
// keeps the allowed pattern nilpotent.
template <class Allowed>
DenseMatrix random_unipotent(ProbeGenerator& gen, std::size_t n, Allowed allowed)
{
    DenseMatrix m = DenseMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (r != c && allowed(r, c) && gen.integer(0, 1) == 0)
                m(r, c) = gen.small_scalar(false);
    return m;
}

Vector random_vector(ProbeGenerator& gen, std::size_t n)
{
    Vector v(n);
    for (auto& x : v)
        if (gen.integer(0, 2) != 0)
            x = Scalar(gen.integer(-4, 4));
    return v;
}

std::optional<RandomContractionCase> attempt(ProbeGenerator& gen, std::size_t probe_count)
{
    std::vector<BasisVector> basis;
    auto add_pair = [&](bool in_x) {
        int deg = static_cast<int>(gen.integer(-1, 0));
        int level = static_cast<int>(gen.integer(0, 2));
        basis.push_back({deg, level, in_x});
        basis.push_back({deg + 1, level, in_x});
    };
    // X: cohomology classes and cancelling pairs; C: acyclic pairs.
    const auto harmonic = gen.integer(2, 4);
    for (long k = 0; k < harmonic; ++k)
        basis.push_back({static_cast<int>(gen.integer(0, 1)), static_cast<int>(gen.integer(0, 2)), true});
    const auto x_pairs = gen.integer(0, 2);
    std::vector<std::size_t> x_pair_start;
    for (long k = 0; k < x_pairs; ++k) {
        x_pair_start.push_back(basis.size());
        add_pair(true);
    }
    const std::size_t dx = basis.size();
    const auto c_pairs = gen.integer(1, 3);
    std::vector<std::size_t> c_pair_start;
    for (long k = 0; k < c_pairs; ++k) {
        c_pair_start.push_back(basis.size());
        add_pair(false);
    }
    const std::size_t dy = basis.size();

    auto preserving = [&](std::size_t r, std::size_t c) {
        return r > c && basis[r].degree == basis[c].degree && basis[r].level >= basis[c].level;
    };
    auto raising = [&](std::size_t r, std::size_t c) {
        return basis[r].degree == basis[c].degree && basis[r].level > basis[c].level;
    };

    DenseMatrix dx_split(dx, dx);
    for (auto s : x_pair_start)
        dx_split(s + 1, s) = 1;
    DenseMatrix gx = random_unipotent(gen, dx, preserving);
    DenseMatrix d_x = gx * dx_split * inverse(gx);

    DenseMatrix d0(dy, dy), h0(dy, dy), iota(dy, dx), pi(dx, dy);
    for (std::size_t r = 0; r < dx; ++r)
        for (std::size_t c = 0; c < dx; ++c)
            d0(r, c) = d_x(r, c);
    for (auto s : c_pair_start) {
        d0(s + 1, s) = 1;
        h0(s, s + 1) = 1;
    }
    for (std::size_t k = 0; k < dx; ++k) {
        iota(k, k) = 1;
        pi(k, k) = 1;
    }
    DenseMatrix g = random_unipotent(gen, dy, preserving);
    DenseMatrix g_inv = inverse(g);

    RandomContractionCase out;
    out.dim_x = dx;
    out.dim_y = dy;
    auto& c = out.contraction;
    c.p = matrix_op("p", pi * g_inv);
    c.i = matrix_op("i", g * iota);
    c.h = matrix_op("h", g * h0 * g_inv, -1);
    c.dX = matrix_op("d_X", d_x, 1);
    c.dY = matrix_op("d_Y", g * d0 * g_inv, 1);
    c.sc1 = c.sc2 = c.sc3 = true;

    // A level-raising twist e, block triangular so that X (or C) stays a
    // subcomplex; D = e d e^{-1}.
    auto perturbation = [&](bool keep_i, LinearOp<Vector>& tY, LinearOp<Vector>& tX) -> bool {
        DenseMatrix e = random_unipotent(gen, dy, [&](std::size_t r, std::size_t col) {
            if (!raising(r, col))
                return false;
            return keep_i ? !(!basis[r].in_x && basis[col].in_x) : !(basis[r].in_x && !basis[col].in_x);
        });
        DenseMatrix e_inv = inverse(e);
        DenseMatrix ex = block(e, dx, dx);
        DenseMatrix t_x = sub(ex * d_x * inverse(ex), d_x);
        DenseMatrix t_y = sub(g * e * d0 * e_inv * g_inv, g * d0 * g_inv);
        tY = matrix_op("t_Y", t_y, 1, true);
        tX = matrix_op("t_X", t_x, 1, true);
        return !t_y.is_zero();
    };
    if (!perturbation(false, out.tY_v1, out.tX_v1) || !perturbation(true, out.tY_v2, out.tX_v2))
        return std::nullopt;

    for (std::size_t k = 0; k < probe_count; ++k) {
        out.probes.x.push_back(random_vector(gen, dx));
        out.probes.y.push_back(random_vector(gen, dy));
    }
    return out;
}

} // namespace

RandomContractionCase random_filtered_contraction(ProbeGenerator& gen, std::size_t probe_count)
{
    // Small draws often admit no level-raising twist; redraw until both
    // perturbations are nonzero.
    for (int tries = 0; tries < 1000; ++tries)
        if (auto c = attempt(gen, probe_count))
            return *c;
    throw Error("could not draw a nontrivially perturbed contraction");
}

} // namespace brst
