"""Independent Moyal-Weyl expansions used as frozen values in test_oracles.cpp.

f * g = sum_k (nu/2)^k / k! (Lambda^{ij} d_{x_i} d_{y_j})^k f(x) g(y) |_{y = x}
"""
import sympy as sp

nu = sp.Symbol("nu")


def star(f, g, xs, lam, order):
    ys = [sp.Symbol(str(x) + "_y") for x in xs]
    h = f * g.subs(dict(zip(xs, ys)), simultaneous=True)
    total, term = 0, h
    for k in range(order + 1):
        total += (nu / 2) ** k / sp.factorial(k) * term
        term = sum(lam[i][j] * sp.diff(term, xs[i], ys[j]) for i in range(len(xs)) for j in range(len(xs)))
    return sp.expand(total.subs(dict(zip(ys, xs)), simultaneous=True))


def bracket(f, g, xs, lam):
    return sp.expand(sum(lam[i][j] * sp.diff(f, xs[i]) * sp.diff(g, xs[j]) for i in range(len(xs)) for j in range(len(xs))))


def show(expr, order):
    for k in range(order + 1):
        c = sp.expand(expr).coeff(nu, k)
        print(f"  nu^{k}: {str(c).replace('**', '^')}")


q, p = sp.symbols("q p")
canon = [[0, 1], [-1, 0]]
print("q^2*p + q  *  q*p^3 - p^2")
show(star(q**2 * p + q, q * p**3 - p**2, [q, p], canon, 4), 4)

z, zb = sp.symbols("z1 zb1")
cplx = [[0, 2 * sp.I], [-2 * sp.I, 0]]
print("z1^2*zb1  *  z1*zb1^3")
show(star(z**2 * zb, z * zb**3, [z, zb], cplx, 4), 4)

J, f = q**2 + q**3, p**3
print("J * f - f * J - nu {J, f} for J = q^2 + q^3, f = p^3")
show(star(J, f, [q, p], canon, 4) - star(f, J, [q, p], canon, 4) - nu * bracket(J, f, [q, p], canon), 4)
