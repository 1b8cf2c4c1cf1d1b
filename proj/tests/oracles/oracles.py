"""Independent reference values for the unit tests.

Everything here is computed with sympy (exact) or mpmath/scipy (numeric
quadrature) from the defining formulas, without using the C++ library.
Run: python3 tests/oracles/oracles.py
"""
import cmath
import math

import mpmath as mp
import sympy as sp
from scipy import integrate

x, u = sp.symbols("x u")
mp.mp.dps = 30


def lag(k, a, var):
    return sp.expand(sp.assoc_laguerre(k, a, var))


def phi(k, m, r):
    return float(sp.assoc_laguerre(k, m, r * r / 2)) * math.exp(-r * r / 4)


def show(name, value):
    print(f"{name} = {value}")


# Laguerre coefficients, values at zero, derivatives at zero, zeros
show("L_2^2 coeffs", sp.Poly(lag(2, 2, x), x).all_coeffs()[::-1])
show("L_5^3 coeffs", sp.Poly(lag(5, 3, x), x).all_coeffs()[::-1])
show("L_3^{1/2}(0.7)", sp.N(lag(3, sp.Rational(1, 2), x).subs(x, sp.Rational(7, 10)), 20))
show("F_4^2", lag(4, 2, x).subs(x, 0))
show("F_10^7", lag(10, 7, x).subs(x, 0))
show("L'_4^2(0)", sp.diff(lag(4, 2, x), x).subs(x, 0))
show("L'_7^{3/2}(0)", sp.diff(lag(7, sp.Rational(3, 2), x), x).subs(x, 0))
show("zeros L_5^1", [sp.N(r, 20) for r in sp.Poly(lag(5, 1, x), x).nroots(n=30)])
z2 = sorted(float(r) for r in sp.Poly(lag(2, 0, x), x).nroots(n=30))
z3 = sorted(float(r) for r in sp.Poly(lag(3, 0, x), x).nroots(n=30))
show("common_zero(2,3,0)", min(abs(a - b) for a in z2 for b in z3))

# Hecke-Bochner scalars for a(r) = (1 + r^2/3) e^{-r^2/4} against z^p / conj(z)^q
def hb_scalar(p, q, k, a):
    if k < p:
        return 0.0
    j, m = k - p, p + q
    pair = mp.quad(lambda r: a(r) * phi(j, m, float(r)) * r ** (2 * m + 1), [0, 10, 40])
    norm = mp.quad(lambda r: phi(j, m, float(r)) ** 2 * r ** (2 * m + 1), [0, 10, 40])
    return 2 * mp.pi * pair / norm


a_test = lambda r: (1 + r * r / 3) * mp.e ** (-r * r / 4)
for k in range(0, 4):
    show(f"hb scalar z a k={k}", hb_scalar(1, 0, k, a_test))
for k in range(0, 3):
    show(f"hb scalar zbar^2 a k={k}", hb_scalar(0, 2, k, a_test))


# Direct twisted convolution Q_k(z) = int f(z-w) phi_k^0(w) e^{(i/2) Im(z conj w)} dA(w)
def twisted_conv(f, k, z, R=14.0):
    def integrand(th, r, part):
        w = cmath.rect(r, th)
        v = f(z - w) * phi(k, 0, r) * cmath.exp(0.5j * (z * w.conjugate()).imag) * r
        return v.real if part == 0 else v.imag

    re = integrate.dblquad(lambda th, r: integrand(th, r, 0), 0, R, 0, 2 * math.pi, epsabs=1e-13, epsrel=1e-12)[0]
    im = integrate.dblquad(lambda th, r: integrand(th, r, 1), 0, R, 0, 2 * math.pi, epsabs=1e-13, epsrel=1e-12)[0]
    return complex(re, im)


f_zphi01 = lambda w: w * phi(0, 1, abs(w))
show("Q_1[z phi_0^1](2)", twisted_conv(f_zphi01, 1, 2.0))
f_mixed = lambda w: w.conjugate() ** 2 * (1 + abs(w) ** 2 / 3) * math.exp(-abs(w) ** 2 / 4)
show("Q_1[zbar^2 a](0.7-0.4i)", twisted_conv(f_mixed, 1, complex(0.7, -0.4)))


# Twisted spherical mean (1/2pi) int f(z - r e^{it}) e^{(i/2) Im(z conj w)} dt
def tsm(f, z, r):
    def g(t, part):
        w = cmath.rect(r, t)
        v = f(z - w) * cmath.exp(0.5j * (z * w.conjugate()).imag)
        return v.real if part == 0 else v.imag

    return complex(integrate.quad(lambda t: g(t, 0), 0, 2 * math.pi, epsabs=1e-14, limit=200)[0],
                   integrate.quad(lambda t: g(t, 1), 0, 2 * math.pi, epsabs=1e-14, limit=200)[0]) / (2 * math.pi)


show("tsm phi_1^0 z=1 r=1", tsm(lambda w: phi(1, 0, abs(w)), 1.0, 1.0))
show("tsm mixed z=0.3-0.2i r=1.1", tsm(lambda w: w * phi(0, 1, abs(w)) + f_mixed(w), complex(0.3, -0.2), 1.1))

# Norms and coefficient bounds
r = sp.symbols("r", positive=True)
show("|zbar^2 phi_1^2|^2", sp.simplify(2 * sp.pi * sp.integrate(r ** 4 * (sp.assoc_laguerre(1, 2, r**2 / 2) * sp.exp(-r**2 / 4)) ** 2 * r, (r, 0, sp.oo))))
show("bound(1,1,1)", sp.sqrt(sp.factorial(1) / (2 ** 2 * sp.factorial(2))))
show("bound(3,2,5)", sp.N(5 * sp.sqrt(sp.factorial(3) / (2 ** 3 * sp.factorial(5))), 20))

# Raabe terms b_m = (2m+2)! / (4^m ((m+1)!)^2)
b = lambda m: sp.factorial(2 * m + 2) / (4 ** m * sp.factorial(m + 1) ** 2)
show("b_10", b(10))
show("10(b_10/b_11 - 1)", sp.N(10 * (b(10) / b(11) - 1), 20))
bm = lambda m: mp.factorial(2 * m + 2) / (mp.mpf(4) ** m * mp.factorial(m + 1) ** 2)
show("1e4(b/b' - 1)", mp.nstr(10000 * (bm(10000) / bm(10001) - 1), 20))
show("sum b_0..b_100", mp.nstr(mp.fsum(bm(m) for m in range(101)), 20))

# Exact determinants
F = lambda n, a: sp.binomial(n + a, n) if n >= 0 else 0
banded5 = sp.Matrix([[F(0, 5), F(5, 5), 0], [0, -F(4, 6), F(5, 7)], [0, F(3, 7), -F(4, 8)]])
show("banded k=5 det", banded5.det())
show("derived 2x2 k=1..20 dets", [sp.Matrix([[k, k + 1], [-sp.Rational(k * (k - 1), 2), -sp.Rational(k * (k + 1), 2)]]).det() for k in range(1, 21)])


# Coefficient systems on lines x zeta^l, zeta = e^{i pi / N}
def system(k, q_max, N, max_degree=None):
    zeta = sp.exp(sp.I * sp.pi / N)
    cols = [("rad", 0)] + [("hol", p) for p in range(1, k + 1)] + [("anti", q) for q in range(1, q_max + 1)]
    rows = []
    top = q_max + 2 * k
    for l in range(N):
        polys = []
        for kind, i in cols:
            if kind == "rad":
                polys.append(sp.Poly(lag(k, 0, x**2 / 2), x))
            elif kind == "hol":
                polys.append(sp.Poly(sp.expand(zeta ** (i * l) * x**i * lag(k - i, i, x**2 / 2)), x))
            else:
                polys.append(sp.Poly(sp.expand(zeta ** (-i * l) * x**i * lag(k, i, x**2 / 2)), x))
        for d in range(top + 1):
            if max_degree is not None and d > max_degree:
                continue
            row = [sp.nsimplify(sp.expand(pl.coeff_monomial(x**d))) for pl in polys]
            if any(e != 0 for e in row):
                rows.append(row)
    return sp.Matrix(rows), cols


M, _ = system(3, 12, 1)
show("null dim N=1 k=3 q=12", M.shape[1] - M.rank())
M, _ = system(2, 8, 2)
show("null dim N=2 k=2 q=8", M.shape[1] - M.rank())
M, cols = system(1, 15, 1, max_degree=15 + 1)
ns = M.nullspace()
show("null dim N=1 k=1 q=15 withheld", len(ns))
v = ns[0] / ns[0][cols.index(("anti", 1))]
show("family", {f"{kind}{i}": v[n] for n, (kind, i) in enumerate(cols) if v[n] != 0})
