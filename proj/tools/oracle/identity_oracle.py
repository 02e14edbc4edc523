#!/usr/bin/env python3
"""Reference values for both sides of the identity checks.

Independent of the C++ code: mpmath quadrature and mpmath special functions at
25 digits. Writes tests/data/identity_oracle.csv with one row per
(identity, parameters, side). Slow (a few minutes); rerun only when adding rows.
"""
import sys
import mpmath as mp

mp.mp.dps = 25
PI = mp.pi


def xi(s):
    return s * (s - 1) / 2 * PI ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s)


def Xi(w):
    return xi(mp.mpf(1) / 2 + 1j * w)


def sigma(a, n):
    return mp.fsum(mp.mpf(d) ** a for d in range(1, n + 1) if n % d == 0)


def lam(x, z):
    return mp.zeta(z + 1, x) - x ** (-z) / z - x ** (-z - 1) / 2


# -- Ramanujan-Guinand corollary -------------------------------------------
def rg_lhs(z, alpha):
    f = lambda t: Xi((t + 1j * z) / 2) * Xi((t - 1j * z) / 2) * mp.cos(t * mp.log(alpha) / 2) / (
        (t ** 2 + (z + 1) ** 2) * (t ** 2 + (z - 1) ** 2))
    return -32 / PI * mp.quad(f, [0, 10, 20, 40, 80])


def script_f(alpha, z, nmax=60):
    s = mp.fsum(sigma(-z, n) * mp.mpf(n) ** (z / 2) * mp.besselk(z / 2, 2 * n * PI * alpha)
                for n in range(1, nmax + 1))
    return mp.sqrt(alpha) * (alpha ** (z / 2 - 1) * PI ** (-z / 2) * mp.gamma(z / 2) * mp.zeta(z)
                             + alpha ** (-z / 2 - 1) * PI ** (z / 2) * mp.gamma(-z / 2) * mp.zeta(-z)
                             - 4 * s)


def rg_z0_lhs(alpha):
    f = lambda t: Xi(t / 2) ** 2 * mp.cos(t * mp.log(alpha) / 2) / (2 * mp.sqrt(alpha)) / (1 + t ** 2) ** 2
    return 32 / PI * mp.quad(f, [0, 10, 20, 40, 80])


def rg_z0_rhs(alpha, nmax=60):
    beta = 1 / alpha
    th = lambda x: mp.besselk(0, 2 * alpha * x) + beta * mp.besselk(0, 2 * beta * x)
    s = mp.fsum(sigma(0, n) * th(PI * n) for n in range(1, nmax + 1))
    Z1 = (1 / alpha + 1) / 4
    dZ1 = (-mp.log(alpha) / alpha + mp.log(alpha)) / 4
    return s - (dZ1 + (mp.euler - mp.log(4 * PI)) * Z1)


# -- Hurwitz corollary --------------------------------------------------------
def hur_lhs(z, alpha):
    f = lambda t: mp.gamma((z - 1 + 1j * t) / 4) * mp.gamma((z - 1 - 1j * t) / 4) * Xi((t + 1j * z) / 2) * Xi(
        (t - 1j * z) / 2) * mp.cos(t * mp.log(alpha) / 2) / (t ** 2 + (z + 1) ** 2)
    return 8 * (4 * PI) ** ((z - 3) / 2) / mp.gamma(z + 1) * mp.quad(f, [0, 10, 20, 40, 80])


def lam_sum(alpha, z, n_direct=200):
    # direct terms, then sum_{n>N} lambda(n alpha) through its large-x expansion
    s = mp.fsum(lam(n * alpha, z) for n in range(1, n_direct + 1))
    tail, poch = mp.mpf(0), z + 1
    for k in range(1, 40):
        tail += mp.bernoulli(2 * k) / mp.factorial(2 * k) * poch * alpha ** (-z - 2 * k) * mp.zeta(z + 2 * k, n_direct + 1)
        poch *= (z + 2 * k) * (z + 2 * k + 1)
    return s + tail


def hur_F(z, alpha):
    s = lam_sum(alpha, z)
    return alpha ** ((z + 1) / 2) * (s - mp.zeta(z + 1) / (2 * alpha ** (z + 1)) - mp.zeta(z) / (alpha * z))


def hur_z0_lhs(alpha):
    f = lambda t: abs(mp.gamma((-1 + 1j * t) / 4)) ** 2 * Xi(t / 2) ** 2 * mp.cos(t * mp.log(alpha) / 2) / (
        2 * mp.sqrt(alpha)) / (1 + t ** 2)
    return PI ** (-1.5) * mp.quad(f, [0, 10, 20, 40, 80])


def divisor_tail(N, p):
    # sum_{n>N} d(n) n^{-p} = zeta(p)^2 - partial sum
    return mp.zeta(p) ** 2 - mp.fsum(sigma(0, n) / mp.mpf(n) ** p for n in range(1, N + 1))


def hur_z0_rhs(alpha):
    beta = 1 / alpha
    th = lambda x: mp.besselk(0, 2 * alpha * x) + beta * mp.besselk(0, 2 * beta * x)

    def term(n):
        n = int(n)
        inner = mp.quad(lambda x: x * th(x) / (x ** 2 + PI ** 2 * n ** 2) ** 1.5, [0, 1, 5, 20, mp.inf])
        return n * sigma(0, n) * inner

    # direct sum to N, then the tail from the large-n expansion of the inner integral:
    # n * int x th(x) (x^2 + pi^2 n^2)^{-3/2} dx = sum_j c_j m_{2j+1} / (pi n)^{2j+2}
    N = 60
    s = mp.fsum(term(n) for n in range(1, N + 1))
    moments = [mp.quad(lambda x: x ** (2 * j + 1) * th(x), [0, 1, 5, 20, mp.inf]) for j in range(6)]
    tail = mp.mpf(0)
    for j in range(6):
        c = mp.binomial(-1.5, j)
        tail += c * moments[j] / PI ** (2 * j + 3) * divisor_tail(N, 2 * j + 2)
    s += tail
    Z1 = (1 / alpha + 1) / 4
    dZ1 = (-mp.log(alpha) / alpha + mp.log(alpha)) / 4
    return PI / 2 * s - ((mp.euler - mp.log(2 * PI)) * Z1 + dZ1) / 2


# -- Omega ---------------------------------------------------------------------
def omega_def(x, z, nmax=80):
    e = mp.exp(1j * PI / 4)
    return 2 * mp.fsum(sigma(-z, n) * mp.mpf(n) ** (z / 2) * (
        mp.exp(1j * PI * z / 4) * mp.besselk(z, 4 * PI * e * mp.sqrt(n * x))
        + mp.exp(-1j * PI * z / 4) * mp.besselk(z, 4 * PI / e * mp.sqrt(n * x))) for n in range(1, nmax + 1))


def equi_rhs(z, alpha):
    return mp.gamma(z + 1) / (2 * PI) ** (z + 1) * hur_F(z, alpha) / alpha ** ((z + 1) / 2)


def mellin_k_closed(s, nu, q):
    return 2 ** (s - 2) * q ** (-s) * mp.gamma((s - nu) / 2) * mp.gamma((s + nu) / 2)


def koshliakov_transform_k(z, x):
    # first Koshliakov transform of K_z evaluated at x
    def kern(t):
        v = 2 * mp.sqrt(x * t)
        m = 2 / PI * mp.besselk(2 * z, v) - mp.bessely(2 * z, v)
        return mp.cos(PI * z) * m - mp.sin(PI * z) * mp.besselj(2 * z, v)
    pts = [0, mp.mpf(10) ** -8, mp.mpf(10) ** -5, mp.mpf(10) ** -3, 0.03, 0.3, 1, 2, 4, 7, 10, 15, 20, 30, 40, 60, 80, 100]
    return mp.quad(lambda t: mp.besselk(z, t) * kern(t), pts)


def dixon_ferrar_psi(x):
    return -2 / PI * (mp.exp(4 * x) * mp.li(mp.exp(-4 * x)) + mp.exp(-4 * x) * mp.li(mp.exp(4 * x)))


GROUPS = {}


def group(fn):
    GROUPS[fn.__name__] = fn
    return fn


@group
def rg():
    for z, a in [(0.5, 1), (0.5, 2), (-0.5, 0.8), (0.75, 1.25)]:
        z, a = mp.mpf(z), mp.mpf(a)
        yield "rg-corollary", f"z={z};alpha={a}", "lhs", rg_lhs(z, a)
        yield "rg-corollary", f"z={z};alpha={a}", "rhs", script_f(a, z)
    zc = mp.mpc(0.3, 0.2)
    yield "rg-formula", "z=0.3+0.2i;alpha=2", "lhs", script_f(mp.mpf(2), zc)
    yield "rg-formula", "z=0.3+0.2i;alpha=2", "rhs", script_f(mp.mpf(0.5), zc)


@group
def rg0():
    for a in [1, 2]:
        a = mp.mpf(a)
        yield "rg-corollary-z0", f"alpha={a}", "lhs", rg_z0_lhs(a)
        yield "rg-corollary-z0", f"alpha={a}", "rhs", rg_z0_rhs(a)


@group
def hurwitz():
    for z, a in [(0.75, 1), (0.5, 2)]:
        z, a = mp.mpf(z), mp.mpf(a)
        yield "hurwitz-corollary", f"z={z};alpha={a}", "lhs", hur_lhs(z, a)
        yield "hurwitz-corollary", f"z={z};alpha={a}", "rhs", hur_F(z, a)
    yield "hurwitz-modular", "z=0.5;alpha=2", "lhs", hur_F(mp.mpf(0.5), mp.mpf(2))
    yield "hurwitz-modular", "z=0.5;alpha=2", "rhs", hur_F(mp.mpf(0.5), mp.mpf(0.5))


@group
def hurwitz0():
    yield "hurwitz-corollary-z0", "alpha=1", "lhs", hur_z0_lhs(mp.mpf(1))
    yield "hurwitz-corollary-z0", "alpha=1", "rhs", hur_z0_rhs(mp.mpf(1))


@group
def misc():
    yield "omega", "x=1;z=0.4", "value", omega_def(mp.mpf(1), mp.mpf(0.4))
    yield "omega", "x=2;z=-0.4", "value", omega_def(mp.mpf(2), mp.mpf(-0.4))
    yield "equi", "z=0.5;alpha=1", "rhs", equi_rhs(mp.mpf(0.5), mp.mpf(1))
    yield "equi", "z=0.5;alpha=2", "rhs", equi_rhs(mp.mpf(0.5), mp.mpf(2))
    yield "mellin-k", "s=1.2+0.7i;nu=0.3;q=1", "rhs", mellin_k_closed(mp.mpc(1.2, 0.7), mp.mpf(0.3), 1)
    yield "dixon-ferrar", "x=1", "psi", dixon_ferrar_psi(mp.mpf(1))


@group
def selftransform():
    for z, x in [(0, 1), (0.25, 2), (-0.4, 0.5)]:
        z, x = mp.mpf(z), mp.mpf(x)
        yield "koshliakov-self", f"z={z};x={x}", "lhs", koshliakov_transform_k(z, x)
        yield "koshliakov-self", f"z={z};x={x}", "rhs", mp.besselk(z, x)


@group
def extra():
    z, a = mp.mpf(-0.6), mp.mpf(1.5)
    yield "rg-formula", "z=-0.6;alpha=1.5", "lhs", script_f(a, z)
    yield "rg-formula", "z=-0.6;alpha=1.5", "rhs", script_f(1 / a, z)
    z, a = mp.mpf(0.75), mp.mpf(1.25)
    yield "hurwitz-modular", "z=0.75;alpha=1.25", "lhs", hur_F(z, a)
    yield "hurwitz-modular", "z=0.75;alpha=1.25", "rhs", hur_F(z, 1 / a)
    for x, z in [(1, 0.3), (2, -0.4)]:
        x, z = mp.mpf(x), mp.mpf(z)
        sub = omega_def(x, z) - mp.zeta(z) * x ** (z / 2 - 1) / (2 * PI)
        yield "selfomega", f"x={mp.nstr(x, 3)};z={mp.nstr(z, 3)}", "rhs", sub / (2 * PI)
    a, y, z = mp.mpf(2), mp.mpf(0.5), mp.mpf(0.5)
    lap = mp.quad(lambda x: mp.exp(-2 * PI * a * x) * x ** (z / 2) * mp.besselj(z, 4 * PI * mp.sqrt(x * y)),
                  [0, 0.05, 0.2, 0.5, 1, 2, 4, 8])
    yield "laplace-bessel", "alpha=2;y=0.5;z=0.5", "lhs", lap
    yield "laplace-bessel", "alpha=2;y=0.5;z=0.5", "rhs", mp.exp(-2 * PI * y / a) * y ** (z / 2) / (2 * PI * a ** (z + 1))
    z, a = mp.mpf(0.5), mp.mpf(1)
    yield "bessel-hurwitz", "z=0.5;alpha=1", "rhs", a ** (z / 2) * mp.gamma(z + 1) / 2 ** (z + 2) * lam_sum(a, z)
    inner = mp.quad(lambda x: x ** (1 + z / 2) * mp.besselk(z / 2, 2 * a * x) / (x ** 2 + PI ** 2) ** ((z + 3) / 2),
                    [0, 1, 5, 20, mp.inf])
    yield "bessel-hurwitz", "z=0.5;alpha=1;n=1", "inner", inner
    inner0 = mp.quad(lambda x: 2 * x * mp.besselk(0, 2 * x) / (x ** 2 + PI ** 2) ** 1.5, [0, 1, 5, 20, mp.inf])
    yield "hurwitz-corollary-z0", "alpha=1;n=1", "inner", inner0
    # genelkosh at positive Re z follows from two equi evaluations
    z, a = mp.mpf(0.5), mp.mpf(2)
    yield "genelkosh", "z=0.5;alpha=2", "lhs", a ** ((z + 1) / 2) * equi_rhs(z, a)
    yield "genelkosh", "z=0.5;alpha=2", "rhs", (1 / a) ** ((z + 1) / 2) * equi_rhs(z, 1 / a)
    yield "pair-reciprocity", "pair=k-bessel;alpha=2;z=0;x=1", "lhs", mp.besselk(0, 4)
    yield "pair-reciprocity", "pair=k-bessel;alpha=1;z=0.25;x=0.5", "lhs", mp.besselk(0.25, 1)


def main():
    # usage: identity_oracle.py GROUP OUT_CSV   (appends rows; merge groups with cat)
    name, out = sys.argv[1], sys.argv[2]
    with open(out, "a") as f:
        for ident, params, side, v in GROUPS[name]():
            v = mp.mpc(v)
            f.write(f"{ident},{params},{side},{mp.nstr(v.real, 22)},{mp.nstr(v.imag, 22)}\n")
            f.flush()
            print(ident, params, side, mp.nstr(v, 20), flush=True)


if __name__ == "__main__":
    main()
