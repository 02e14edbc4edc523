#!/usr/bin/env python3
"""Arbitrary-precision reference values for the golden test suite.

Runs with mpmath at 40 significant digits and writes tests/data/golden_values.csv.
Nothing in here shares code with the C++ library; it is the independent side of
every golden comparison.

Usage: python3 tools/oracle/generate_golden.py [output.csv]
"""
import sys
import mpmath as mp

mp.mp.dps = 40


def c(re, im=0):
    return mp.mpc(re, im)


def xi(s):
    s = mp.mpc(s)
    if abs(s - 1) < mp.mpf("1e-30") or abs(s) < mp.mpf("1e-30"):
        return mp.mpf(1) / 2
    return s * (s - 1) / 2 * mp.pi ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s)


def big_xi(w):
    return xi(mp.mpf(1) / 2 + 1j * w)


def li(x):
    return mp.li(x)


# (name, function id, arg1, arg2, value)
ROWS = []


def add(name, fid, a1, a2, val):
    ROWS.append((name, fid, mp.mpc(a1), mp.mpc(a2), mp.mpc(val)))


# gamma family
for s in [c(1, 1), c(0.5), c(-2.5, 0.3), c(7.3, -4.1), c(0.25, 12)]:
    add(f"gamma({mp.nstr(s, 6)})", "gamma", s, 0, mp.gamma(s))
for s in [c(3.7), c(0.3, 2), c(-1.4, 0.5)]:
    add(f"digamma({mp.nstr(s, 6)})", "digamma", s, 0, mp.digamma(s))

# Riemann zeta
for s in [c(0.5), c(0.3, 25), c(-1.5, 2), c(3, 1), c(0.75, -7.5)]:
    add(f"zeta({mp.nstr(s, 6)})", "zeta", s, 0, mp.zeta(s))

# Hurwitz zeta (w, a)
for w, a in [(c(1.5), c(2.5)), (c(0.4, 3), c(0.7)), (c(-0.3), c(3.2)),
             (c(1.75), c(1)), (c(1.5), c(100))]:
    add(f"hurwitz({mp.nstr(w, 6)},{mp.nstr(a, 6)})", "hurwitz", w, a, mp.zeta(w, a))

# xi / Xi
add("big_xi(0)", "big_xi", 0, 0, big_xi(0))
add("big_xi(2+0.5i)", "big_xi", c(2, 0.5), 0, big_xi(c(2, 0.5)))
add("big_xi(10)", "big_xi", 10, 0, big_xi(10))
add("xi(0.3+4i)", "xi", c(0.3, 4), 0, xi(c(0.3, 4)))

# Bessel J (order, x)
for nu, x in [(c(0.3), 7.5), (c(0.3, 0.2), 25), (c(-0.8), 3), (c(2.5), 40), (c(0.5, -0.25), 19.5)]:
    add(f"bessel_j({mp.nstr(nu, 6)},{x})", "bessel_j", nu, x, mp.besselj(nu, x))

# Bessel Y
for nu, x in [(c(0), 1), (c(0.25), 2), (c(-0.8), 4), (c(1), 15), (c(1e-4), 2),
              (c(1 + 5e-4), 5), (c(0.6, 0.3), 22), (c(0), 0.01), (c(-1.2), 9)]:
    add(f"bessel_y({mp.nstr(nu, 6)},{x})", "bessel_y", nu, x, mp.bessely(nu, x))

# Bessel K (order, complex argument)
e4 = mp.exp(1j * mp.pi / 4)
for nu, x in [(c(0), c(1)), (c(0.3), 2 * e4), (c(0.25), c(2)), (c(0.2, 0.1), c(0.05)),
              (c(0.15), 4 * mp.pi * e4 * mp.sqrt(3)), (c(-0.4), c(35)), (c(0.5), c(1))]:
    add(f"bessel_k({mp.nstr(nu, 6)},{mp.nstr(x, 6)})", "bessel_k", nu, x, mp.besselk(nu, x))

# logarithmic integral
for x in [2, mp.e, 0.5, mp.exp(-3), 1e6]:
    add(f"li({mp.nstr(x, 8)})", "li", x, 0, li(x))


def fmt(v):
    return mp.nstr(v, 30, min_fixed=-1, max_fixed=-1) if v != 0 else "0"


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "tests/data/golden_values.csv"
    with open(out, "w") as f:
        f.write("name,function,arg1_re,arg1_im,arg2_re,arg2_im,value_re,value_im\n")
        for name, fid, a1, a2, v in ROWS:
            cols = [name.replace(",", ";"), fid,
                    fmt(a1.real), fmt(a1.imag), fmt(a2.real), fmt(a2.imag),
                    fmt(v.real), fmt(v.imag)]
            f.write(",".join(cols) + "\n")
    print(f"wrote {len(ROWS)} rows to {out}")


if __name__ == "__main__":
    main()
