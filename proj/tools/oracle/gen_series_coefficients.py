#!/usr/bin/env python3
"""Generate the Riemann-Siegel correction polynomials C_0..C_4 and the
Euler-Maclaurin coefficients B_2k / (2k)!.

Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) is expanded around p = 1/2
as a power series in q = p - 1/2 with 60-digit arithmetic, the derivatives
entering each C_k are taken term-wise, and the result is re-expressed in
z = 2p - 1 = 2q. Output is a C++ source fragment on stdout.
"""
import mpmath as mp

mp.mp.dps = 60
DEG = 80          # series length in q
KEEP = 1e-24      # drop coefficients below this magnitude

pi = mp.pi


def cos_series(scale, n):
    # cos(scale * x) as coefficients in x
    out = [mp.mpf(0)] * n
    for k in range(0, n, 2):
        out[k] = (-1) ** (k // 2) * scale ** k / mp.factorial(k)
    return out


def sin_series(scale, n):
    out = [mp.mpf(0)] * n
    for k in range(1, n, 2):
        out[k] = (-1) ** (k // 2) * scale ** k / mp.factorial(k)
    return out


def psi_series(n):
    # numerator: cos(2 pi q^2 - 5 pi / 8) in q; denominator: -cos(2 pi q)
    c2 = cos_series(2 * pi, n)  # in u = q^2
    s2 = sin_series(2 * pi, n)
    num = [mp.mpf(0)] * n
    a, b = mp.cos(5 * pi / 8), mp.sin(5 * pi / 8)
    for k in range(n):
        if 2 * k < n:
            num[2 * k] = a * c2[k] + b * s2[k]
    den = [-x for x in cos_series(2 * pi, n)]
    out = [mp.mpf(0)] * n
    for m in range(n):
        acc = num[m]
        for j in range(1, m + 1):
            acc -= den[j] * out[m - j]
        out[m] = acc / den[0]
    return out


def derivative(series, j):
    return [series[m] * mp.factorial(m) / mp.factorial(m - j) for m in range(j, len(series))]


def combine(terms):
    n = max(len(s) for _, s in terms)
    out = [mp.mpf(0)] * n
    for w, s in terms:
        for m, c in enumerate(s):
            out[m] += w * c
    return out


def to_z(series):
    # q = z / 2
    return [c / mp.mpf(2) ** m for m, c in enumerate(series)]


psi = psi_series(DEG)
d = {j: derivative(psi, j) for j in range(13)}
C = [
    combine([(1, d[0])]),
    combine([(-1 / (96 * pi ** 2), d[3])]),
    combine([(1 / (64 * pi ** 2), d[2]), (1 / (18432 * pi ** 4), d[6])]),
    combine([(-1 / (64 * pi ** 2), d[1]), (-1 / (3840 * pi ** 4), d[5]),
             (-1 / (5308416 * pi ** 6), d[9])]),
    combine([(1 / (128 * pi ** 2), d[0]), (19 / (24576 * pi ** 4), d[4]),
             (11 / (5898240 * pi ** 6), d[8]), (1 / (2038431744 * pi ** 8), d[12])]),
]

print("// Generated by tools/oracle/gen_series_coefficients.py; do not edit.")
print("#pragma once")
print("// Power-series coefficients of C_k in z = 2p - 1, where p is the fractional")
print("// part of sqrt(t / 2 pi).")
for k, series in enumerate(C):
    zs = to_z(series)
    # trailing coefficients decay super-exponentially; cut at KEEP
    last = max(i for i, c in enumerate(zs) if abs(c) > KEEP)
    print(f"inline constexpr double kC{k}[] = {{")
    for c in zs[: last + 1]:
        print(f"    {mp.nstr(c, 20, min_fixed=1, max_fixed=0)},")
    print("};")

print("// B_2k / (2k)! for k = 1..24.")
print("inline constexpr double kBernoulliOverFactorial[] = {")
for k in range(1, 25):
    print(f"    {mp.nstr(mp.bernoulli(2 * k) / mp.factorial(2 * k), 20, min_fixed=1, max_fixed=0)},")
print("};")
