#!/usr/bin/env python3
"""Check <z^a, z^b> = delta_ab 2^|a| a! against Gaussian moments.

Each coordinate z = x + iy is paired with weight exp(-|z|^2/2), normalized so
<1, 1> = 1; then x and y are independent standard normals. The pairing
<z^a, z^b> = E[z^a conj(z)^b] is expanded binomially and integrated with
E[x^n] = (n-1)!! for even n, 0 for odd n. Multi-indices factor over
coordinates. A second, radial check uses int rho^(2a) e^(-rho^2/2) rho drho.

Exact rational arithmetic throughout. Exit status 0 iff every case agrees.
"""

import argparse
import itertools
import sys
from fractions import Fraction
from math import comb, factorial


def normal_moment(n):
    if n % 2:
        return 0
    out = 1
    for k in range(n - 1, 0, -2):
        out *= k
    return out


def pairing_1d(a, b):
    """E[(x+iy)^a (x-iy)^b] as (re, im) Fractions."""
    re = im = Fraction(0)
    for j in range(a + 1):
        for k in range(b + 1):
            # (iy)^(a-j) * (-iy)^(b-k) = i^(a-j) (-i)^(b-k) y^(a-j+b-k)
            px = j + k
            py = (a - j) + (b - k)
            m = normal_moment(px) * normal_moment(py)
            if not m:
                continue
            c = comb(a, j) * comb(b, k) * m
            # power of i: i^(a-j) * (-1)^(b-k) * i^(b-k)
            e = (a - j + b - k) % 4
            sign = -1 if (b - k) % 2 else 1
            unit = [(1, 0), (0, 1), (-1, 0), (0, -1)][e]
            re += sign * c * unit[0]
            im += sign * c * unit[1]
    return re, im


def radial(a):
    """int_0^inf rho^(2a) e^(-rho^2/2) rho drho, by parts: a * radial(a-1)."""
    return 1 if a == 0 else 2 * a * radial(a - 1)


def mul(p, q):
    return p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0]


def closed_form(alpha, beta):
    if alpha != beta:
        return 0
    out = 1
    for a in alpha:
        out *= 2**a * factorial(a)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--vars", type=int, default=3)
    args = ap.parse_args()

    bad = 0
    checked = 0
    for a in range(2 * args.max_degree + 1):
        if radial(a) != 2**a * factorial(a):
            print(f"radial mismatch at a={a}")
            bad += 1
    idx = [
        t
        for t in itertools.product(range(args.max_degree + 1), repeat=args.vars)
        if sum(t) <= args.max_degree
    ]
    for alpha in idx:
        for beta in idx:
            v = (Fraction(1), Fraction(0))
            for a, b in zip(alpha, beta):
                v = mul(v, pairing_1d(a, b))
            checked += 1
            if v != (closed_form(alpha, beta), 0):
                print(f"mismatch: alpha={alpha} beta={beta} oracle={v}")
                bad += 1
    print(f"{checked} pairs, {bad} mismatches")
    for a in range(args.max_degree + 1):
        print(f"  <z^{a}, z^{a}> = {pairing_1d(a, a)[0]}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
