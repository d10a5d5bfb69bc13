"""Shared generators and small oracles for the test suite."""

import random

from primesplit.fppoly import FpPoly
from primesplit.zpoly import ZPoly


def random_fp_poly(rng, modulus, max_degree, nonzero=True):
    p = int(modulus)
    deg = rng.randrange(0, max_degree + 1)
    coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
    poly = FpPoly(modulus, coeffs)
    if nonzero and poly.is_zero():
        return random_fp_poly(rng, modulus, max_degree, nonzero)
    return poly


def random_monic_zpoly(rng, degree, bound):
    return ZPoly([rng.randrange(-bound, bound + 1) for _ in range(degree)] + [1])


def has_integer_root(f):
    const = f.coeffs[0]
    if const == 0:
        return True
    for d in range(1, abs(const) + 1):
        if const % d == 0 and (f(d) == 0 or f(-d) == 0):
            return True
    return False


def _divisor_pairs(n):
    out = []
    m = abs(n)
    for d in range(1, m + 1):
        if m % d == 0:
            for b in (d, -d):
                out.append((b, n // b))
    return out


def is_irreducible_quartic(f):
    """Exact reducibility test for monic integer quartics."""
    if f.degree != 4 or not f.is_monic():
        raise ValueError("expected a monic quartic")
    if has_integer_root(f):
        return False
    a3, a2, a1, a0 = f.coeffs[3], f.coeffs[2], f.coeffs[1], f.coeffs[0]
    # split into two monic quadratics (t^2+a*t+b)(t^2+c*t+d)
    for b, d in _divisor_pairs(a0):
        # a + c = a3, b + d + a*c = a2, a*d + b*c = a1
        for a in range(-abs(a2) - abs(b) - abs(d) - abs(a3) - 2,
                       abs(a2) + abs(b) + abs(d) + abs(a3) + 3):
            c = a3 - a
            if b + d + a * c == a2 and a * d + b * c == a1:
                return False
    return True


def random_irreducible_cubic(rng, bound=10):
    while True:
        f = random_monic_zpoly(rng, 3, bound)
        if not has_integer_root(f):
            return f


def random_irreducible_quartic(rng, bound=4):
    while True:
        f = random_monic_zpoly(rng, 4, bound)
        if f.coeffs[0] != 0 and is_irreducible_quartic(f):
            return f


def fraction_determinant(matrix):
    """Independent exact determinant: Gaussian elimination over Fraction."""
    from fractions import Fraction

    m = [[Fraction(c) for c in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    assert det.denominator == 1
    return int(det)
