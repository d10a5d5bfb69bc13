"""Integer-coefficient univariate polynomials with exact arithmetic.

Provides the discriminant through a fraction-free resultant, reduction
to and lifting from prime fields, and the cofactor polynomial of a
lifted factorization: the integer polynomial M with

    f = (product of the lifted factors to their exponents) - p*M.

Zero has no degree here; ``degree`` is None for the zero polynomial and
callers must treat that case explicitly.
"""

from .fppoly import FpPoly, PrimeModulus
from .textfmt import DEFAULT_VAR, format_poly, parse_poly


class ZPoly:
    """Dense univariate polynomial over the rational integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_text(cls, text, var=DEFAULT_VAR):
        return cls(parse_poly(text, var))

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ZPoly(out)

    def __sub__(self, other):
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] -= c
        return ZPoly(out)

    def __neg__(self):
        return ZPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return ZPoly(out)

    def scale(self, c):
        return ZPoly([c * x for x in self.coeffs])

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = ZPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        """Quotient and remainder; the divisor must be monic."""
        if not other.is_monic():
            raise ValueError("division requires a monic divisor")
        b = other.coeffs
        db = len(b) - 1
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                q[i - db] = c
                for j, bj in enumerate(b):
                    rem[i - db + j] -= c * bj
        return ZPoly(q), ZPoly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self):
        return ZPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        y = 0
        for c in reversed(self.coeffs):
            y = y * x + c
        return y

    def __eq__(self, other):
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("ZPoly", self.coeffs))

    def __repr__(self):
        return "ZPoly(%s)" % format_poly(self.coeffs)

    def __str__(self):
        return format_poly(self.coeffs)


def z_x():
    return ZPoly((0, 1))


def bareiss_determinant(matrix):
    """Exact determinant of a square integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def resultant(f, g):
    """Resultant of f and g as the Bareiss determinant of their Sylvester matrix."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    n, m = f.degree, g.degree
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    size = n + m
    fs = list(reversed(f.coeffs))
    gs = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([0] * i + fs + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gs + [0] * (size - m - 1 - i))
    return bareiss_determinant(rows)


def discriminant(f):
    """Discriminant of a monic f: (-1)**(n(n-1)/2) times res(f, f')."""
    if not f.is_monic():
        raise ValueError("discriminant requires a monic polynomial")
    n = f.degree
    if n < 1:
        raise ValueError("discriminant requires degree >= 1")
    if n == 1:
        return 1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative())


def reduce_mod(f, modulus):
    """Reduce an integer polynomial to canonical form over GF(p)."""
    if not isinstance(modulus, PrimeModulus):
        modulus = PrimeModulus(modulus)
    return FpPoly(modulus, f.coeffs)


def lift(g):
    """Lift an FpPoly to the integer polynomial with coefficients in [0, p)."""
    return ZPoly(g.coeffs)


def cofactor_m(f, modulus, lifts):
    """Cofactor polynomial M with f = prod(lift**exp) - p*M.

    `lifts` is a sequence of (monic ZPoly, exponent) pairs whose product
    must be congruent to f mod p; any integer lifts are accepted, not
    just coefficients in [0, p).  Raises ValueError when the congruence
    fails (the division by p is then not exact).
    """
    if not isinstance(modulus, PrimeModulus):
        modulus = PrimeModulus(modulus)
    if not f.is_monic():
        raise ValueError("cofactor requires monic f")
    p = modulus.p
    prod = ZPoly((1,))
    for g, e in lifts:
        if not g.is_monic():
            raise ValueError("lifted factors must be monic")
        prod = prod * g**e
    diff = prod - f
    out = []
    for c in diff.coeffs:
        if c % p:
            raise ValueError(
                "lift product is not congruent to f mod %d" % p
            )
        out.append(c // p)
    return ZPoly(out)
