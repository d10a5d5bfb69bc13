"""Symbolic index form of an order.

For a generic element z + x1*w2 + ... the coordinate matrix of its
powers 1, w, ..., w^(n-1) has a determinant that is homogeneous of
degree n(n-1)/2 in the non-identity coordinates and free of z; its
value at a concrete element's coordinates is (up to sign) that
element's index.  The form is computed with z symbolic and the
z-independence asserted, which catches multiplication-table bugs.
"""

import itertools

_VAR_ALPHABET = ("x", "y", "w", "v")


class MultiPoly:
    """Sparse multivariate integer polynomial with graded-lex term order."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def constant(cls, variables, c):
        z = (0,) * len(variables)
        return cls(variables, {z: c} if c else {})

    @classmethod
    def variable(cls, variables, name):
        i = tuple(variables).index(name)
        exps = tuple(1 if k == i else 0 for k in range(len(variables)))
        return cls(variables, {exps: 1})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.vars, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return MultiPoly(self.vars, out)

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(
                self.vars, {e: c * other for e, c in self.terms.items()}
            )
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def evaluate(self, point):
        """Exact integer value at an integer point."""
        if len(point) != len(self.vars):
            raise ValueError("need %d coordinates" % len(self.vars))
        total = 0
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def total_degrees(self):
        return {sum(e) for e in self.terms}

    def max_exponent(self, name):
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def drop_variable(self, name):
        """Remove a variable that no term uses."""
        i = self.vars.index(name)
        if self.max_exponent(name):
            raise ValueError("%s still occurs" % name)
        newvars = self.vars[:i] + self.vars[i + 1 :]
        return MultiPoly(
            newvars,
            {e[:i] + e[i + 1 :]: c for e, c in self.terms.items()},
        )

    def ordered_terms(self):
        """Terms in graded-lexicographic order (highest first)."""
        return sorted(
            self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True
        )

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return "MultiPoly(%s)" % self

    def __str__(self):
        return format_multipoly(self)


def format_multipoly(f):
    """Compact rendering like ``2x^3 - x^2y - xy^2 - 2y^3``."""
    if f.is_zero():
        return "0"
    parts = []
    for exps, c in f.ordered_terms():
        body = ""
        for name, e in zip(f.vars, exps):
            if e == 1:
                body += name
            elif e > 1:
                body += "%s^%d" % (name, e)
        mag = abs(c)
        if not body:
            chunk = str(mag)
        elif mag == 1:
            chunk = body
        else:
            chunk = "%d%s" % (mag, body)
        if not parts:
            parts.append("-" + chunk if c < 0 else chunk)
        else:
            parts.append(("- " if c < 0 else "+ ") + chunk)
    return " ".join(parts)


def parse_multipoly_vars(n):
    if n - 1 > len(_VAR_ALPHABET):
        raise ValueError("rank %d exceeds the supported variable alphabet" % n)
    return _VAR_ALPHABET[: n - 1]


def _det_multipoly(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    det = None
    for i in range(n):
        if m[i][0].is_zero():
            continue
        minor = [[m[r][c] for c in range(1, n)] for r in range(n) if r != i]
        term = m[i][0] * _det_multipoly(minor)
        if i % 2:
            term = -term
        det = term if det is None else det + term
    if det is None:
        return MultiPoly(m[0][0].vars, {})
    return det


def index_form(order):
    """Index of the generic element as a polynomial in its non-identity coordinates.

    Homogeneous of degree n(n-1)/2; the identity coordinate is carried
    symbolically and asserted absent from the result.  Evaluating at a
    concrete element's coordinates gives that element's index up to sign.
    """
    n = order.n
    if n > 5:
        raise ValueError("index form is limited to rank <= 5")
    names = ("z",) + parse_multipoly_vars(n)
    coords = [MultiPoly.variable(names, v) for v in names]

    # generic element and its powers, as vectors of polynomials
    zero = MultiPoly(names, {})
    one_vec = [MultiPoly.constant(names, 1)] + [zero] * (n - 1)
    generic = coords[:]  # coordinate i is the i-th symbol (z first)

    def vec_mul(u, v):
        out = [zero] * n
        for i in range(n):
            if u[i].is_zero():
                continue
            for j in range(n):
                if v[j].is_zero():
                    continue
                c = u[i] * v[j]
                for k, t in enumerate(order.table[i][j]):
                    if t:
                        out[k] = out[k] + c * t
        return out

    rows = [one_vec]
    acc = one_vec
    for _ in range(n - 1):
        acc = vec_mul(acc, generic)
        rows.append(acc)
    # first row is (1, 0, ..., 0): expand to the minor on the other coordinates
    minor = [[rows[i][j] for j in range(1, n)] for i in range(1, n)]
    det = _det_multipoly(minor)
    if det.max_exponent("z"):
        raise AssertionError("index form depends on the identity coordinate")
    return det.drop_variable("z")


def common_value_divisor(f, modulus, bound=10**6):
    """True when every value of f over GF(p)^v vanishes (exhaustive evaluation)."""
    p = int(modulus)
    v = len(f.vars)
    if p**v > bound:
        raise ValueError(
            "p^v = %d exceeds the evaluation bound %d" % (p**v, bound)
        )
    for point in itertools.product(range(p), repeat=v):
        if f.evaluate(point) % p:
            return False
    return True
