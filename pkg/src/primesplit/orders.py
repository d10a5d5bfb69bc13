"""Rank-n commutative orders presented by integer multiplication tables.

An Order is a ring on a free Z-module of rank n: a basis whose first
element is the multiplicative identity, and structure constants giving
each product of basis elements as an integer coordinate vector.
Commutativity, the identity law, and associativity on all basis triples
are checked eagerly at construction, so a bad table fails fast.

Orders and elements are immutable; every operation is a pure function.
The p-enlargement search walks candidate denominators deterministically
(lexicographically smallest coordinate vector first), so results are
reproducible.
"""

import itertools
from fractions import Fraction

from .fppoly import PrimeModulus, is_prime
from .zpoly import ZPoly, bareiss_determinant, discriminant


class Order:
    """Ring given by an integral basis and structure constants.

    ``table[i][j]`` is the coordinate vector of (basis i) * (basis j).
    ``basis_in_parent`` (when set) records the basis as rational rows in
    the coordinates of the order this one was enlarged from.
    """

    __slots__ = ("n", "labels", "table", "parent", "basis_in_parent")

    def __init__(self, table, labels=None, parent=None, basis_in_parent=None):
        table = tuple(
            tuple(tuple(int(c) for c in vec) for vec in row) for row in table
        )
        n = len(table)
        if n < 1:
            raise ValueError("order must have positive rank")
        for row in table:
            if len(row) != n or any(len(vec) != n for vec in row):
                raise ValueError("multiplication table must be n x n of n-vectors")
        ident = tuple(tuple(1 if k == j else 0 for k in range(n)) for j in range(n))
        if table[0] != ident:
            raise ValueError("first basis element must act as the identity")
        for i in range(n):
            for j in range(i):
                if table[i][j] != table[j][i]:
                    raise ValueError("multiplication table is not symmetric")
        self.n = n
        self.table = table
        self.labels = tuple(labels) if labels else _default_labels(n)
        if len(self.labels) != n:
            raise ValueError("need %d basis labels" % n)
        self.parent = parent
        self.basis_in_parent = basis_in_parent
        self._check_associativity()

    def _check_associativity(self):
        n = self.n
        for i in range(n):
            for j in range(i, n):
                ij = self.table[i][j]
                for k in range(j, n):
                    jk = self.table[j][k]
                    left = self.vec_mul(ij, _unit(n, k))
                    right = self.vec_mul(_unit(n, i), jk)
                    if left != right:
                        raise ValueError(
                            "multiplication table is not associative at (%d,%d,%d)"
                            % (i, j, k)
                        )

    def vec_mul(self, u, v):
        """Product of two coordinate vectors through the table."""
        n = self.n
        out = [0] * n
        table = self.table
        for i, ui in enumerate(u):
            if not ui:
                continue
            ti = table[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                c = ui * vj
                tij = ti[j]
                for k in range(n):
                    out[k] += c * tij[k]
        return tuple(out)

    def element(self, coords):
        return OrderElement(self, coords)

    def identity(self):
        return OrderElement(self, _unit(self.n, 0))

    def basis_element(self, i):
        return OrderElement(self, _unit(self.n, i))

    def zero(self):
        return OrderElement(self, (0,) * self.n)

    def mul_matrix(self, coords):
        """Rows are the coordinate vectors of coords * (each basis element)."""
        return [list(self.vec_mul(coords, _unit(self.n, j))) for j in range(self.n)]

    def __eq__(self, other):
        return isinstance(other, Order) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return "Order(rank=%d, basis=%s)" % (self.n, "/".join(self.labels))


def _unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def _default_labels(n):
    out = ["1"]
    for i in range(1, n):
        out.append("a" if i == 1 else "a^%d" % i)
    return tuple(out)


class OrderElement:
    """Element of an order as an integer coordinate vector."""

    __slots__ = ("order", "coords")

    def __init__(self, order, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != order.n:
            raise ValueError(
                "expected %d coordinates, got %d" % (order.n, len(coords))
            )
        self.order = order
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, OrderElement):
            raise TypeError("expected OrderElement")
        if other.order is not self.order and other.order != self.order:
            raise ValueError("elements belong to different orders")

    def __add__(self, other):
        self._check(other)
        return OrderElement(
            self.order, [a + b for a, b in zip(self.coords, other.coords)]
        )

    def __sub__(self, other):
        self._check(other)
        return OrderElement(
            self.order, [a - b for a, b in zip(self.coords, other.coords)]
        )

    def __neg__(self):
        return OrderElement(self.order, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, int):
            return OrderElement(self.order, [other * a for a in self.coords])
        self._check(other)
        return OrderElement(self.order, self.order.vec_mul(self.coords, other.coords))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.order.identity()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, OrderElement)
            and self.order == other.order
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.order, self.coords))

    def __repr__(self):
        return "OrderElement(%s)" % format_element(self)


def format_element(elem):
    """Human-readable combination of basis labels, e.g. ``2 + a - 3*b``."""
    parts = []
    for c, label in zip(elem.coords, elem.order.labels):
        if c == 0:
            continue
        mag = abs(c)
        if label == "1":
            body = str(mag)
        else:
            body = label if mag == 1 else "%d*%s" % (mag, label)
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def element_mul(a, b):
    return a * b


# -- characteristic polynomials ------------------------------------------

def _poly_matrix_det(m):
    """Determinant of a matrix of ascending-coefficient lists (exact, division-free)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    det = []
    for i in range(n):
        if m[i][0]:
            minor = [
                [m[r][c] for c in range(1, n)] for r in range(n) if r != i
            ]
            term = _pl_mul(m[i][0], _poly_matrix_det(minor))
            if i % 2:
                term = [-c for c in term]
            det = _pl_add(det, term)
    return det


def _pl_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _pl_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def charpoly_matrix(a):
    """Characteristic polynomial of a square integer matrix (ascending list).

    Computed as the determinant of t*I - A by exact cofactor expansion.
    """
    n = len(a)
    m = [
        [
            [-a[i][j], 1] if i == j else [-a[i][j]]
            for j in range(n)
        ]
        for i in range(n)
    ]
    det = _poly_matrix_det(m)
    det = det + [0] * (n + 1 - len(det))
    return det


def char_poly(elem):
    """Monic degree-n characteristic polynomial of an element as a ZPoly."""
    return ZPoly(charpoly_matrix(elem.order.mul_matrix(elem.coords)))


def element_trace(elem):
    m = elem.order.mul_matrix(elem.coords)
    return sum(m[i][i] for i in range(elem.order.n))


def element_norm(elem):
    cp = charpoly_matrix(elem.order.mul_matrix(elem.coords))
    n = elem.order.n
    return cp[0] if n % 2 == 0 else -cp[0]


def order_discriminant(order):
    """Determinant of the trace form Tr(basis_i * basis_j), exact."""
    n = order.n
    traces = [
        [element_trace(OrderElement(order, order.table[i][j])) for j in range(n)]
        for i in range(n)
    ]
    return bareiss_determinant(traces)


# -- constructions ---------------------------------------------------------

def order_from_polynomial(f, labels=None):
    """Power-basis order Z[t]/(f) for a monic f of degree >= 2."""
    if not f.is_monic():
        raise ValueError("order requires a monic polynomial")
    n = f.degree
    if n < 2:
        raise ValueError("order requires degree >= 2")
    powers = [[0] * n for _ in range(2 * n - 1)]
    acc = ZPoly((1,))
    tpoly = ZPoly((0, 1))
    for k in range(2 * n - 1):
        for i, c in enumerate(acc.coeffs):
            powers[k][i] = c
        acc = (acc * tpoly) % f
    table = [
        [tuple(powers[i + j]) for j in range(n)]
        for i in range(n)
    ]
    return Order(table, labels=labels)


def element_index(order, theta):
    """|det| of the coordinate matrix of 1, theta, ..., theta^(n-1); 0 if theta does not generate."""
    n = order.n
    rows = []
    acc = order.identity()
    for _ in range(n):
        rows.append(list(acc.coords))
        acc = acc * theta
    return abs(bareiss_determinant(rows))


# -- p-enlargement toward the maximal order --------------------------------

def _hnf_fraction_rows(rows, n):
    """Lattice basis in the canonical triangular form, for rational row spans."""
    from .ideals import hnf  # local import; ideals depends on orders

    denom = 1
    for row in rows:
        for c in row:
            denom = denom * c.denominator // _gcd(denom, c.denominator)
    scaled = [
        [int(c * denom) for c in row]
        for row in rows
    ]
    h = hnf(scaled, n)
    return [[Fraction(c, denom) for c in row] for row in h]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _fraction_matrix_inverse(rows):
    n = len(rows)
    aug = [
        [Fraction(rows[i][j]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(
            (r for r in range(col, n) if aug[r][col] != 0), None
        )
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [c - f * d for c, d in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def order_from_rational_basis(order, rows, labels=None):
    """Build the order spanned by rational combinations of an existing basis.

    `rows` are coordinate vectors in `order`; the span must be a subring
    containing 1 (checked: the rebuilt multiplication table must be
    integral and pass the usual construction checks).  The result
    carries the canonical triangular basis in ``basis_in_parent``.
    """
    n = order.n
    frac_rows = [[Fraction(c) for c in row] for row in rows]
    basis = _hnf_fraction_rows(frac_rows, n)
    inv = _fraction_matrix_inverse(basis)

    def to_new_coords(vec):
        out = []
        for j in range(n):
            s = sum(vec[k] * inv[k][j] for k in range(n))
            if s.denominator != 1:
                raise ValueError("span is not closed under multiplication")
            out.append(int(s))
        return tuple(out)

    table = []
    for i in range(n):
        row_entries = []
        for j in range(n):
            prod = [Fraction(0)] * n
            for k in range(n):
                if not basis[i][k]:
                    continue
                for l in range(n):
                    if not basis[j][l]:
                        continue
                    c = basis[i][k] * basis[j][l]
                    for m, t in enumerate(order.table[k][l]):
                        if t:
                            prod[m] += c * t
            row_entries.append(to_new_coords(prod))
        table.append(row_entries)
    return Order(
        table,
        labels=labels or _enlarged_labels(order, basis),
        parent=order,
        basis_in_parent=tuple(tuple(row) for row in basis),
    )


def _enlarged_labels(order, basis):
    out = []
    for i, row in enumerate(basis):
        for j in range(order.n):
            if row == [Fraction(1 if k == j else 0) for k in range(order.n)]:
                out.append(order.labels[j])
                break
        else:
            out.append("w%d" % i)
    return tuple(out)


def _integral_candidate(order, coords, p):
    """True when (sum coords_i * basis_i) / p has an integer characteristic polynomial."""
    a = order.mul_matrix(coords)
    n = order.n
    cp = charpoly_matrix(a)
    power = p
    for k in range(1, n + 1):
        if cp[n - k] % power:
            return False
        power *= p
    return True


def p_enlarge(order, modulus):
    """Smallest p-maximal order containing this one, found by exhaustive search.

    Scans the p^n residue classes x of order/(p*order); whenever
    (x-combination)/p has an integer characteristic polynomial the ring
    generated by it is adjoined (lexicographically smallest x first),
    and the scan repeats until a fixed point.  The result's
    ``basis_in_parent`` holds its canonical triangular basis in the
    coordinates of the input order.
    """
    if not isinstance(modulus, PrimeModulus):
        modulus = PrimeModulus(modulus)
    p = modulus.p
    current = order
    emb = [[Fraction(1 if j == i else 0) for j in range(order.n)] for i in range(order.n)]
    n = order.n
    while True:
        found = None
        table = current.table
        trace_w = [
            sum(table[k][i][i] for i in range(n)) % p for k in range(n)
        ]
        for x in itertools.product(range(p), repeat=n):
            if not any(x):
                continue
            if sum(xk * wk for xk, wk in zip(x, trace_w)) % p:
                continue
            if _integral_candidate(current, x, p):
                found = x
                break
        if found is None:
            break
        current = _adjoin_element(current, found, p)
        emb = _compose(current.basis_in_parent, emb)
        current = Order(
            current.table,
            labels=current.labels,
            parent=order,
            basis_in_parent=tuple(tuple(r) for r in emb),
        )
    if current is order:
        return Order(
            order.table,
            labels=order.labels,
            parent=order,
            basis_in_parent=tuple(tuple(r) for r in emb),
        )
    return current


def _compose(rows_new, rows_old):
    n = len(rows_old)
    return [
        [
            sum(rows_new[i][k] * rows_old[k][j] for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]


def _adjoin_element(order, coords, p):
    """Order generated by `order` and (coords-combination)/p, via module ring closure."""
    n = order.n
    rows = [
        [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)
    ]
    rows.append([Fraction(c, p) for c in coords])
    basis = _hnf_fraction_rows(rows, n)
    while True:
        extra = []
        for i in range(n):
            for j in range(i, n):
                prod = [Fraction(0)] * n
                for k in range(n):
                    if not basis[i][k]:
                        continue
                    for l in range(n):
                        if not basis[j][l]:
                            continue
                        c = basis[i][k] * basis[j][l]
                        for m, t in enumerate(order.table[k][l]):
                            if t:
                                prod[m] += c * t
                if not _in_lattice(prod, basis):
                    extra.append(prod)
        if not extra:
            break
        basis = _hnf_fraction_rows(basis + extra, n)
    return order_from_rational_basis(order, basis)


def _in_lattice(vec, basis):
    v = list(vec)
    n = len(basis)
    for i in range(n - 1, -1, -1):
        piv = basis[i][i]
        q = v[i] / piv
        if q.denominator != 1:
            return False
        for j in range(n):
            v[j] -= q * basis[i][j]
    return all(c == 0 for c in v)


def trial_factor(n, bound):
    """Factor |n| by trial division up to `bound`; raises when the tail resists.

    The tail after trial division is accepted when it is 1, a prime, or
    a prime power (detected exactly); anything else exceeds the bound.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = {}
    d = 2
    while d * d <= n and d <= bound:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if d * d > n or is_prime(n):
            out[n] = out.get(n, 0) + 1
            return out
        for e in range(n.bit_length(), 1, -1):
            root = _integer_nth_root(n, e)
            if root is not None and root**e == n and is_prime(root):
                out[root] = out.get(root, 0) + e
                return out
        raise ValueError(
            "factorization of %d exceeds the trial-division bound %d" % (n, bound)
        )
    return out


def _integer_nth_root(n, e):
    if n < 1:
        return None
    lo, hi = 1, 1 << (n.bit_length() // e + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**e <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def maximal_order(f, bound=10**6, labels=None):
    """Maximal order of Q[t]/(f) and its discriminant (the fundamental number).

    Enlarges the power-basis order at every prime whose square divides
    disc(f).  The discriminant must factor by trial division at the
    given bound.  Returns (order, D); the order's ``basis_in_parent``
    is relative to the power basis.
    """
    if not f.is_monic():
        raise ValueError("maximal order requires a monic polynomial")
    _rational_root_screen(f)
    disc = discriminant(f)
    if disc == 0:
        raise ValueError("polynomial has a repeated root (discriminant 0)")
    factors = trial_factor(disc, bound)
    order = order_from_polynomial(f, labels=labels)
    emb = [
        [Fraction(1 if j == i else 0) for j in range(order.n)]
        for i in range(order.n)
    ]
    base = order
    for q in sorted(factors):
        if factors[q] < 2:
            continue
        enlarged = p_enlarge(order, PrimeModulus(q))
        emb = _compose(enlarged.basis_in_parent, emb)
        order = Order(
            enlarged.table,
            labels=enlarged.labels,
            parent=base,
            basis_in_parent=tuple(tuple(r) for r in emb),
        )
    return order, order_discriminant(order)


def _rational_root_screen(f):
    """Reject f with an integer root (cheap certificate of reducibility)."""
    const = f.coeffs[0]
    if const == 0:
        raise ValueError("polynomial is divisible by t")
    for d in range(1, abs(const) + 1):
        if const % d == 0:
            if f(d) == 0 or f(-d) == 0:
                raise ValueError(
                    "polynomial is reducible (integer root %d)" % (d if f(d) == 0 else -d)
                )


def order_to_text(order):
    """Serialize rank, labels, and the full multiplication table.

    One line per table entry: ``i j: c1 c2 ... cn``.  Round-trips
    exactly through order_from_text.
    """
    lines = ["rank %d" % order.n, "labels %s" % " ".join(order.labels)]
    for i in range(order.n):
        for j in range(order.n):
            lines.append(
                "%d %d: %s" % (i, j, " ".join(str(c) for c in order.table[i][j]))
            )
    return "\n".join(lines) + "\n"


def order_from_text(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("rank "):
        raise ValueError("missing rank header")
    n = int(lines[0].split()[1])
    if not lines[1].startswith("labels "):
        raise ValueError("missing labels header")
    labels = tuple(lines[1].split()[1:])
    table = [[None] * n for _ in range(n)]
    for ln in lines[2:]:
        head, _, tail = ln.partition(":")
        i, j = (int(x) for x in head.split())
        vec = tuple(int(x) for x in tail.split())
        if len(vec) != n:
            raise ValueError("table entry (%d,%d) has wrong width" % (i, j))
        table[i][j] = vec
    if any(entry is None for row in table for entry in row):
        raise ValueError("incomplete multiplication table")
    return Order(table, labels=labels)


def cubic_family(a, b, ap, bp):
    """Rank-3 order on basis 1, alpha, beta with rational product alpha*beta.

    Structure constants: alpha^2 = ap*alpha + b*beta - b*bp,
    beta^2 = a*alpha + bp*beta - a*ap, alpha*beta = a*b.  The four
    parameters must be coprime.  Returns (order, discriminant) where
    the discriminant comes from the closed form
    ap^2*bp^2 + 18*a*b*ap*bp - 4*a*ap^3 - 4*b*bp^3 - 27*a^2*b^2,
    cross-checked against the trace form.
    """
    g = 0
    for v in (a, b, ap, bp):
        g = _gcd(g, v)
    if g != 1:
        raise ValueError("parameters must be coprime, gcd is %d" % g)
    table = [
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        [(0, 1, 0), (-b * bp, ap, b), (a * b, 0, 0)],
        [(0, 0, 1), (a * b, 0, 0), (-a * ap, a, bp)],
    ]
    order = Order(table, labels=("1", "a", "b"))
    disc = (
        ap * ap * bp * bp
        + 18 * a * b * ap * bp
        - 4 * a * ap**3
        - 4 * b * bp**3
        - 27 * a * a * b * b
    )
    actual = order_discriminant(order)
    if actual != disc:
        raise AssertionError(
            "closed-form discriminant %d disagrees with trace form %d" % (disc, actual)
        )
    return order, disc
