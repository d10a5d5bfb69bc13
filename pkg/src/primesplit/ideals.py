"""Ideals of an order as full-rank integer lattices in Hermite normal form.

The canonical form is triangular with pivots on the diagonal: row i has
its last nonzero entry at column i, diagonal entries are positive, and
every entry below a pivot is reduced into [0, pivot).  This is exactly
the shape of bracket bases like [2, a, 1+b]: equal ideals have equal
matrices, so verification tables reduce to matrix comparisons.

Ideals are stored relative to the order's basis; two-element
representations are constructors only.  All values are immutable and
all operations pure.
"""

import itertools

from .fppoly import FpPoly, PrimeModulus, fp_is_irreducible
from .orders import (
    Order,
    OrderElement,
    char_poly,
    element_index,
    order_discriminant,
    p_enlarge,
)
from .zpoly import lift, reduce_mod


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _upper_hnf(rows, transform=False):
    """Row-style HNF with leftmost pivots; optionally track the row transform."""
    basis = {}  # pivot column -> (row, combo)
    nrows = len(rows)
    for idx, vec in enumerate(rows):
        v = list(vec)
        combo = [0] * nrows
        if transform:
            combo[idx] = 1
        while True:
            j = next((c for c, x in enumerate(v) if x), None)
            if j is None:
                break
            if j not in basis:
                basis[j] = (v, combo)
                break
            r, rc = basis[j]
            a, b = r[j], v[j]
            if b % a == 0:
                q = b // a
                v = [x - q * y for x, y in zip(v, r)]
                if transform:
                    combo = [x - q * y for x, y in zip(combo, rc)]
            else:
                g, s, t = _xgcd(a, b)
                new_r = [s * x + t * y for x, y in zip(r, v)]
                new_rc = (
                    [s * x + t * y for x, y in zip(rc, combo)]
                    if transform
                    else combo
                )
                q = a // g
                w = b // g
                v = [q * y - w * x for x, y in zip(r, v)]
                if transform:
                    combo = [q * y - w * x for x, y in zip(rc, combo)]
                basis[j] = (new_r, new_rc)
    # normalize pivot signs, then reduce entries above each pivot
    for j in sorted(basis):
        r, rc = basis[j]
        if r[j] < 0:
            basis[j] = ([-x for x in r], [-x for x in rc])
    pivots = sorted(basis)
    for pos, j in enumerate(pivots):
        r, rc = basis[j]
        for jj in pivots[:pos]:
            s, sc = basis[jj]
            q = s[j] // r[j]
            if q:
                basis[jj] = (
                    [x - q * y for x, y in zip(s, r)],
                    [x - q * y for x, y in zip(sc, rc)],
                )
    out = [basis[j][0] for j in pivots]
    combos = [basis[j][1] for j in pivots]
    return (out, combos) if transform else out


def hnf(rows, n=None):
    """Canonical triangular basis of the lattice spanned by integer rows.

    Requires the span to have full rank n (defaults to the row width);
    raises ValueError on rank deficiency.
    """
    rows = [list(r) for r in rows]
    if not rows:
        raise ValueError("no generators given")
    if n is None:
        n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("rows have inconsistent width")
    flipped = [r[::-1] for r in rows]
    h = _upper_hnf(flipped)
    if len(h) != n:
        raise ValueError("generators span a rank-%d lattice, need %d" % (len(h), n))
    return tuple(tuple(r[::-1]) for r in reversed(h))


def solve_in_rowspan(rows, target):
    """Integer coefficients y with sum(y_i * rows_i) = target, or None."""
    h, combos = _upper_hnf([list(r) for r in rows], transform=True)
    v = list(target)
    coeff = [0] * len(rows)
    for r, rc in zip(h, combos):
        j = next(c for c, x in enumerate(r) if x)
        if v[j] % r[j]:
            return None
        q = v[j] // r[j]
        if q:
            v = [x - q * y for x, y in zip(v, r)]
            coeff = [x + q * y for x, y in zip(coeff, rc)]
    if any(v):
        return None
    return coeff


def lattice_contains(basis, vec):
    """Membership of an integer vector in a canonical triangular lattice basis."""
    v = list(vec)
    for i in range(len(basis) - 1, -1, -1):
        piv = basis[i][i]
        q, r = divmod(v[i], piv)
        if r:
            return False
        if q:
            for j in range(i + 1):
                v[j] -= q * basis[i][j]
    return True


def reduce_mod_lattice(basis, vec):
    """Canonical residue of a vector modulo the lattice: coords in [0, diag)."""
    v = list(vec)
    for i in range(len(basis) - 1, -1, -1):
        q = v[i] // basis[i][i]
        if q:
            for j in range(i + 1):
                v[j] -= q * basis[i][j]
    return tuple(v)


class LatticeIdeal:
    """Full-rank ideal of an order, stored as a canonical triangular basis."""

    __slots__ = ("order", "rows")

    def __init__(self, order, rows, _trusted=False):
        if not isinstance(order, Order):
            raise TypeError("expected an Order")
        rows = tuple(tuple(int(c) for c in r) for r in rows)
        self.order = order
        self.rows = rows
        if not _trusted:
            canonical = hnf(rows, order.n)
            if canonical != rows:
                raise ValueError("basis rows are not in canonical form")
            self._check_closure()

    def _check_closure(self):
        n = self.order.n
        for row in self.rows:
            for g in range(1, n):
                prod = self.order.vec_mul(row, _unit(n, g))
                if not lattice_contains(self.rows, prod):
                    raise ValueError("lattice is not closed under ring multiplication")

    def norm(self):
        out = 1
        for i in range(self.order.n):
            out *= self.rows[i][i]
        return abs(out)

    def contains_vec(self, vec):
        return lattice_contains(self.rows, vec)

    def contains_element(self, elem):
        return lattice_contains(self.rows, elem.coords)

    def contains_ideal(self, other):
        """True when other is a sublattice (this ideal divides other)."""
        return all(lattice_contains(self.rows, r) for r in other.rows)

    def residues(self):
        """All canonical residue vectors modulo this lattice, in lex order."""
        ranges = [range(self.rows[i][i]) for i in range(self.order.n)]
        for combo in itertools.product(*ranges):
            yield reduce_mod_lattice(self.rows, combo)

    def __eq__(self, other):
        return (
            isinstance(other, LatticeIdeal)
            and self.order == other.order
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.order, self.rows))

    def __repr__(self):
        return "LatticeIdeal(%s)" % bracket_str(self)


def _unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def bracket_str(ideal):
    """Paper-style bracket notation, e.g. ``[2, a, 1+b]``."""
    return "[%s]" % ", ".join(
        _bracket_entry(r, ideal.order.labels) for r in ideal.rows
    )


def _bracket_entry(coords, labels):
    parts = []
    for c, label in zip(coords, labels):
        if c == 0:
            continue
        mag = abs(c)
        if label == "1":
            body = str(mag)
        else:
            body = label if mag == 1 else "%d%s" % (mag, label)
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts) if parts else "0"


def whole_order(order):
    n = order.n
    return LatticeIdeal(order, [_unit(n, i) for i in range(n)], _trusted=True)


def ideal_from_generators(order, gens):
    """Smallest ideal containing the generators: HNF of all gen * basis products."""
    rows = []
    n = order.n
    for g in gens:
        if isinstance(g, OrderElement):
            coords = g.coords
        else:
            coords = tuple(g)
        for j in range(n):
            rows.append(order.vec_mul(coords, _unit(n, j)))
    return LatticeIdeal(order, hnf(rows, n), _trusted=True)


def principal_ideal(order, elem):
    return ideal_from_generators(order, [elem])


def two_element_ideal(order, modulus, gen_poly, theta):
    """Ideal generated by p and gen_poly(theta): Dedekind's gcd of the two principal ideals."""
    p = int(modulus)
    rho = evaluate_poly_at(gen_poly, theta)
    scaled = order.identity() * p
    return ideal_from_generators(order, [scaled, rho])


def evaluate_poly_at(poly, theta):
    """Evaluate an integer polynomial at an order element (Horner)."""
    order = theta.order
    acc = order.zero()
    one = order.identity()
    for c in reversed(poly.coeffs):
        acc = acc * theta + one * int(c)
    return acc


def ideal_product(a, b):
    if a.order != b.order:
        raise ValueError("ideals belong to different orders")
    rows = []
    for r in a.rows:
        for s in b.rows:
            rows.append(a.order.vec_mul(r, s))
    return LatticeIdeal(a.order, hnf(rows, a.order.n), _trusted=True)


def ideal_power(a, e):
    result = whole_order(a.order)
    base = a
    while e:
        if e & 1:
            result = ideal_product(result, base)
        base = ideal_product(base, base)
        e >>= 1
    return result


def ideal_norm(a):
    return a.norm()


# -- quotient-ring structure ------------------------------------------------

def _is_maximal(order, ideal, p):
    """True when order/ideal is a field (every nonzero residue invertible mod p)."""
    n = order.n
    diag = [ideal.rows[i][i] for i in range(n)]
    free = [i for i in range(n) if diag[i] != 1]
    if not free:
        return False  # the whole order
    if any(d != p for d in diag if d != 1):
        return False  # norm not p^f, cannot be maximal above p
    f = len(free)
    for combo in itertools.product(range(p), repeat=f):
        if not any(combo):
            continue
        x = [0] * n
        for pos, i in enumerate(free):
            x[i] = combo[pos]
        # multiplication-by-x map on the f-dimensional quotient
        mat = []
        for i in free:
            prod = reduce_mod_lattice(ideal.rows, order.vec_mul(x, _unit(n, i)))
            mat.append([prod[j] % p for j in free])
        if _det_mod_p(mat, p) == 0:
            return False
    return True


def _det_mod_p(mat, p):
    m = [row[:] for row in mat]
    n = len(m)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        inv = pow(m[col][col], -1, p)
        det = det * m[col][col] % p
        for r in range(col + 1, n):
            f = m[r][col] * inv % p
            if f:
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[col])]
    return det % p


def ideal_valuation(a, prime, _trust_maximal=False):
    """Largest v with prime**v containing a (the exponent of the prime in a)."""
    if a.order != prime.order:
        raise ValueError("ideals belong to different orders")
    nrm = prime.norm()
    p = _prime_base(nrm)
    if p is None or (not _trust_maximal and not _is_maximal(prime.order, prime, p)):
        raise ValueError("valuation requires a maximal ideal")
    v = 0
    power = prime
    target_norm = a.norm()
    pw_norm = nrm
    while pw_norm <= target_norm and power.contains_ideal(a):
        v += 1
        power = ideal_product(power, prime)
        pw_norm *= nrm
    return v


def _prime_base(n):
    if n < 2:
        return None
    d = 2
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            return d if n == 1 else None
        d += 1
    return n


# -- factoring p by enumeration --------------------------------------------

def _echelon_subspaces(p, n, k):
    """Reduced echelon bases of all k-dimensional subspaces of GF(p)^n."""
    for cols in itertools.combinations(range(n), k):
        free_positions = []
        for i, c in enumerate(cols):
            for j in range(c + 1, n):
                if j not in cols:
                    free_positions.append((i, j))
        for values in itertools.product(range(p), repeat=len(free_positions)):
            mat = [[0] * n for _ in range(k)]
            for i, c in enumerate(cols):
                mat[i][c] = 1
            for (i, j), val in zip(free_positions, values):
                mat[i][j] = val
            yield cols, mat


def _closed_mod_p(order, mat, p, cols):
    """Closure of the rowspace under multiplication by the non-identity basis."""
    n = order.n
    table = order.table
    pivot_of = {c: i for i, c in enumerate(cols)}
    for row in mat:
        for g in range(1, n):
            prod = [0] * n
            for i, ri in enumerate(row):
                if ri:
                    tig = table[i][g]
                    for m in range(n):
                        prod[m] = (prod[m] + ri * tig[m]) % p
            for c in range(n):
                x = prod[c] % p
                if x:
                    if c in pivot_of:
                        r = mat[pivot_of[c]]
                        for m in range(c, n):
                            prod[m] = (prod[m] - x * r[m]) % p
                    else:
                        return False
    return True


def factor_p_in_order(order, modulus, bound=10**4):
    """All prime ideals above p with their exponents and degrees.

    Enumerates the sublattices between p*order and order through echelon
    forms over GF(p), keeps those closed under ring multiplication,
    picks the maximal proper ones, reads each residue degree f from the
    norm p^f, and finds each exponent e by valuation against p*order so
    that the product of prime powers is exactly p*order.

    The order must be p-maximal; p**n must not exceed `bound`.
    Results are sorted by basis matrix and returned as (ideal, e, f).
    """
    if not isinstance(modulus, PrimeModulus):
        modulus = PrimeModulus(modulus)
    p = modulus.p
    n = order.n
    if p**n > bound:
        raise ValueError(
            "p^n = %d exceeds the enumeration bound %d" % (p**n, bound)
        )
    _require_p_maximal(order, modulus)

    p_ideal = ideal_from_generators(order, [order.identity() * p])
    candidates = []  # (cols, mat, ideal)
    for k in range(n):
        for cols, mat in _echelon_subspaces(p, n, k):
            if _closed_mod_p(order, mat, p, cols):
                rows = [list(r) for r in p_ideal.rows] + [list(r) for r in mat]
                ideal = LatticeIdeal(order, hnf(rows, n), _trusted=True)
                candidates.append((mat, ideal))

    maximal = []
    for mat, ideal in candidates:
        strictly_above = any(
            other is not ideal
            and other != ideal
            and other.contains_ideal(ideal)
            for _, other in candidates
        )
        if not strictly_above:
            maximal.append(ideal)
    maximal.sort(key=lambda ide: ide.rows)

    out = []
    total = whole_order(order)
    for ideal in maximal:
        f = _norm_degree(ideal.norm(), p)
        e = ideal_valuation(p_ideal, ideal, _trust_maximal=True)
        out.append((ideal, e, f))
        total = ideal_product(total, ideal_power(ideal, e))
    if total != p_ideal:
        raise AssertionError("prime power product does not reconstruct p*order")
    if sum(e * f for _, e, f in out) != n:
        raise AssertionError("sum of e*f does not equal the rank")
    return out


def _norm_degree(nrm, p):
    f = 0
    while nrm > 1:
        if nrm % p:
            raise AssertionError("ideal norm is not a power of %d" % p)
        nrm //= p
        f += 1
    return f


def _require_p_maximal(order, modulus):
    p = int(modulus)
    disc = order_discriminant(order)
    if disc % (p * p):
        return  # index gain would contribute p^2 to the discriminant
    enlarged = p_enlarge(order, modulus)
    ident = tuple(
        tuple(1 if j == i else 0 for j in range(order.n))
        for i in range(order.n)
    )
    if tuple(tuple(r) for r in enlarged.basis_in_parent) != ident:
        raise ValueError("order is not %d-maximal" % p)


# -- good generators via lattice CRT ----------------------------------------

def _crt_pair(order, a, la, b, lb):
    """theta with theta = a mod la and theta = b mod lb, for comaximal lattices."""
    rows = [list(r) for r in la.rows] + [list(r) for r in lb.rows]
    diff = [x - y for x, y in zip(b.coords, a.coords)]
    combo = solve_in_rowspan(rows, diff)
    if combo is None:
        raise ValueError("congruences are not compatible")
    n = order.n
    u = [0] * n
    for i in range(n):
        if combo[i]:
            for j in range(n):
                u[j] += combo[i] * la.rows[i][j]
    theta = OrderElement(order, [x + y for x, y in zip(a.coords, u)])
    return theta


def crt_good_generator(order, modulus, primes, polys):
    """Generator whose index avoids p, built from chosen prime functions.

    `primes` is the (ideal, e, f) list for p in this order; `polys` are
    pairwise distinct monic irreducibles over GF(p) with deg(polys[i])
    equal to f_i.  For each prime ideal a root of the matching
    polynomial is found among the p^f residues (smallest in
    coordinate-lexicographic order), shifted off the square of the
    ideal when the exponent demands it, and the congruences modulo the
    squared primes are combined by lattice CRT.

    The result is reduced to the canonical residue modulo the product
    of the squared primes; its index is not divisible by p and its
    characteristic polynomial reduces to the chosen factorization mod p.
    """
    if not isinstance(modulus, PrimeModulus):
        modulus = PrimeModulus(modulus)
    p = modulus.p
    if len(primes) != len(polys):
        raise ValueError("need one prime function per prime ideal")
    seen = set()
    for (ideal, e, f), poly in zip(primes, polys):
        if not isinstance(poly, FpPoly) or poly.modulus != modulus:
            raise ValueError("prime functions must share the modulus %d" % p)
        if poly.degree != f:
            raise ValueError(
                "degree mismatch: prime ideal of degree %d got %s" % (f, poly)
            )
        if not poly.is_monic() or (poly.degree > 0 and not fp_is_irreducible(poly)):
            raise ValueError("prime functions must be monic irreducibles")
        if poly.coeffs in seen:
            raise ValueError(
                "infeasible prime-function supply: %s repeated" % poly
            )
        seen.add(poly.coeffs)

    congruences = []
    for (ideal, e, f), poly in zip(primes, polys):
        zp = lift(poly)
        root = None
        for residue in ideal.residues():
            val = evaluate_poly_at(zp, OrderElement(order, residue))
            if ideal.contains_element(val):
                root = OrderElement(order, residue)
                break
        if root is None:
            raise AssertionError("prime function has no root modulo its ideal")
        squared = ideal_product(ideal, ideal)
        if e >= 2:
            val = evaluate_poly_at(zp, root)
            if squared.contains_element(val):
                shift = next(
                    OrderElement(order, r)
                    for r in ideal.rows
                    if not squared.contains_vec(r)
                )
                root = root + shift
                val = evaluate_poly_at(zp, root)
                if squared.contains_element(val):
                    raise AssertionError("shift failed to escape the ideal square")
        congruences.append((root, squared))

    theta, lattice = congruences[0]
    for value, lat in congruences[1:]:
        theta = _crt_pair(order, theta, lattice, value, lat)
        lattice = ideal_product(lattice, lat)
    theta = OrderElement(order, reduce_mod_lattice(lattice.rows, theta.coords))
    if element_index(order, theta) % p == 0:
        raise AssertionError("constructed generator has index divisible by %d" % p)
    expected = FpPoly(modulus, (1,))
    for (_, e, _), poly in zip(primes, polys):
        expected = expected * poly**e
    if reduce_mod(char_poly(theta), modulus) != expected:
        raise AssertionError("characteristic polynomial does not match the chosen factors")
    return theta
