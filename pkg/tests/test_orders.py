import random
from fractions import Fraction

import pytest

from conftest import random_irreducible_cubic
from primesplit import fixtures
from primesplit.fppoly import PrimeModulus
from primesplit.orders import (
    Order,
    char_poly,
    cubic_family,
    element_index,
    element_norm,
    element_trace,
    maximal_order,
    order_discriminant,
    order_from_polynomial,
    order_from_rational_basis,
    order_from_text,
    order_to_text,
    p_enlarge,
    trial_factor,
)
from primesplit.zpoly import ZPoly, discriminant


MAX_CUBIC = fixtures.maximal_cubic_order()
POWER_CUBIC = fixtures.cubic_power_order()
SQRT2 = fixtures.sqrt2_order()


class TestOrderConstruction:
    def test_identity_must_come_first(self):
        bad = [
            [(0, 1), (1, 0)],
            [(1, 0), (0, 1)],
        ]
        with pytest.raises(ValueError):
            Order(bad)

    def test_symmetry_checked(self):
        bad = [
            [(1, 0), (0, 1)],
            [(0, 2), (2, 0)],
        ]
        with pytest.raises(ValueError):
            Order(bad)

    def test_associativity_checked(self):
        # ab = 4 tampered to 5 breaks (aa)b = a(ab)
        bad = [
            [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
            [(0, 1, 0), (2, 1, 2), (5, 0, 0)],
            [(0, 0, 1), (5, 0, 0), (-2, 2, -1)],
        ]
        with pytest.raises(ValueError):
            Order(bad)


class TestElementMul:
    def test_alpha_beta(self):
        a = MAX_CUBIC.element((0, 1, 0))
        b = MAX_CUBIC.element((0, 0, 1))
        assert (a * b).coords == (4, 0, 0)

    def test_beta_squared(self):
        b = MAX_CUBIC.element((0, 0, 1))
        assert (b * b).coords == (-2, 2, -1)

    def test_identity(self):
        x = MAX_CUBIC.element((3, -1, 7))
        assert (MAX_CUBIC.identity() * x).coords == x.coords

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            MAX_CUBIC.element((1, 0, 0)) * SQRT2.element((1, 0))

    def test_commutative_random(self):
        rng = random.Random(3)
        for _ in range(100):
            x = MAX_CUBIC.element([rng.randrange(-9, 10) for _ in range(3)])
            y = MAX_CUBIC.element([rng.randrange(-9, 10) for _ in range(3)])
            assert (x * y).coords == (y * x).coords


class TestCharPoly:
    def test_derivative_element(self):
        delta = POWER_CUBIC.element((-2, -2, 3))
        assert char_poly(delta) == ZPoly.from_text("t^3 - 7*t^2 - 2012")
        assert element_norm(delta) == 2012

    def test_beta(self):
        beta = MAX_CUBIC.element((0, 0, 1))
        assert char_poly(beta) == ZPoly.from_text("t^3 + t^2 + 2*t - 8")

    def test_identity_element(self):
        assert char_poly(MAX_CUBIC.identity()) == ZPoly.from_text(
            "t^3 - 3*t^2 + 3*t - 1"
        )
        assert char_poly(SQRT2.identity()) == ZPoly.from_text("t^2 - 2*t + 1")

    def test_trace_and_norm_extraction(self):
        rng = random.Random(5)
        for _ in range(50):
            x = MAX_CUBIC.element([rng.randrange(-5, 6) for _ in range(3)])
            cp = char_poly(x)
            assert element_trace(x) == -cp.coeffs[2]
            assert element_norm(x) == -cp.coeffs[0]

    def test_root_satisfies_own_charpoly(self):
        rng = random.Random(9)
        for _ in range(50):
            x = SQRT2.element([rng.randrange(-9, 10) for _ in range(2)])
            cp = char_poly(x)
            acc = SQRT2.zero()
            for c in reversed(cp.coeffs):
                acc = acc * x + SQRT2.identity() * c
            assert acc.is_zero()


class TestOrderDiscriminant:
    def test_maximal_cubic(self):
        assert order_discriminant(MAX_CUBIC) == -503

    def test_power_cubic(self):
        assert order_discriminant(POWER_CUBIC) == -2012

    def test_sqrt2(self):
        assert order_discriminant(SQRT2) == 8


class TestOrderFromPolynomial:
    def test_sqrt2_table(self):
        assert SQRT2.table[1][1] == (2, 0)

    def test_cubic_table(self):
        t = POWER_CUBIC.table
        assert t[1][1] == (0, 0, 1)
        assert t[1][2] == (8, 2, 1)  # a * a^2 = 8 + 2a + a^2

    def test_quartic_power_order(self):
        q = order_from_polynomial(fixtures.quartic_poly())
        assert q.n == 4
        assert order_discriminant(q) == discriminant(fixtures.quartic_poly())

    def test_rejects_non_monic(self):
        with pytest.raises(ValueError):
            order_from_polynomial(ZPoly((1, 1, 3)))


class TestElementIndex:
    def test_alpha_in_maximal_order(self):
        assert element_index(MAX_CUBIC, MAX_CUBIC.element((0, 1, 0))) == 2

    def test_power_generator(self):
        assert element_index(POWER_CUBIC, POWER_CUBIC.element((0, 1, 0))) == 1

    def test_skewed_sqrt2_generator(self):
        theta = SQRT2.element((25, 27))
        assert element_index(SQRT2, theta) == 27

    def test_non_generator_gives_zero(self):
        assert element_index(MAX_CUBIC, MAX_CUBIC.element((5, 0, 0))) == 0


class TestPEnlarge:
    def test_cubic_at_2(self):
        enlarged = p_enlarge(POWER_CUBIC, PrimeModulus(2))
        assert order_discriminant(enlarged) == -503
        # contains beta = (a^2 - a - 2)/2
        beta = (Fraction(-2, 2), Fraction(-1, 2), Fraction(1, 2))
        assert _lattice_member(beta, enlarged.basis_in_parent)

    def test_sqrt2_at_2_unchanged(self):
        enlarged = p_enlarge(SQRT2, PrimeModulus(2))
        assert enlarged.basis_in_parent == (
            (Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(1)),
        )

    def test_unchanged_when_square_free_disc(self):
        rng = random.Random(19)
        checked = 0
        while checked < 20:
            f = random_irreducible_cubic(rng, 6)
            d = discriminant(f)
            p = rng.choice([2, 3, 5])
            if d == 0 or d % (p * p) == 0:
                continue
            order = order_from_polynomial(f)
            enlarged = p_enlarge(order, PrimeModulus(p))
            assert order_discriminant(enlarged) == d
            checked += 1

    def test_monotone_idempotent_even_power(self):
        rng = random.Random(29)
        done = 0
        while done < 30:
            f = random_irreducible_cubic(rng, 8)
            if discriminant(f) == 0:
                continue
            p = PrimeModulus(rng.choice([2, 3]))
            order = order_from_polynomial(f)
            enlarged = p_enlarge(order, p)
            # monotone: every original basis vector is in the new lattice
            for i in range(order.n):
                unit = tuple(
                    Fraction(1 if j == i else 0) for j in range(order.n)
                )
                assert _lattice_member(unit, enlarged.basis_in_parent)
            # idempotent: enlarging again changes nothing
            again = p_enlarge(enlarged, p)
            ident = tuple(
                tuple(Fraction(1 if j == i else 0) for j in range(order.n))
                for i in range(order.n)
            )
            assert again.basis_in_parent == ident
            # discriminant drops by an even power of p
            ratio, rem = divmod(
                order_discriminant(order), order_discriminant(enlarged)
            )
            assert rem == 0
            v = 0
            while ratio % p.p == 0:
                ratio //= p.p
                v += 1
            assert abs(ratio) == 1 and v % 2 == 0
            done += 1


class TestMaximalOrder:
    def test_cubic(self):
        order, d = maximal_order(fixtures.cubic_poly())
        assert d == -503
        beta = (Fraction(-1), Fraction(-1, 2), Fraction(1, 2))
        assert _lattice_member(beta, order.basis_in_parent)

    def test_quartic(self):
        order, d = maximal_order(fixtures.quartic_poly())
        assert d == 2873 == 13**2 * 17

    def test_sqrt2_already_maximal(self):
        order, d = maximal_order(ZPoly.from_text("t^2 - 2"))
        assert d == 8

    def test_square_consistency(self):
        # for each prime q with q^2 | disc(F): q divides D or q fell in k^2 only;
        # either way disc(F)/D is a perfect square
        for f in (fixtures.cubic_poly(), fixtures.quartic_poly()):
            _, d = maximal_order(f)
            ratio, rem = divmod(discriminant(f), d)
            assert rem == 0
            assert int(round(abs(ratio) ** 0.5)) ** 2 == ratio
        for q, exp in trial_factor(discriminant(fixtures.quartic_poly()), 10**6).items():
            if exp >= 2:
                _, d = maximal_order(fixtures.quartic_poly())
                ratio = discriminant(fixtures.quartic_poly()) // d
                assert d % q == 0 or ratio % (q * q) == 0

    def test_reducible_rejected(self):
        with pytest.raises(ValueError):
            maximal_order(ZPoly.from_text("t^3 - t^2 + 2*t - 8"))  # root 2

    def test_trial_division_bound(self):
        # a tail that is a product of two distinct large primes is ambiguous
        with pytest.raises(ValueError):
            trial_factor(6 * 1000003 * 1000033, 10)
        # prime and prime-power tails are recognized exactly
        assert trial_factor(6 * 1000003**2, 10) == {2: 1, 3: 1, 1000003: 2}
        assert trial_factor(6 * 1000003, 10) == {2: 1, 3: 1, 1000003: 1}
        assert trial_factor(6 * 1000003**2, 2 * 10**6) == {2: 1, 3: 1, 1000003: 2}


class TestCubicFamily:
    def test_paper_quadruple(self):
        order, disc = cubic_family(2, 2, 1, -1)
        assert disc == -503
        assert order_discriminant(order) == -503
        assert char_poly(order.element((0, 1, 0))) == fixtures.cubic_poly()

    def test_impossible_unit_discriminant(self):
        order, disc = cubic_family(6, 2, 9, 13)
        assert disc == 1
        assert char_poly(order.element((0, 1, 0))) == ZPoly.from_text(
            "t^3 - 9*t^2 + 26*t - 24"
        )

    def test_reducible_neighbour(self):
        order, _ = cubic_family(2, 2, 1, 1)
        alpha_min = char_poly(order.element((0, 1, 0)))
        assert alpha_min == ZPoly.from_text("t^3 - t^2 + 2*t - 8")
        assert alpha_min == ZPoly.from_text("t - 2") * ZPoly.from_text("t^2 + t + 4")

    def test_gcd_violation(self):
        with pytest.raises(ValueError):
            cubic_family(2, 2, 4, 6)

    def test_closed_form_matches_trace_form(self):
        from math import gcd

        rng = random.Random(59)
        done = 0
        while done < 200:
            vals = [rng.randrange(-10, 11) for _ in range(4)]
            g = 0
            for v in vals:
                g = gcd(g, v)
            if g != 1:
                continue
            order, disc = cubic_family(*vals)
            assert order_discriminant(order) == disc
            done += 1


class TestDiscIndexIdentity:
    def test_section5_data(self):
        alpha = MAX_CUBIC.element((0, 1, 0))
        k = element_index(MAX_CUBIC, alpha)
        assert discriminant(char_poly(alpha)) == k * k * order_discriminant(MAX_CUBIC)
        assert (k, discriminant(char_poly(alpha))) == (2, -2012)

    def test_random_family_members(self):
        from math import gcd

        rng = random.Random(61)
        done = 0
        while done < 100:
            vals = [rng.randrange(-6, 7) for _ in range(4)]
            g = 0
            for v in vals:
                g = gcd(g, v)
            if g != 1:
                continue
            order, disc = cubic_family(*vals)
            if disc == 0:
                continue
            theta = order.element([rng.randrange(-4, 5) for _ in range(3)])
            k = element_index(order, theta)
            if k == 0:
                continue
            assert discriminant(char_poly(theta)) == k * k * disc
            done += 1


class TestSerialization:
    def test_round_trip(self):
        for order in (MAX_CUBIC, POWER_CUBIC, SQRT2):
            text = order_to_text(order)
            back = order_from_text(text)
            assert back.table == order.table
            assert back.labels == order.labels
            assert order_to_text(back) == text

    def test_rejects_malformed(self):
        with pytest.raises(ValueError):
            order_from_text("labels a b\n")
        with pytest.raises(ValueError):
            order_from_text("rank 2\nlabels 1 a\n0 0: 1 0\n")


class TestQuarticPaperBasis:
    def test_derived_multiplication_table(self):
        # basis 1, a, (2 - a + a^2 - a^3)/2, a^2 - a: validated by the
        # fundamental number and by lattice equality with the computed
        # maximal order
        power = order_from_polynomial(fixtures.quartic_poly())
        rows = [
            (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(1), Fraction(0), Fraction(0)),
            (Fraction(1), Fraction(-1, 2), Fraction(1, 2), Fraction(-1, 2)),
            (Fraction(0), Fraction(-1), Fraction(1), Fraction(0)),
        ]
        derived = order_from_rational_basis(power, rows)
        assert order_discriminant(derived) == 2873
        computed, _ = maximal_order(fixtures.quartic_poly())
        assert derived.basis_in_parent == computed.basis_in_parent


def _lattice_member(vec, basis):
    v = [Fraction(c) for c in vec]
    n = len(basis)
    for i in range(n - 1, -1, -1):
        q = v[i] / basis[i][i]
        if q.denominator != 1:
            return False
        for j in range(n):
            v[j] -= q * basis[i][j]
    return all(c == 0 for c in v)
