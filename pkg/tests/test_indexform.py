import random

import pytest

from primesplit import fixtures
from primesplit.criteria import common_index_divisor, SplittingShape
from primesplit.fppoly import PrimeModulus
from primesplit.ideals import factor_p_in_order
from primesplit.indexform import (
    MultiPoly,
    common_value_divisor,
    format_multipoly,
    index_form,
)
from primesplit.orders import (
    cubic_family,
    element_index,
    maximal_order,
    order_from_polynomial,
)
from primesplit.zpoly import ZPoly

MAX_CUBIC = fixtures.maximal_cubic_order()


class TestMultiPoly:
    def test_zero_coefficients_dropped(self):
        f = MultiPoly(("x", "y"), {(1, 0): 1}) - MultiPoly(("x", "y"), {(1, 0): 1})
        assert f.is_zero()
        assert f.terms == {}

    def test_mul_and_evaluate(self):
        x = MultiPoly.variable(("x", "y"), "x")
        y = MultiPoly.variable(("x", "y"), "y")
        f = (x + y) * (x - y)
        assert f.terms == {(2, 0): 1, (0, 2): -1}
        assert f.evaluate((5, 3)) == 16

    def test_format(self):
        f = MultiPoly(
            ("x", "y"), {(3, 0): 2, (2, 1): -1, (1, 2): -1, (0, 3): -2}
        )
        assert format_multipoly(f) == "2x^3 - x^2y - xy^2 - 2y^3"


class TestIndexForm:
    def test_maximal_cubic(self):
        form = index_form(MAX_CUBIC)
        assert form.vars == ("x", "y")
        assert form.terms == fixtures.CUBIC_INDEX_FORM_TERMS

    def test_cubic_family_closed_form(self):
        rng = random.Random(3)
        from math import gcd

        done = 0
        while done < 50:
            vals = [rng.randrange(-9, 10) for _ in range(4)]
            g = 0
            for v in vals:
                g = gcd(g, v)
            if g != 1:
                continue
            a, b, ap, bp = vals
            order, _ = cubic_family(a, b, ap, bp)
            form = index_form(order)
            expected = {
                k: v
                for k, v in {
                    (3, 0): b,
                    (2, 1): -ap,
                    (1, 2): bp,
                    (0, 3): -a,
                }.items()
                if v
            }
            assert form.terms == expected
            done += 1

    def test_power_basis_generator_has_index_one(self):
        for poly in (fixtures.cubic_poly(), fixtures.quartic_poly()):
            order = order_from_polynomial(poly)
            form = index_form(order)
            point = (1,) + (0,) * (order.n - 2)
            assert abs(form.evaluate(point)) == 1

    def test_homogeneous(self):
        for order in (
            MAX_CUBIC,
            order_from_polynomial(fixtures.quartic_poly()),
            fixtures.sqrt2_order(),
        ):
            form = index_form(order)
            n = order.n
            assert form.total_degrees() == {n * (n - 1) // 2}

    def test_rank_bound(self):
        big = order_from_polynomial(ZPoly.from_text("t^6 - 2"))
        with pytest.raises(ValueError):
            index_form(big)

    def test_evaluation_matches_element_index(self):
        rng = random.Random(11)
        for order in (
            MAX_CUBIC,
            fixtures.sqrt2_order(),
            order_from_polynomial(fixtures.cubic_poly()),
            order_from_polynomial(fixtures.quartic_poly()),
        ):
            form = index_form(order)
            for _ in range(100):
                coords = [rng.randrange(-9, 10) for _ in range(order.n)]
                theta = order.element(coords)
                assert abs(form.evaluate(tuple(coords[1:]))) == element_index(
                    order, theta
                )

    def test_parity_identity_for_even_family(self):
        # a, b even and a', b' odd force the form = x^2 y + x y^2 mod 2
        rng = random.Random(13)
        from math import gcd

        done = 0
        while done < 50:
            a = 2 * rng.randrange(-4, 5)
            b = 2 * rng.randrange(-4, 5)
            ap = 2 * rng.randrange(-4, 5) + 1
            bp = 2 * rng.randrange(-4, 5) + 1
            g = 0
            for v in (a, b, ap, bp):
                g = gcd(g, v)
            if g != 1:
                continue
            order, _ = cubic_family(a, b, ap, bp)
            form = index_form(order)
            mod2 = {e: c % 2 for e, c in form.terms.items() if c % 2}
            assert mod2 == {(2, 1): 1, (1, 2): 1}
            done += 1


class TestCommonValueDivisor:
    def test_cubic_form_examples(self):
        form = MultiPoly(("x", "y"), fixtures.CUBIC_INDEX_FORM_TERMS)
        assert common_value_divisor(form, 2) is True
        assert common_value_divisor(form, 3) is False
        # spot value used to justify the mod-3 verdict
        assert form.evaluate((1, 1)) == -2

    def test_single_variable(self):
        x = MultiPoly.variable(("x",), "x")
        for p in (2, 3, 5):
            assert common_value_divisor(x, p) is False

    def test_bound_guard(self):
        form = MultiPoly(("x", "y"), fixtures.CUBIC_INDEX_FORM_TERMS)
        with pytest.raises(ValueError):
            common_value_divisor(form, PrimeModulus(1009), bound=10**6)

    def test_consistency_with_splitting_criterion(self):
        # common divisor of index-form values == common index divisor from
        # the true splitting shape, across the fixture corpus
        cases = []
        cases.append((MAX_CUBIC, [2, 3, 5]))
        quartic_max, _ = maximal_order(fixtures.quartic_poly())
        cases.append((quartic_max, [2, 3]))
        cases.append((fixtures.sqrt2_order(), [2, 3]))
        for order, ps in cases:
            form = index_form(order)
            for p in ps:
                modulus = PrimeModulus(p)
                primes = factor_p_in_order(order, modulus, bound=10**5)
                shape = SplittingShape(modulus, [(f, e) for _, e, f in primes])
                divisor, _ = common_index_divisor(modulus, shape)
                assert common_value_divisor(form, modulus) == divisor, (p,)
