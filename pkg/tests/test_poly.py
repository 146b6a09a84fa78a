import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vvkit.poly import (DEGREVLEX, LEX, PLANE, MonomialOrder, ParseError,
                        Polynomial, RingMismatchError, compare_monomials,
                        elimination_order, monomials_of_degree,
                        parse_polynomial, ring)

x, y, z = PLANE.gens()


class TestParse:
    def test_three_terms(self):
        p = parse_polynomial("x^2*y - 3*x*y*z + 2*y*z^2", PLANE)
        assert len(p.terms) == 3
        assert p.coefficient((1, 1, 1)) == -3

    def test_zero(self):
        assert parse_polynomial("0", PLANE).is_zero()

    def test_incomplete_reports_offset(self):
        with pytest.raises(ParseError) as err:
            parse_polynomial("x +", PLANE)
        assert err.value.offset == 3

    def test_unknown_variable(self):
        with pytest.raises(ParseError, match="unknown variable"):
            parse_polynomial("x + w", PLANE)

    def test_rational_coefficient(self):
        p = parse_polynomial("1/2*x + 3*y", PLANE)
        assert p.coefficient((1, 0, 0)) == Fraction(1, 2)

    def test_leading_minus(self):
        assert parse_polynomial("-x + y", PLANE) == y - x

    def test_explicit_multiplication_required(self):
        with pytest.raises(ParseError):
            parse_polynomial("2x", PLANE)

    def test_format_parse_roundtrip(self):
        rng = random.Random(5)
        for _ in range(60):
            p = _random_poly(rng)
            assert parse_polynomial(str(p), PLANE) == p

    def test_format_of_parse_is_idempotent(self):
        text = "  x^2*y  -  3/4*z^3 + 2*x "
        once = str(parse_polynomial(text, PLANE))
        assert str(parse_polynomial(once, PLANE)) == once


def _random_poly(rng, max_deg=4, n_terms=5):
    terms = {}
    for _ in range(rng.randint(0, n_terms)):
        e = tuple(rng.randint(0, max_deg) for _ in range(3))
        terms[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return Polynomial(PLANE, terms)


monomial = st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
orders = st.sampled_from([DEGREVLEX, LEX, elimination_order(1),
                          elimination_order(2)])


class TestOrders:
    def test_degrevlex_examples(self):
        assert compare_monomials(DEGREVLEX, (0, 2, 0), (1, 0, 1)) == 1
        assert compare_monomials(LEX, (1, 0, 0), (0, 5, 0)) == 1
        assert compare_monomials(DEGREVLEX, (2, 1, 0), (1, 2, 0)) == 1

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            compare_monomials(DEGREVLEX, (1, 0), (0, 1, 0))

    @given(orders, monomial, monomial)
    def test_totality(self, order, a, b):
        c = order.compare(a, b)
        assert c in (-1, 0, 1)
        assert (c == 0) == (a == b)
        assert order.compare(b, a) == -c

    @given(orders, monomial, monomial, monomial)
    def test_multiplicative(self, order, a, b, c):
        ab = order.compare(a, b)
        ac = tuple(u + v for u, v in zip(a, c))
        bc = tuple(u + v for u, v in zip(b, c))
        assert order.compare(ac, bc) == ab

    @given(orders, monomial)
    def test_global(self, order, a):
        one = (0, 0, 0)
        assert order.compare(a, one) >= 0

    def test_monomials_of_degree_sorted(self):
        ms = monomials_of_degree(3, 3)
        assert len(ms) == 10
        keys = [DEGREVLEX.key(m) for m in ms]
        assert keys == sorted(keys, reverse=True)


class TestArithmetic:
    def test_square(self):
        assert (x + y) * (x + y) == x**2 + 2*x*y + y**2

    def test_identity(self):
        p = x**2*y - z
        assert p * PLANE.one() == p

    def test_difference_of_squares(self):
        assert (x - y) * (x + y) == x**2 - y**2

    def test_ring_mismatch(self):
        other = ring("a", "b")
        with pytest.raises(RingMismatchError):
            _ = x * other.variable("a")

    def test_ring_axioms_random(self):
        rng = random.Random(17)
        for _ in range(50):
            p, q, r = (_random_poly(rng) for _ in range(3))
            assert p + q == q + p
            assert p * q == q * p
            assert (p + q) * r == p * r + q * r
            assert (p * q) * r == p * (q * r)

    def test_pow(self):
        assert (x + y) ** 3 == x**3 + 3*x**2*y + 3*x*y**2 + y**3


class TestCalculus:
    def test_partial(self):
        f = x**3*y - x*y**3
        assert f.differentiate("x") == 3*x**2*y - y**3

    def test_partial_of_missing_variable(self):
        assert (x**2).differentiate("z").is_zero()

    def test_unknown_variable(self):
        with pytest.raises(KeyError):
            x.differentiate("w")

    def test_euler_identity(self):
        rng = random.Random(23)
        for _ in range(100):
            d = rng.randint(1, 6)
            support = monomials_of_degree(3, d)
            f = Polynomial(PLANE, {
                m: Fraction(rng.randint(-5, 5)) for m in
                rng.sample(support, k=rng.randint(1, min(5, len(support))))})
            if f.is_zero():
                continue
            lhs = (x * f.differentiate("x") + y * f.differentiate("y")
                   + z * f.differentiate("z"))
            assert lhs == d * f


class TestSubstitution:
    def test_identity_matrix(self):
        p = x**2*y - 3*z**3
        eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert p.substitute_linear(eye) == p

    def test_swap(self):
        swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
        assert (x**2*y).substitute_linear(swap) == x*y**2

    def test_shear(self):
        shear = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
        assert (x**2).substitute_linear(shear) == x**2 + 2*x*y + y**2

    def test_singular_rejected(self):
        with pytest.raises(ValueError, match="singular"):
            x.substitute_linear([[1, 0, 0], [1, 0, 0], [0, 0, 1]])

    def test_degree_preserved(self):
        rng = random.Random(3)
        m = [[2, 1, 0], [1, 1, 0], [3, 0, 1]]
        for _ in range(20):
            p = _random_poly(rng)
            if p.is_zero():
                continue
            assert p.substitute_linear(m).degree() == p.degree()


class TestEvaluation:
    def test_point(self):
        p = x*y - z**2
        assert p.evaluate([2, 3, 1]) == 5
        assert p.evaluate([Fraction(1, 2), 2, 1]) == 0
