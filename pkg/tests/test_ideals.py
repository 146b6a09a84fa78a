import random
from fractions import Fraction

import pytest

import oracle
from vvkit.geometry import PointConfiguration, ideal_of_points
from vvkit.ideals import Ideal, exact_divide, minimal_generators_mod
from vvkit.poly import PLANE, Polynomial, monomials_of_degree, ring

x, y, z = PLANE.gens()


def _random_homog(rng, max_deg=3):
    d = rng.randint(1, max_deg)
    support = monomials_of_degree(3, d)
    terms = {m: Fraction(rng.randint(-4, 4))
             for m in rng.sample(support, k=rng.randint(1, min(3, len(support))))}
    p = Polynomial(PLANE, terms)
    return p if not p.is_zero() else x ** d


def _random_ideal(rng):
    return Ideal(PLANE, [_random_homog(rng) for _ in range(rng.randint(1, 3))])


class TestSumProductPower:
    def test_sum(self):
        assert (Ideal(PLANE, [x]) + Ideal(PLANE, [y])).equals(Ideal(PLANE, [x, y]))

    def test_square(self):
        m = Ideal(PLANE, [x, y])
        assert (m * m).equals(Ideal(PLANE, [x**2, x*y, y**2]))

    def test_principal_product(self):
        assert (Ideal(PLANE, [x]) * Ideal(PLANE, [y])).equals(Ideal(PLANE, [x*y]))

    def test_power_examples(self):
        m = Ideal(PLANE, [x, y])
        assert m.power(2).equals(m * m)
        assert m.power(1) is m
        assert (m.power(2)).power(2).equals(m.power(4))
        with pytest.raises(ValueError):
            m.power(0)

    def test_power_product_identity(self):
        rng = random.Random(2)
        for _ in range(5):
            I = _random_ideal(rng)
            for t in range(2, 5):
                assert I.power(t).equals(I * I.power(t - 1))


class TestIntersection:
    def test_principal(self):
        meet = Ideal(PLANE, [x]).intersect(Ideal(PLANE, [y]))
        assert meet.equals(Ideal(PLANE, [x*y]))

    def test_two_points(self):
        meet = Ideal(PLANE, [z, x]).intersect(Ideal(PLANE, [z, y]))
        assert meet.equals(Ideal(PLANE, [z, x*y]))

    def test_four_point_series(self):
        from vvkit.hilbert import hilbert_series
        cfg = PointConfiguration.of((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))
        hs = hilbert_series(ideal_of_points(cfg))
        assert hs.numerator == (1, 2, 1) and hs.pole_order == 1

    def test_containment_invariants(self):
        rng = random.Random(4)
        for _ in range(8):
            I, J = _random_ideal(rng), _random_ideal(rng)
            meet = I.intersect(J)
            prod = I * J
            assert I.contains_ideal(prod) and J.contains_ideal(prod)
            assert I.contains_ideal(meet) and J.contains_ideal(meet)
            assert meet.contains_ideal(prod)


class TestQuotient:
    def test_monomial(self):
        q = Ideal(PLANE, [x*y, x*z]).quotient(Ideal(PLANE, [x]))
        assert q.equals(Ideal(PLANE, [y, z]))

    def test_identity(self):
        I = Ideal(PLANE, [x**2, y])
        assert I.quotient(Ideal(PLANE, [PLANE.one()])).equals(I)

    def test_zero_divisor_rejected(self):
        with pytest.raises(ValueError):
            Ideal(PLANE, [x]).quotient(Ideal(PLANE, []))

    def test_colon_times_ideal_contained(self):
        rng = random.Random(6)
        for _ in range(6):
            I, J = _random_ideal(rng), _random_ideal(rng)
            assert I.contains_ideal(I.quotient(J) * J)

    def test_thm24_colon_at_s6(self):
        from vvkit.claims import build_s3fold
        data = build_s3fold(6)
        colon = data["frak_a"].quotient(Ideal(PLANE, [data["G"]]))
        assert colon.equals(Ideal(PLANE, [z]))


class TestEliminate:
    def test_twisted_cubic_style(self):
        R = ring("t", "x", "y", "z")
        t, xt, yt, zt = R.gens()
        E = Ideal(R, [t*xt - yt, t*yt - zt]).eliminate(["t"])
        small = ring("x", "y", "z")
        expected = Ideal(small, [small.parse("y^2 - x*z")])
        assert E.equals(expected)
        # both inclusions via membership in the big ring
        assert E.generators

    def test_no_free_element(self):
        R = ring("t", "x", "y", "z")
        t = R.variable("t")
        E = Ideal(R, [t * R.variable("x")]).eliminate(["t"])
        assert E.is_zero()

    def test_unit_parameter(self):
        R = ring("t", "x", "y", "z")
        t, xt = R.variable("t"), R.variable("x")
        E = Ideal(R, [t - 1, xt]).eliminate(["t"])
        assert E.equals(Ideal(E.ring, [E.ring.variable("x")]))

    def test_drop_everything_rejected(self):
        with pytest.raises(ValueError):
            Ideal(PLANE, [x]).eliminate(["x", "y", "z"])


class TestMembershipAndEquality:
    def test_member(self):
        f = x**2 - y*z
        assert f in Ideal(PLANE, [f])

    def test_nonmember(self):
        assert x not in Ideal(PLANE, [x**2, y])

    def test_equal_generators_differ(self):
        assert Ideal(PLANE, [x, y]).equals(Ideal(PLANE, [x + y, y]))

    def test_strict_containment(self):
        assert not Ideal(PLANE, [x]).equals(Ideal(PLANE, [x**2]))

    def test_equivalence_relation(self):
        rng = random.Random(8)
        pool = [_random_ideal(rng) for _ in range(6)]
        pool.append(Ideal(PLANE, [g * Fraction(3, 2) for g in pool[0].generators]))
        for I in pool:
            assert I.equals(I)
        for I in pool:
            for J in pool:
                assert I.equals(J) == J.equals(I)
        for I in pool:
            for J in pool:
                for K in pool:
                    if I.equals(J) and J.equals(K):
                        assert I.equals(K)

    def test_shuffle_scale_invariance(self):
        rng = random.Random(9)
        for _ in range(10):
            I = _random_ideal(rng)
            gens = list(I.generators)
            rng.shuffle(gens)
            scaled = [Fraction(rng.randint(1, 5), rng.randint(1, 5)) * g
                      for g in gens]
            assert I.equals(Ideal(PLANE, scaled))

    def test_membership_matches_oracle(self):
        rng = random.Random(10)
        for _ in range(10):
            I = _random_ideal(rng)
            for _ in range(4):
                f = _random_homog(rng)
                if f.degree() <= 8:
                    assert (f in I) == oracle.contains_by_rank(
                        list(I.generators), f)


class TestMinimalGenerators:
    def test_redundant_power(self):
        mg = minimal_generators_mod(Ideal(PLANE, [x, x**2, y]), None)
        assert sorted(g.degree() for g in mg) == [1, 1]

    def test_square_of_maximal(self):
        m2 = Ideal(PLANE, [a * b for a in (x, y, z) for b in (x, y, z)])
        assert len(minimal_generators_mod(m2, None)) == 6

    def test_degree_multiset_projective_invariant(self):
        rng = random.Random(12)
        I = Ideal(PLANE, [x**2 - y*z, x*y**2 - z**3, y**4])
        base = sorted(g.degree() for g in minimal_generators_mod(I, None))
        for _ in range(5):
            while True:
                m = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
                try:
                    moved = [g.substitute_linear(m) for g in I.generators]
                    break
                except ValueError:
                    continue
            degs = sorted(g.degree() for g in
                          minimal_generators_mod(Ideal(PLANE, moved), None))
            assert degs == base

    def test_non_homogeneous_rejected(self):
        with pytest.raises(ValueError):
            minimal_generators_mod(Ideal(PLANE, [x**2 - y]), None)


class TestMinPurePower:
    def test_power_of_maximal(self):
        m4 = Ideal(PLANE, [m for m in (x, y, z)]).power(4)
        assert m4.min_pure_power("z") == 4

    def test_none(self):
        assert Ideal(PLANE, [x]).min_pure_power("z") is None

    def test_principal_power(self):
        assert Ideal(PLANE, [z**2]).min_pure_power("z") == 2


class TestExactDivide:
    def test_roundtrip(self):
        p = (x + y) * (x**2 - z**2)
        assert exact_divide(p, x + y) == x**2 - z**2

    def test_not_multiple(self):
        with pytest.raises(ValueError):
            exact_divide(x**2 + y, x + y)
