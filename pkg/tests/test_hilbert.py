import math
import random
from fractions import Fraction

import pytest

import oracle
from vvkit.claims import build_xoff, xoff_series
from vvkit.geometry import (PointConfiguration, glp_normalized_config,
                            ideal_of_points, point_ideal, sample_config)
from vvkit.hilbert import (MAX_NODES, HilbertSeries, RecursionBudgetError,
                           hilbert_function, hilbert_series)
from vvkit.ideals import Ideal
from vvkit.poly import PLANE, Polynomial, monomials_of_degree

x, y, z = PLANE.gens()


class TestHilbertFunction:
    def test_six_general_points(self):
        I = ideal_of_points(glp_normalized_config(6))
        assert [hilbert_function(I, d) for d in range(5)] == [1, 3, 6, 6, 6]

    def test_zero_ideal(self):
        assert hilbert_function(Ideal(PLANE, []), 2) == 6

    def test_maximal_ideal(self):
        m = Ideal(PLANE, [x, y, z])
        assert all(hilbert_function(m, d) == 0 for d in range(1, 5))

    def test_non_homogeneous_rejected(self):
        with pytest.raises(ValueError):
            hilbert_function(Ideal(PLANE, [x**2 - y]), 3)


class TestHilbertSeries:
    def test_complete_intersection(self):
        hs = hilbert_series(Ideal(PLANE, [z, x**4 + y**4]))
        assert hs == HilbertSeries((1, 1, 1, 1), 1)

    def test_five_general_points(self):
        cfg = sample_config("5-1", 11)
        hs = hilbert_series(ideal_of_points(cfg))
        assert hs == HilbertSeries((1, 2, 2), 1)

    def test_xoff_at_s6(self):
        hs = hilbert_series(build_xoff(6)["J"])
        assert hs == HilbertSeries((1, 2, 2, 1), 1)
        assert hs == xoff_series(6)

    def test_series_function_agreement(self):
        rng = random.Random(3)
        for _ in range(10):
            I = _random_ideal(rng)
            hs = hilbert_series(I)
            for d in range(hs.degree() + 4):
                assert hs.coefficient(d) == hilbert_function(I, d)

    def test_macaulay_oracle_agreement(self):
        rng = random.Random(5)
        for _ in range(20):
            I = _random_ideal(rng)
            for d in range(9):
                assert hilbert_function(I, d) == oracle.quotient_dimension(
                    list(I.generators), d)

    def test_point_count_law(self):
        for label, seed in [("5-2", 1), ("5-4", 2), ("6-7", 3), ("(7,2)-fold", 4),
                            ("4-general", 5)]:
            cfg = sample_config(label, seed)
            hs = hilbert_series(ideal_of_points(cfg))
            assert hs.pole_order == 1
            assert hs.numerator_sum() == cfg.s

    def test_mayer_vietoris_additivity(self):
        # series of an intersection from the exact sequence, on point splits
        rng = random.Random(7)
        for trial in range(4):
            cfg = sample_config("6-general", 20 + trial)
            pts = cfg.points
            A = ideal_of_points(PointConfiguration(pts[:3]))
            B = ideal_of_points(PointConfiguration(pts[3:]))
            lhs = hilbert_series(A.intersect(B))
            rhs = hilbert_series(A) + hilbert_series(B) - hilbert_series(A + B)
            assert lhs == rhs

    def test_budget_guardrail(self, monkeypatch):
        import vvkit.hilbert as hilbert_module
        assert MAX_NODES == 10_000
        monkeypatch.setattr(hilbert_module, "MAX_NODES", 2)
        fresh = Ideal(PLANE, [x*y**2, y*z**3, x**2*z, x*y*z])
        with pytest.raises(RecursionBudgetError):
            hilbert_series(fresh)

    def test_zero_ideal_rejected(self):
        with pytest.raises(ValueError):
            hilbert_series(Ideal(PLANE, []))


def _random_ideal(rng):
    gens = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(1, 3)
        support = monomials_of_degree(3, d)
        terms = {m: Fraction(rng.randint(-4, 4))
                 for m in rng.sample(support, k=rng.randint(1, 3))}
        p = Polynomial(PLANE, terms)
        if not p.is_zero():
            gens.append(p)
    if not gens:
        gens = [x]
    return Ideal(PLANE, gens)


class TestSeriesArithmetic:
    def test_subtract_to_polynomial(self):
        a = HilbertSeries((1, 2, 2), 1)
        b = HilbertSeries((1, 2, 1, 1), 1)
        diff = a - b
        assert diff.pole_order == 0 and diff.numerator == (0, 0, 1)

    def test_subtract_keeps_pole_when_sums_differ(self):
        a = HilbertSeries((1, 2, 2), 1)
        b = HilbertSeries((1, 2, 1), 1)
        diff = a - b
        assert diff.pole_order == 1 and diff.numerator == (0, 0, 1)

    def test_coefficient_expansion(self):
        hs = HilbertSeries((1, 2, 2), 1)
        assert [hs.coefficient(d) for d in range(5)] == [1, 3, 5, 5, 5]

    def test_json(self):
        hs = HilbertSeries((1, 2), 1)
        assert hs.to_json() == {"numerator": [1, 2], "pole_order": 1}
