import random
from fractions import Fraction

import pytest

import oracle
from vvkit.claims import collinear_pair, five_point_case
from vvkit.geometry import jacobian, jacobian_of_points, sample_config
from vvkit.hilbert import hilbert_series
from vvkit.ideals import Ideal
from vvkit.poly import PLANE, Polynomial, ring
from vvkit.vava import (PairError, RelationTypeBoundError, mpower_in_ideal,
                        relation_type, vv_piece, vv_torsion_free, vv_witness)

x, y, z = PLANE.gens()


@pytest.fixture(scope="module")
def four_collinear():
    return collinear_pair(4)


class TestVVPiece:
    def test_four_collinear_dims(self, four_collinear):
        J, I, f = four_collinear
        dims = vv_piece(J, I, 2)
        # oracle: dim (J cap I^2)_d - dim (J I)_d by Macaulay ranks
        JI = J * I
        I2 = I.power(2)
        for d in range(1, 11):
            meet = (oracle.ideal_rank(list(J.generators), d)
                    + oracle.ideal_rank(list(I2.generators), d)
                    - oracle.ideal_rank(list(J.generators)
                                        + list(I2.generators), d))
            expected = meet - oracle.ideal_rank(list(JI.generators), d)
            assert dims.get(d, 0) == expected
        assert dims == {8: 1}
        w = y**4 * f
        assert w in J and w in I2 and w not in JI

    def test_five_general_zero(self):
        cfg, J, I = five_point_case(1)
        assert vv_piece(J, I, 2) == {}

    def test_equal_pair_zero(self):
        # (x) cap (x,y)^2 = x*(x,y): the t=2 map vanishes identically
        J = Ideal(PLANE, [x])
        I = Ideal(PLANE, [x, y])
        assert vv_piece(J, I, 2) == {}

    def test_pair_validation(self):
        with pytest.raises(PairError):
            vv_piece(Ideal(PLANE, [x]), Ideal(PLANE, [y]), 2)
        with pytest.raises(ValueError):
            vv_piece(Ideal(PLANE, [x]), Ideal(PLANE, [x, y]), 1)


class TestWitness:
    def test_four_collinear_witness(self, four_collinear):
        J, I, f = four_collinear
        w = vv_witness(J, I, 2)
        assert w is not None and w.degree() == 8
        assert w in J and w in I.power(2) and w not in J * I

    def test_torsion_free_returns_none(self):
        cfg, J, I = five_point_case(1)
        assert vv_witness(J, I, 2) is None

    def test_witness_determinism(self, four_collinear):
        J, I, _ = four_collinear
        assert vv_witness(J, I, 2) == vv_witness(J, I, 2)


class TestTorsionFree:
    def test_four_collinear_fails_at_two(self, four_collinear):
        J, I, _ = four_collinear
        report = vv_torsion_free(J, I, 4)
        assert not report.torsion_free
        fail = report.first_failure()
        assert fail.t == 2 and fail.witness is not None
        assert fail.graded_dims == {8: 1}

    def test_containment_always(self, four_collinear):
        J, I, _ = four_collinear
        for t in (2, 3):
            meet = J.intersect(I.power(t))
            assert meet.contains_ideal(J * I.power(t - 1))

    def test_atfn_extension_s4(self, four_collinear):
        # a pass for t <= s stays a pass out to t = s + 2
        cfg, J, I = five_point_case(4)
        report = vv_torsion_free(J, I, 5, tmax=7)
        assert report.torsion_free and len(report.per_t) == 6

    def test_m_primality_check(self):
        J = Ideal(PLANE, [z, x**3*y - x*y**3])
        not_primary = Ideal(PLANE, [z, x**3*y - x*y**3, x**2])
        with pytest.raises(PairError):
            vv_torsion_free(J, not_primary, 4)

    def test_prefilter_logs_and_matches(self, four_collinear, caplog):
        import logging
        J, I, _ = four_collinear
        with caplog.at_level(logging.INFO, logger="vvkit.vava"):
            report = vv_torsion_free(J, I, 4, tmax=2, prefilter=True)
        assert not report.torsion_free
        assert any("prefilter" in r.message for r in caplog.records)

    def test_projective_invariance_of_verdict(self):
        rng = random.Random(44)
        cfg, J, I = five_point_case(2)
        base = vv_torsion_free(J, I, 5).torsion_free
        for _ in range(2):
            while True:
                m = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
                try:
                    J2 = Ideal(PLANE, [g.substitute_linear(m) for g in J.generators])
                    break
                except ValueError:
                    continue
            I2 = jacobian(J2, 2).jacobian_ideal
            assert vv_torsion_free(J2, I2, 5).torsion_free == base


class TestMPower:
    def test_m4_containment(self):
        m4 = Ideal(PLANE, [x, y, z]).power(4)
        assert mpower_in_ideal(m4, 4)
        assert mpower_in_ideal(m4, 5)
        assert not mpower_in_ideal(m4, 3)

    def test_principal_never(self):
        assert not mpower_in_ideal(Ideal(PLANE, [x]), 3)


class TestRelationType:
    def test_complete_intersection_linear_type(self):
        R2 = ring("x", "y")
        a, b = R2.gens()
        f = a**3*b - a*b**3
        CI = Ideal(R2, [f.differentiate("x"), f.differentiate("y")])
        rees = relation_type(Ideal(R2, []), CI, 4)
        assert rees.relation_type == 1
        # a complete intersection has exactly one Koszul relation
        assert list(rees.generator_bidegrees) == [(6, 1)]

    def test_five_general_points(self):
        cfg, J, I = five_point_case(1)
        assert relation_type(J, I, 5).relation_type == 2

    def test_collinear_dual_curve(self, four_collinear):
        J, I, _ = four_collinear
        rees = relation_type(J, I, 4)
        assert rees.relation_type == 4
        assert max(q for _, q in rees.generator_bidegrees) == 4

    def test_bound_error(self, four_collinear):
        J, I, _ = four_collinear
        with pytest.raises(RelationTypeBoundError):
            relation_type(J, I, 2)

    def test_atfn_bound_on_samples(self):
        for k in (1, 2, 4):
            cfg, J, I = five_point_case(k)
            assert relation_type(J, I, 5).relation_type <= 5
