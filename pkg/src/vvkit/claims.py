"""Executable reproductions of the published desk-scale computations.

Each claim binds a deterministic construction (pinned coefficients or
pinned sampler seeds) to an exact expectation and reports pass/fail.
A claim about a conjecture reports "indeterminate": there is no truth
value to compare against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .geometry import (PointConfiguration, conic_through,
                       glp_binomial_generators, glp_normalized_config,
                       ideal_of_points, jacobian, jacobian_of_points,
                       sample_config)
from .groebner import initial_ideal
from .hilbert import HilbertSeries, hilbert_function, hilbert_series
from .ideals import Ideal, minimal_generators_mod
from .poly import PLANE, Polynomial, ring
from .vava import mpower_in_ideal, relation_type, vv_piece, vv_torsion_free

#: pinned sampler seed for the 5- and 6-point classification sweeps
SEED = 11


@dataclass
class ClaimResult:
    claim: str
    status: str  # "pass" | "fail" | "indeterminate"
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"claim": self.claim, "status": self.status, "details": self.details}


@dataclass(frozen=True)
class ClaimSpec:
    id: str
    description: str
    runner: Callable[[], ClaimResult]
    slow: bool = False


def _verdict(claim: str, ok: bool, details: dict) -> ClaimResult:
    return ClaimResult(claim, "pass" if ok else "fail", details)


# ---------------------------------------------------------------------------
# pinned constructions
# ---------------------------------------------------------------------------

#: coefficient pairs (c0, c1) of distinct linear forms c0 x + c1 y; the
#: first four give the pinned quartic x^3 y - x y^3 = x y (x-y) (x+y)
_LINE_FORMS = [(1, 0), (0, 1), (1, -1), (1, 1), (1, -2), (1, 2),
               (1, -3), (1, 3), (1, -4), (1, 4), (1, -5)]


def _line_product(R, count: int) -> Polynomial:
    x, y = R.variable("x"), R.variable("y")
    out = R.one()
    for c0, c1 in _LINE_FORMS[:count]:
        out = out * (c0 * x + c1 * y)
    return out


def collinear_pair(s: int = 4):
    """s collinear points on z = 0: the pair J = (z, f), I = its
    Jacobian ideal; for s = 4 the quartic is x^3 y - x y^3."""
    z = PLANE.variable("z")
    f = _line_product(PLANE, s)
    J = Ideal(PLANE, [z, f])
    I = jacobian(J, 2).jacobian_ideal
    return J, I, f


def nearly_collinear_socle(s: int = 6):
    """The (s-1)-fold collinear setup reduced to k[x, y]: f a product of
    s-1 distinct linear forms and the height-two ideal
    (x f_x, y f_x, x f_y, y f_y)."""
    R = ring("x", "y")
    x, y = R.gens()
    f = _line_product(R, s - 1)
    fx, fy = f.differentiate("x"), f.differentiate("y")
    frak_a = Ideal(R, [x * fx, y * fx, x * fy, y * fy])
    return R, f, frak_a


def _product(ring_obj, factors):
    out = ring_obj.one()
    for f in factors:
        out = out * f
    return out


def build_xoff(s: int = 8):
    """The (s-2)-fold collinear configuration with the two off-line
    points' connecting line missing the configuration: points
    [1:a_i:0], [0:0:1], [1:1:1] with distinct a_i outside {0, 1}."""
    if s < 5:
        raise ValueError("construction needs s >= 5")
    x, y, z = PLANE.gens()
    a = [k + 2 for k in range(s - 2)]
    cfg = PointConfiguration.of(*([(1, ai, 0) for ai in a] + [(0, 0, 1), (1, 1, 1)]))
    G = _product(PLANE, [y - ai * x for ai in a])
    G = G * Fraction(-1, _product_int(1 - ai for ai in a))
    f = G + y * z ** (s - 3)
    q = x * z - y * z
    c = z * y ** 2 - y * z ** 2
    J = Ideal(PLANE, [q, c, f])
    I = jacobian(J, 2).jacobian_ideal
    # the witness y^(2s-8) G -/+ y z^(2s-3): the z-term sign must match
    # the sign pairing in f (G(1,1,1) = -1 here), or it misses [1:1:1]
    E = y ** (2 * s - 8) * G + y * z ** (2 * s - 3)
    H = G.differentiate("y")
    fx = f.differentiate("x")
    paper_I = Ideal(PLANE, [x * z - y * z, y ** 2 * z, y * z ** 2, z ** 3,
                            G, (y - x) * fx, (y - x) * H, y ** 2 * fx])
    frak_b = Ideal(PLANE, [G, (y - x) * fx, (y - x) * H, y ** 2 * fx])
    return {"cfg": cfg, "J": J, "I": I, "G": G, "f": f, "E": E,
            "paper_I": paper_I, "frak_b": frak_b, "s": s}


def _product_int(values):
    out = 1
    for v in values:
        out *= v
    return out


def build_s3fold(s: int = 9):
    """The (s-3)-fold collinear configuration with the remaining three
    points in general position: [a_i:1:0], [1:0:1], [0:1:1], [0:0:1]."""
    if s < 6:
        raise ValueError("construction needs s >= 6")
    x, y, z = PLANE.gens()
    a = [k + 2 for k in range(s - 3)]
    cfg = PointConfiguration.of(*([(ai, 1, 0) for ai in a]
                                  + [(1, 0, 1), (0, 1, 1), (0, 0, 1)]))
    frak_a = Ideal(PLANE, [z * x * y, x ** 2 * z - x * z ** 2, y ** 2 * z - y * z ** 2])
    f = _product(PLANE, [x - ai * y for ai in a])
    e = _product_int(a)
    # the last generator is f + z^(s-4) * l with the linear form l fixed
    # by vanishing at [1:0:1] and [0:1:1]; for even s this is e*y - x
    sign = (-1) ** (s - 3)
    ell = -x - sign * e * y
    J = Ideal(PLANE, list(frak_a.generators) + [f + z ** (s - 4) * ell])
    I = jacobian(J, 2).jacobian_ideal
    # lines from the first two collinear points to [1:0:1] and [0:1:1]
    l1 = x - a[0] * y - z
    l2 = x - a[1] * y + a[1] * z
    G = l1 * l2 * _product(PLANE, [x - ai * y for ai in a[2:]])
    fx, fy = f.differentiate("x"), f.differentiate("y")
    frak_b = Ideal(PLANE, [f, x ** 2 * fx, x ** 2 * fy, y ** 2 * fx, y ** 2 * fy])
    paper_I = Ideal(PLANE, list(frak_a.generators)
                    + [x * z ** 3, y * z ** 3, z ** 4, f,
                       x ** 2 * fx, x ** 2 * fy, y ** 2 * fx, y ** 2 * fy])
    # witness y^(2s-10) f - c y z^(3s-14): the scalar c makes it vanish
    # at [0:1:1] (the published form leaves such scalars unspecified)
    witness = y ** (2 * s - 10) * f - sign * e * y * z ** (3 * s - 14)
    return {"cfg": cfg, "J": J, "I": I, "G": G, "f": f, "frak_a": frak_a,
            "frak_b": frak_b, "paper_I": paper_I, "witness": witness, "s": s}


def xoff_series(s: int) -> HilbertSeries:
    """(1 + 2t + 2t^2 + t^3 + ... + t^(s-3)) / (1 - t)."""
    numerator = [1, 2] + [2] + [1] * (s - 5)
    return HilbertSeries(tuple(numerator), 1)


def s3fold_series(s: int) -> HilbertSeries:
    """(1 + 2t + 3t^2 + t^3 + ... + t^(s-4)) / (1 - t)."""
    numerator = [1, 2, 3] + [1] * (s - 6)
    return HilbertSeries(tuple(numerator), 1)


def glp_initial_monomials(d: int) -> list[tuple]:
    """x^(d-1)y, ..., x y^(d-1), x^(d-1)z, x^(d-2)yz, y^d z."""
    out = [(d - i, i, 0) for i in range(1, d)]
    out += [(d - 1, 0, 1), (d - 2, 1, 1), (0, d, 1)]
    return sorted(out)


# ---------------------------------------------------------------------------
# claim runners
# ---------------------------------------------------------------------------

def run_r15b() -> ClaimResult:
    x, y, z = PLANE.gens()
    J, I, f = collinear_pair(4)
    report = vv_torsion_free(J, I, 4)
    fail = report.first_failure()
    w = y ** 4 * f
    witness_ok = (w in J and w in I.power(2) and w not in J * I)
    ok = (not report.torsion_free and fail is not None and fail.t == 2
          and witness_ok)
    return _verdict("R15b", ok, {
        "f": str(f),
        "fails_at_t": fail.t if fail else None,
        "graded_dims": {str(k): v for k, v in (fail.graded_dims if fail else {}).items()},
        "canonical_witness": str(fail.witness) if fail else None,
        "y4f_is_witness": witness_ok,
    })


def run_t22(s: int = 6) -> ClaimResult:
    R, f, frak_a = nearly_collinear_socle(s)
    meet = Ideal(R, [f]).intersect(frak_a.power(2))
    prod = Ideal(R, [f]) * frak_a
    hs_meet = hilbert_series(meet)
    hs_prod = hilbert_series(prod)
    unequal = not meet.equals(prod)
    details = {
        "s": s,
        "hs_meet": hs_meet.to_json(),
        "hs_prod": hs_prod.to_json(),
        "ideals_differ": unequal,
    }
    ok = unequal
    if s >= 6:
        exp_meet = _t22_meet_series(s)
        exp_prod = _t22_prod_series(s)
        details["printed_meet_matches"] = hs_meet == exp_meet
        details["printed_prod_matches"] = hs_prod == exp_prod
        ok = ok and hs_meet == exp_meet and hs_prod == exp_prod
    return _verdict("T22", ok, details)


def _t22_meet_series(s: int) -> HilbertSeries:
    # 1 + t + ... + t^(2s-3), -3 t^(2s-2), -1 on (2s-1 .. 3s-8), -2 t^(3s-7)
    coeffs = [1] * (2 * s - 2) + [-3] + [-1] * (s - 6) + [-2]
    return HilbertSeries(tuple(coeffs), 1)


def _t22_prod_series(s: int) -> HilbertSeries:
    # 1 + t + ... + t^(2s-3), -3 t^(2s-2), -1 on (2s-1 .. 3s-7), -1 t^(3s-6)
    coeffs = [1] * (2 * s - 2) + [-3] + [-1] * (s - 5) + [-1]
    return HilbertSeries(tuple(coeffs), 1)


def run_t23(s: int = 8) -> ClaimResult:
    data = build_xoff(s)
    J, I, E = data["J"], data["I"], data["E"]
    points_ideal = ideal_of_points(data["cfg"])
    hs = hilbert_series(J)
    series_ok = hs == xoff_series(s)
    ideal_ok = J.equals(points_ideal)
    paper_I_ok = I.equals(data["paper_I"])
    socle = data["frak_b"].min_pure_power("y")
    witness_ok = (E in J and E in I.power(2) and E not in J * I)
    piece = vv_piece(J, I, 2)
    ok = (series_ok and ideal_ok and paper_I_ok and witness_ok
          and bool(piece) and socle == 2 * s - 7)
    # the s = 7 off-variant carries no published claim; compute and report
    side = build_xoff(7)
    s7_nonzero = bool(vv_piece(side["J"], side["I"], 2))
    return _verdict("T23", ok, {
        "s": s,
        "hs_matches_printed": series_ok,
        "J_equals_points_ideal": ideal_ok,
        "I_matches_paper_generators": paper_I_ok,
        "witness": str(E),
        "witness_valid": witness_ok,
        "piece_t2_nonzero": bool(piece),
        "min_y_power_in_b": socle,
        "expected_min_y_power": 2 * s - 7,
        "s7_offvariant_piece_nonzero_no_claim": s7_nonzero,
    })


def run_t24(s: int = 9) -> ClaimResult:
    data = build_s3fold(s)
    J, I, G, w = data["J"], data["I"], data["G"], data["witness"]
    colon = data["frak_a"].quotient(Ideal(PLANE, [G]))
    z = PLANE.variable("z")
    colon_ok = colon.equals(Ideal(PLANE, [z]))
    points_ideal = ideal_of_points(data["cfg"])
    ideal_ok = J.equals(points_ideal)
    series_ok = hilbert_series(J) == s3fold_series(s)
    paper_I_ok = I.equals(data["paper_I"])
    socle = data["frak_b"].min_pure_power("y")
    witness_ok = (w in J and w in I.power(2) and w not in J * I)
    ok = (colon_ok and ideal_ok and series_ok and paper_I_ok and witness_ok
          and socle == 2 * s - 9)
    return _verdict("T24", ok, {
        "s": s,
        "colon_equals_z": colon_ok,
        "J_equals_points_ideal": ideal_ok,
        "hs_matches_printed": series_ok,
        "I_matches_paper_generators": paper_I_ok,
        "witness": str(w),
        "witness_valid": witness_ok,
        "min_y_power_in_b": socle,
        "expected_min_y_power": 2 * s - 9,
    })


def five_point_case(k: int) -> tuple[PointConfiguration, Ideal, Ideal]:
    cfg = sample_config(f"5-{k}", SEED)
    jd = jacobian_of_points(cfg)
    return cfg, jd.base_ideal, jd.jacobian_ideal


def six_point_case(k: int) -> tuple[PointConfiguration, Ideal, Ideal]:
    cfg = sample_config(f"6-{k}", SEED)
    jd = jacobian_of_points(cfg)
    return cfg, jd.base_ideal, jd.jacobian_ideal


def run_p41() -> ClaimResult:
    verdicts = {}
    extras = {}
    for k in range(1, 6):
        cfg, J, I = five_point_case(k)
        report = vv_torsion_free(J, I, 5)
        verdicts[k] = report.torsion_free
        if k == 1:
            hs = hilbert_series(J)
            mg = minimal_generators_mod(I, J)
            rees = relation_type(J, I, 5)
            extras = {
                "hs_label1": hs.to_json(),
                "hs_label1_matches": hs == HilbertSeries((1, 2, 2), 1),
                "jacobian_minimal_degrees_mod_J": sorted(g.degree() for g in mg),
                "relation_type_label1": rees.relation_type,
            }
    expected = {1: True, 2: False, 3: False, 4: True, 5: True}
    ok = (verdicts == expected
          and extras.get("hs_label1_matches", False)
          and extras.get("jacobian_minimal_degrees_mod_J") == [3, 3, 3, 3]
          and extras.get("relation_type_label1") == 2)
    return _verdict("P41", ok, {
        "verdicts": {str(k): v for k, v in verdicts.items()},
        "expected": {str(k): v for k, v in expected.items()},
        **extras,
    })


def run_p44() -> ClaimResult:
    verdicts = {}
    witness_checks = {}
    for k in range(1, 12):
        cfg, J, I = six_point_case(k)
        report = vv_torsion_free(J, I, 6)
        verdicts[k] = report.torsion_free
        if k in (7, 11):
            conic = conic_through(cfg.points)
            n = I.min_pure_power("z")
            z = PLANE.variable("z")
            w = z ** (n - 1) * conic
            witness_checks[k] = (conic is not None and n is not None
                                 and w in J and w in I.power(2)
                                 and w not in J * I)
    expected = {k: k not in (2, 3, 7, 11) for k in range(1, 12)}
    ok = verdicts == expected and all(witness_checks.values())
    return _verdict("P44", ok, {
        "verdicts": {str(k): v for k, v in verdicts.items()},
        "expected": {str(k): v for k, v in expected.items()},
        "conic_witness_valid": {str(k): v for k, v in witness_checks.items()},
    })


def run_p42(d_values: tuple[int, ...] = (3, 4)) -> ClaimResult:
    details = {}
    ok = True
    for d in d_values:
        s = (d + 1) * d // 2
        cfg = glp_normalized_config(s)
        gens = glp_binomial_generators(d, cfg)
        J = Ideal(PLANE, gens)
        points_ideal = ideal_of_points(cfg)
        equal = J.equals(points_ideal)
        leads = sorted(initial_ideal(J).gens)
        leads_ok = leads == glp_initial_monomials(d)
        hf_ok = all(hilbert_function(J, t) == min(s, math.comb(t + 2, 2))
                    for t in range(0, d + 3))
        alphas_nonzero = all(
            c != 0 for g in gens for c in g.terms.values())
        details[f"d{d}"] = {
            "ideal_equality": equal,
            "initial_ideal_matches": leads_ok,
            "hilbert_function_matches": hf_ok,
            "all_coefficients_nonzero": alphas_nonzero,
        }
        ok = ok and equal and leads_ok and hf_ok and alphas_nonzero
    return _verdict("P42", ok, details)


def _run_power_identity(d: int, claim: str) -> ClaimResult:
    s = (d + 1) * d // 2
    cfg = glp_normalized_config(s)
    gens = glp_binomial_generators(d, cfg)
    J = Ideal(PLANE, gens)
    jd = jacobian(J, 2)
    e = 2 * d - 2
    contains = mpower_in_ideal(jd.minor_ideal, e)
    # the minors are forms of degree >= e, so containment means equality
    min_minor_degree = min(g.degree() for g in jd.minor_ideal.generators)
    ok = contains and min_minor_degree >= e
    return _verdict(claim, ok, {
        "d": d, "s": s, "power": e,
        "minors_contain_m_power": contains,
        "min_minor_degree": min_minor_degree,
    })


def run_p43() -> ClaimResult:
    return _run_power_identity(3, "P43")


def run_rem_d4() -> ClaimResult:
    return _run_power_identity(4, "REM-d4")


def run_rem_d5() -> ClaimResult:
    return _run_power_identity(5, "REM-d5")


def run_atfn() -> ClaimResult:
    results = {}
    ok = True
    for s, k_range in ((5, range(1, 6)), (6, range(1, 12))):
        for k in k_range:
            cfg, J, I = (five_point_case(k) if s == 5 else six_point_case(k))
            rees = relation_type(J, I, s)
            results[f"{s}-{k}"] = rees.relation_type
            ok = ok and rees.relation_type <= s
    return _verdict("ATFN", ok, {"relation_types": results})


def run_conj(d: int = 6, seed: int = 1, trials: int = 3) -> ClaimResult:
    s = (d + 1) * d // 2
    e = 2 * d - 2
    findings = []
    for trial in range(trials):
        cfg = _random_glp_config(s, seed + trial)
        gens = glp_binomial_generators(d, cfg)
        J = Ideal(PLANE, gens)
        jd = jacobian(J, 2)
        holds = mpower_in_ideal(jd.jacobian_ideal, e)
        findings.append({"trial": trial, "seed": seed + trial,
                         "m_power_contained": holds})
    return ClaimResult("CONJ-d6" if d == 6 else f"CONJ-d{d}", "indeterminate", {
        "status_note": "experimental: conjecture has no published truth value",
        "d": d, "s": s, "power": e,
        "findings": findings,
    })


def _random_glp_config(s: int, seed: int) -> PointConfiguration:
    import random as _random
    from .geometry import collinear, ProjectivePoint
    rng = _random.Random(seed)
    pts = [ProjectivePoint.of(1, 0, 0), ProjectivePoint.of(0, 1, 0),
           ProjectivePoint.of(0, 0, 1), ProjectivePoint.of(1, 1, 1)]
    import itertools as _it
    attempts = 0
    while len(pts) < s:
        attempts += 1
        if attempts > 10_000:
            raise RuntimeError("could not sample a general-position configuration")
        cand = ProjectivePoint.of(rng.randint(-30, 30), rng.randint(-30, 30), 1)
        if cand in pts:
            continue
        if any(collinear(p, q, cand) for p, q in _it.combinations(pts, 2)):
            continue
        pts.append(cand)
    return PointConfiguration(tuple(pts))


REGISTRY: dict[str, ClaimSpec] = {}


def _register(spec: ClaimSpec):
    REGISTRY[spec.id] = spec


_register(ClaimSpec("R15b", "4 collinear points: nonzero piece at t=2 with "
                    "witness y^(2s-4) f", run_r15b))
_register(ClaimSpec("T22", "5-fold collinear at s=6: (f) cap a^2 != (f) a with "
                    "the printed Hilbert series", run_t22))
_register(ClaimSpec("T23", "(s-2)-fold collinear (off variant) at s=8: ideal "
                    "identification and degree-2 witness", run_t23))
_register(ClaimSpec("T24", "(s-3)-fold collinear at s=9: colon identity and "
                    "degree-2 witness", run_t24, slow=True))
_register(ClaimSpec("P41", "five 5-point classes: torsion-free exactly {1,4,5}",
                    run_p41))
_register(ClaimSpec("P44", "eleven 6-point classes: torsion exactly {2,3,7,11}",
                    run_p44))
_register(ClaimSpec("P42", "binomial(d+1,2) general points: explicit "
                    "generators, initial ideal, Hilbert function (d=3,4)", run_p42))
_register(ClaimSpec("P43", "6 general points: 2-minors ideal is m^4", run_p43))
_register(ClaimSpec("REM-d4", "10 general points: 2-minors ideal is m^6",
                    run_rem_d4))
_register(ClaimSpec("REM-d5", "15 general points: 2-minors ideal is m^8",
                    run_rem_d5, slow=True))
_register(ClaimSpec("ATFN", "relation type bounded by the point count on all "
                    "sampled 5- and 6-point classes", run_atfn))
_register(ClaimSpec("CONJ-d6", "m^(2d-2) in the Jacobian ideal for d=6: "
                    "experimental trials", run_conj))

#: alternate spellings accepted by the command line
ALIASES = {"T22-claim": "T22"}


def run_claim(claim_id: str) -> ClaimResult:
    cid = ALIASES.get(claim_id, claim_id)
    if cid not in REGISTRY:
        raise KeyError(f"unknown claim id {claim_id!r}")
    return REGISTRY[cid].runner()
