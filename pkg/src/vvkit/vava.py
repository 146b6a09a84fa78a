"""Valabrega-Valla pieces, torsion-freeness verdicts, witnesses, and
Rees-algebra relation type.

For a pair J in I the degree-t piece is (J cap I^t)/(J * I^(t-1)).
Equality is decided cheapest-first: the two Hilbert series are
compared (a mismatch proves inequality outright), and on a match the
reduced degrevlex bases are compared for the definitive answer.  The
graded dimensions of a nonzero piece are the coefficients of the
series difference, which is a polynomial because I is m-primary
modulo J.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _linalg
from .groebner import (PREFILTER_PRIME, mod_p_lead_skeleton, normal_form,
                       truncated_basis)
from .hilbert import HilbertSeries, hilbert_series
from .ideals import Ideal, minimal_generators_mod
from .poly import (Polynomial, PolyRing, elimination_order,
                   monomials_of_degree)

log = logging.getLogger("vvkit.vava")


class PairError(ValueError):
    """The (J, I) pair violates a precondition."""


class RelationTypeBoundError(RuntimeError):
    """Minimal Rees relations persist beyond the search bound."""


@dataclass(frozen=True)
class VVPiece:
    t: int
    equal: bool
    graded_dims: dict[int, int]
    witness: Polynomial | None

    def to_json(self) -> dict:
        return {"t": self.t, "equal": self.equal,
                "graded_dims": {str(d): v for d, v in sorted(self.graded_dims.items())},
                "witness": str(self.witness) if self.witness is not None else None}


@dataclass(frozen=True)
class VVReport:
    base: Ideal
    jacobian: Ideal
    tmax: int
    per_t: tuple[VVPiece, ...]
    torsion_free: bool

    def first_failure(self) -> VVPiece | None:
        for piece in self.per_t:
            if not piece.equal:
                return piece
        return None

    def to_json(self) -> dict:
        return {"tmax": self.tmax,
                "torsion_free": self.torsion_free,
                "per_t": [p.to_json() for p in self.per_t]}


@dataclass(frozen=True)
class ReesPresentation:
    relation_type: int
    generator_bidegrees: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"relation_type": self.relation_type,
                "generator_bidegrees": [list(b) for b in self.generator_bidegrees]}


# ---------------------------------------------------------------------------
# pieces and verdicts
# ---------------------------------------------------------------------------

def _check_pair(J: Ideal, I: Ideal):
    if J.ring != I.ring:
        raise PairError("J and I live in different rings")
    if J.is_zero() or I.is_zero():
        raise PairError("J and I must be nonzero")
    if not I.contains_ideal(J):
        raise PairError("J is not contained in I")


def _series_dims(hs_product: HilbertSeries, hs_meet: HilbertSeries) -> dict[int, int]:
    diff = hs_product - hs_meet
    if diff.pole_order != 0:
        raise PairError("piece has infinite length; I is not m-primary modulo J")
    dims = {d: c for d, c in enumerate(diff.numerator) if c}
    if any(v < 0 for v in dims.values()):
        raise AssertionError("negative graded dimension: containment violated")
    return dims


def _meet_series(J: Ideal, I_t: Ideal) -> HilbertSeries:
    """Hilbert series of R/(J cap I^t) from the exact sequence
    0 -> R/(J cap I^t) -> R/J + R/I^t -> R/(J + I^t) -> 0, which needs
    only degrevlex bases in the base ring (no elimination)."""
    return hilbert_series(J) + hilbert_series(I_t) - hilbert_series(J + I_t)


def _piece_ideals(J: Ideal, I_t: Ideal, J_It1: Ideal) -> tuple[bool, dict[int, int], Ideal, Ideal | None]:
    """Decide J cap I^t = J * I^(t-1), cheapest first.

    The product is contained in the meet by construction, so equality
    of the two Hilbert series already proves equality of the ideals;
    the meet ideal itself (an elimination) is only materialized on
    failure, for the witness.
    """
    product = J_It1
    hs_product = hilbert_series(product)
    hs_meet = _meet_series(J, I_t)
    if hs_product == hs_meet:
        return True, {}, product, None
    meet = J.intersect(I_t)
    if hilbert_series(meet) != hs_meet:
        raise AssertionError("meet series disagrees with its exact-sequence value")
    return False, _series_dims(hs_product, hs_meet), product, meet


def vv_piece(J: Ideal, I: Ideal, t: int) -> dict[int, int]:
    """Per-degree dimensions of (J cap I^t)/(J * I^(t-1))."""
    if t < 2:
        raise ValueError("the module starts at t = 2")
    _check_pair(J, I)
    _, dims, _, _ = _piece_ideals(J, I.power(t), J * I.power(t - 1))
    return dims


def _canonical_witness(product: Ideal, meet: Ideal, dims: dict[int, int]) -> Polynomial:
    """Least-degree element of the meet with nonzero normal form against
    the product: first vector of the canonical graded basis."""
    d = min(dims)
    rows, _, monomials = meet.graded_piece(d)
    gb = product.groebner_basis()
    for row in rows:
        w = Polynomial(meet.ring, {m: c for m, c in zip(monomials, row) if c})
        if not normal_form(w, gb).is_zero():
            return w
    raise AssertionError("nonzero piece without a witness")


def vv_witness(J: Ideal, I: Ideal, t: int) -> Polynomial | None:
    """A minimal-degree witness in J cap I^t but outside J * I^(t-1),
    or None when the piece vanishes."""
    if t < 2:
        raise ValueError("the module starts at t = 2")
    _check_pair(J, I)
    equal, dims, product, meet = _piece_ideals(J, I.power(t), J * I.power(t - 1))
    if equal:
        return None
    return _canonical_witness(product, meet, dims)


def vv_torsion_free(J: Ideal, I: Ideal, s: int,
                    tmax: int | None = None,
                    prefilter: bool = False) -> VVReport:
    """Check J cap I^t = J * I^(t-1) for t = 2..s (the multiplicity
    bound for s reduced points); stops at the first failure, which is
    recorded with a witness.

    With ``prefilter`` the Hilbert comparison is first predicted over
    GF(2^31-1); the prediction is logged and every verdict is
    re-proved over the rationals regardless.
    """
    _check_pair(J, I)
    if hilbert_series(I).pole_order != 0:
        raise PairError("I is not m-primary: configuration is not reduced "
                        "or the pair is malformed")
    bound = tmax if tmax is not None else s
    if bound < 2:
        raise ValueError("need tmax >= 2")
    pieces: list[VVPiece] = []
    power = I          # becomes I^t at the top of each iteration
    product = J * I    # J * I^(t-1)
    for t in range(2, bound + 1):
        power = power * I
        if t > 2:
            product = product * I
        if prefilter:
            _log_prefilter_prediction(J, power, product, t)
        equal, dims, prod_ideal, meet_ideal = _piece_ideals(J, power, product)
        witness = None
        if not equal:
            witness = _canonical_witness(prod_ideal, meet_ideal, dims)
            if t > 2:
                log.info("first nonzero piece at t=%d (not at t=2)", t)
            pieces.append(VVPiece(t, False, dims, witness))
            break
        pieces.append(VVPiece(t, True, {}, None))
    verdict = all(p.equal for p in pieces)
    return VVReport(J, I, bound, tuple(pieces), verdict)


def _log_prefilter_prediction(J: Ideal, power: Ideal, product: Ideal, t: int):
    """Predict the t-th equality from GF(p) lead skeletons only: the
    meet's Hilbert series follows from dim(A cap B) = dim A + dim B -
    dim(A + B), so no elimination is needed.  Logged, never trusted."""
    from .hilbert import _series_of_monomial_ideal
    from .groebner import MonomialIdeal
    ring = J.ring
    skeletons = [mod_p_lead_skeleton(g) for g in
                 (J.generators, power.generators,
                  (J + power).generators, product.generators)]
    if any(s is None for s in skeletons):
        log.info("prefilter: unlucky prime %d at t=%d", PREFILTER_PRIME, t)
        return
    hs_j, hs_pow, hs_sum, hs_prod = (
        _series_of_monomial_ideal(MonomialIdeal.from_monomials(ring, s))
        for s in skeletons)
    predicted_meet = hs_j + hs_pow - hs_sum
    log.info("prefilter (mod %d) predicts equality=%s at t=%d",
             PREFILTER_PRIME, predicted_meet == hs_prod, t)


def mpower_in_ideal(I: Ideal, e: int) -> bool:
    """True iff every degree-e monomial reduces to zero against GB(I)."""
    if e < 0:
        raise ValueError("power must be nonnegative")
    R = I.ring
    one = Fraction(1)
    return all(Polynomial(R, {m: one}) in I
               for m in monomials_of_degree(R.arity, e))


# ---------------------------------------------------------------------------
# Rees relation type
# ---------------------------------------------------------------------------

def relation_type(J: Ideal, I: Ideal, bound: int) -> ReesPresentation:
    """Relation type of I/J: the largest fiber degree among minimal
    bihomogeneous generators of the Rees kernel, built by eliminating
    the parameter from J + (T_i - a_i t) and extracting generators
    fiber degree by fiber degree up to the bound.

    The elimination is truncated in the fiber grading at bound + 1:
    that window is enough to extract every minimal generator of fiber
    degree <= bound and to detect ones immediately past it, which
    raise :class:`RelationTypeBoundError` (reported, not guessed).
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if I.is_zero():
        raise PairError("I must be nonzero")
    if J.ring != I.ring:
        raise PairError("J and I live in different rings")
    if not J.is_zero() and not I.contains_ideal(J):
        raise PairError("J is not contained in I")
    R = I.ring
    gens_a = minimal_generators_mod(I, None if J.is_zero() else J)
    if not gens_a:
        return ReesPresentation(1, ())
    n = len(gens_a)
    weights = [g.degree() for g in gens_a]
    fiber_names = tuple(f"T{i + 1}" for i in range(n))
    if set(fiber_names) & set(R.variables):
        raise PairError("ring variables collide with the fiber names T1..Tn")
    param = "t" if "t" not in R.variables + fiber_names else "t0"
    ext = PolyRing((param,) + R.variables + fiber_names)

    def lift(p: Polynomial) -> Polynomial:
        return Polynomial(ext, {(0,) + e + (0,) * n: c
                                for e, c in p.terms.items()})

    t_var = ext.variable(param)
    gens = [lift(g) for g in J.generators]
    for i, a in enumerate(gens_a):
        gens.append(ext.variable(fiber_names[i]) - lift(a) * t_var)
    window = bound + 1
    fiber_weights = (1,) + (0,) * R.arity + (1,) * n
    raw = truncated_basis(gens, elimination_order(1), fiber_weights, window)
    kernel_ring = PolyRing(R.variables + fiber_names)
    elements = []
    for g in raw:
        if any(e[0] for e in g.terms):
            continue
        elements.append(Polynomial(kernel_ring,
                                   {e[1:]: c for e, c in g.terms.items()}))
    nR = R.arity

    def bidegree(e: tuple) -> tuple[int, int]:
        fiber = sum(e[nR:])
        base = sum(e[:nR]) + sum(w * k for w, k in zip(weights, e[nR:]))
        return base, fiber

    elem_bidegs = []
    for g in elements:
        bds = {bidegree(e) for e in g.terms}
        if len(bds) != 1:
            raise AssertionError("Rees kernel element is not bihomogeneous")
        elem_bidegs.append(bds.pop())
    candidates = sorted({bd for bd in elem_bidegs if 1 <= bd[1] <= window},
                        key=lambda bd: (bd[1], bd[0]))
    found: list[tuple[int, int]] = []
    for p_deg, q_deg in candidates:
        piece_rows, _ = _bigraded_piece(elements, kernel_ring, weights, nR,
                                        p_deg, q_deg, include_units=True)
        old_rows, _ = _bigraded_piece(elements, kernel_ring, weights, nR,
                                      p_deg, q_deg, include_units=False)
        new = _linalg.int_rank(piece_rows) - _linalg.int_rank(old_rows)
        if new and q_deg > bound:
            raise RelationTypeBoundError(
                f"minimal relations of fiber degree {q_deg} exceed the bound {bound}")
        found.extend([(p_deg, q_deg)] * new)
    rt = max((q for _, q in found), default=1)
    return ReesPresentation(rt, tuple(sorted(found)))


def _bigraded_piece(elements, ring: PolyRing, weights: list[int], n_base: int,
                    p_deg: int, q_deg: int, include_units: bool) -> tuple[list, list]:
    """Integer row span of the kernel's bidegree (p, q) piece.  With
    include_units=False only multiples by a nonunit monomial are taken,
    spanning ((all variables) * K) in that bidegree."""
    monomials = _bigraded_monomials(n_base, weights, p_deg, q_deg)
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    for g in elements:
        e0 = next(iter(g.terms))
        gp = sum(e0[:n_base]) + sum(w * k for w, k in zip(weights, e0[n_base:]))
        gq = sum(e0[n_base:])
        dp, dq = p_deg - gp, q_deg - gq
        if dp < 0 or dq < 0:
            continue
        den = 1
        for c in g.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = {e: int(c * den) for e, c in g.terms.items()}
        content = 0
        for v in ints.values():
            content = math.gcd(content, v)
            if content == 1:
                break
        if content > 1:
            ints = {e: v // content for e, v in ints.items()}
        for mult in _bigraded_monomials(n_base, weights, dp, dq):
            if not include_units and not any(mult):
                continue
            row = [0] * len(monomials)
            for e, c in ints.items():
                key = tuple(a + b for a, b in zip(e, mult))
                row[index[key]] = c
            rows.append(row)
    return rows, monomials


def _bigraded_monomials(n_base: int, weights: list[int], p_deg: int, q_deg: int) -> list[tuple]:
    """Monomials of the bigraded ring with base degree p and fiber degree q."""
    out = []
    for beta in _compositions(q_deg, len(weights)):
        used = sum(w * b for w, b in zip(weights, beta))
        rem = p_deg - used
        if rem < 0:
            continue
        for m in monomials_of_degree(n_base, rem):
            out.append(m + beta)
    return out


def _compositions(total: int, parts: int) -> list[tuple]:
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for v in range(remaining + 1):
            rec(prefix + (v,), remaining - v, slots - 1)
    rec((), total, parts)
    return out
