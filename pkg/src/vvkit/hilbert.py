"""Hilbert functions and Hilbert series of graded quotients R/I.

Both are computed through the degrevlex initial ideal (Macaulay's
theorem): the function by counting standard monomials degree by
degree, the series by the pivot-variable splitting recursion on the
monomial ideal.  The series is returned fully reduced, as a numerator
over (1 - t)**pole_order.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .groebner import MonomialIdeal, initial_ideal, minimalize_monomials
from .ideals import Ideal
from .poly import monomials_of_degree

#: recursion guardrail for the monomial-ideal splitting
MAX_NODES = 10_000


class RecursionBudgetError(RuntimeError):
    """The Hilbert-series recursion exceeded its node budget."""


@dataclass(frozen=True)
class HilbertSeries:
    """Reduced rational form sum(h_i t^i) / (1 - t)**pole_order."""

    numerator: tuple[int, ...]
    pole_order: int

    def __post_init__(self):
        if self.numerator and self.numerator[-1] == 0 and len(self.numerator) > 1:
            raise ValueError("numerator must have no trailing zeros")

    def coefficient(self, d: int) -> int:
        """The coefficient of t^d in the power-series expansion."""
        if d < 0:
            return 0
        e = self.pole_order
        if e == 0:
            return self.numerator[d] if d < len(self.numerator) else 0
        total = 0
        for i, h in enumerate(self.numerator):
            if i > d:
                break
            total += h * math.comb(d - i + e - 1, e - 1)
        return total

    def numerator_sum(self) -> int:
        return sum(self.numerator)

    def degree(self) -> int:
        return len(self.numerator) - 1

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator), "pole_order": self.pole_order}

    def _combine(self, other: "HilbertSeries", sign: int) -> "HilbertSeries":
        e = max(self.pole_order, other.pole_order)
        a = _poly_mul(self.numerator, _one_minus_t_power(e - self.pole_order))
        b = _poly_mul(other.numerator, _one_minus_t_power(e - other.pole_order))
        n = max(len(a), len(b))
        out = [(a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0)
               for i in range(n)]
        return _reduced(out, e)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self._combine(other, -1)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self._combine(other, 1)

    def __str__(self):
        terms = []
        for i, h in enumerate(self.numerator):
            if h:
                if i == 0:
                    terms.append(str(h))
                else:
                    mono = "t" if i == 1 else f"t^{i}"
                    terms.append(mono if h == 1 else f"{h}*{mono}" if h != -1 else f"-{mono}")
        num = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        if self.pole_order == 0:
            return num
        return f"({num})/(1 - t)^{self.pole_order}"


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


@functools.lru_cache(maxsize=None)
def _one_minus_t_power(k: int) -> tuple[int, ...]:
    return tuple(math.comb(k, i) * (-1) ** i for i in range(k + 1))


def _reduced(numerator: list[int], pole: int) -> HilbertSeries:
    coeffs = list(numerator)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return HilbertSeries((0,), 0)
    while pole > 0 and sum(coeffs) == 0:
        # synthetic division by (1 - t)
        out = []
        acc = 0
        for c in coeffs[:-1]:
            acc += c
            out.append(acc)
        coeffs = out
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        pole -= 1
        if not coeffs:
            return HilbertSeries((0,), 0)
    return HilbertSeries(tuple(coeffs), pole)


# ---------------------------------------------------------------------------
# monomial-ideal numerator recursion
# ---------------------------------------------------------------------------

def _numerator(gens: frozenset[tuple], n_vars: int, memo: dict, budget: list) -> tuple[int, ...]:
    if gens in memo:
        return memo[gens]
    budget[0] += 1
    if budget[0] > MAX_NODES:
        raise RecursionBudgetError(f"more than {MAX_NODES} recursion nodes")
    if not gens:
        result = (1,)
    else:
        supports = [tuple(i for i, e in enumerate(g) if e) for g in gens]
        if all(not (set(a) & set(b)) for i, a in enumerate(supports)
               for b in supports[i + 1:]):
            result = (1,)
            for g in gens:
                result = tuple(_poly_sub(result, _shift(result, sum(g))))
        else:
            counts = [0] * n_vars
            for g in gens:
                for i, e in enumerate(g):
                    if e:
                        counts[i] += 1
            pivot = counts.index(max(counts))
            plus = frozenset(g for g in gens if g[pivot] == 0) | \
                   {tuple(1 if i == pivot else 0 for i in range(n_vars))}
            colon = frozenset(minimalize_monomials(
                tuple(e - 1 if i == pivot and e else e for i, e in enumerate(g))
                for g in gens))
            a = _numerator(frozenset(minimalize_monomials(plus)), n_vars, memo, budget)
            b = _numerator(colon, n_vars, memo, budget)
            result = tuple(_poly_sub(_pad(a, len(b) + 1), _neg_shift(b)))
    memo[gens] = result
    return result


def _shift(p, k):
    return (0,) * k + tuple(p)

def _pad(p, n):
    return tuple(p) + (0,) * max(0, n - len(p))

def _neg_shift(p):
    return tuple(-c for c in _shift(p, 1))

def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (0,)


@functools.lru_cache(maxsize=4096)
def _series_of_monomial_ideal(mi: MonomialIdeal) -> HilbertSeries:
    n = mi.ring.arity
    memo: dict = {}
    numer = _numerator(frozenset(mi.gens), n, memo, [0])
    return _reduced(list(numer), n)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def hilbert_function(I: Ideal, d: int) -> int:
    """dim_k (R/I)_d via standard monomials of the degrevlex initial ideal."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if not I.is_homogeneous():
        raise ValueError("Hilbert function needs a homogeneous ideal")
    n = I.ring.arity
    if I.is_zero():
        return math.comb(d + n - 1, n - 1)
    leads = initial_ideal(I).gens
    return _standard_count(leads, n, d)


@functools.lru_cache(maxsize=65536)
def _standard_count_cached(leads: tuple, n_vars: int, d: int) -> int:
    count = 0
    for m in monomials_of_degree(n_vars, d):
        if not any(all(g[i] <= m[i] for i in range(n_vars)) for g in leads):
            count += 1
    return count


def _standard_count(leads, n_vars, d):
    return _standard_count_cached(tuple(leads), n_vars, d)


def hilbert_series(I: Ideal) -> HilbertSeries:
    """Exact reduced Hilbert series of R/I for homogeneous nonzero I."""
    if I.is_zero():
        raise ValueError("Hilbert series of the full ring is not reduced-form")
    if not I.is_homogeneous():
        raise ValueError("Hilbert series needs a homogeneous ideal")
    return _series_of_monomial_ideal(initial_ideal(I))
