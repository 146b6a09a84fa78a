"""Ideal-level algebra on top of the Groebner kernel.

An :class:`Ideal` is a generator list with a per-order cache of reduced
Groebner bases.  Equality always means equality of reduced bases, never
of generator lists.  Intersection, quotient, and elimination all run
through one auxiliary-variable elimination engine.
"""

from __future__ import annotations

import itertools
import math
import threading
from fractions import Fraction
from typing import Iterable

from . import _linalg
from .groebner import (GroebnerBasis, MonomialIdeal, initial_ideal,
                       inter_reduce, is_groebner_basis, normal_form,
                       reduced_groebner_basis)
from .poly import (DEGREVLEX, MonomialOrder, Polynomial, PolyRing,
                   RingMismatchError, elimination_order, monomials_of_degree)


class Ideal:
    """A homogeneous or general ideal given by generators."""

    __slots__ = ("ring", "generators", "_cache", "_lock")

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator in the wrong ring")
            if not g.is_zero():
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_cache", {})
        object.__setattr__(self, "_lock", threading.Lock())

    def __setattr__(self, *a):
        raise AttributeError("Ideal is immutable")

    @staticmethod
    def of(*gens: Polynomial) -> "Ideal":
        if not gens:
            raise ValueError("use Ideal(ring, []) for the zero ideal")
        return Ideal(gens[0].ring, gens)

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    # -- Groebner cache -----------------------------------------------------

    def groebner_basis(self, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
        if not self.generators:
            return GroebnerBasis(self.ring, order, ())
        with self._lock:
            entry = self._cache.get(order)
            if entry is None:
                entry = self._cache[order] = _Pending()
                owner = True
            else:
                owner = False
        if isinstance(entry, GroebnerBasis):
            return entry
        if owner:
            try:
                gb = reduced_groebner_basis(self.generators, order)
            except BaseException as exc:
                with self._lock:
                    del self._cache[order]
                entry.fail(exc)
                raise
            with self._lock:
                self._cache[order] = gb
            entry.finish(gb)
            return gb
        return entry.wait()

    # -- membership and comparison ------------------------------------------

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError("element in the wrong ring")
        if self.is_zero():
            return f.is_zero()
        return normal_form(f, self.groebner_basis()).is_zero()

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise RingMismatchError("ideals in different rings")
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return (self.groebner_basis().elements ==
                other.groebner_basis().elements)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # ideal equality is semantic; use identity-keyed maps

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Ideal"):
        if self.ring != other.ring:
            raise RingMismatchError("ideals in different rings")

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        seen = set()
        gens = []
        for g in self.generators + other.generators:
            if g not in seen:
                seen.add(g)
                gens.append(g)
        return Ideal(self.ring, gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, [])
        products = []
        seen = set()
        for g in self.generators:
            for h in other.generators:
                p = g * h
                if p not in seen:
                    seen.add(p)
                    products.append(p)
        return Ideal(self.ring, inter_reduce(products))

    def power(self, t: int) -> "Ideal":
        if t < 1:
            raise ValueError("power requires t >= 1")
        result = self
        for _ in range(t - 1):
            result = result * self
        return result

    __pow__ = power

    def intersect(self, other: "Ideal") -> "Ideal":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, [])
        aux, ext = _extend_ring(self.ring)
        t = ext.variable(aux)
        one = ext.one()
        gens = [t * _lift(g, ext) for g in self.generators]
        gens += [(one - t) * _lift(h, ext) for h in other.generators]
        return _eliminate_first_block(Ideal(ext, gens), 1, self.ring)

    def quotient(self, other: "Ideal") -> "Ideal":
        """The colon ideal (self : other)."""
        self._check(other)
        if other.is_zero():
            raise ValueError("cannot divide by the zero ideal")
        if self.is_zero():
            return self
        result = None
        for f in other.generators:
            meet = self.intersect(Ideal(self.ring, [f]))
            part = Ideal(self.ring, [exact_divide(g, f) for g in meet.generators])
            result = part if result is None else result.intersect(part)
        return result

    def eliminate(self, drop: Iterable[str]) -> "Ideal":
        """Intersect with the subring omitting the given variables; the
        result lives in the smaller ring."""
        drop = list(dict.fromkeys(drop))
        for name in drop:
            self.ring.index(name)
        keep = [v for v in self.ring.variables if v not in drop]
        if not keep:
            raise ValueError("cannot eliminate every variable")
        if not drop:
            return self
        reordered = PolyRing(tuple(drop) + tuple(keep))
        target = PolyRing(tuple(keep))
        perm = [self.ring.index(v) for v in reordered.variables]
        gens = [Polynomial(reordered, {tuple(e[i] for i in perm): c
                                       for e, c in g.terms.items()})
                for g in self.generators]
        return _eliminate_first_block(Ideal(reordered, gens), len(drop), target)

    # -- homogeneous structure -------------------------------------------------

    def graded_piece(self, d: int, order: MonomialOrder = DEGREVLEX):
        """Canonical basis of the degree-d piece as RREF rows over the
        monomials of degree d sorted descending."""
        monomials = monomials_of_degree(self.ring.arity, d)
        rows = []
        for g in self.groebner_basis(order):
            dg = g.degree()
            if dg > d:
                continue
            for m in monomials_of_degree(self.ring.arity, d - dg):
                prod = {}
                for e, c in g.terms.items():
                    prod[tuple(a + b for a, b in zip(e, m))] = c
                rows.append([prod.get(mm, Fraction(0)) for mm in monomials])
        red, pivots = _linalg.rref(rows)
        return red, pivots, monomials

    def minimal_generators(self) -> list[Polynomial]:
        """Minimal homogeneous generating set, degree by degree."""
        return minimal_generators_mod(self, None)

    def min_pure_power(self, var: str) -> int | None:
        """Least n with var**n in the ideal, or None."""
        if self.is_zero():
            return None
        idx = self.ring.index(var)
        gb = self.groebner_basis()
        leads = initial_ideal(gb).gens
        n = self.ring.arity
        finite = all(any(g[j] and all(g[k] == 0 for k in range(n) if k != j)
                         for g in leads) for j in range(n))
        if finite:
            bound = max(sum(g) for g in leads)
            while _standard_monomial_count(leads, n, bound):
                bound += 1
        else:
            bound = max(g.degree() for g in gb.elements) + n
        xv = self.ring.variable(var)
        for k in range(1, bound + 1):
            if self.contains(xv ** k):
                return k
        return None


def _standard_monomial_count(leads, n_vars: int, d: int) -> int:
    count = 0
    for m in monomials_of_degree(n_vars, d):
        if not any(all(g[i] <= m[i] for i in range(n_vars)) for g in leads):
            count += 1
    return count


class _Pending:
    __slots__ = ("_event", "_result", "_exc")

    def __init__(self):
        self._event = threading.Event()
        self._result = None
        self._exc = None

    def finish(self, result):
        self._result = result
        self._event.set()

    def fail(self, exc):
        self._exc = exc
        self._event.set()

    def wait(self):
        self._event.wait()
        if self._exc is not None:
            raise self._exc
        return self._result


def _extend_ring(ring: PolyRing) -> tuple[str, PolyRing]:
    for name in itertools.chain(["t"], (f"t{i}" for i in itertools.count())):
        if name not in ring.variables:
            return name, PolyRing((name,) + ring.variables)
    raise AssertionError


def _lift(p: Polynomial, ext: PolyRing) -> Polynomial:
    pad = ext.arity - p.ring.arity
    return Polynomial(ext, {(0,) * pad + e: c for e, c in p.terms.items()})


def _eliminate_first_block(ideal: Ideal, block: int, target: PolyRing) -> Ideal:
    order = elimination_order(block)
    gb = ideal.groebner_basis(order)
    gens = []
    for g in gb:
        lead = g.leading_monomial(order)
        if any(lead[:block]):
            continue
        assert all(not any(e[:block]) for e in g.terms)
        gens.append(Polynomial(target, {e[block:]: c for e, c in g.terms.items()}))
    return Ideal(target, _primitive_all(gens))


def _primitive_all(gens: list[Polynomial]) -> list[Polynomial]:
    out = []
    for g in gens:
        dens = [c.denominator for c in g.terms.values()]
        nums = [c.numerator for c in g.terms.values()]
        scale = Fraction(math.lcm(*dens), math.gcd(*nums)) if dens else Fraction(1)
        h = g * scale
        if h.leading_coefficient() < 0:
            h = -h
        out.append(h)
    return out


def exact_divide(p: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient p/f when f divides p exactly; raises otherwise."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = p.ring
    quotient = ring.zero()
    rem = p
    lf = f.leading_monomial()
    cf = f.leading_coefficient()
    while not rem.is_zero():
        lm = rem.leading_monomial()
        if not all(a <= b for a, b in zip(lf, lm)):
            raise ValueError("not an exact multiple")
        shift = tuple(b - a for a, b in zip(lf, lm))
        term = Polynomial(ring, {shift: rem.leading_coefficient() / cf})
        quotient = quotient + term
        rem = rem - term * f
    return quotient


def minimal_generators_mod(ideal: Ideal, background: Ideal | None) -> list[Polynomial]:
    """Minimal homogeneous generators of ``ideal`` modulo ``background``
    (modulo nothing when background is None): in each degree d a basis
    of I_d complementary to R_1 * I_{d-1} + B_d.

    The output is a subset of the given generators (graded Nakayama),
    which keeps coefficients as small as the input's."""
    if not ideal.is_homogeneous():
        raise ValueError("minimal generators need a homogeneous ideal")
    if background is not None and not background.is_homogeneous():
        raise ValueError("background ideal must be homogeneous")
    if ideal.is_zero():
        return []
    ring = ideal.ring
    n = ring.arity
    degrees = sorted({g.degree() for g in ideal.generators})
    d_min, d_max = degrees[0], degrees[-1]
    by_degree: dict[int, list[Polynomial]] = {}
    for g in sorted(ideal.generators,
                    key=lambda p: sorted((e, c) for e, c in p.terms.items())):
        by_degree.setdefault(g.degree(), []).append(g)
    out: list[Polynomial] = []
    prev_basis: list[list[Fraction]] = []
    for d in range(d_min, d_max + 1):
        monomials = monomials_of_degree(n, d)
        index = {m: i for i, m in enumerate(monomials)}
        old_rows = []
        low = monomials_of_degree(n, d - 1)
        for b in prev_basis:
            for i in range(n):
                row = [Fraction(0)] * len(monomials)
                for m, c in zip(low, b):
                    if c:
                        e = list(m)
                        e[i] += 1
                        row[index[tuple(e)]] = c
                old_rows.append(row)
        if background is not None and not background.is_zero():
            bred, _, _ = background.graded_piece(d)
            old_rows.extend(bred)
        span, span_piv = _linalg.rref(old_rows)
        for g in by_degree.get(d, ()):
            row = [Fraction(0)] * len(monomials)
            for e, c in g.terms.items():
                row[index[e]] = c
            res = _linalg.reduce_against(span, span_piv, row)
            if any(res):
                out.append(_primitive_all([g])[0])
                span.append(res)
                span, span_piv = _linalg.rref(span)
        if d < d_max:
            prev_basis, _, _ = ideal.graded_piece(d)
    return out
