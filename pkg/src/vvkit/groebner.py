"""Buchberger's algorithm, normal forms, and reduced Groebner bases.

The kernel works on an integer-packed representation: a monomial is a
single Python int with 8 bits per variable (top bit of each byte kept
clear as a guard), so monomial multiplication is integer addition and
divisibility is one masked subtraction.  Coefficients are kept as
content-free integers; the public layer converts back to monic
polynomials with ``Fraction`` coefficients.

Pair selection follows the normal strategy (lowest lcm degree, then
the order on the lcm, then insertion index) and the pair set is pruned
with the Gebauer-Moeller formulation of Buchberger's coprime and chain
criteria.  The whole computation is single-threaded and deterministic.
"""

from __future__ import annotations

import functools
import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import (DEGREVLEX, MonomialOrder, Polynomial, PolyRing,
                   RingMismatchError)

_FIELD_BITS = 8
_FIELD_MASK = 0xFF
_GUARD_BIT = 0x80
_MAX_EXP = 0x7F


class ExponentOverflowError(OverflowError):
    """A monomial exponent exceeds the packed-representation limit (127)."""


class _Context:
    """Packing and comparison helpers for one (ring, order) pair."""

    __slots__ = ("ring", "order", "n", "guards", "_cmp_weights", "_deg_shifts")

    def __init__(self, ring: PolyRing, order: MonomialOrder):
        self.ring = ring
        self.order = order
        n = ring.arity
        self.n = n
        self.guards = sum(_GUARD_BIT << (_FIELD_BITS * i) for i in range(n))
        W = 1 << _FIELD_BITS
        if order.kind == "degrevlex":
            deg_w = [W ** n] * n
            pos_w = [-(W ** i) for i in range(n)]
        elif order.kind == "lex":
            deg_w = [0] * n
            pos_w = [W ** (n - 1 - i) for i in range(n)]
        else:
            k = order.block
            tail = n - k
            shift = 2 * W ** (tail + 1)
            deg_w = [W ** k * shift] * k + [W ** tail] * tail
            pos_w = [-(W ** i) * shift for i in range(k)] + \
                    [-(W ** (i - k)) for i in range(k, n)]
        # weight per variable applied to its exponent; cmp is additive
        self._cmp_weights = [d + p for d, p in zip(deg_w, pos_w)]
        self._deg_shifts = [_FIELD_BITS * i for i in range(n)]

    def pack(self, exps: Sequence[int]) -> int:
        p = 0
        for i, e in enumerate(exps):
            if e > _MAX_EXP:
                raise ExponentOverflowError(f"exponent {e} exceeds {_MAX_EXP}")
            p |= e << self._deg_shifts[i]
        return p

    def unpack(self, p: int) -> tuple:
        return tuple((p >> s) & _FIELD_MASK for s in self._deg_shifts)

    def cmp(self, p: int) -> int:
        """Additive order key: cmp(a) > cmp(b) iff monomial a > b."""
        w = self._cmp_weights
        return sum(w[i] * ((p >> s) & _FIELD_MASK)
                   for i, s in enumerate(self._deg_shifts))

    def deg(self, p: int) -> int:
        return sum((p >> s) & _FIELD_MASK for s in self._deg_shifts)

    def lcm(self, a: int, b: int) -> int:
        out = 0
        for s in self._deg_shifts:
            ea = (a >> s) & _FIELD_MASK
            eb = (b >> s) & _FIELD_MASK
            out |= (ea if ea >= eb else eb) << s
        return out

    def divides(self, a: int, b: int) -> bool:
        g = self.guards
        return ((b | g) - a) & g == g

    def to_internal(self, p: Polynomial) -> dict[int, int]:
        den = math.lcm(*(c.denominator for c in p.terms.values())) if p.terms else 1
        return {self.pack(e): int(c * den) for e, c in p.terms.items()}

    def to_polynomial(self, d: dict[int, int], scale: int = 1) -> Polynomial:
        return Polynomial(self.ring, {self.unpack(k): Fraction(c, scale)
                                      for k, c in d.items()})


@functools.lru_cache(maxsize=None)
def _context(ring: PolyRing, order: MonomialOrder) -> _Context:
    return _Context(ring, order)


def _strip_content(d: dict[int, int], lead: int | None = None) -> dict[int, int]:
    """Divide by the integer content; make the lead coefficient positive."""
    if not d:
        return d
    g = 0
    for c in d.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    if lead is not None and d[lead] < 0:
        g = -g
    if g != 1:
        return {k: c // g for k, c in d.items()}
    return d


def _reduce(p: dict[int, int], basis: list, ctx: _Context,
            scale: int = 1, reducer_cache: dict | None = None) -> tuple[dict[int, int], int]:
    """Full normal form of p against basis elements (lead, lc, terms).

    Returns (terms, scale) with the exact result equal to terms/scale
    times the input/scale convention: input/1 reduces to terms/scale
    modulo the ideal of the basis.  All arithmetic is on integers; the
    whole work polynomial is rescaled when a reducer's lead coefficient
    requires it.

    ``reducer_cache`` may persist across calls against a growing basis:
    a cached reducer stays valid, and any valid reducer is acceptable.
    """
    if not p or not basis:
        return dict(p), scale
    cmp = ctx.cmp
    divides = ctx.divides
    D = dict(p)
    heap = [(-cmp(m), m) for m in D]
    heapq.heapify(heap)
    seen = set()
    steps = 0
    cache = reducer_cache if reducer_cache is not None else {}
    while heap:
        m = heapq.heappop(heap)[1]
        if m in seen:
            continue
        seen.add(m)
        c = D.get(m, 0)
        if not c:
            D.pop(m, None)
            continue
        entry = cache.get(m)
        if entry is not None and entry[1] is not None:
            hit = entry[1]
        else:
            # rescan only basis elements appended since the last miss
            hit = None
            for idx in range(entry[0] if entry else 0, len(basis)):
                if divides(basis[idx][0], m):
                    hit = basis[idx]
                    break
            cache[m] = (len(basis), hit)
        if hit is None:
            continue
        lead, lc, terms = hit
        shift = m - lead
        lam = math.gcd(c, lc)
        a = lc // lam
        b = c // lam
        if a != 1:
            for k in D:
                D[k] *= a
            scale *= a
        for e, ce in terms.items():
            em = e + shift
            s = D.get(em, 0) - b * ce
            if s:
                if em not in D and em not in seen:
                    heapq.heappush(heap, (-cmp(em), em))
                D[em] = s
            else:
                D.pop(em, None)
        steps += 1
        if a != 1 and steps % 32 == 0 and scale.bit_length() > 4096:
            g = scale
            for v in D.values():
                g = math.gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                D = {k: v // g for k, v in D.items()}
                scale //= g
    return D, scale


def _spoly(f, g, ctx: _Context) -> dict[int, int]:
    lf, cf, df = f
    lg, cg, dg = g
    L = ctx.lcm(lf, lg)
    sf = L - lf
    sg = L - lg
    lam = math.gcd(cf, cg)
    mf = cg // lam
    mg = cf // lam
    D: dict[int, int] = {}
    for e, c in df.items():
        D[e + sf] = mf * c
    for e, c in dg.items():
        em = e + sg
        s = D.get(em, 0) - mg * c
        if s:
            D[em] = s
        else:
            D.pop(em, None)
    return D


def _gm_add(pairs: list, G: list, new_idx: int, ctx: _Context, counter,
            cap=None):
    """Gebauer-Moeller pair update after appending G[new_idx].

    ``cap = (weight_by_shift, limit)`` discards pairs whose lcm exceeds
    the limit in the weighted degree; sound for inputs homogeneous
    under those weights (a truncation, not a completion).
    """
    lh = G[new_idx][0]
    lcm = ctx.lcm
    divides = ctx.divides
    cand = [(lcm(G[i][0], lh), i) for i in range(new_idx)]
    kept = []
    for a, (la, i) in enumerate(cand):
        drop = False
        for b, (lb, j) in enumerate(cand):
            if a == b:
                continue
            if lb == la:
                if b < a:
                    drop = True
                    break
            elif divides(lb, la):
                drop = True
                break
        if not drop:
            kept.append((la, i))
    # chain criterion against surviving old pairs
    out = []
    for entry in pairs:
        _, _, _, i, j, lij = entry
        if divides(lh, lij) and lcm(G[i][0], lh) != lij and lcm(G[j][0], lh) != lij:
            continue
        out.append(entry)
    pairs[:] = out
    heapq.heapify(pairs)
    for la, i in kept:
        if la == G[i][0] + lh:  # coprime leads
            continue
        if cap is not None:
            weights, limit = cap
            if sum(w * ((la >> s) & _FIELD_MASK)
                   for w, s in zip(weights, ctx._deg_shifts)) > limit:
                continue
        heapq.heappush(pairs, (ctx.deg(la), ctx.cmp(la), next(counter), i, new_idx, la))


def _buchberger(gens: list[dict[int, int]], ctx: _Context, cap=None,
                tails: bool = True) -> list:
    """Return the reduced basis as internal (lead, lc, terms) triples."""
    import itertools
    counter = itertools.count()
    prepared = []
    for d in gens:
        if d:
            lead = max(d, key=ctx.cmp)
            d = _strip_content(d, lead)
            prepared.append((lead, d[lead], d))
    prepared.sort(key=lambda t: (ctx.deg(t[0]), ctx.cmp(t[0]), sorted(t[2].items())))
    G: list = []
    pairs: list = []
    cache: dict = {}
    for item in prepared:
        nf, _ = _reduce(item[2], G, ctx, reducer_cache=cache)
        if not nf:
            continue
        lead = max(nf, key=ctx.cmp)
        nf = _strip_content(nf, lead)
        G.append((lead, nf[lead], nf))
        _gm_add(pairs, G, len(G) - 1, ctx, counter, cap)
    while pairs:
        _, _, _, i, j, _ = heapq.heappop(pairs)
        s = _spoly(G[i], G[j], ctx)
        nf, _ = _reduce(s, G, ctx, reducer_cache=cache)
        if not nf:
            continue
        lead = max(nf, key=ctx.cmp)
        nf = _strip_content(nf, lead)
        G.append((lead, nf[lead], nf))
        _gm_add(pairs, G, len(G) - 1, ctx, counter, cap)
    return _autoreduce(G, ctx, tails)


def _autoreduce(G: list, ctx: _Context, tails: bool = True) -> list:
    """Minimalize leads, tail-reduce (unless disabled), sort ascending."""
    keep = []
    for a, (la, _, _) in enumerate(G):
        if any(b != a and ctx.divides(G[b][0], la) and
               (G[b][0] != la or b > a) for b in range(len(G))):
            continue
        keep.append(G[a])
    keep.sort(key=lambda t: ctx.cmp(t[0]))
    if not tails:
        return keep
    reduced = []
    for idx, (lead, lc, terms) in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        nf, _ = _reduce(terms, others, ctx)
        nf = _strip_content(nf, lead)
        reduced.append((lead, nf[lead], nf))
    reduced.sort(key=lambda t: ctx.cmp(t[0]))
    return reduced


# ---------------------------------------------------------------------------
# public layer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    """The unique reduced Groebner basis of an ideal for a fixed order.

    Elements are monic, auto-reduced, and sorted by lead monomial
    ascending; two bases compare equal iff they are the same ideal
    under the same order.
    """

    ring: PolyRing
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    def leading_monomials(self) -> tuple[tuple, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.elements)

    def _internal(self):
        ctx = _context(self.ring, self.order)
        basis = []
        for g in self.elements:
            d = ctx.to_internal(g)
            lead = max(d, key=ctx.cmp)
            d = _strip_content(d, lead)
            basis.append((lead, d[lead], d))
        return ctx, basis

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


@functools.lru_cache(maxsize=512)
def _internal_cached(gb: GroebnerBasis):
    ctx, basis = gb._internal()
    return ctx, basis, {}  # shared reducer cache: the basis is fixed


def reduced_groebner_basis(gens: Sequence[Polynomial],
                           order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Unique reduced Groebner basis of the ideal generated by gens."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring = gens[0].ring
    for g in gens[1:]:
        if g.ring != ring:
            raise RingMismatchError("generators live in different rings")
    ctx = _context(ring, order)
    internal = _buchberger([ctx.to_internal(g) for g in gens], ctx)
    elements = tuple(ctx.to_polynomial(terms, lc) for _, lc, terms in internal)
    return GroebnerBasis(ring, order, elements)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of p on division by G; zero iff p lies in the ideal."""
    if p.ring != G.ring:
        raise RingMismatchError("polynomial is not in the basis ring")
    if p.is_zero() or not G.elements:
        return p
    ctx, basis, cache = _internal_cached(G)
    den = math.lcm(*(c.denominator for c in p.terms.values()))
    d = {ctx.pack(e): int(c * den) for e, c in p.terms.items()}
    nf, scale = _reduce(d, basis, ctx, reducer_cache=cache)
    return ctx.to_polynomial(nf, scale * den)


def is_groebner_basis(polys: Sequence[Polynomial],
                      order: MonomialOrder = DEGREVLEX) -> bool:
    """True iff every S-polynomial of the set reduces to zero."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return True
    ring = polys[0].ring
    ctx = _context(ring, order)
    basis = []
    for p in polys:
        d = ctx.to_internal(p)
        lead = max(d, key=ctx.cmp)
        d = _strip_content(d, lead)
        basis.append((lead, d[lead], d))
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = _spoly(basis[i], basis[j], ctx)
            nf, _ = _reduce(s, basis, ctx)
            if nf:
                return False
    return True


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators (an antichain under divisibility)."""

    ring: PolyRing
    gens: tuple[tuple, ...]

    @staticmethod
    def from_monomials(ring: PolyRing, monomials) -> "MonomialIdeal":
        mins = minimalize_monomials(monomials)
        mins.sort(key=DEGREVLEX.key)
        return MonomialIdeal(ring, tuple(mins))

    def contains_monomial(self, m: tuple) -> bool:
        return any(all(g[i] <= m[i] for i in range(len(m))) for g in self.gens)


def minimalize_monomials(monomials) -> list[tuple]:
    mins: list[tuple] = []
    for m in sorted(set(monomials), key=lambda t: (sum(t), t)):
        if not any(all(g[i] <= m[i] for i in range(len(m))) for g in mins):
            mins.append(m)
    return mins


def initial_ideal(source, order: MonomialOrder = DEGREVLEX) -> MonomialIdeal:
    """Lead-term ideal of an Ideal or GroebnerBasis under the order."""
    if isinstance(source, GroebnerBasis):
        gb = source
    else:
        gb = source.groebner_basis(order)
    if not gb.elements:
        raise ValueError("the zero ideal has no initial ideal")
    return MonomialIdeal.from_monomials(gb.ring, gb.leading_monomials())


def truncated_basis(gens: Sequence[Polynomial], order: MonomialOrder,
                    var_weights: Sequence[int], cap: int) -> list[Polynomial]:
    """Buchberger run with S-pairs above a weighted-degree cap discarded.

    For generators homogeneous under ``var_weights`` this yields a set
    that generates every graded piece of the ideal of weighted degree
    <= cap and reduces its members below the cap to zero; it is not a
    full Groebner basis.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ctx = _context(gens[0].ring, order)
    internal = _buchberger([ctx.to_internal(g) for g in gens], ctx,
                           cap=(tuple(var_weights), cap), tails=False)
    return [ctx.to_polynomial(terms, lc) for _, lc, terms in internal]


# ---------------------------------------------------------------------------
# prime-field prefilter variant
# ---------------------------------------------------------------------------

#: fixed 31-bit prime for the predictive prefilter
PREFILTER_PRIME = 2_147_483_647


def _reduce_p(p: dict[int, int], basis: list, ctx: _Context, q: int) -> dict[int, int]:
    if not p or not basis:
        return dict(p)
    cmp = ctx.cmp
    divides = ctx.divides
    D = dict(p)
    heap = [(-cmp(m), m) for m in D]
    heapq.heapify(heap)
    seen = set()
    while heap:
        m = heapq.heappop(heap)[1]
        if m in seen:
            continue
        seen.add(m)
        c = D.get(m, 0)
        if not c:
            D.pop(m, None)
            continue
        hit = None
        for lead, inv_lc, terms in basis:
            if divides(lead, m):
                hit = (lead, inv_lc, terms)
                break
        if hit is None:
            continue
        lead, inv_lc, terms = hit
        shift = m - lead
        factor = c * inv_lc % q
        for e, ce in terms.items():
            em = e + shift
            s = (D.get(em, 0) - factor * ce) % q
            if s:
                if em not in D and em not in seen:
                    heapq.heappush(heap, (-cmp(em), em))
                D[em] = s
            else:
                D.pop(em, None)
    return D


def mod_p_lead_skeleton(gens: Sequence[Polynomial],
                        order: MonomialOrder = DEGREVLEX,
                        prime: int = PREFILTER_PRIME) -> tuple[tuple, ...] | None:
    """Lead monomials of a Groebner basis computed over GF(prime).

    Prediction only: the skeleton equals the rational one for all but
    finitely many primes, so callers must re-prove any verdict over the
    rationals.  Returns None when the prime is unlucky for the input
    (a coefficient denominator or lead coefficient vanishes mod p).
    """
    import itertools as _it
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return ()
    ctx = _context(gens[0].ring, order)
    basis = []
    for g in gens:
        d = {}
        for e, c in g.terms.items():
            if c.denominator % prime == 0:
                return None
            v = c.numerator * pow(c.denominator, -1, prime) % prime
            if v:
                d[ctx.pack(e)] = v
        if not d:
            return None
        basis.append(d)
    G: list = []
    pairs: list = []
    counter = _it.count()
    def push(d):
        lead = max(d, key=ctx.cmp)
        inv = pow(d[lead], -1, prime)
        G.append((lead, inv, d))
        _gm_add(pairs, G, len(G) - 1, ctx, counter)
    for d in sorted(basis, key=lambda t: sorted(t.items())):
        nf = _reduce_p(d, G, ctx, prime)
        if nf:
            push(nf)
    while pairs:
        _, _, _, i, j, _ = heapq.heappop(pairs)
        li, _, di = G[i]
        lj, _, dj = G[j]
        L = ctx.lcm(li, lj)
        s: dict[int, int] = {}
        fi = pow(di[li], -1, prime)
        fj = pow(dj[lj], -1, prime)
        for e, c in di.items():
            s[e + L - li] = c * fi % prime
        for e, c in dj.items():
            em = e + L - lj
            v = (s.get(em, 0) - c * fj) % prime
            if v:
                s[em] = v
            else:
                s.pop(em, None)
        nf = _reduce_p(s, G, ctx, prime)
        if nf:
            push(nf)
    leads = [g[0] for g in G]
    keep = [l for a, l in enumerate(leads)
            if not any(b != a and ctx.divides(leads[b], l) for b in range(len(leads)))]
    return tuple(sorted((ctx.unpack(l) for l in set(keep)), key=DEGREVLEX.key))


def inter_reduce(polys: Sequence[Polynomial],
                 order: MonomialOrder = DEGREVLEX) -> list[Polynomial]:
    """Trim a generating set: drop elements reducing to zero against the
    rest and fully reduce the survivors.  Not a Groebner computation;
    the span (the generated ideal) is preserved."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    ring = polys[0].ring
    ctx = _context(ring, order)
    items = []
    for p in polys:
        d = ctx.to_internal(p)
        lead = max(d, key=ctx.cmp)
        d = _strip_content(d, lead)
        items.append((lead, d[lead], d))
    items.sort(key=lambda t: (ctx.deg(t[0]), ctx.cmp(t[0]), sorted(t[2].items())))
    # drop scalar duplicates
    seen = set()
    unique = []
    for it in items:
        key = tuple(sorted(it[2].items()))
        if key not in seen:
            seen.add(key)
            unique.append(it)
    result = []
    for idx in range(len(unique)):
        others = result + unique[idx + 1:]
        nf, _ = _reduce(unique[idx][2], others, ctx)
        if not nf:
            continue
        lead = max(nf, key=ctx.cmp)
        nf = _strip_content(nf, lead)
        result.append((lead, nf[lead], nf))
    result.sort(key=lambda t: (ctx.deg(t[0]), ctx.cmp(t[0])))
    return [ctx.to_polynomial(terms) for _, _, terms in result]
