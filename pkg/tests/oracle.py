"""Independent brute-force oracles for the test suite.

Everything here works straight from generator lists by dense linear
algebra over Fraction: no Groebner bases, no normal forms, no code
shared with the package's computational paths.
"""

from fractions import Fraction
from itertools import combinations_with_replacement


def monomials(n_vars: int, degree: int) -> list[tuple]:
    """All exponent tuples of the given total degree (its own order)."""
    out = []
    for combo in combinations_with_replacement(range(n_vars), degree):
        e = [0] * n_vars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(set(out))


def _eliminate(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Row echelon by plain Gaussian elimination; returns pivot rows."""
    rows = [r[:] for r in rows if any(r)]
    done = []
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        pivot = next((i for i, r in enumerate(rows) if r[col]), None)
        if pivot is None:
            col += 1
            continue
        prow = rows.pop(pivot)
        inv = Fraction(1) / prow[col]
        prow = [v * inv for v in prow]
        rows = [[a - r[col] * b for a, b in zip(r, prow)] if r[col] else r
                for r in rows]
        rows = [r for r in rows if any(r)]
        done.append(prow)
        col += 1
    return done


def degree_piece_rows(gens, degree: int) -> list[list[Fraction]]:
    """Coefficient rows spanning the degree-d piece of the ideal the
    homogeneous generators define, indexed by `monomials`."""
    if not gens:
        return []
    n = gens[0].ring.arity
    basis = monomials(n, degree)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in gens:
        d = g.degree()
        if d > degree or d < 0:
            continue
        for m in monomials(n, degree - d):
            row = [Fraction(0)] * len(basis)
            for e, c in g.terms.items():
                shifted = tuple(a + b for a, b in zip(e, m))
                row[index[shifted]] += c
            rows.append(row)
    return rows


def ideal_rank(gens, degree: int) -> int:
    """dim of the ideal's degree-d piece, straight from the generators."""
    return len(_eliminate(degree_piece_rows(gens, degree)))


def quotient_dimension(gens, degree: int) -> int:
    """Hilbert function of R/(gens) at the degree, by Macaulay matrix."""
    if not gens:
        return len(monomials(1, 0))
    n = gens[0].ring.arity
    return len(monomials(n, degree)) - ideal_rank(gens, degree)


def contains_by_rank(gens, f) -> bool:
    """Degreewise membership of a homogeneous f in the homogeneous ideal:
    the span's rank does not grow when f is added."""
    if f.is_zero():
        return True
    d = f.degree()
    rows = degree_piece_rows(gens, d)
    n = f.ring.arity
    basis = monomials(n, d)
    index = {m: i for i, m in enumerate(basis)}
    row = [Fraction(0)] * len(basis)
    for e, c in f.terms.items():
        row[index[e]] = c
    return len(_eliminate(rows + [row])) == len(_eliminate(rows))
