"""Exact dense linear algebra over the rationals (internal).

Small matrices only: canonical reduced row echelon forms for graded
pieces of ideals, nullspaces for interpolation problems, and ranks.
Rows are lists of ``Fraction``; columns are indexed by whatever basis
the caller fixed (for graded pieces: monomials, order descending).
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    if not rows:
        return [], []
    m = [row[:] for row in rows]
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list[Fraction]]) -> int:
    return len(rref(rows)[0])


def int_rank(rows: list[list[int]]) -> int:
    """Rank over Q of integer rows: fraction-free elimination with
    content stripping, no division."""
    import math
    m = [row[:] for row in rows if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank_count = 0
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c]
                row = [pv * a - f * b for a, b in zip(m[i], prow)]
                g = 0
                for v in row:
                    g = math.gcd(g, v)
                    if g == 1:
                        break
                m[i] = [v // g for v in row] if g > 1 else row
        rank_count += 1
        r += 1
        if r == len(m):
            break
    return rank_count


def in_row_space(rref_rows: list[list[Fraction]], pivots: list[int],
                 vector: list[Fraction]) -> bool:
    """Membership of vector in the span of an already-reduced basis."""
    v = vector[:]
    for row, p in zip(rref_rows, pivots):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return not any(v)


def reduce_against(rref_rows: list[list[Fraction]], pivots: list[int],
                   vector: list[Fraction]) -> list[Fraction]:
    v = vector[:]
    for row, p in zip(rref_rows, pivots):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Unique solution of a square nonsingular system; raises otherwise."""
    n = len(rows)
    aug = [row[:] + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [row[n] for row in red]
