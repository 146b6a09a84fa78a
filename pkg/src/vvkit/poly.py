"""Sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients, attached to a :class:`PolyRing` that fixes the variable
names.  All arithmetic is exact; there is no floating-point mode.

Monomials are plain tuples of nonnegative ints, one entry per ring
variable.  Monomial orders (degrevlex, lex, elimination blocks) are
value objects that produce integer-tuple sort keys, so ``max`` /
``sorted`` on keys agrees with the mathematical order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class ParseError(ValueError):
    """Polynomial text does not conform to the grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


def _q(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to a rational")


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring, identified by its ordered variable names."""

    variables: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        if not self.variables:
            raise ValueError("ring needs at least one variable")

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = _q(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.arity: c})

    def variable(self, name: str) -> "Polynomial":
        exps = [0] * self.arity
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.variable(v) for v in self.variables)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def __repr__(self):
        return f"PolyRing({', '.join(self.variables)})"


def ring(*variables: str) -> PolyRing:
    return PolyRing(tuple(variables))


#: the default coordinate ring of the projective plane
PLANE = ring("x", "y", "z")


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """Global monomial order: ``degrevlex``, ``lex``, or an elimination
    block order (degrevlex on the first ``block`` variables, then
    degrevlex on the rest)."""

    kind: str = "degrevlex"
    block: int | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "elim"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if (self.kind == "elim") != (self.block is not None):
            raise ValueError("elimination orders need a block size; others must not set one")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("block size must be >= 1")

    def key(self, exps: Sequence[int]) -> tuple:
        """Sort key: key(a) > key(b) iff a > b in this order."""
        if self.kind == "degrevlex":
            return (sum(exps), *(-e for e in reversed(exps)))
        if self.kind == "lex":
            return tuple(exps)
        k = self.block
        head, tail = exps[:k], exps[k:]
        return (sum(head), *(-e for e in reversed(head)),
                sum(tail), *(-e for e in reversed(tail)))

    def compare(self, a: Sequence[int], b: Sequence[int]) -> int:
        if len(a) != len(b):
            raise ValueError("monomial arity mismatch")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        return self.kind if self.block is None else f"elim({self.block})"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def elimination_order(block: int) -> MonomialOrder:
    return MonomialOrder("elim", block)


def compare_monomials(order: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> int:
    """-1, 0, or 1 as a <, =, > b under the order."""
    return order.compare(a, b)


def monomial_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))

def monomial_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))

def monomial_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))

def monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


@functools.lru_cache(maxsize=None)
def monomials_of_degree(n_vars: int, d: int) -> tuple[tuple, ...]:
    """All exponent tuples of total degree d, degrevlex-descending."""
    out = []
    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)
    rec((), d, n_vars)
    out.sort(key=lambda m: DEGREVLEX.key(m), reverse=True)
    return tuple(out)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, Fraction]):
        clean = {}
        for exps, coeff in terms.items():
            coeff = _q(coeff)
            if coeff:
                if len(exps) != ring.arity:
                    raise ValueError("exponent tuple has wrong arity")
                clean[tuple(exps)] = coeff
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- basic predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    # -- term access ----------------------------------------------------------

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[tuple, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self * (1 / lc)

    def coefficient(self, exps: tuple) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check_ring(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _q(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {e: k * c for e, k in self.terms.items()})
        self._check_ring(other)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- calculus and substitution -------------------------------------------

    def differentiate(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        terms: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                terms[e2] = terms.get(e2, 0) + c * e[i]
        return Polynomial(self.ring, terms)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.ring.arity:
            raise ValueError("point has wrong arity")
        coords = [_q(p) for p in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(coords, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def substitute_linear(self, matrix: Sequence[Sequence]) -> "Polynomial":
        """Compose with the change of coordinates x_i -> sum_j M[i][j] x_j.

        The matrix must be square of the ring arity and invertible.
        """
        n = self.ring.arity
        rows = [[_q(v) for v in row] for row in matrix]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("matrix size must equal the ring arity")
        if _det(rows) == 0:
            raise ValueError("singular change of coordinates")
        images = [Polynomial(self.ring, {
            tuple(1 if j == k else 0 for k in range(n)): c
            for j, c in enumerate(row) if c
        }) for row in rows]
        # cache powers of each image as needed
        powers: list[list[Polynomial]] = [[self.ring.one(), img] for img in images]
        result = self.ring.zero()
        for e, c in self.terms.items():
            term = self.ring.constant(c)
            for i, k in enumerate(e):
                while len(powers[i]) <= k:
                    powers[i].append(powers[i][-1] * powers[i][1])
                if k:
                    term = term * powers[i][k]
            result = result + term
        return result

    # -- printing -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx, (exps, coeff) in enumerate(self.sorted_terms()):
            factors = []
            for name, e in zip(self.ring.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if idx == 0:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"<{self} in {self.ring}>"


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free expansion; rows is modified copy-safe."""
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse the ASCII grammar: terms joined by + / -, explicit ``*``,
    factors ``var`` or ``var^k`` (k >= 1), coefficients ``n`` or ``a/b``."""
    return _Parser(text, ring).parse()


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Polynomial:
        total = self.ring.zero()
        sign = 1
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            sign = -1
        elif ch == "+":
            self.pos += 1
        total = total + self.parse_term(sign)
        while True:
            ch = self.peek()
            if ch == "":
                return total
            if ch == "+":
                self.pos += 1
                total = total + self.parse_term(1)
            elif ch == "-":
                self.pos += 1
                total = total + self.parse_term(-1)
            else:
                self.error(f"unexpected {ch!r}")

    def parse_term(self, sign: int) -> Polynomial:
        coeff = Fraction(sign)
        exps = [0] * self.ring.arity
        saw_factor = False
        ch = self.peek()
        if ch.isdigit():
            coeff *= self.parse_number()
            saw_factor = True
        elif ch.isalpha() or ch == "_":
            self.parse_factor(exps)
            saw_factor = True
        else:
            self.error("expected a term")
        while True:
            ch = self.peek()
            if ch != "*":
                break
            self.pos += 1
            ch = self.peek()
            if not (ch.isalpha() or ch == "_"):
                self.error("expected a variable after '*'")
            self.parse_factor(exps)
        if not saw_factor:
            self.error("expected a term")
        return Polynomial(self.ring, {tuple(exps): coeff})

    def parse_number(self) -> Fraction:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        num = int(self.text[start:self.pos])
        if self.peek() == "/":
            self.pos += 1
            ch = self.peek()
            if not ch.isdigit():
                self.error("expected a denominator")
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            den = int(self.text[start:self.pos])
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def parse_factor(self, exps: list[int]):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        name = self.text[start:self.pos]
        try:
            idx = self.ring.index(name)
        except KeyError:
            self.pos = start
            self.error(f"unknown variable {name!r}")
        power = 1
        if self.peek() == "^":
            self.pos += 1
            ch = self.peek()
            if not ch.isdigit():
                self.error("expected an exponent")
            num_start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            power = int(self.text[num_start:self.pos])
            if power < 1:
                self.pos = num_start
                self.error("exponent must be >= 1")
        exps[idx] += power
