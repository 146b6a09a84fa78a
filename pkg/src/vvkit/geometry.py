"""Plane point configurations, their ideals, and Jacobian data.

Points carry exact rational homogeneous coordinates, normalized so the
last nonzero coordinate is 1.  Classification of 5- and 6-point
configurations follows the collinearity profile (sizes of maximal
collinear subsets) plus a conic test for six points with no collinear
triple.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from .ideals import Ideal, minimal_generators_mod
from .poly import PLANE, Polynomial, PolyRing, monomials_of_degree, ring


class SampleError(ValueError):
    """Requested configuration label cannot be produced."""


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[Fraction, ...]

    @staticmethod
    def of(*coords) -> "ProjectivePoint":
        vals = [Fraction(c) for c in coords]
        if not any(vals):
            raise ValueError("the zero vector is not a projective point")
        pivot = max(i for i, v in enumerate(vals) if v)
        inv = 1 / vals[pivot]
        return ProjectivePoint(tuple(v * inv for v in vals))

    @property
    def arity(self) -> int:
        return len(self.coords)

    def __str__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple[ProjectivePoint, ...]

    def __post_init__(self):
        if not self.points:
            raise ValueError("need at least one point")
        arities = {p.arity for p in self.points}
        if len(arities) != 1:
            raise ValueError("points in different ambient spaces")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be distinct")

    @staticmethod
    def of(*rows) -> "PointConfiguration":
        return PointConfiguration(tuple(ProjectivePoint.of(*r) for r in rows))

    @property
    def s(self) -> int:
        return len(self.points)

    @property
    def dim(self) -> int:
        return self.points[0].arity - 1

    @property
    def ring(self) -> PolyRing:
        if self.points[0].arity == 3:
            return PLANE
        return ring(*(f"x{i}" for i in range(self.points[0].arity)))

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "points": [[str(c) for c in p.coords] for p in self.points]}

    @staticmethod
    def from_json(data: dict) -> "PointConfiguration":
        return PointConfiguration.of(*data["points"])


@dataclass(frozen=True)
class ConfigClass:
    s: int
    collinearity_profile: tuple[int, ...]
    taxonomy_label: int | None
    descriptor: str | None

    def to_json(self) -> dict:
        return {"s": self.s,
                "profile": list(self.collinearity_profile),
                "label": self.taxonomy_label,
                "descriptor": self.descriptor}


@dataclass(frozen=True)
class JacobianData:
    base_ideal: Ideal
    theta: tuple[tuple[Polynomial, ...], ...]
    minor_ideal: Ideal
    jacobian_ideal: Ideal


# ---------------------------------------------------------------------------
# ideals of points
# ---------------------------------------------------------------------------

def point_ideal(p: ProjectivePoint, R: PolyRing | None = None) -> Ideal:
    """Prime ideal of the point: n independent linear forms."""
    R = R or (PLANE if p.arity == 3 else ring(*(f"x{i}" for i in range(p.arity))))
    if R.arity != p.arity:
        raise ValueError("ring arity does not match the point")
    pivot = max(i for i, v in enumerate(p.coords) if v)
    gens = []
    xs = R.gens()
    for i in range(p.arity):
        if i != pivot:
            gens.append(xs[i] - p.coords[i] * xs[pivot])
    return Ideal(R, gens)


def ideal_of_points(cfg: PointConfiguration) -> Ideal:
    """Defining ideal: the intersection of the point ideals."""
    R = cfg.ring
    result = point_ideal(cfg.points[0], R)
    for p in cfg.points[1:]:
        result = result.intersect(point_ideal(p, R))
    return result


# ---------------------------------------------------------------------------
# collinearity and classification
# ---------------------------------------------------------------------------

def _det3(p, q, r) -> Fraction:
    a, b, c = p.coords, q.coords, r.coords
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def collinear(p, q, r) -> bool:
    return _det3(p, q, r) == 0


def maximal_collinear_subsets(cfg: PointConfiguration) -> list[frozenset[int]]:
    """Index sets of all maximal collinear subsets of size >= 3."""
    pts = cfg.points
    found: set[frozenset[int]] = set()
    for i, j in itertools.combinations(range(len(pts)), 2):
        members = frozenset(k for k in range(len(pts))
                            if k in (i, j) or collinear(pts[i], pts[j], pts[k]))
        if len(members) >= 3:
            found.add(members)
    return sorted(found, key=lambda s: (-len(s), sorted(s)))


def conic_through(points: Sequence[ProjectivePoint]) -> Polynomial | None:
    """A nonzero conic through the points, or None; canonical choice."""
    basis = monomials_of_degree(3, 2)
    rows = []
    for p in points:
        x, y, z = p.coords
        vals = {(2, 0, 0): x * x, (1, 1, 0): x * y, (0, 2, 0): y * y,
                (1, 0, 1): x * z, (0, 1, 1): y * z, (0, 0, 2): z * z}
        rows.append([vals[m] for m in basis])
    kernel = _linalg.nullspace(rows, len(basis))
    if not kernel:
        return None
    coeffs = kernel[0]
    return Polynomial(PLANE, {m: c for m, c in zip(basis, coeffs) if c})


def conic_is_irreducible(f: Polynomial) -> bool:
    """Rank test on the symmetric matrix of the conic (char 0)."""
    if f.is_zero() or f.degree() != 2 or not f.is_homogeneous():
        raise ValueError("not a conic")
    g = f.coefficient
    half = Fraction(1, 2)
    m = [[g((2, 0, 0)), half * g((1, 1, 0)), half * g((1, 0, 1))],
         [half * g((1, 1, 0)), g((0, 2, 0)), half * g((0, 1, 1))],
         [half * g((1, 0, 1)), half * g((0, 1, 1)), g((0, 0, 2))]]
    return _linalg.rank(m) == 3


def classify_config(cfg: PointConfiguration) -> ConfigClass:
    """Collinearity profile plus the 5- and 6-point taxonomy label."""
    if cfg.dim != 2:
        raise ValueError("classification works in the projective plane")
    s = cfg.s
    if s < 3:
        raise ValueError("need at least 3 points")
    subsets = maximal_collinear_subsets(cfg)
    profile = tuple(sorted((len(m) for m in subsets), reverse=True))
    label: int | None = None
    if s == 5:
        label = {(): 1, (5,): 2, (4,): 3, (3,): 4, (3, 3): 5}.get(profile)
    elif s == 6:
        if profile == ():
            conic = conic_through(cfg.points)
            label = 11 if conic is not None and conic_is_irreducible(conic) else 1
        elif profile == (3, 3):
            first, second = subsets
            label = 8 if first & second else 7
        else:
            label = {(6,): 2, (5,): 3, (4,): 4, (4, 3): 5, (3,): 6,
                     (3, 3, 3): 9, (3, 3, 3, 3): 10}.get(profile)
    descriptor = f"({s},{s - profile[0]})-fold" if profile else None
    return ConfigClass(s, profile, label, descriptor)


# ---------------------------------------------------------------------------
# deterministic samplers
# ---------------------------------------------------------------------------

_REJECTION_BUDGET = 10_000

# samplers carry primitive integer coordinate triples and normalize only
# on output, which keeps downstream Groebner coefficients small


def _reduce_triple(coords):
    import math
    g = math.gcd(math.gcd(abs(coords[0]), abs(coords[1])), abs(coords[2]))
    return tuple(c // g for c in coords) if g > 1 else tuple(coords)


def _rand_point(rng: random.Random) -> tuple[int, int, int]:
    while True:
        coords = [rng.randint(-9, 9) for _ in range(3)]
        if any(coords):
            return _reduce_triple(coords)


def _rand_on_line(rng: random.Random, p: tuple, q: tuple) -> tuple[int, int, int]:
    # small multipliers: coefficient height of the downstream ideals is
    # a product over the points, so each factor must stay tiny
    while True:
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        coords = [a * u + b * v for u, v in zip(p, q)]
        if any(coords):
            return _reduce_triple(coords)


def _line_through(p: tuple, q: tuple) -> tuple:
    return (p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0])


def _lines_meet(l1: tuple, l2: tuple) -> tuple | None:
    coords = (l1[1] * l2[2] - l1[2] * l2[1],
              l1[2] * l2[0] - l1[0] * l2[2],
              l1[0] * l2[1] - l1[1] * l2[0])
    if not any(coords):
        return None
    return _reduce_triple(coords)


def _build(rng: random.Random, label: str) -> list[ProjectivePoint] | None:
    """One structural draw for one label; classification re-checks it."""
    base, _, refine = label.partition(":")
    if base.endswith("-general"):
        s = int(base[:-len("-general")])
        return [_rand_point(rng) for _ in range(s)]
    if base.endswith("-collinear"):
        s = int(base[:-len("-collinear")])
        p, q = _rand_point(rng), _rand_point(rng)
        return [p, q] + [_rand_on_line(rng, p, q) for _ in range(s - 2)]
    if base.startswith("(") and base.endswith(")-fold"):
        s_str, r_str = base[1:-len(")-fold")].split(",")
        s, r = int(s_str), int(r_str)
        if not (s >= 4 and 0 <= r <= s - 3):
            raise SampleError(f"unsatisfiable label {label!r}")
        p, q = _rand_point(rng), _rand_point(rng)
        on_line = [p, q] + [_rand_on_line(rng, p, q) for _ in range(s - r - 2)]
        if refine == "in" and r == 2:
            u = _rand_point(rng)
            v = _rand_on_line(rng, u, on_line[0])
            off = [u, v]
        else:
            off = [_rand_point(rng) for _ in range(r)]
        return on_line + off
    if base.count("-") == 1:
        s_str, _, k_str = base.partition("-")
        if s_str.isdigit() and k_str.isdigit():
            s, k = int(s_str), int(k_str)
            if s == 5:
                return _build_five(rng, k)
            if s == 6:
                return _build_six(rng, k)
    raise SampleError(f"unknown configuration label {label!r}")


def _build_five(rng, k):
    if k not in range(1, 6):
        raise SampleError(f"no 5-point configuration {k}")
    if k == 1:
        return [_rand_point(rng) for _ in range(5)]
    if k == 2:
        p, q = _rand_point(rng), _rand_point(rng)
        return [p, q] + [_rand_on_line(rng, p, q) for _ in range(3)]
    if k == 3:
        p, q = _rand_point(rng), _rand_point(rng)
        return [p, q, _rand_on_line(rng, p, q), _rand_on_line(rng, p, q), _rand_point(rng)]
    if k == 4:
        p, q = _rand_point(rng), _rand_point(rng)
        return [p, q, _rand_on_line(rng, p, q), _rand_point(rng), _rand_point(rng)]
    p, q = _rand_point(rng), _rand_point(rng)
    triple = [p, q, _rand_on_line(rng, p, q)]
    u = _rand_point(rng)
    return triple + [u, _rand_on_line(rng, u, triple[0])]


def _build_six(rng, k):
    if k not in range(1, 12):
        raise SampleError(f"no 6-point configuration {k}")
    pt, on = _rand_point, _rand_on_line
    if k == 1:
        return [pt(rng) for _ in range(6)]
    if k == 2:
        p, q = pt(rng), pt(rng)
        return [p, q] + [on(rng, p, q) for _ in range(4)]
    if k == 3:
        p, q = pt(rng), pt(rng)
        return [p, q] + [on(rng, p, q) for _ in range(3)] + [pt(rng)]
    if k == 4:
        p, q = pt(rng), pt(rng)
        return [p, q] + [on(rng, p, q) for _ in range(2)] + [pt(rng), pt(rng)]
    if k == 5:
        p, q = pt(rng), pt(rng)
        line = [p, q] + [on(rng, p, q) for _ in range(2)]
        u = pt(rng)
        return line + [u, on(rng, u, line[0])]
    if k == 6:
        p, q = pt(rng), pt(rng)
        return [p, q, on(rng, p, q)] + [pt(rng) for _ in range(3)]
    if k == 7:
        p, q = pt(rng), pt(rng)
        u, v = pt(rng), pt(rng)
        return [p, q, on(rng, p, q), u, v, on(rng, u, v)]
    if k == 8:
        p, q = pt(rng), pt(rng)
        triple = [p, q, on(rng, p, q)]
        u = pt(rng)
        return triple + [u, on(rng, u, triple[0]), pt(rng)]
    if k == 9:
        p, q = pt(rng), pt(rng)
        triple = [p, q, on(rng, p, q)]
        u = pt(rng)
        return triple + [u, on(rng, u, triple[0]), on(rng, u, triple[1])]
    if k == 10:
        p, q = pt(rng), pt(rng)
        a, b = p, q
        u = pt(rng)
        v = on(rng, u, a)
        w = on(rng, u, b)
        c = _lines_meet(_line_through(v, w), _line_through(p, q))
        if c is None:
            return None
        return [a, b, c, u, v, w]
    # k == 11: six points on an irreducible conic; the sixth is the
    # second intersection of the conic with a line through one of them
    five = [pt(rng) for _ in range(5)]
    try:
        cfg5 = PointConfiguration.of(*five)
    except ValueError:
        return None
    if classify_config(cfg5).collinearity_profile:
        return None
    conic = conic_through(cfg5.points)
    if conic is None or not conic_is_irreducible(conic):
        return None
    direction = pt(rng)
    base = five[rng.randrange(5)]
    c2 = conic.evaluate(direction)
    if c2 == 0:
        return None
    mixed = conic.evaluate([a + b for a, b in zip(base, direction)]) - c2
    if mixed == 0:
        return None
    # second root of q(base + t*direction): base + t*direction, cleared
    t = -mixed / c2
    coords = [t.denominator * a + t.numerator * b for a, b in zip(base, direction)]
    if not any(coords):
        return None
    return five + [_reduce_triple(coords)]


def _matches(label: str, cfg: PointConfiguration) -> bool:
    base, _, refine = label.partition(":")
    cls = classify_config(cfg)
    profile = cls.collinearity_profile
    if base.endswith("-general"):
        if profile:
            return False
        return cls.taxonomy_label == 1 if cfg.s == 6 else True
    if base.endswith("-collinear"):
        return profile == (cfg.s,)
    if base.startswith("(") and base.endswith(")-fold"):
        s_str, r_str = base[1:-len(")-fold")].split(",")
        s, r = int(s_str), int(r_str)
        if cfg.s != s or not profile or profile[0] != s - r:
            return False
        if refine == "off":
            return profile == (s - r,)
        if refine == "in":
            return profile == (s - r, 3) and r == 2
        return True
    s_str, k_str = base.split("-")
    return cfg.s == int(s_str) and cls.taxonomy_label == int(k_str)


def sample_config(label: str, seed: int) -> PointConfiguration:
    """Deterministic configuration with the requested classification.

    Coordinates are drawn from a small integer box; structural draws
    are rejected until `classify_config` confirms the label.
    """
    rng = random.Random(seed)
    for _ in range(_REJECTION_BUDGET):
        points = _build(rng, label)
        if points is None:
            continue
        try:
            cfg = PointConfiguration.of(*points)
        except ValueError:
            continue
        if _matches(label, cfg):
            return cfg
    raise SampleError(f"rejection budget exceeded for label {label!r}")


# ---------------------------------------------------------------------------
# Jacobian data
# ---------------------------------------------------------------------------

def _poly_det(matrix: list[list[Polynomial]]) -> Polynomial:
    if len(matrix) == 1:
        return matrix[0][0]
    R = matrix[0][0].ring
    total = R.zero()
    for i, row in enumerate(matrix):
        entry = row[0]
        if entry.is_zero():
            continue
        minor = [r[1:] for j, r in enumerate(matrix) if j != i]
        cofactor = entry * _poly_det(minor)
        total = total + (cofactor if i % 2 == 0 else -cofactor)
    return total


def matrix_minors(matrix: Sequence[Sequence[Polynomial]], k: int) -> list[Polynomial]:
    """All nonzero k x k minors of a polynomial matrix, deduplicated."""
    if not matrix or not matrix[0]:
        raise ValueError("empty matrix")
    if k < 1 or k > min(len(matrix), len(matrix[0])):
        raise ValueError("minor size exceeds the matrix dimensions")
    minors = []
    seen = set()
    for rows in itertools.combinations(range(len(matrix)), k):
        for cols in itertools.combinations(range(len(matrix[0])), k):
            m = _poly_det([[matrix[r][c] for c in cols] for r in rows])
            if not m.is_zero() and m not in seen:
                seen.add(m)
                minors.append(m)
    return minors


def jacobian(J: Ideal, codim: int) -> JacobianData:
    """Jacobian matrix of the generators, its codim-minors, and the
    Jacobian ideal J + I_codim(Theta) with minimal generators."""
    if codim < 1:
        raise ValueError("codimension must be positive")
    gens = J.generators
    R = J.ring
    if codim > min(len(gens), R.arity):
        raise ValueError("codimension exceeds the Jacobian matrix size")
    theta = tuple(tuple(g.differentiate(v) for v in R.variables) for g in gens)
    minor_ideal = Ideal(R, matrix_minors(theta, codim))
    total = J + minor_ideal
    jac = Ideal(R, minimal_generators_mod(total, None)) if total.is_homogeneous() else total
    return JacobianData(J, theta, minor_ideal, jac)


def jacobian_of_points(cfg: PointConfiguration, J: Ideal | None = None) -> JacobianData:
    """Jacobian data of a reduced point configuration (codim = n)."""
    if J is None:
        J = Ideal(cfg.ring, minimal_generators_mod(ideal_of_points(cfg), None))
    return jacobian(J, cfg.dim)


# ---------------------------------------------------------------------------
# generators for binomial(d+1, 2) points in general linear position
# ---------------------------------------------------------------------------

def glp_excluded_monomials(d: int) -> list[tuple]:
    """The d+4 degree-d monomials excluded from the support set."""
    out = [(d - i, i, 0) for i in range(d + 1)]
    out += [(d - 1, 0, 1), (d - 2, 1, 1), (0, 0, d)]
    return out


def glp_support_monomials(d: int) -> list[tuple]:
    excluded = set(glp_excluded_monomials(d))
    return [m for m in monomials_of_degree(3, d) if m not in excluded]


def glp_binomial_generators(d: int, cfg: PointConfiguration) -> list[Polynomial]:
    """The d+1 degree-d generators of the ideal of binomial(d+1,2)
    points in general linear position, with the first four points
    normalized to the three coordinate points and [1:1:1]."""
    if d < 2:
        raise ValueError("d must be at least 2")
    s = (d + 1) * d // 2
    if cfg.s != s:
        raise ValueError(f"expected {s} points for d={d}, got {cfg.s}")
    e1 = ProjectivePoint.of(1, 0, 0)
    e2 = ProjectivePoint.of(0, 1, 0)
    e3 = ProjectivePoint.of(0, 0, 1)
    unit = ProjectivePoint.of(1, 1, 1)
    if cfg.points[:4] != (e1, e2, e3, unit):
        raise ValueError("first four points must be the coordinate points and [1:1:1]")
    rest = cfg.points[4:]
    if any(p.coords[2] != 1 for p in rest):
        raise ValueError("remaining points must have last coordinate 1")
    support = glp_support_monomials(d)
    eval_points = [unit] + list(rest)
    matrix = [[_eval_monomial(m, p) for m in support] for p in eval_points]
    leads = [(d - i, i, 0) for i in range(1, d)] + [(d - 1, 0, 1), (d - 2, 1, 1)]
    out = []
    for mu in leads:
        rhs = [-_eval_monomial(mu, p) for p in eval_points]
        try:
            alphas = _linalg.solve(matrix, rhs)
        except ValueError:
            raise ValueError("singular interpolation system: points are not "
                             "in general linear position") from None
        terms = {mu: Fraction(1)}
        for m, a in zip(support, alphas):
            if a:
                terms[m] = a
        out.append(Polynomial(PLANE, terms))
    return out


def _eval_monomial(m: tuple, p: ProjectivePoint) -> Fraction:
    v = Fraction(1)
    for c, e in zip(p.coords, m):
        if e:
            v *= c ** e
    return v


def glp_normalized_config(s: int) -> PointConfiguration:
    """Deterministic general-linear-position configuration with the
    first four points normalized; small integer coordinates."""
    pts = [ProjectivePoint.of(1, 0, 0), ProjectivePoint.of(0, 1, 0),
           ProjectivePoint.of(0, 0, 1), ProjectivePoint.of(1, 1, 1)]
    candidates = []
    for a in range(2, 40):
        for b in range(2, 40):
            if a != b:
                candidates.append((a, b))
    candidates.sort(key=lambda ab: (ab[0] + ab[1], ab))
    for a, b in candidates:
        if len(pts) == s:
            break
        cand = ProjectivePoint.of(a, b, 1)
        if cand in pts:
            continue
        if any(collinear(p, q, cand) for p, q in itertools.combinations(pts, 2)):
            continue
        pts.append(cand)
    if len(pts) != s:
        raise SampleError(f"could not build {s} points in general position")
    return PointConfiguration(tuple(pts))
