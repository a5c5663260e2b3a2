"""Planar norms and the symmetric polygons that serve as their unit balls.

Four norm families are supported: Euclidean, lp with p >= 1, max (the
p = infinity limit), and polygonal gauge norms whose unit ball is a
centrally symmetric convex polygon.  Polygonal norms are evaluated via a
half-plane representation cached at construction, so evaluation is a max
of linear forms.  Everything here is an immutable value; all functions
are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateHullError, ZeroVectorError

# Absolute tolerance for comparing computed values against the certified bounds.
DEFAULT_TOLERANCE = 1e-9
# Admission slack for "unit" vectors, looser than DEFAULT_TOLERANCE so that
# user-supplied decimals (e.g. short decimal approximations) are accepted.
UNIT_TOLERANCE = 1e-6
# Tolerance for geometric sign predicates (orientation, collinearity).
PREDICATE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Vec2:
    """A point/vector in the plane. Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def __mul__(self, t: float) -> "Vec2":
        return Vec2(self.x * t, self.y * t)

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[float, float]:
        return (float(self.x), float(self.y))


def dot(a: Vec2, b: Vec2) -> float:
    return a.x * b.x + a.y * b.y


def cross(a: Vec2, b: Vec2) -> float:
    """Signed area spanned by a, b; positive when b is counterclockwise of a."""
    return a.x * b.y - a.y * b.x


class Norm:
    """A norm on the plane. Subclasses provide value() and a description tag."""

    def value(self, v: Vec2) -> float:
        raise NotImplementedError

    def __call__(self, v: Vec2) -> float:
        return self.value(v)

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class EuclideanNorm(Norm):
    def value(self, v: Vec2) -> float:
        return math.hypot(v.x, v.y)

    def describe(self) -> str:
        return "euclidean"


@dataclass(frozen=True)
class LpNorm(Norm):
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.p) and self.p >= 1.0):
            raise ValueError(f"lp norm requires finite p >= 1, got {self.p}")

    def value(self, v: Vec2) -> float:
        ax = abs(v.x)
        ay = abs(v.y)
        if self.p == 1.0:
            return ax + ay
        if self.p == 2.0:
            return math.hypot(ax, ay)
        # scale by the larger coordinate so x**p cannot underflow to 0
        m = ax if ax > ay else ay
        if m == 0.0:
            return 0.0
        return m * ((ax / m) ** self.p + (ay / m) ** self.p) ** (1.0 / self.p)

    def describe(self) -> str:
        return f"lp({self.p:g})"


@dataclass(frozen=True)
class MaxNorm(Norm):
    def value(self, v: Vec2) -> float:
        return max(abs(v.x), abs(v.y))

    def describe(self) -> str:
        return "max"


@dataclass(frozen=True)
class SymmetricPolygon:
    """Centrally symmetric, strictly convex polygon, counterclockwise.

    vertices has even length 2m with m >= 2, vertex[i + m] == -vertex[i]
    (within ``sym_tol``), and every consecutive vertex triple makes a strict
    left turn, which puts the origin strictly inside.
    """

    vertices: tuple[Vec2, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        k = len(verts)
        if k < 4 or k % 2 != 0:
            raise ValueError(f"need an even vertex count >= 4, got {k}")
        m = k // 2
        sym_tol = DEFAULT_TOLERANCE
        for i in range(m):
            a, b = verts[i], verts[i + m]
            if abs(a.x + b.x) > sym_tol or abs(a.y + b.y) > sym_tol:
                raise ValueError(
                    f"not centrally symmetric: vertex {i} = {a}, vertex {i + m} = {b}"
                )
        for i in range(k):
            a, b, c = verts[i], verts[(i + 1) % k], verts[(i + 2) % k]
            if cross(b - a, c - b) <= 0.0:
                raise ValueError(
                    f"vertices not strictly convex counterclockwise at index {i}"
                )

    @property
    def half_count(self) -> int:
        return len(self.vertices) // 2


@dataclass(frozen=True)
class HalfPlaneForm:
    """Intersection-of-half-planes view of a SymmetricPolygon.

    One (outward normal, offset) pair per edge; the polygon is
    {x : <normal_i, x> <= offset_i for all i}.  The normal set is closed
    under negation because the vertex list is.
    """

    normals: tuple[Vec2, ...]
    offsets: tuple[float, ...]

    def gauge(self, v: Vec2) -> float:
        best = 0.0
        for n, c in zip(self.normals, self.offsets):
            t = (n.x * v.x + n.y * v.y) / c
            if t > best:
                best = t
        return best

    def gauge_many(self, points) -> list[float]:
        """Gauge of many points; switches to a vectorized path when the
        point-by-edge product is large (full-scale certificate checks)."""
        if len(points) * len(self.normals) < 50000:
            return [self.gauge(p) for p in points]
        import numpy as np

        coords = np.array([(p.x, p.y) for p in points])
        normals = np.array([(n.x, n.y) for n in self.normals])
        offsets = np.array(self.offsets)
        return np.maximum(coords @ normals.T / offsets, 0.0).max(axis=1).tolist()


def half_plane_form(polygon: SymmetricPolygon) -> HalfPlaneForm:
    """Build the edge normals and offsets of a symmetric polygon."""
    verts = polygon.vertices
    k = len(verts)
    normals = []
    offsets = []
    for i in range(k):
        a = verts[i]
        b = verts[(i + 1) % k]
        e = b - a
        n = Vec2(e.y, -e.x)  # outward for a counterclockwise boundary
        c = dot(n, a)
        if c <= 0.0:
            raise ValueError(f"origin not strictly interior (edge {i})")
        normals.append(n)
        offsets.append(c)
    return HalfPlaneForm(tuple(normals), tuple(offsets))


@dataclass(frozen=True)
class PolygonalNorm(Norm):
    """Gauge (Minkowski functional) of a symmetric polygon: the norm whose
    unit ball is exactly that polygon."""

    ball: SymmetricPolygon
    form: HalfPlaneForm

    def value(self, v: Vec2) -> float:
        return self.form.gauge(v)

    def describe(self) -> str:
        return f"polygon({len(self.ball.vertices)})"


def polygon_norm(polygon: SymmetricPolygon) -> PolygonalNorm:
    """Norm whose unit ball is ``polygon``; the half-plane form is cached."""
    return PolygonalNorm(polygon, half_plane_form(polygon))


def norm_eval(norm: Norm, v: Vec2) -> float:
    """Evaluate ||v|| under ``norm``. Total on finite inputs; 0 iff v = 0."""
    return norm.value(v)


def unitize(norm: Norm, v: Vec2) -> Vec2:
    """Scale v to unit length under ``norm``.

    Inputs whose norm sits in the subnormal range (or overflows, for gauge
    norms of huge vectors) are first rescaled by an exact power of two, so
    the result is unit within tolerance for every nonzero finite input.
    """
    n = norm.value(v)
    if n == 0.0:
        raise ZeroVectorError("cannot unitize the zero vector")
    if n < 1e-305:
        v = Vec2(v.x * 2.0**600, v.y * 2.0**600)
        n = norm.value(v)
    elif math.isinf(n):
        v = Vec2(v.x * 2.0**-600, v.y * 2.0**-600)
        n = norm.value(v)
    return Vec2(v.x / n, v.y / n)


def _turn(a, b, c):
    # cross of (b - a) and (c - a), on raw coordinate pairs
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _convex_hull(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Monotone-chain hull, counterclockwise from the lexicographic minimum.

    Collinear points (within PREDICATE_TOLERANCE) are dropped so the result
    is strictly convex.  ``points`` must be sorted and duplicate-free.
    """
    if len(points) <= 2:
        return list(points)
    lower: list[tuple[float, float]] = []
    for p in points:
        while len(lower) >= 2 and _turn(lower[-2], lower[-1], p) <= PREDICATE_TOLERANCE:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(points):
        while len(upper) >= 2 and _turn(upper[-2], upper[-1], p) <= PREDICATE_TOLERANCE:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_of_plus_minus(vectors: list[Vec2]) -> SymmetricPolygon:
    """Convex hull of {v, -v : v in V} as a SymmetricPolygon.

    The input points are closed under exact negation, so the computed hull
    is symmetric; the second half of the vertex list is then replaced by
    the exact negation of the first half, making the symmetry invariant
    hold to the bit.  Raises DegenerateHullError when all inputs are
    pairwise parallel (the hull has no interior).
    """
    if not vectors:
        raise DegenerateHullError("no input vectors")
    pts = set()
    for v in vectors:
        pts.add((float(v.x), float(v.y)))
        pts.add((-float(v.x), -float(v.y)))
    hull = _convex_hull(sorted(pts))
    if len(hull) < 4:
        raise DegenerateHullError(
            f"hull of +-V has no interior ({len(hull)} extreme points); "
            "all inputs are pairwise parallel"
        )
    if len(hull) % 2 != 0:
        raise DegenerateHullError("hull lost symmetry (odd vertex count)")
    m = len(hull) // 2
    sym_tol = DEFAULT_TOLERANCE
    for i in range(m):
        if (
            abs(hull[i][0] + hull[i + m][0]) > sym_tol
            or abs(hull[i][1] + hull[i + m][1]) > sym_tol
        ):
            raise DegenerateHullError("hull lost symmetry (unpaired vertex)")
    half = [Vec2(x, y) for x, y in hull[:m]]
    return SymmetricPolygon(tuple(half + [-v for v in half]))
