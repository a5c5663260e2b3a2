"""Constructive sign assignment for odd sets of planar unit vectors.

The construction: replace vectors by their negatives so all point into the
upper half-plane, sort them by direction (this is the order in which they
appear on the boundary of the symmetric hull), then alternate signs
+1, -1, +1, ... along that order.  The resulting signed sum has norm at
most 1, every odd prefix sum has norm at most 1, and every prefix sum has
norm at most 2.  A BalanceCertificate records the full assignment so the
claims can be re-checked from the certificate alone.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import EvenCardinalityError, NotUnitError, ZeroVectorError
from .norms import DEFAULT_TOLERANCE, UNIT_TOLERANCE, Norm, Vec2, cross

ZERO = Vec2(0.0, 0.0)


def canonical_flip(v: Vec2) -> tuple[Vec2, int]:
    """Replace v by -v if needed so the result lies in the upper half-plane.

    Convention: y > 0, or y = 0 and x > 0.  Returns (flipped vector, flip)
    with flip in {-1, +1} and flipped = flip * v.
    """
    if v.x == 0.0 and v.y == 0.0:
        raise ZeroVectorError("zero vector has no direction")
    if v.y > 0.0 or (v.y == 0.0 and v.x > 0.0):
        return v, 1
    return -v, -1


@dataclass(frozen=True)
class BoundaryOrdering:
    """Flips and permutation putting vectors in boundary order.

    ordered[j] == flips[perm[j]] * vectors[perm[j]], and the ordered
    vectors have nondecreasing direction angle in [0, pi).
    """

    perm: tuple[int, ...]
    flips: tuple[int, ...]
    ordered: tuple[Vec2, ...]

    def __len__(self) -> int:
        return len(self.ordered)


def boundary_order(vectors: list[Vec2]) -> BoundaryOrdering:
    """Sort the (canonically flipped) vectors by direction angle in [0, pi).

    Comparison is by the sign of the cross product, never by computed
    angles.  Exactly parallel vectors tie and are broken by ascending
    input index, so the ordering is deterministic.
    """
    flipped = []
    flips = []
    for v in vectors:
        fv, f = canonical_flip(v)
        flipped.append(fv)
        flips.append(f)

    def compare(i: int, j: int) -> int:
        c = cross(flipped[i], flipped[j])
        if c > 0.0:
            return -1
        if c < 0.0:
            return 1
        return -1 if i < j else (1 if i > j else 0)

    perm = tuple(sorted(range(len(vectors)), key=functools.cmp_to_key(compare)))
    ordered = tuple(flipped[i] for i in perm)
    return BoundaryOrdering(perm=perm, flips=tuple(flips), ordered=ordered)


def edge_vectors(ordering: BoundaryOrdering) -> list[Vec2]:
    """Consecutive differences of the ordered vectors, closed up at the end.

    With ordered vectors v_1..v_n: a_i = v_{i+1} - v_i for i < n and
    a_n = -v_1 - v_n.  These are edge vectors of the symmetric hull.
    """
    vs = ordering.ordered
    n = len(vs)
    edges = [vs[i + 1] - vs[i] for i in range(n - 1)]
    edges.append(-vs[0] - vs[n - 1])
    return edges


def alternating_sum(vectors) -> Vec2:
    """v_1 - v_2 + v_3 - ... (signs alternate, starting +1)."""
    s = ZERO
    sign = 1
    for v in vectors:
        s = s + v if sign > 0 else s - v
        sign = -sign
    return s


def check_units(norm: Norm, vectors, unit_tol: float = UNIT_TOLERANCE) -> list[float]:
    """Admit vectors as units under ``norm``; returns their actual norms."""
    norms = [norm.value(v) for v in vectors]
    bad = [i for i, nv in enumerate(norms) if abs(nv - 1.0) > unit_tol]
    if bad:
        raise NotUnitError(bad, [norms[i] for i in bad])
    return norms


@dataclass(frozen=True)
class BalanceCertificate:
    """Auditable output of the alternating balance construction.

    signs_ordered follows the boundary order and always starts with +1;
    signs_original is the same assignment mapped back to the caller's
    indexing (through perm and flips).  prefix_sums / prefix_norms are in
    boundary order.  signed_sum is accumulated over the original indexing
    and agrees with prefix_sums[-1] within tolerance.
    """

    ordering: BoundaryOrdering
    signs_ordered: tuple[int, ...]
    signs_original: tuple[int, ...]
    signed_sum: Vec2
    prefix_sums: tuple[Vec2, ...]
    prefix_norms: tuple[float, ...]
    bound_total: float
    bound_odd_prefix: float
    bound_all_prefix: float
    tolerance: float
    norm_used: str

    def __len__(self) -> int:
        return len(self.signs_original)

    def max_odd_prefix_norm(self) -> float:
        return max(self.prefix_norms[0::2])

    def max_prefix_norm(self) -> float:
        return max(self.prefix_norms)

    def bound_verdicts(self, total_norm: float | None = None) -> dict[str, bool]:
        """Per-bound pass/fail at this certificate's tolerance."""
        t = total_norm if total_norm is not None else self.prefix_norms[-1]
        return {
            "total": t <= self.bound_total + self.tolerance,
            "odd_prefix": self.max_odd_prefix_norm() <= self.bound_odd_prefix + self.tolerance,
            "all_prefix": self.max_prefix_norm() <= self.bound_all_prefix + self.tolerance,
        }


def alternating_balance(
    norm: Norm,
    vectors: list[Vec2],
    tolerance: float = DEFAULT_TOLERANCE,
    unit_tol: float = UNIT_TOLERANCE,
) -> BalanceCertificate:
    """Assign signs to an odd set of unit vectors so the signed sum and all
    odd prefix sums (in boundary order) have norm at most 1, and every
    prefix sum has norm at most 2.
    """
    n = len(vectors)
    if n % 2 == 0:
        raise EvenCardinalityError(f"need an odd number of vectors, got {n}")
    check_units(norm, vectors, unit_tol)
    ordering = boundary_order(vectors)
    signs_ordered = tuple(1 if j % 2 == 0 else -1 for j in range(n))

    position = [0] * n
    for j, i in enumerate(ordering.perm):
        position[i] = j
    signs_original = tuple(
        signs_ordered[position[i]] * ordering.flips[i] for i in range(n)
    )

    prefix_sums = []
    s = ZERO
    for sign, v in zip(signs_ordered, ordering.ordered):
        s = s + v if sign > 0 else s - v
        prefix_sums.append(s)
    prefix_norms = tuple(norm.value(p) for p in prefix_sums)

    total = ZERO
    for sign, v in zip(signs_original, vectors):
        total = total + v if sign > 0 else total - v

    return BalanceCertificate(
        ordering=ordering,
        signs_ordered=signs_ordered,
        signs_original=signs_original,
        signed_sum=total,
        prefix_sums=tuple(prefix_sums),
        prefix_norms=prefix_norms,
        bound_total=1.0,
        bound_odd_prefix=1.0,
        bound_all_prefix=2.0,
        tolerance=tolerance,
        norm_used=norm.describe(),
    )


def odd_prefix_points(ordering: BoundaryOrdering) -> list[Vec2]:
    """Points v_1, v_1 + a_2, v_1 + a_2 + a_4, ... for an odd-length ordering.

    Point k equals the alternating prefix sum v_1 - v_2 + ... + v_{2k+1},
    i.e. prefix_sums[2k] of the certificate; each lies in the symmetric
    hull of the inputs.
    """
    n = len(ordering)
    if n % 2 == 0:
        raise EvenCardinalityError(f"need an odd-length ordering, got {n}")
    edges = edge_vectors(ordering)
    points = [ordering.ordered[0]]
    for k in range(1, (n - 1) // 2 + 1):
        points.append(points[-1] + edges[2 * k - 1])
    return points


def balance_three(
    norm: Norm,
    u: Vec2,
    v: Vec2,
    w: Vec2,
    tolerance: float = DEFAULT_TOLERANCE,
    unit_tol: float = UNIT_TOLERANCE,
) -> tuple[int, int, int]:
    """Signs (eu, ev, ew) with eu = +1 and ||u + ev*v + ew*w|| <= 1.

    Runs the alternating construction on the triple and negates globally
    if needed so the first sign is +1 (the norm of the sum is unchanged).
    """
    cert = alternating_balance(norm, [u, v, w], tolerance=tolerance, unit_tol=unit_tol)
    eu, ev, ew = cert.signs_original
    if eu < 0:
        return 1, -ev, -ew
    return eu, ev, ew
