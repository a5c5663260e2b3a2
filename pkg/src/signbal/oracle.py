"""Brute-force ground truth at desk scale.

Exhaustive enumeration over sign vectors (and, for the any-order quantity,
permutations) establishes the true optimum on small instances; the
constructive balancers are validated against it.  No pruning: plain
enumeration is the point.  The hot loops are JIT-compiled (see _enum.py),
imported lazily so that the rest of the package stays light.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import TooLargeError
from .norms import (
    EuclideanNorm,
    LpNorm,
    MaxNorm,
    Norm,
    PolygonalNorm,
    Vec2,
)

MAX_SIGNED_SUM_N = 24
MAX_FIXED_ORDER_N = 20
MAX_ANY_ORDER_N = 9

QUANTITY_MIN_SIGNED_SUM = "min_signed_sum"
QUANTITY_FIXED_ORDER = "min_max_odd_prefix_fixed_order"
QUANTITY_ANY_ORDER = "min_max_odd_prefix_any_order"


@dataclass(frozen=True)
class OracleReport:
    """Exact minimum over a declared finite search space, with its argmin."""

    instance_id: str
    quantity: str
    value: float
    argmin_signs: tuple[int, ...]
    argmin_perm: tuple[int, ...] | None
    search_size: int


def _kernels():
    from . import _enum

    return _enum


def _norm_params(norm: Norm):
    """Flatten a Norm into the (kind, p, ipow, normals, inv_offsets) tuple
    the enumeration kernels understand."""
    import numpy as np  # deferred with numba: the CLI's other commands stay light

    empty2 = np.zeros((0, 2), dtype=np.float64)
    empty1 = np.zeros(0, dtype=np.float64)
    if isinstance(norm, EuclideanNorm):
        return 0, 2.0, 0, empty2, empty1
    if isinstance(norm, LpNorm):
        p = float(norm.p)
        ipow = int(p) if p.is_integer() and p <= 16 else 0
        return 1, p, ipow, empty2, empty1
    if isinstance(norm, MaxNorm):
        return 2, 0.0, 0, empty2, empty1
    if isinstance(norm, PolygonalNorm):
        normals = np.array([(nv.x, nv.y) for nv in norm.form.normals], dtype=np.float64)
        inv_offsets = 1.0 / np.array(norm.form.offsets, dtype=np.float64)
        return 3, 0.0, 0, normals, inv_offsets
    raise TypeError(f"unsupported norm type {type(norm).__name__}")


def _untransform(kind: int, p: float, value: float) -> float:
    if kind == 0:
        return math.sqrt(value)
    if kind == 1 and p != 1.0:
        return value ** (1.0 / p)
    return float(value)


def _coords(vectors):
    import numpy as np

    vx = np.array([v.x for v in vectors], dtype=np.float64)
    vy = np.array([v.y for v in vectors], dtype=np.float64)
    return vx, vy


def _signs_from_index(idx: int, n: int) -> tuple[int, ...]:
    # sign j lives in bit (n - 1 - j); sign 0 is fixed +1
    return tuple(
        1 if j == 0 or (idx >> (n - 1 - j)) & 1 == 0 else -1 for j in range(n)
    )


def evaluate_signed_sum(norm: Norm, vectors, signs) -> float:
    """||sum of signs[i] * vectors[i]||, accumulated left to right."""
    sx = 0.0
    sy = 0.0
    for s, v in zip(signs, vectors):
        sx += s * v.x
        sy += s * v.y
    return norm.value(Vec2(sx, sy))


def evaluate_max_odd_prefix(norm: Norm, seq, signs) -> float:
    """Max over odd k of ||sum of the first k signed vectors||, given order."""
    sx = 0.0
    sy = 0.0
    worst = 0.0
    for j, (s, v) in enumerate(zip(signs, seq)):
        sx += s * v.x
        sy += s * v.y
        if j % 2 == 0:
            worst = max(worst, norm.value(Vec2(sx, sy)))
    return worst


def min_signed_sum(norm: Norm, vectors, instance_id: str = "") -> OracleReport:
    """Exact minimum of ||signed sum|| over all 2^(n-1) sign vectors with
    the first sign +1 (global negation loses nothing)."""
    n = len(vectors)
    if not 1 <= n <= MAX_SIGNED_SUM_N:
        raise TooLargeError(f"n = {n} outside enumeration guard [1, {MAX_SIGNED_SUM_N}]")
    kind, p, ipow, normals, inv_offsets = _norm_params(norm)
    vx, vy = _coords(vectors)
    best, best_idx = _kernels().min_signed_sum_kernel(
        vx, vy, kind, p, ipow, normals, inv_offsets
    )
    return OracleReport(
        instance_id=instance_id,
        quantity=QUANTITY_MIN_SIGNED_SUM,
        value=_untransform(kind, p, best),
        argmin_signs=_signs_from_index(int(best_idx), n),
        argmin_perm=None,
        search_size=2 ** (n - 1),
    )


def min_max_odd_prefix_fixed_order(norm: Norm, seq, instance_id: str = "") -> OracleReport:
    """Exact minimum, over sign vectors with the first sign +1, of the max
    odd-prefix norm taken in the given order."""
    n = len(seq)
    if not 1 <= n <= MAX_FIXED_ORDER_N:
        raise TooLargeError(f"n = {n} outside enumeration guard [1, {MAX_FIXED_ORDER_N}]")
    kind, p, ipow, normals, inv_offsets = _norm_params(norm)
    vx, vy = _coords(seq)
    best, best_idx = _kernels().min_max_odd_prefix_fixed_kernel(
        vx, vy, kind, p, ipow, normals, inv_offsets
    )
    return OracleReport(
        instance_id=instance_id,
        quantity=QUANTITY_FIXED_ORDER,
        value=_untransform(kind, p, best),
        argmin_signs=_signs_from_index(int(best_idx), n),
        argmin_perm=None,
        search_size=2 ** (n - 1),
    )


def min_max_odd_prefix_any_order(norm: Norm, vectors, instance_id: str = "") -> OracleReport:
    """Exact minimum of the max odd-prefix norm over all n! orderings and
    all sign vectors with the first sign +1."""
    n = len(vectors)
    if not 1 <= n <= MAX_ANY_ORDER_N:
        raise TooLargeError(f"n = {n} outside enumeration guard [1, {MAX_ANY_ORDER_N}]")
    kind, p, ipow, normals, inv_offsets = _norm_params(norm)
    vx, vy = _coords(vectors)
    best, best_perm, best_sgn = _kernels().min_max_odd_prefix_any_order_kernel(
        vx, vy, kind, p, ipow, normals, inv_offsets
    )
    return OracleReport(
        instance_id=instance_id,
        quantity=QUANTITY_ANY_ORDER,
        value=_untransform(kind, p, best),
        argmin_signs=tuple(int(s) for s in best_sgn),
        argmin_perm=tuple(int(i) for i in best_perm),
        search_size=math.factorial(n) * 2 ** (n - 1),
    )


def tightness_corpus() -> list[tuple[str, Norm, list[Vec2]]]:
    """Fixed instances on which the bounds are attained or fail.

    Same-vector sets attain the bound 1; the max-norm 5-sequence forces the
    online bound 2; the even pair shows the odd-count hypothesis is needed
    (every signed sum of the two Euclidean basis vectors has norm sqrt(2),
    and l1 norm 2).
    """
    euclid = EuclideanNorm()
    v = Vec2(1.0, 0.0)
    five_seq = [
        Vec2(-1.0, 0.5),
        Vec2(1.0, 0.5),
        Vec2(0.0, 1.0),
        Vec2(-1.0, 1.0),
        Vec2(1.0, 1.0),
    ]
    pair = [Vec2(1.0, 0.0), Vec2(0.0, 1.0)]
    return [
        ("same-vector-3", euclid, [v] * 3),
        ("same-vector-5", euclid, [v] * 5),
        ("same-vector-15", euclid, [v] * 15),
        ("max-norm-5seq", MaxNorm(), five_seq),
        ("l1-basis-pair", LpNorm(1.0), list(pair)),
        ("even-pair", euclid, list(pair)),
    ]
