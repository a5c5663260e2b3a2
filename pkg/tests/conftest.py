"""Shared strategies and independent reference implementations.

The reference enumerators here are deliberately naive pure-Python code
(itertools over sign tuples and permutations, orientation tests against
every polygon edge).  They are the trusted side of every dual check and
must stay independent of the package's own oracle module.
"""

import itertools
import math

from hypothesis import settings
from hypothesis import strategies as st

from signbal import EuclideanNorm, LpNorm, MaxNorm, Vec2, cross, polygon_norm, unitize
from signbal.rng import SplitMix64, random_symmetric_polygon

settings.register_profile("signbal", deadline=None)
settings.load_profile("signbal")

ANGLE_STEPS = 720


def dir_from_step(k: int) -> Vec2:
    theta = 2.0 * math.pi * (k % ANGLE_STEPS) / ANGLE_STEPS
    return Vec2(math.cos(theta), math.sin(theta))


def polygon_norm_from_seed(seed: int):
    return polygon_norm(random_symmetric_polygon(SplitMix64(seed)))


FIXED_NORMS = [EuclideanNorm(), LpNorm(1.0), LpNorm(1.5), LpNorm(3.0), MaxNorm()]


def norms_strategy():
    return st.one_of(
        st.sampled_from(FIXED_NORMS),
        st.integers(0, 999).map(polygon_norm_from_seed),
    )


def unit_vectors_strategy(norm, min_size=1, max_size=11, odd=False):
    base = st.lists(
        st.integers(0, ANGLE_STEPS - 1), min_size=min_size, max_size=max_size
    )
    if odd:
        base = base.filter(lambda ks: len(ks) % 2 == 1)
    return base.map(lambda ks: [unitize(norm, dir_from_step(k)) for k in ks])


def norm_and_units_strategy(min_size=1, max_size=11, odd=False):
    return norms_strategy().flatmap(
        lambda norm: st.tuples(
            st.just(norm),
            unit_vectors_strategy(norm, min_size=min_size, max_size=max_size, odd=odd),
        )
    )


# ---------------------------------------------------------------------------
# independent reference implementations


def point_in_convex_polygon(polygon, x: Vec2, tol: float = 1e-12) -> bool:
    """Orientation of x against every edge of a counterclockwise polygon."""
    verts = polygon.vertices
    k = len(verts)
    for i in range(k):
        a = verts[i]
        b = verts[(i + 1) % k]
        if cross(b - a, x - a) < -tol:
            return False
    return True


def all_sign_tuples(n: int, fix_first: bool = True):
    head = [(1,)] if fix_first else [(1,), (-1,)]
    for h in head:
        for tail in itertools.product((1, -1), repeat=n - 1):
            yield h + tail


def signed_sum(vectors, signs) -> Vec2:
    sx = sy = 0.0
    for s, v in zip(signs, vectors):
        sx += s * v.x
        sy += s * v.y
    return Vec2(sx, sy)


def brute_min_signed_sum(norm, vectors, fix_first: bool = True) -> float:
    return min(
        norm.value(signed_sum(vectors, signs))
        for signs in all_sign_tuples(len(vectors), fix_first)
    )


def max_odd_prefix(norm, seq, signs) -> float:
    sx = sy = 0.0
    worst = 0.0
    for j, (s, v) in enumerate(zip(signs, seq)):
        sx += s * v.x
        sy += s * v.y
        if j % 2 == 0:
            worst = max(worst, norm.value(Vec2(sx, sy)))
    return worst


def brute_min_max_odd_prefix_fixed(norm, seq, fix_first: bool = True) -> float:
    return min(
        max_odd_prefix(norm, seq, signs)
        for signs in all_sign_tuples(len(seq), fix_first)
    )


def brute_min_max_odd_prefix_any(norm, vectors, fix_first: bool = True) -> float:
    best = math.inf
    for perm in itertools.permutations(range(len(vectors))):
        seq = [vectors[i] for i in perm]
        best = min(best, brute_min_max_odd_prefix_fixed(norm, seq, fix_first))
    return best
