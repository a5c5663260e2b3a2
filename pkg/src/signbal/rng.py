"""Seeded instance generation.

Randomness comes from SplitMix64 (Steele, Lea & Flood's 64-bit mixer), an
algorithm small enough to restate in a README so other implementations can
reproduce instances bit for bit:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z XOR (z >> 27)) * 0x94D049BB133111EB mod 2^64
    z = z XOR (z >> 31)

A uniform double in [0, 1) is (z >> 11) * 2^-53.
"""

from __future__ import annotations

import math

from .errors import DegenerateHullError
from .norms import (
    EuclideanNorm,
    LpNorm,
    MaxNorm,
    Norm,
    SymmetricPolygon,
    Vec2,
    hull_of_plus_minus,
    unitize,
)

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB


class SplitMix64:
    """Deterministic 64-bit PRNG; the whole generator fits in next_u64."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MUL1) & _MASK64
        z = ((z ^ (z >> 27)) * _MUL2) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, n: int) -> int:
        return int(self.next_float() * n)


def random_direction(rng: SplitMix64) -> Vec2:
    theta = 2.0 * math.pi * rng.next_float()
    return Vec2(math.cos(theta), math.sin(theta))


def random_unit_vector(rng: SplitMix64, norm: Norm) -> Vec2:
    """Uniform direction on the circle, scaled to unit length under ``norm``."""
    return unitize(norm, random_direction(rng))


def random_symmetric_polygon(rng: SplitMix64) -> SymmetricPolygon:
    """Symmetric polygon with 6 to 12 vertices: m in [3, 6] random Euclidean
    unit directions, symmetrized and hulled.  Redraws on the measure-zero
    degenerate outcomes."""
    while True:
        m = 3 + rng.next_below(4)
        dirs = [random_direction(rng) for _ in range(m)]
        try:
            polygon = hull_of_plus_minus(dirs)
        except DegenerateHullError:
            continue
        if len(polygon.vertices) >= 6:
            return polygon


def make_norm(kind: str, p: float | None = None) -> Norm:
    if kind == "euclidean":
        return EuclideanNorm()
    if kind == "max":
        return MaxNorm()
    if kind == "lp":
        return LpNorm(2.0 if p is None else float(p))
    raise ValueError(f"unknown norm kind {kind!r}")


def generate_vectors(rng: SplitMix64, norm: Norm, n: int) -> list[Vec2]:
    return [random_unit_vector(rng, norm) for _ in range(n)]
