"""Online sign assignment: vectors arrive in a fixed order, signs commit
two at a time, and every odd prefix sum keeps norm at most 2.

Induction step: split the running sum s into u + w with ||u|| = 1 and
||w|| <= 1 (both parallel to s), balance the triple (u, next pair) so the
triple's signed sum has norm at most 1 with u keeping sign +1, and adopt
the pair's signs.  Then ||s'|| <= ||u + ea*a + eb*b|| + ||w|| <= 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balance import balance_three, check_units
from .errors import EvenCardinalityError, PrefixOutOfRangeError
from .norms import DEFAULT_TOLERANCE, UNIT_TOLERANCE, Norm, Vec2, unitize


@dataclass(frozen=True)
class StreamState:
    """Running state of the online signer after an odd number of vectors."""

    norm: Norm
    k: int
    s: Vec2
    signs: tuple[int, ...]


def stream_init(
    norm: Norm,
    v1: Vec2,
    unit_tol: float = UNIT_TOLERANCE,
) -> StreamState:
    """Consume the first vector with sign +1."""
    check_units(norm, [v1], unit_tol)
    return StreamState(norm=norm, k=1, s=v1, signs=(1,))


def decompose(
    norm: Norm,
    s: Vec2,
    fallback_dir: Vec2,
    tolerance: float = DEFAULT_TOLERANCE,
) -> tuple[Vec2, Vec2]:
    """Split s = u + w with ||u|| = 1, ||w|| <= 1, both parallel to s.

    Requires ||s|| <= 2 (+ tolerance); anything larger means an upstream
    invariant was violated.  At s = 0 the direction is free, so u is the
    unitized fallback direction and w = -u.
    """
    sn = norm.value(s)
    if sn > 2.0 + tolerance:
        raise PrefixOutOfRangeError(f"prefix sum norm {sn!r} exceeds 2 + tolerance")
    if sn == 0.0:
        u = unitize(norm, fallback_dir)
        return u, -u
    u = unitize(norm, s)  # s / ||s||, stable down to subnormal prefix sums
    return u, s - u


def stream_step(
    state: StreamState,
    v_a: Vec2,
    v_b: Vec2,
    tolerance: float = DEFAULT_TOLERANCE,
    unit_tol: float = UNIT_TOLERANCE,
) -> StreamState:
    """Commit signs for the next two vectors, keeping ||s|| <= 2."""
    norm = state.norm
    check_units(norm, [v_a, v_b], unit_tol)
    u, _w = decompose(norm, state.s, v_a, tolerance=tolerance)
    _eu, ea, eb = balance_three(norm, u, v_a, v_b, tolerance=tolerance, unit_tol=unit_tol)
    s = state.s
    s = s + v_a if ea > 0 else s - v_a
    s = s + v_b if eb > 0 else s - v_b
    return StreamState(norm=norm, k=state.k + 2, s=s, signs=state.signs + (ea, eb))


def stream_run(
    norm: Norm,
    seq: list[Vec2],
    allow_even: bool = False,
    tolerance: float = DEFAULT_TOLERANCE,
    unit_tol: float = UNIT_TOLERANCE,
) -> tuple[list[int], list[float]]:
    """Sign a whole sequence online; returns (signs, odd prefix norms).

    The guarantee covers odd prefixes only, so even-length sequences are
    rejected unless ``allow_even`` is set, in which case the final vector
    gets sign +1 with no claim about the final (even) prefix.
    """
    n = len(seq)
    if n % 2 == 0 and not allow_even:
        raise EvenCardinalityError(
            f"sequence length {n} is even; pass allow_even to sign the last "
            "vector unconstrained"
        )
    if n == 0:
        return [], []
    state = stream_init(norm, seq[0], unit_tol=unit_tol)
    odd_prefix_norms = [norm.value(state.s)]
    for i in range(1, n - 1, 2):
        state = stream_step(state, seq[i], seq[i + 1], tolerance=tolerance, unit_tol=unit_tol)
        odd_prefix_norms.append(norm.value(state.s))
    signs = list(state.signs)
    if len(signs) < n:
        # even-length opt-in: one vector left over, sign unconstrained
        check_units(norm, [seq[-1]], unit_tol)
        signs.append(1)
    return signs, odd_prefix_norms
