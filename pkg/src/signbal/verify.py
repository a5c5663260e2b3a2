"""Re-verification of certificate files.

Every claim in a certificate is recomputed from the echoed instance: the
structural invariants of the ordering and sign maps, every prefix sum and
norm, the bound verdicts, and the hull-norm check when one was recorded.
A certificate passes only if all of it reproduces within the certificate's
stored tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balance import canonical_flip
from .errors import DegenerateHullError, MalformedFileError
from .files import (
    CERTIFICATE_FORMAT,
    Instance,
    instance_from_doc,
    instance_hash,
)
from .norms import PREDICATE_TOLERANCE, Norm, Vec2, cross, hull_of_plus_minus, polygon_norm

BOUND_TOTAL = 1.0
BOUND_ODD_PREFIX = 1.0
BOUND_ALL_PREFIX = 2.0
BOUND_STREAM = 2.0


@dataclass
class VerifyOutcome:
    ok: bool
    failures: list[str]


def hull_norm_check(vectors, points) -> list[float] | None:
    """Norms of ``points`` under the gauge of the symmetric hull of
    ``vectors``; None when the hull is degenerate."""
    try:
        gauge = polygon_norm(hull_of_plus_minus(vectors))
    except DegenerateHullError:
        return None
    return gauge.form.gauge_many(points)


def _require(doc, key, kind, where):
    if key not in doc:
        raise MalformedFileError(f"{where}: missing field {key!r}")
    value = doc[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise MalformedFileError(f"{where}: field {key!r} is not a number")
        return float(value)
    if not isinstance(value, kind):
        raise MalformedFileError(f"{where}: field {key!r} has wrong type")
    return value


def _parse_vec_list(raw, where) -> list[Vec2]:
    try:
        return [Vec2(float(x), float(y)) for x, y in raw]
    except (TypeError, ValueError) as exc:
        raise MalformedFileError(f"{where}: bad vector list: {exc}") from exc


def _parse_signs(raw, n, where) -> list[int]:
    if not isinstance(raw, list) or len(raw) != n or any(s not in (-1, 1) for s in raw):
        raise MalformedFileError(f"{where}: not a +-1 list of length {n}")
    return [int(s) for s in raw]


def verify_certificate_doc(doc: dict) -> VerifyOutcome:
    """Dispatch on certificate kind; malformed files raise, failed checks
    are collected and returned."""
    if doc.get("format") != CERTIFICATE_FORMAT:
        raise MalformedFileError(f"not a certificate file: format = {doc.get('format')!r}")
    instance = instance_from_doc(_require(doc, "instance", dict, "certificate"))
    failures: list[str] = []
    if instance_hash(instance) != doc.get("input_hash"):
        failures.append("input_hash does not match the echoed instance")
    tolerance = _require(doc, "tolerance", float, "certificate")
    unit_tol = _require(doc, "unit_tolerance", float, "certificate")
    kind = doc.get("kind")
    if kind == "balance":
        failures += _verify_balance(doc, instance, tolerance, unit_tol)
    elif kind == "stream":
        failures += _verify_stream(doc, instance, tolerance, unit_tol)
    else:
        raise MalformedFileError(f"unknown certificate kind {kind!r}")
    return VerifyOutcome(ok=not failures, failures=failures)


def _check_units(norm: Norm, vectors, unit_tol, failures):
    for i, v in enumerate(vectors):
        if abs(norm.value(v) - 1.0) > unit_tol:
            failures.append(f"vector {i} is not unit within {unit_tol}")


def _verify_balance(doc, instance: Instance, tolerance, unit_tol) -> list[str]:
    res = _require(doc, "result", dict, "certificate")
    vectors = instance.vectors
    norm = instance.norm
    n = len(vectors)
    perm_raw = _require(res, "perm", list, "result")
    if sorted(perm_raw) != list(range(n)):
        raise MalformedFileError("result: perm is not a permutation of the input indices")
    perm = [int(i) for i in perm_raw]
    flips = _parse_signs(_require(res, "flips", list, "result"), n, "result.flips")
    signs_ordered = _parse_signs(
        _require(res, "signs_ordered", list, "result"), n, "result.signs_ordered"
    )
    signs_original = _parse_signs(
        _require(res, "signs_original", list, "result"), n, "result.signs_original"
    )
    prefix_sums = _parse_vec_list(_require(res, "prefix_sums", list, "result"), "result")
    prefix_norms = _require(res, "prefix_norms", list, "result")
    signed_sum = _parse_vec_list([_require(res, "signed_sum", list, "result")], "result")[0]
    if len(prefix_sums) != n or len(prefix_norms) != n:
        raise MalformedFileError("result: prefix arrays have wrong length")
    bounds = _require(res, "bounds", dict, "result")

    failures: list[str] = []
    if n % 2 == 0:
        failures.append("vector count is even")
    _check_units(norm, vectors, unit_tol, failures)
    if (
        bounds.get("total") != BOUND_TOTAL
        or bounds.get("odd_prefix") != BOUND_ODD_PREFIX
        or bounds.get("all_prefix") != BOUND_ALL_PREFIX
    ):
        failures.append(f"claimed bounds {bounds} differ from (1, 1, 2)")

    # structural invariants of the ordering and the sign maps
    for j in range(n):
        if signs_ordered[j] != (1 if j % 2 == 0 else -1):
            failures.append(f"signs_ordered[{j}] breaks the alternating pattern")
            break
    ordered = []
    flip_ok = True
    for i in perm:
        fv = vectors[i] if flips[i] > 0 else -vectors[i]
        ordered.append(fv)
        if flip_ok:
            _, expected_flip = canonical_flip(vectors[i])
            if flips[i] != expected_flip:
                failures.append(f"flip of input {i} leaves the upper half-plane convention")
                flip_ok = False
    for j in range(n - 1):
        if cross(ordered[j], ordered[j + 1]) < -PREDICATE_TOLERANCE:
            failures.append(f"ordered vectors {j}, {j + 1} are out of angular order")
            break
    position = [0] * n
    for j, i in enumerate(perm):
        position[i] = j
    for i in range(n):
        if signs_original[i] != signs_ordered[position[i]] * flips[i]:
            failures.append(f"signs_original[{i}] inconsistent with perm/flips")
            break

    # recompute every claimed number
    sx = sy = 0.0
    for j in range(n):
        sx += signs_ordered[j] * ordered[j].x
        sy += signs_ordered[j] * ordered[j].y
        p = prefix_sums[j]
        if abs(p.x - sx) > tolerance or abs(p.y - sy) > tolerance:
            failures.append(f"prefix_sums[{j}] does not reproduce")
            break
        recomputed = norm.value(Vec2(sx, sy))
        if abs(prefix_norms[j] - recomputed) > tolerance:
            failures.append(f"prefix_norms[{j}] does not reproduce")
            break
    tx = ty = 0.0
    for i in range(n):
        tx += signs_original[i] * vectors[i].x
        ty += signs_original[i] * vectors[i].y
    if abs(signed_sum.x - tx) > tolerance or abs(signed_sum.y - ty) > tolerance:
        failures.append("signed_sum does not reproduce from signs_original")
    total_norm = norm.value(Vec2(tx, ty))

    verdicts = _require(doc, "verdicts", dict, "certificate")
    expect = {
        "total": total_norm <= BOUND_TOTAL + tolerance,
        "odd_prefix": max(prefix_norms[0::2]) <= BOUND_ODD_PREFIX + tolerance,
        "all_prefix": max(prefix_norms) <= BOUND_ALL_PREFIX + tolerance,
    }
    hull = doc.get("hull_check")
    if hull is not None and hull.get("performed"):
        hull_norms = hull_norm_check(vectors, prefix_sums + [signed_sum])
        if hull_norms is None:
            failures.append("hull_check recorded but the hull is degenerate")
        else:
            stored = hull.get("prefix_norms")
            if not isinstance(stored, list) or len(stored) != n:
                raise MalformedFileError("hull_check: bad prefix_norms")
            for j in range(n):
                if abs(stored[j] - hull_norms[j]) > tolerance:
                    failures.append(f"hull_check.prefix_norms[{j}] does not reproduce")
                    break
            stored_total = _require(hull, "signed_sum_norm", float, "hull_check")
            if abs(stored_total - hull_norms[n]) > tolerance:
                failures.append("hull_check.signed_sum_norm does not reproduce")
            expect["hull_total"] = hull_norms[n] <= BOUND_TOTAL + tolerance
            expect["hull_odd_prefix"] = (
                max(hull_norms[0:n:2]) <= BOUND_ODD_PREFIX + tolerance
            )
            expect["hull_all_prefix"] = max(hull_norms[0:n]) <= BOUND_ALL_PREFIX + tolerance
    if set(verdicts) != set(expect):
        failures.append(f"verdict keys {sorted(verdicts)} differ from {sorted(expect)}")
    for key, value in expect.items():
        if verdicts.get(key) is not value:
            failures.append(f"verdict {key!r} does not reproduce (expected {value})")
    return failures


def _verify_stream(doc, instance: Instance, tolerance, unit_tol) -> list[str]:
    res = _require(doc, "result", dict, "certificate")
    vectors = instance.vectors
    norm = instance.norm
    n = len(vectors)
    signs = _parse_signs(_require(res, "signs", list, "result"), n, "result.signs")
    stored_norms = _require(res, "odd_prefix_norms", list, "result")
    odd_count = (n + 1) // 2
    if len(stored_norms) != odd_count:
        raise MalformedFileError("result: odd_prefix_norms has wrong length")
    if res.get("bound_odd_prefix") != BOUND_STREAM:
        return [f"claimed stream bound {res.get('bound_odd_prefix')} differs from 2"]

    failures: list[str] = []
    _check_units(norm, vectors, unit_tol, failures)
    if signs[0] != 1:
        failures.append("first sign is not +1")
    sx = sy = 0.0
    worst = 0.0
    idx = 0
    for j in range(n):
        sx += signs[j] * vectors[j].x
        sy += signs[j] * vectors[j].y
        if j % 2 == 0:
            value = norm.value(Vec2(sx, sy))
            worst = max(worst, value)
            if abs(stored_norms[idx] - value) > tolerance:
                failures.append(f"odd_prefix_norms[{idx}] does not reproduce")
                return failures
            idx += 1
    verdicts = _require(doc, "verdicts", dict, "certificate")
    expected = worst <= BOUND_STREAM + tolerance
    if set(verdicts) != {"odd_prefix"} or verdicts.get("odd_prefix") is not expected:
        failures.append(f"verdict 'odd_prefix' does not reproduce (expected {expected})")
    return failures
