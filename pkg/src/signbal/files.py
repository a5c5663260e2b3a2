"""Instance and certificate files: JSON documents with a fixed layout.

Numbers are serialized with Python's shortest round-trip float repr, so
parsing a file reproduces every double bit for bit, and identical inputs
produce byte-identical files.  A certificate echoes its whole instance and
is self-contained: re-verification needs only the certificate file.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .errors import MalformedFileError
from .norms import (
    EuclideanNorm,
    LpNorm,
    MaxNorm,
    Norm,
    PolygonalNorm,
    SymmetricPolygon,
    Vec2,
    polygon_norm,
)

INSTANCE_FORMAT = "signbal-instance"
CERTIFICATE_FORMAT = "signbal-certificate"
FORMAT_VERSION = 1

MODE_SET = "set"
MODE_SEQUENCE = "sequence"


def norm_to_spec(norm: Norm) -> dict:
    if isinstance(norm, EuclideanNorm):
        return {"kind": "euclidean"}
    if isinstance(norm, LpNorm):
        return {"kind": "lp", "p": float(norm.p)}
    if isinstance(norm, MaxNorm):
        return {"kind": "max"}
    if isinstance(norm, PolygonalNorm):
        return {
            "kind": "polygon",
            "vertices": [[float(v.x), float(v.y)] for v in norm.ball.vertices],
        }
    raise TypeError(f"unsupported norm type {type(norm).__name__}")


def norm_from_spec(spec) -> Norm:
    try:
        kind = spec["kind"]
        if kind == "euclidean":
            return EuclideanNorm()
        if kind == "lp":
            return LpNorm(float(spec["p"]))
        if kind == "max":
            return MaxNorm()
        if kind == "polygon":
            verts = tuple(Vec2(float(x), float(y)) for x, y in spec["vertices"])
            return polygon_norm(SymmetricPolygon(verts))
    except MalformedFileError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedFileError(f"bad norm spec: {exc}") from exc
    raise MalformedFileError(f"unknown norm kind {kind!r}")


@dataclass
class Instance:
    """A norm plus vectors, either as an unordered set or a fixed sequence."""

    norm: Norm
    mode: str
    vectors: list[Vec2]
    meta: dict = field(default_factory=dict)


def instance_to_doc(instance: Instance) -> dict:
    doc = {
        "format": INSTANCE_FORMAT,
        "version": FORMAT_VERSION,
        "norm": norm_to_spec(instance.norm),
        "mode": instance.mode,
        "vectors": [[float(v.x), float(v.y)] for v in instance.vectors],
    }
    if instance.meta:
        doc["meta"] = instance.meta
    return doc


def instance_from_doc(doc) -> Instance:
    if not isinstance(doc, dict):
        raise MalformedFileError("instance document is not an object")
    if doc.get("format") != INSTANCE_FORMAT:
        raise MalformedFileError(f"not an instance file: format = {doc.get('format')!r}")
    mode = doc.get("mode")
    if mode not in (MODE_SET, MODE_SEQUENCE):
        raise MalformedFileError(f"mode must be 'set' or 'sequence', got {mode!r}")
    norm = norm_from_spec(doc.get("norm"))
    raw = doc.get("vectors")
    if not isinstance(raw, list) or not raw:
        raise MalformedFileError("vectors must be a nonempty list")
    try:
        vectors = [Vec2(float(x), float(y)) for x, y in raw]
    except (TypeError, ValueError) as exc:
        raise MalformedFileError(f"bad vector entry: {exc}") from exc
    meta = doc.get("meta") or {}
    if not isinstance(meta, dict):
        raise MalformedFileError("meta must be an object")
    return Instance(norm=norm, mode=mode, vectors=vectors, meta=meta)


def dump_doc(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_doc(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFileError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedFileError("top-level JSON value must be an object")
    return doc


def instance_hash(instance: Instance) -> str:
    """sha256 over the canonical (compact, key-sorted) instance payload."""
    payload = {
        "mode": instance.mode,
        "norm": norm_to_spec(instance.norm),
        "vectors": [[float(v.x), float(v.y)] for v in instance.vectors],
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(blob.encode("ascii")).hexdigest()
