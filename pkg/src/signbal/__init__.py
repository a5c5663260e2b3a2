"""Sign assignments for planar unit vectors.

Given any norm on the plane and unit vectors under that norm, this package
constructs sign assignments with certified bounds: an odd set always admits
a signed sum of norm at most 1; ordering the set suitably keeps every odd
prefix sum at norm at most 1 (and every prefix at most 2); and an online
signer committing signs two at a time keeps every odd prefix sum at norm at
most 2 in any arrival order.  Brute-force oracles certify the bounds
exhaustively at small sizes, and a CLI emits and re-verifies certificate
files.
"""

from .balance import (
    BalanceCertificate,
    BoundaryOrdering,
    alternating_balance,
    alternating_sum,
    balance_three,
    boundary_order,
    canonical_flip,
    check_units,
    edge_vectors,
    odd_prefix_points,
)
from .errors import (
    DegenerateHullError,
    EvenCardinalityError,
    MalformedFileError,
    NotUnitError,
    PrefixOutOfRangeError,
    SignbalError,
    TooLargeError,
    ZeroVectorError,
)
from .norms import (
    DEFAULT_TOLERANCE,
    PREDICATE_TOLERANCE,
    UNIT_TOLERANCE,
    EuclideanNorm,
    HalfPlaneForm,
    LpNorm,
    MaxNorm,
    Norm,
    PolygonalNorm,
    SymmetricPolygon,
    Vec2,
    cross,
    dot,
    half_plane_form,
    hull_of_plus_minus,
    norm_eval,
    polygon_norm,
    unitize,
)
from .oracle import (
    OracleReport,
    evaluate_max_odd_prefix,
    evaluate_signed_sum,
    min_max_odd_prefix_any_order,
    min_max_odd_prefix_fixed_order,
    min_signed_sum,
    tightness_corpus,
)
from .streaming import StreamState, decompose, stream_init, stream_run, stream_step

__version__ = "0.1.0"

__all__ = [
    "BalanceCertificate",
    "BoundaryOrdering",
    "DEFAULT_TOLERANCE",
    "DegenerateHullError",
    "EuclideanNorm",
    "EvenCardinalityError",
    "HalfPlaneForm",
    "LpNorm",
    "MalformedFileError",
    "MaxNorm",
    "Norm",
    "NotUnitError",
    "OracleReport",
    "PREDICATE_TOLERANCE",
    "PolygonalNorm",
    "PrefixOutOfRangeError",
    "SignbalError",
    "StreamState",
    "SymmetricPolygon",
    "TooLargeError",
    "UNIT_TOLERANCE",
    "Vec2",
    "ZeroVectorError",
    "alternating_balance",
    "alternating_sum",
    "balance_three",
    "boundary_order",
    "canonical_flip",
    "check_units",
    "cross",
    "decompose",
    "dot",
    "edge_vectors",
    "evaluate_max_odd_prefix",
    "evaluate_signed_sum",
    "half_plane_form",
    "hull_of_plus_minus",
    "min_max_odd_prefix_any_order",
    "min_max_odd_prefix_fixed_order",
    "min_signed_sum",
    "norm_eval",
    "odd_prefix_points",
    "polygon_norm",
    "stream_init",
    "stream_run",
    "stream_step",
    "tightness_corpus",
    "unitize",
]
