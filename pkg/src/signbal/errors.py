"""Exception types shared across the package."""


class SignbalError(Exception):
    """Base class for all errors raised by this package."""


class ZeroVectorError(SignbalError):
    """An operation that needs a direction received the zero vector."""


class DegenerateHullError(SignbalError):
    """The symmetrized hull has no interior (all inputs pairwise parallel)."""


class EvenCardinalityError(SignbalError):
    """An odd number of vectors is required."""


class NotUnitError(SignbalError):
    """One or more vectors failed unit admission under the given norm."""

    def __init__(self, indices, norms):
        self.indices = list(indices)
        self.norms = list(norms)
        detail = ", ".join(f"[{i}] has norm {v!r}" for i, v in zip(self.indices, self.norms))
        super().__init__(f"vectors not admitted as unit: {detail}")


class PrefixOutOfRangeError(SignbalError):
    """A running prefix sum violated its invariant bound (upstream bug)."""


class TooLargeError(SignbalError):
    """Instance exceeds the exhaustive-enumeration size guard."""


class MalformedFileError(SignbalError):
    """An instance or certificate file does not parse against its schema."""
