"""Exception types shared across the package."""


class DigitalTopologyError(Exception):
    """Base class for every error this package raises on purpose."""


class ParameterError(DigitalTopologyError, ValueError):
    """A parameter is outside its documented range."""


class DimensionMismatchError(ParameterError):
    """A point does not have the dimension an adjacency relation expects."""


class UnknownAdjacencyError(ParameterError):
    """No k(t, n) adjacency of Z^n matches the requested neighbor count k."""

    def __init__(self, k: int, n: int, valid: tuple[int, ...]):
        self.k = k
        self.n = n
        self.valid = tuple(valid)
        choices = ", ".join(f"{v} (t={i})" for i, v in enumerate(self.valid, start=1))
        super().__init__(f"no adjacency of Z^{n} has k={k}; valid values: {choices}")


class MembershipError(DigitalTopologyError):
    """A query point is not an element of the image it was asked about."""


class NotACurveError(DigitalTopologyError):
    """A point sequence or point set fails the simple-closed-curve conditions.

    `kind` is one of: "duplicate-point", "too-short", "missing-adjacency",
    "forbidden-chord", "bad-degree", "disconnected".  `details` carries the
    structured evidence (indices, point, degree, ...) for diagnostics.
    """

    def __init__(self, kind: str, message: str, **details):
        self.kind = kind
        self.details = details
        super().__init__(message)


class FormatError(DigitalTopologyError):
    """An input document cannot be parsed into a digital image."""
