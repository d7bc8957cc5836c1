"""The k(t, n) adjacency relations of the integer lattice Z^n.

Two distinct lattice points are k(t, n)-adjacent when at most ``t`` of their
``n`` coordinates differ by exactly 1 and the remaining coordinates coincide.
The neighbor count k is determined by (t, n); the same k can name different
relations in different dimensions (k=8 is t=2 in Z^2 but t=1 in Z^4), so the
dimension is carried explicitly everywhere.

Everything here is exact integer arithmetic on plain tuples.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian

from .errors import DimensionMismatchError, ParameterError, UnknownAdjacencyError

Point = tuple[int, ...]


def as_point(coords) -> Point:
    """Normalize an iterable of exact integers into a Point tuple."""
    pt = tuple(coords)
    if not pt:
        raise ParameterError("a point needs at least one coordinate")
    for c in pt:
        if not isinstance(c, int) or isinstance(c, bool):
            raise ParameterError(f"coordinates must be exact integers, got {c!r}")
    return pt


def k_value(t: int, n: int) -> int:
    """Neighbor count of the k(t, n) adjacency: sum over i=1..t of 2^i * C(n, i)."""
    if not isinstance(t, int) or not isinstance(n, int):
        raise ParameterError(f"t and n must be integers, got t={t!r}, n={n!r}")
    if n < 1 or t < 1 or t > n:
        raise ParameterError(f"need 1 <= t <= n, got t={t}, n={n}")
    return sum(2 ** i * math.comb(n, i) for i in range(1, t + 1))


def t_from_k(k: int, n: int) -> int:
    """Recover t from a neighbor count k in dimension n.

    The pair (k, n) is unambiguous: k_value is strictly increasing in t for
    fixed n, so at most one t in [1, n] matches.
    """
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"dimension must be a positive integer, got {n!r}")
    valid = tuple(k_value(t, n) for t in range(1, n + 1))
    for t, kv in enumerate(valid, start=1):
        if kv == k:
            return t
    raise UnknownAdjacencyError(k, n, valid)


@dataclass(frozen=True)
class AdjacencySpec:
    """One adjacency relation of Z^n, named by the pair (t, n)."""

    t: int
    n: int

    def __post_init__(self):
        k_value(self.t, self.n)  # validates 1 <= t <= n

    @classmethod
    def from_k(cls, k: int, n: int) -> "AdjacencySpec":
        return cls(t_from_k(k, n), n)

    @property
    def k(self) -> int:
        return k_value(self.t, self.n)

    def __str__(self) -> str:
        return f"k({self.t},{self.n})={self.k}"


def _require_dimension(p: Point, spec: AdjacencySpec) -> None:
    if len(p) != spec.n:
        raise DimensionMismatchError(
            f"point {p} has dimension {len(p)}, adjacency expects {spec.n}"
        )


def adjacent(p: Point, q: Point, spec: AdjacencySpec) -> bool:
    """True iff distinct p, q differ by +/-1 in at least one and at most t coordinates."""
    _require_dimension(p, spec)
    _require_dimension(q, spec)
    changed = 0
    for a, b in zip(p, q):
        d = a - b
        if d:
            if d > 1 or d < -1:
                return False
            changed += 1
            if changed > spec.t:
                return False
    return changed > 0


@lru_cache(maxsize=None)
def _offsets(t: int, n: int) -> tuple[Point, ...]:
    """All difference vectors realizing k(t, n) adjacency, in lexicographic order."""
    out = []
    for delta in _cartesian((-1, 0, 1), repeat=n):
        changed = sum(1 for d in delta if d)
        if 1 <= changed <= t:
            out.append(delta)
    return tuple(out)


def lattice_neighbors(p: Point, spec: AdjacencySpec) -> set[Point]:
    """The points of the ambient lattice Z^n adjacent to p; |result| = k(t, n)."""
    _require_dimension(p, spec)
    return {tuple(a + d for a, d in zip(p, delta)) for delta in _offsets(spec.t, spec.n)}
