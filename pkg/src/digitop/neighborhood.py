"""Digital images and their subset-relative k-neighborhoods.

A digital image is a finite point set X in Z^n together with one k(t, n)
adjacency.  All neighborhood queries here are relative to X itself: a
neighbor must be a member of the image, never merely of the ambient lattice
(ambient queries go through :func:`digitop.lattice.lattice_neighbors`).

Path lengths count edges of shortest paths inside the image; a shortest
path is automatically simple.  Unreachable pairs yield ``None``, never a
sentinel integer.
"""

from collections import deque
from dataclasses import dataclass

from .errors import DimensionMismatchError, MembershipError, ParameterError
from .lattice import AdjacencySpec, Point, adjacent, as_point


@dataclass(frozen=True)
class DigitalImage:
    """A finite subset of Z^n with one adjacency relation: the pair (X, k)."""

    points: frozenset[Point]
    spec: AdjacencySpec

    def __post_init__(self):
        pts = [as_point(p) for p in self.points]
        if not pts:
            raise ParameterError("an image must contain at least one point")
        seen = set()
        for p in pts:
            if p in seen:
                raise ParameterError(f"duplicate point {p}")
            seen.add(p)
            if len(p) != self.spec.n:
                raise DimensionMismatchError(
                    f"point {p} has dimension {len(p)}, image expects {self.spec.n}"
                )
        object.__setattr__(self, "points", frozenset(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return p in self.points


def _require_member(image: DigitalImage, x: Point) -> None:
    if x not in image.points:
        raise MembershipError(f"point {x} is not in the image")


def _neighbors_in(image: DigitalImage, v: Point) -> list[Point]:
    return [u for u in image.points if adjacent(u, v, image.spec)]


def neighborhood_1(image: DigitalImage, x0: Point) -> frozenset[Point]:
    """The points of the image adjacent to x0, plus x0 itself."""
    _require_member(image, x0)
    return frozenset(_neighbors_in(image, x0)) | {x0}


def path_length(image: DigitalImage, x: Point, y: Point) -> int | None:
    """Edge count of a shortest path from x to y inside the image.

    Returns 0 when x == y and None when no path exists.
    """
    _require_member(image, x)
    _require_member(image, y)
    if x == y:
        return 0
    seen = {x}
    queue = deque([(x, 0)])
    while queue:
        v, d = queue.popleft()
        for u in _neighbors_in(image, v):
            if u == y:
                return d + 1
            if u not in seen:
                seen.add(u)
                queue.append((u, d + 1))
    return None


def neighborhood(image: DigitalImage, x0: Point, eps: int) -> frozenset[Point]:
    """Points of the image within path length eps of x0, plus x0 itself.

    eps must be at least 1; the radius-0 case is rejected rather than defined.
    """
    if not isinstance(eps, int) or eps < 1:
        raise ParameterError(f"radius must be a positive integer, got {eps!r}")
    _require_member(image, x0)
    reached = {x0}
    frontier = [x0]
    for _ in range(eps):
        nxt = []
        for v in frontier:
            for u in _neighbors_in(image, v):
                if u not in reached:
                    reached.add(u)
                    nxt.append(u)
        if not nxt:
            break
        frontier = nxt
    return frozenset(reached)


def is_connected(image: DigitalImage) -> bool:
    """True iff any two points are joined by consecutively adjacent points.

    A singleton image is connected by convention.
    """
    start = next(iter(image.points))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in _neighbors_in(image, v):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(image.points)


def components(image: DigitalImage) -> list[frozenset[Point]]:
    """Maximal connected blocks, ordered by their lexicographically least point."""
    blocks = []
    seen: set[Point] = set()
    for start in sorted(image.points):
        if start in seen:
            continue
        block = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in _neighbors_in(image, v):
                if u not in block:
                    block.add(u)
                    queue.append(u)
        seen |= block
        blocks.append(frozenset(block))
    return blocks
