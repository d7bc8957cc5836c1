"""Digital products X x Y and certification of their candidate adjacencies.

The product of two images lives in Z^(n1+n2) via coordinate concatenation
(left factor first).  For each candidate t in [1, n1+n2] the certifiers
check, point by point, whether the subset-relative neighborhood of every
product point factors through the two factor neighborhoods:

- C-compatible: N(p) = (N(x) x {y}) union ({x} x N(y)), the digital analogue
  of the Cartesian graph product;
- normal: N(p) = N(x) x N(y), the digital analogue of the strong graph
  product.

Certification is brute force over all points, with the lexicographically
first failing point and offending neighbor reported as a witness.  Neither
property need hold for any t, and the t values for which one holds need not
form an interval; every t is tested independently.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import MembershipError
from .lattice import AdjacencySpec, Point, adjacent
from .neighborhood import DigitalImage, neighborhood_1


@dataclass(frozen=True)
class ProductImage:
    """The point set of X x Y in Z^(n1+n2), remembering both factors."""

    left: DigitalImage
    right: DigitalImage

    @property
    def dimension(self) -> int:
        return self.left.spec.n + self.right.spec.n

    @cached_property
    def points(self) -> frozenset[Point]:
        return frozenset(x + y for x in self.left.points for y in self.right.points)

    def split(self, p: Point) -> tuple[Point, Point]:
        n1 = self.left.spec.n
        return p[:n1], p[n1:]

    def __len__(self) -> int:
        return len(self.left.points) * len(self.right.points)


def product(left: DigitalImage, right: DigitalImage) -> ProductImage:
    """Form the digital product of two images (left coordinates first)."""
    return ProductImage(left, right)


def _require_member(prod: ProductImage, p: Point) -> None:
    if p not in prod.points:
        raise MembershipError(f"point {p} is not in the product")


def induced_c_adjacent(p: Point, q: Point, prod: ProductImage) -> bool:
    """Pairwise form of C-compatibility: exactly one factor moves, by one adjacency step."""
    _require_member(prod, p)
    _require_member(prod, q)
    x, y = prod.split(p)
    x2, y2 = prod.split(q)
    if x == x2 and y != y2:
        return adjacent(y, y2, prod.right.spec)
    if y == y2 and x != x2:
        return adjacent(x, x2, prod.left.spec)
    return False


def induced_n_adjacent(p: Point, q: Point, prod: ProductImage) -> bool:
    """Pairwise form of normality: each factor stays or moves by one adjacency step."""
    _require_member(prod, p)
    _require_member(prod, q)
    x, y = prod.split(p)
    x2, y2 = prod.split(q)
    if x == x2 and y == y2:
        return False
    x_ok = x == x2 or adjacent(x, x2, prod.left.spec)
    y_ok = y == y2 or adjacent(y, y2, prod.right.spec)
    return x_ok and y_ok


class WitnessSide(Enum):
    """Which side of the neighborhood equation the offending point violates."""

    MISSING_FROM_LATTICE = "missing-from-lattice"
    EXTRA_IN_LATTICE = "extra-in-lattice"


@dataclass(frozen=True)
class Witness:
    """A product point whose neighborhood refutes the tested equation."""

    point: Point
    neighbor: Point
    side: WitnessSide


@dataclass(frozen=True)
class Certification:
    holds: bool
    witness: Witness | None


def _factor_neighborhoods(image: DigitalImage) -> dict[Point, frozenset[Point]]:
    return {x: neighborhood_1(image, x) for x in image.points}


def _certify(prod: ProductImage, t: int, normal: bool) -> Certification:
    spec = AdjacencySpec(t, prod.dimension)
    prod_image = DigitalImage(prod.points, spec)
    left_nb = _factor_neighborhoods(prod.left)
    right_nb = _factor_neighborhoods(prod.right)
    for p in sorted(prod.points):
        x, y = prod.split(p)
        lattice_side = neighborhood_1(prod_image, p)
        if normal:
            wanted = frozenset(a + b for a in left_nb[x] for b in right_nb[y])
        else:
            wanted = frozenset(a + y for a in left_nb[x]) | frozenset(
                x + b for b in right_nb[y]
            )
        if lattice_side != wanted:
            q = min(lattice_side ^ wanted)
            side = (
                WitnessSide.EXTRA_IN_LATTICE
                if q in lattice_side
                else WitnessSide.MISSING_FROM_LATTICE
            )
            return Certification(False, Witness(p, q, side))
    return Certification(True, None)


def certify_c_compatible(prod: ProductImage, t: int) -> Certification:
    """Does the k(t, n1+n2) adjacency satisfy the Cartesian-style equation at every point?"""
    return _certify(prod, t, normal=False)


def certify_normal(prod: ProductImage, t: int) -> Certification:
    """Does the k(t, n1+n2) adjacency satisfy the strong-style equation at every point?"""
    return _certify(prod, t, normal=True)


@dataclass(frozen=True)
class CertOutcome:
    """Both certifications for one candidate t."""

    t: int
    k: int
    c_compatible: Certification
    normal: Certification


@dataclass(frozen=True)
class ProductReport:
    """Per-t certification outcomes for one product, in increasing t."""

    prod: ProductImage
    outcomes: tuple[CertOutcome, ...]

    @property
    def c_compatible_ts(self) -> tuple[int, ...]:
        return tuple(o.t for o in self.outcomes if o.c_compatible.holds)

    @property
    def normal_ts(self) -> tuple[int, ...]:
        return tuple(o.t for o in self.outcomes if o.normal.holds)

    @property
    def c_compatible_ks(self) -> tuple[int, ...]:
        return tuple(o.k for o in self.outcomes if o.c_compatible.holds)

    @property
    def normal_ks(self) -> tuple[int, ...]:
        return tuple(o.k for o in self.outcomes if o.normal.holds)


def analyze(left: DigitalImage, right: DigitalImage) -> ProductReport:
    """Run both certifications for every candidate t of Z^(n1+n2)."""
    prod = product(left, right)
    outcomes = []
    for t in range(1, prod.dimension + 1):
        outcomes.append(
            CertOutcome(
                t=t,
                k=AdjacencySpec(t, prod.dimension).k,
                c_compatible=certify_c_compatible(prod, t),
                normal=certify_normal(prod, t),
            )
        )
    return ProductReport(prod, tuple(outcomes))
