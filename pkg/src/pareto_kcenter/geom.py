"""Planar points, dominance, tie-breaking orders and the alpha-curve test.

Conventions used throughout the package:

* A point dominates another when both of its coordinates are >= the
  other's; every point dominates itself.
* "Highest, ties toward larger x" and "rightmost, ties toward larger y"
  are the two total orders used to break ties everywhere.
* All distance comparisons are done on squared Euclidean distances.
  Radii (lambda) enter the API already squared; with integer-ish inputs
  every comparison is then exact in 64-bit floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EmptyInput

LEFT = "left"
RIGHT_OR_BEYOND = "right_or_beyond"


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinate: ({self.x}, {self.y})")


def dominates(p: Point, q: Point) -> bool:
    return p.x >= q.x and p.y >= q.y


def dist_sq(p: Point, q: Point) -> float:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def key_high(p: Point) -> tuple[float, float]:
    """Sort key whose maximum is the highest point, ties toward larger x."""
    return (p.y, p.x)


def key_right(p: Point) -> tuple[float, float]:
    """Sort key whose maximum is the rightmost point, ties toward larger y."""
    return (p.x, p.y)


def cmp_perturbed_high(p: Point, q: Point) -> int:
    """Order by y, then x; -1/0/+1 like an old-style comparator."""
    a, b = key_high(p), key_high(q)
    return (a > b) - (a < b)


def cmp_perturbed_right(p: Point, q: Point) -> int:
    """Order by x, then y."""
    a, b = key_right(p), key_right(q)
    return (a > b) - (a < b)


class PointSet:
    """Input point set with exact coordinate duplicates removed.

    Duplicates would eject each other from the skyline under strict
    dominance, so they are dropped at ingestion (first occurrence wins;
    input order is otherwise preserved, which fixes the grouping used by
    the partitioned algorithms).
    """

    __slots__ = ("points",)

    def __init__(self, points: Iterable[Point]):
        seen = set()
        kept = []
        for p in points:
            key = (p.x, p.y)
            if key not in seen:
                seen.add(key)
                kept.append(p)
        self.points: tuple[Point, ...] = tuple(kept)

    @classmethod
    def from_coords(cls, coords: Iterable[tuple[float, float]]) -> "PointSet":
        return cls(Point(x, y) for x, y in coords)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def require_nonempty(self) -> None:
        if not self.points:
            raise EmptyInput("point set is empty")


class SkylineArray:
    """Skyline points sorted by strictly increasing x (so strictly
    decreasing y), stored for binary searches along either coordinate."""

    __slots__ = ("pts", "xs")

    def __init__(self, pts: Sequence[Point]):
        self.pts: tuple[Point, ...] = tuple(pts)
        self.xs: list[float] = [p.x for p in self.pts]

    @property
    def h(self) -> int:
        return len(self.pts)

    def __len__(self) -> int:
        return len(self.pts)

    def __getitem__(self, i):
        return self.pts[i]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.pts)

    def __eq__(self, other) -> bool:
        return isinstance(other, SkylineArray) and self.pts == other.pts

    def __hash__(self):
        return hash(self.pts)

    def __repr__(self) -> str:
        return f"SkylineArray({list(self.pts)!r})"

    def validate(self) -> None:
        for a, b in zip(self.pts, self.pts[1:]):
            if not (a.x < b.x and a.y > b.y):
                raise ValueError(f"not a staircase: {a} then {b}")


@dataclass(frozen=True, slots=True)
class AlphaCurve:
    """Covered-and-right boundary for a center and a squared radius.

    The curve runs: vertical ray up from (x+r, y), then the quarter circle
    of radius r clockwise to (x, y-r), then a vertical ray down.  Points on
    the curve count as left (closed region).  Parameterized by the squared
    radius so that every side test reduces to exact squared comparisons.
    """

    center: Point
    radius_sq: float

    def __post_init__(self):
        if self.radius_sq < 0:
            raise ValueError("radius_sq must be non-negative")

    @property
    def radius(self) -> float:
        return math.sqrt(self.radius_sq)


def side_of_alpha(q: Point, a: AlphaCurve) -> str:
    """LEFT if q is on or left of the curve, RIGHT_OR_BEYOND otherwise.

    Along any staircase the LEFT answers form a prefix, which is what the
    per-group binary searches rely on.
    """
    p = a.center
    dx = q.x - p.x
    if dx <= 0:
        return LEFT
    if q.y >= p.y:
        return LEFT if dx * dx <= a.radius_sq else RIGHT_OR_BEYOND
    dy = q.y - p.y
    return LEFT if dx * dx + dy * dy <= a.radius_sq else RIGHT_OR_BEYOND
