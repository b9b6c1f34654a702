"""Exact planar geometry over rational coordinates.

Everything counted downstream (crossing numbers, k-set counts, transposition
classes) reduces to sign tests on rational cross products, so coordinates are
`fractions.Fraction` throughout and no floating point enters any counted
quantity.

The two counting routines here are deliberately brute force; they act as the
ground truth that the faster circular-sequence machinery is validated
against:

* ``crossing_number`` enumerates all 4-subsets and counts those in convex
  position (each contributes exactly one crossing to the straight-line
  drawing of the complete graph).
* ``k_set_oracle`` enumerates the ``2 * C(n,2)`` directed lines through two
  points.  For the directed line p -> q the cut-off subset is
  ``{points strictly left of pq} + {p}`` (the standard perturbation rule:
  tilt around p, then nudge the line so p falls strictly inside).  Every
  subset separable by some line arises this way, so deduplicating and
  bucketing by size yields the exact k-set counts.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GeneralPositionError, LabelingError, OracleSizeError

#: Exact scalar type used for all coordinates and counted quantities.
Rational = Fraction

DEFAULT_ORACLE_CAP = 15
ORACLE_CAP_ENV = "KSETLAB_ORACLE_CAP"

CLASS_NAMES = ("a", "b", "c")


def as_rational(value: Fraction | int | str) -> Fraction:
    """Coerce ints and 'p/q' strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Fraction | int | str, y: Fraction | int | str) -> "Point":
        return cls(as_rational(x), as_rational(y))


@dataclass(frozen=True)
class PointSet:
    """An ordered planar configuration, optionally labeled into three
    equal-size classes 'a', 'b', 'c'.

    Labels, when present, must split the points into thirds; this is checked
    at construction.  General position is *not* checked here (it is an O(n^3)
    predicate); operations that require it validate explicitly.
    """

    points: tuple[Point, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        if self.labels is not None:
            labels = tuple(str(c).lower() for c in self.labels)
            if len(labels) != len(self.points):
                raise LabelingError("labels must match the number of points")
            if any(c not in CLASS_NAMES for c in labels):
                raise LabelingError("labels must be 'a', 'b' or 'c'")
            n = len(labels)
            if n % 3 != 0:
                raise LabelingError("labeled sets need n divisible by 3")
            for c in CLASS_NAMES:
                if labels.count(c) != n // 3:
                    raise LabelingError(f"class {c!r} must have n/3 members")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.points)

    @classmethod
    def from_coords(
        cls,
        coords: Iterable[Sequence[Fraction | int | str]],
        labels: Iterable[str] | None = None,
    ) -> "PointSet":
        pts = tuple(Point.of(x, y) for x, y in coords)
        return cls(pts, tuple(labels) if labels is not None else None)

    def with_labels(self, labels: Iterable[str] | None) -> "PointSet":
        return PointSet(self.points, tuple(labels) if labels is not None else None)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p).

    +1 for a counterclockwise turn, -1 for clockwise, 0 for collinear.
    """
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def is_general_position(ps: PointSet) -> bool:
    """True iff all points are distinct and no triple is collinear."""
    pts = ps.points
    if len(set(pts)) != len(pts):
        return False
    for p, q, r in combinations(pts, 3):
        if orientation(p, q, r) == 0:
            return False
    return True


def require_general_position(ps: PointSet) -> None:
    if not is_general_position(ps):
        raise GeneralPositionError(
            "point set has coincident points or a collinear triple"
        )


def _in_triangle(a: Point, b: Point, c: Point, p: Point) -> bool:
    # Strict containment; inputs are in general position so no zeros occur.
    s1 = orientation(a, b, p)
    s2 = orientation(b, c, p)
    s3 = orientation(c, a, p)
    return s1 == s2 == s3


def crossing_number(ps: PointSet) -> int:
    """Number of crossings in the straight-line drawing of the complete
    graph on ``ps``: the count of 4-subsets in convex position.
    """
    require_general_position(ps)
    pts = ps.points
    if len(pts) < 4:
        return 0
    count = 0
    for a, b, c, d in combinations(pts, 4):
        if not (
            _in_triangle(a, b, c, d)
            or _in_triangle(a, b, d, c)
            or _in_triangle(a, c, d, b)
            or _in_triangle(b, c, d, a)
        ):
            count += 1
    return count


@dataclass(frozen=True)
class KSetVector:
    """Counts of k-sets: ``e[k]`` is the number of k-element subsets cut off
    by some line, for 1 <= k <= floor(n/2); ``prefix[k]`` is the running sum
    e_{<=k}."""

    n: int
    e: dict[int, int]
    prefix: dict[int, int]

    @classmethod
    def from_counts(cls, n: int, e: dict[int, int]) -> "KSetVector":
        if any(v < 0 for v in e.values()):
            raise ValueError("k-set counts must be nonnegative")
        prefix: dict[int, int] = {}
        running = 0
        for k in sorted(e):
            running += e[k]
            prefix[k] = running
        return cls(n, dict(sorted(e.items())), prefix)


def _oracle_cap(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(ORACLE_CAP_ENV)
    return int(env) if env else DEFAULT_ORACLE_CAP


def k_set_oracle(ps: PointSet, cap: int | None = None) -> KSetVector:
    """Brute-force k-set counts from directed pair-lines.

    Each separable subset is cut off by a line through two points of the
    set, so collecting ``{strictly left of p->q} + {p}`` over all ordered
    pairs and deduplicating yields every separable subset.  Intentionally
    small scale: refuses n above the cap (default 15; override with the
    ``KSETLAB_ORACLE_CAP`` environment variable or the ``cap`` argument).
    """
    n = ps.n
    limit = _oracle_cap(cap)
    if n > limit:
        raise OracleSizeError(f"oracle capped at n <= {limit}, got n = {n}")
    require_general_position(ps)
    if n < 2:
        return KSetVector.from_counts(n, {})
    pts = ps.points
    seen: set[frozenset[int]] = set()
    half = n // 2
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            cut = {i}
            for t in range(n):
                if t != i and t != j and orientation(pts[i], pts[j], pts[t]) > 0:
                    cut.add(t)
            if len(cut) <= half:
                seen.add(frozenset(cut))
    e = {k: 0 for k in range(1, half + 1)}
    for subset in seen:
        e[len(subset)] += 1
    return KSetVector.from_counts(n, e)
