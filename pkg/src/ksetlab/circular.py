"""Circular sequences of planar point sets.

Projecting a point set onto a directed line and rotating the line through a
half turn sweeps the projection order through ``C(n,2) + 1`` permutations,
consecutive ones differing by one adjacent swap; the last permutation is the
reversal of the first.  We call this a halfperiod: the full period (a whole
turn) is the halfperiod followed by its mirror and carries no additional
information.

A swap at sites ``(i, i+1)`` or ``(n-i, n-i+1)`` is *i-critical*; it is
*(<=k)-critical* for the i-critical i at most k, i.e. when its site falls
outside the middle window ``[k+1, n-k-1]`` of *valid* sites.  Critical
swaps biject with separable subsets: a swap at sites ``(i, i+1)`` witnesses
a line cutting off the first ``i`` points, so for ``k < n/2`` the number of
k-element separable subsets equals the number of k-critical swaps.  At
``k = n/2`` (even ``n``) each swap at the middle site cuts off a halving
set on *both* sides, hence counts twice.

Everything is computed exactly.  Directions are primitive integer vectors;
the rotation order of the swaps is obtained by sorting each pair's critical
direction (the 90-degree rotation of the pair's difference vector) around
the start direction with cross-product comparisons.  Pairs sharing a slope
flip simultaneously; they are disjoint and non-adjacent (a shared endpoint
would force a collinear triple), so their swaps commute and are executed by
increasing left site for determinism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Iterator

from .errors import GeneralPositionError, LabelingError
from .geometry import KSetVector, Point, PointSet, require_general_position

Direction = tuple[int, int]


def _cross(u: Direction, v: Direction) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _dot_point(u: Direction, p: Point) -> Fraction:
    return u[0] * p.x + u[1] * p.y


def _primitive_upper(dx: Fraction, dy: Fraction) -> Direction:
    """Canonical primitive integer vector for the line direction (dx, dy),
    normalized into the upper half plane (y > 0, or y = 0 and x > 0)."""
    common = dx.denominator * dy.denominator
    ix = int(dx * common)
    iy = int(dy * common)
    g = math.gcd(ix, iy)
    ix //= g
    iy //= g
    if iy < 0 or (iy == 0 and ix < 0):
        ix, iy = -ix, -iy
    return (ix, iy)


def critical_direction_classes(ps: PointSet) -> list[Direction]:
    """Directions (mod a half turn) along which some pair of points projects
    to the same value: the 90-degree rotations of all pair differences,
    deduplicated and sorted counterclockwise within the upper half plane.
    """
    classes = set()
    pts = ps.points
    for p, q in combinations(pts, 2):
        dx, dy = q.x - p.x, q.y - p.y
        if dx == 0 and dy == 0:
            raise GeneralPositionError("coincident points")
        classes.add(_primitive_upper(-dy, dx))
    ordered = sorted(classes, key=cmp_to_key(lambda a, b: -_cross(a, b)))
    return ordered


def interval_sample_directions(ps: PointSet) -> list[Direction]:
    """One tie-free direction strictly inside each angular interval between
    consecutive critical directions, covering a half turn.  The negations of
    the returned vectors sample the other half turn.
    """
    classes = critical_direction_classes(ps)
    if not classes:
        return [(1, 0)]
    if len(classes) == 1:
        w = classes[0]
        return [(-w[1], w[0])]
    samples = []
    for a, b in zip(classes, classes[1:] + [(-classes[0][0], -classes[0][1])]):
        samples.append((a[0] + b[0], a[1] + b[1]))
    return samples


def default_start_direction(ps: PointSet) -> Direction:
    """Deterministic tie-free start direction: an interior direction of the
    narrowest angular gap between consecutive critical directions.

    Gap widths are compared exactly through cotangents (``cot`` is strictly
    decreasing on (0, pi), so larger ``dot * cross'`` means a smaller gap).
    """
    classes = critical_direction_classes(ps)
    if not classes:
        return (1, 0)
    if len(classes) == 1:
        w = classes[0]
        return (-w[1], w[0])
    best: Direction | None = None
    best_cot: tuple[int, int] | None = None  # (dot, cross) of the best gap
    for a, b in zip(classes, classes[1:] + [(-classes[0][0], -classes[0][1])]):
        d = a[0] * b[0] + a[1] * b[1]
        c = _cross(a, b)
        if best_cot is None or d * best_cot[1] > best_cot[0] * c:
            best_cot = (d, c)
            best = (a[0] + b[0], a[1] + b[1])
    assert best is not None
    return best


@dataclass(frozen=True)
class Transposition:
    """One adjacent swap of the halfperiod: at step ``step`` (1-based) the
    entries in sites ``(position, position + 1)`` swap; ``elements`` are the
    two point indices involved, smaller first."""

    step: int
    position: int
    elements: tuple[int, int]


@dataclass(frozen=True)
class Halfperiod:
    """A halfperiod of the circular sequence of a point set: the initial
    permutation (point indices ordered along ``direction``) plus the
    ``C(n,2)`` adjacent swaps that carry it to its reversal."""

    n: int
    initial_permutation: tuple[int, ...]
    transpositions: tuple[Transposition, ...]
    direction: Direction
    labels: tuple[str, ...] | None = None

    def permutations(self) -> Iterator[tuple[int, ...]]:
        """Yield all C(n,2) + 1 permutations in rotation order."""
        perm = list(self.initial_permutation)
        pos = {v: i for i, v in enumerate(perm)}
        yield tuple(perm)
        for t in self.transpositions:
            i = t.position - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            pos[perm[i]] = i
            pos[perm[i + 1]] = i + 1
            yield tuple(perm)

    def position_counts(self) -> dict[int, int]:
        """Number of transpositions at each site 1..n-1."""
        counts = {i: 0 for i in range(1, self.n)}
        for t in self.transpositions:
            counts[t.position] += 1
        return counts


def build_halfperiod(ps: PointSet, direction: Direction | None = None) -> Halfperiod:
    """Build the halfperiod of ``ps`` starting at ``direction`` (default: a
    deterministic tie-free direction).  The supplied direction must not be
    perpendicular to any pair line, i.e. the initial projection order must
    be strict."""
    require_general_position(ps)
    pts = ps.points
    n = len(pts)

    u = direction if direction is not None else default_start_direction(ps)
    initial = tuple(sorted(range(n), key=lambda i: _dot_point(u, pts[i])))
    for a, b in zip(initial, initial[1:]):
        if _dot_point(u, pts[a]) == _dot_point(u, pts[b]):
            raise ValueError(f"start direction {u} ties a pair of projections")

    # Each pair flips where the rotating direction crosses the pair's
    # critical direction; pick the representative on the forward half turn
    # (cross(u, w) > 0) and sort counterclockwise from u.
    flips: list[tuple[Direction, tuple[int, int]]] = []
    for i, j in combinations(range(n), 2):
        dx, dy = pts[j].x - pts[i].x, pts[j].y - pts[i].y
        w = _primitive_upper(-dy, dx)
        if _cross(u, w) < 0:
            w = (-w[0], -w[1])
        flips.append((w, (i, j)))

    flips.sort(key=cmp_to_key(lambda f1, f2: -_cross(f1[0], f2[0])))

    perm = list(initial)
    pos = {v: i for i, v in enumerate(perm)}
    steps: list[Transposition] = []
    idx = 0
    while idx < len(flips):
        group = [flips[idx]]
        while idx + 1 < len(flips) and _cross(flips[idx][0], flips[idx + 1][0]) == 0:
            idx += 1
            group.append(flips[idx])
        idx += 1
        # Simultaneous flips are pairwise disjoint; execute left to right.
        group.sort(key=lambda f: min(pos[f[1][0]], pos[f[1][1]]))
        for _, (i, j) in group:
            a, b = pos[i], pos[j]
            if a > b:
                a, b = b, a
            if b != a + 1:
                raise GeneralPositionError(
                    "swap of a non-adjacent pair; the input is degenerate"
                )
            perm[a], perm[b] = perm[b], perm[a]
            pos[perm[a]] = a
            pos[perm[b]] = b
            steps.append(Transposition(len(steps) + 1, a + 1, (i, j)))

    if perm != list(reversed(initial)):
        raise GeneralPositionError("halfperiod replay did not reverse the order")
    return Halfperiod(n, initial, tuple(steps), u, ps.labels)


def _is_homogeneous(t: Transposition, labels: tuple[str, ...]) -> bool:
    return labels[t.elements[0]] == labels[t.elements[1]]


@dataclass(frozen=True)
class CriticalityReport:
    """Transposition counts of a halfperiod at a fixed k.

    ``total`` is the number of (<=k)-critical transpositions (site <= k or
    site >= n-k); ``hom``/``het`` split it by whether the swapped points
    share a class (None without labels).  ``by_position`` /
    ``het_by_position`` count transpositions per site, and ``i_critical`` /
    ``i_critical_het`` aggregate the mirrored sites i and n-i per class
    i <= n/2.
    """

    n: int
    k: int
    total: int
    hom: int | None
    het: int | None
    by_position: dict[int, int]
    het_by_position: dict[int, int] | None
    i_critical: dict[int, int]
    i_critical_het: dict[int, int] | None


def _mirror_classes(n: int, site_counts: dict[int, int]) -> dict[int, int]:
    out = {}
    for i in range(1, n // 2 + 1):
        c = site_counts.get(i, 0)
        if i != n - i:
            c += site_counts.get(n - i, 0)
        out[i] = c
    return out


def critical_counts(h: Halfperiod, k: int) -> CriticalityReport:
    """Count (<=k)-critical transpositions of ``h``, split homogeneous vs
    heterogeneous when labels are present.  Requires 1 <= k < n/2."""
    n = h.n
    if not 1 <= k or not 2 * k < n:
        raise ValueError(f"k must satisfy 1 <= k < n/2, got k={k}, n={n}")
    by_position = h.position_counts()
    het_by_position = None
    hom = het = None
    if h.labels is not None:
        het_by_position = {i: 0 for i in range(1, n)}
        for t in h.transpositions:
            if not _is_homogeneous(t, h.labels):
                het_by_position[t.position] += 1

    def critical_sum(counts: dict[int, int]) -> int:
        return sum(c for i, c in counts.items() if i <= k or i >= n - k)

    total = critical_sum(by_position)
    if het_by_position is not None:
        het = critical_sum(het_by_position)
        hom = total - het
    return CriticalityReport(
        n=n,
        k=k,
        total=total,
        hom=hom,
        het=het,
        by_position=by_position,
        het_by_position=het_by_position,
        i_critical=_mirror_classes(n, by_position),
        i_critical_het=(
            _mirror_classes(n, het_by_position) if het_by_position is not None else None
        ),
    )


def kset_vector_from_halfperiod(h: Halfperiod) -> KSetVector:
    """k-set counts read off the halfperiod: ``e_k`` equals the number of
    k-critical transpositions for k < n/2; for even n each swap at the
    middle site yields two halving sets, so ``e_{n/2}`` doubles the site
    count."""
    n = h.n
    if n < 2:
        return KSetVector.from_counts(n, {})
    counts = h.position_counts()
    e = {}
    for k in range(1, n // 2 + 1):
        if 2 * k < n:
            e[k] = counts.get(k, 0) + counts.get(n - k, 0)
        else:
            e[k] = 2 * counts.get(k, 0)
    return KSetVector.from_counts(n, e)


@dataclass(frozen=True)
class ValidSwapDigraph:
    """Digraph of valid (non-critical) same-class swaps.

    Vertices are ``1..order``; an edge ``(l, j)`` with ``l < j`` records that
    the swap of the class members indexed ``l`` and ``j`` happens inside the
    valid window.  ``kind`` is 'aa', 'bb', 'cc' for digraphs read off a
    halfperiod, or 'synthetic' for the extremal construction.
    """

    kind: str
    order: int
    edges: frozenset[tuple[int, int]]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def indegree(self, j: int) -> int:
        return sum(1 for e in self.edges if e[1] == j)

    def outdegree(self, j: int) -> int:
        return sum(1 for e in self.edges if e[0] == j)

    def indegrees(self) -> list[int]:
        ind = [0] * (self.order + 1)
        for _, j in self.edges:
            ind[j] += 1
        return ind[1:]

    def outdegrees(self) -> list[int]:
        out = [0] * (self.order + 1)
        for l, _ in self.edges:
            out[l] += 1
        return out[1:]


def block_classes(h: Halfperiod) -> tuple[str, str, str] | None:
    """Classes occupying the three thirds of the initial permutation, or
    None if some third is mixed."""
    if h.labels is None:
        raise LabelingError("halfperiod carries no labels")
    n = h.n
    if n % 3 != 0:
        return None
    s = n // 3
    roles = []
    for t in range(3):
        block = h.initial_permutation[t * s : (t + 1) * s]
        classes = {h.labels[i] for i in block}
        if len(classes) != 1:
            return None
        roles.append(next(iter(classes)))
    if len(set(roles)) != 3:
        return None
    return (roles[0], roles[1], roles[2])


def build_valid_digraphs(
    h: Halfperiod, k: int
) -> tuple[ValidSwapDigraph, ValidSwapDigraph, ValidSwapDigraph]:
    """Digraphs of valid same-class swaps for each class, for n/3 < k < n/2.

    Requires a labeled halfperiod whose initial permutation is three pure
    class blocks; classes are renamed so the first block plays role 'a'.
    Within the leading block the vertex index runs right to left (the first
    entry is ``a_s``, the s-th is ``a_1``); in the other blocks it runs left
    to right.  An edge ``l -> j`` (``l < j``) is recorded when the swap of
    the two class members occurs at a site in the valid window
    ``[k+1, n-k-1]``.
    """
    if h.labels is None:
        raise LabelingError("valid-swap digraphs need a labeled halfperiod")
    n = h.n
    if n % 3 != 0:
        raise LabelingError("valid-swap digraphs need n divisible by 3")
    s = n // 3
    if not (s < k and 2 * k < n):
        raise ValueError(f"k must satisfy n/3 < k < n/2, got k={k}, n={n}")
    roles = block_classes(h)
    if roles is None:
        raise LabelingError(
            "initial permutation is not three pure class blocks; rebuild the "
            "halfperiod from a direction realizing the block order"
        )
    # Vertex index of each point within its class digraph.
    index: dict[int, int] = {}
    for site, point in enumerate(h.initial_permutation):
        block, offset = divmod(site, s)
        index[point] = s - offset if block == 0 else offset + 1
    role_of = {c: t for t, c in enumerate(roles)}
    lo, hi = k + 1, n - k - 1
    edge_sets: tuple[set, set, set] = (set(), set(), set())
    for t in h.transpositions:
        i, j = t.elements
        if h.labels[i] != h.labels[j]:
            continue
        if lo <= t.position <= hi:
            a, b = index[i], index[j]
            if a > b:
                a, b = b, a
            edge_sets[role_of[h.labels[i]]].add((a, b))
    kinds = ("aa", "bb", "cc")
    return tuple(
        ValidSwapDigraph(kind, s, frozenset(es)) for kind, es in zip(kinds, edge_sets)
    )  # type: ignore[return-value]
