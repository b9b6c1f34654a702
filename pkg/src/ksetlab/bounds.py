"""Closed-form bounds for (<=k)-set counts of 3-decomposable sets.

Throughout, n is a multiple of 3, s := n/3, and m := n - 2k - 1 is the width
of the valid window [k+1, n-k-1] (the sites whose swaps are not
(<=k)-critical).  All combinatorial quantities are exact rationals; pi
enters only the asymptotic crossing-number constant and the series/integral
self-checks.

Quantities computed here:

* ``kset_lower_bound`` (Y): the closed-form lower bound on the number of
  (<=k)-sets of a 3-decomposable set,

      Y(k,n) = 3*C(k+1,2) + 3*C(k-s+1,2)
               + 3 * sum_{j=2}^{b} j(j+1) * C(k+1 - (1/2 - 1/(3j(j+1)))*n, 2)
               - 1/3,

  where b is the unique integer with C(b+1,2) < n/m <= C(b+2,2) and the
  generalized binomial C(x,2) := x(x-1)/2 is clamped to 0 for x < 2 (so a
  term contributes only once its count window is genuinely open; note
  x(x-1)/2 > 0 for x < 0, hence the clamp rather than a sign test).  The
  first two terms are the general lower bound for arbitrary point sets; the
  j-sum is the 3-decomposable refinement.

* ``bqr_decompose``: for 1 <= i and positive j, the unique (b, q, r) with

      j = i*C(b+1,2) + q*(b+1) + r,   0 <= q < i,  1 <= r <= b+1,
      C(b+1,2) < j/i <= C(b+2,2).

  Applied to (m, s) it drives the extremal-digraph edge count; applied to
  (m, i) it gives that digraph's per-vertex indegrees m*b + q.

* ``build_extremal_digraph`` (and its closed form ``extremal_edge_count``,
  E): the edge-maximal digraph on vertices 1..s subject to
  ind(j) <= min(m + outd(j), j-1), built greedily from the top vertex down,
  each receiver taking the nearest lower-indexed senders its budget and
  supply allow.  E caps how many same-class swaps can avoid criticality.

* ``kset_lower_bound_sharp`` (L): the exact-edge-count refinement
  L(k,n) = 3*C(s+1,2) + (k-s)*n + 3*(C(s,2) - E(k,n)) for s < k < n/2, and
  3*C(k+1,2) for k <= s.  L >= Y on the whole domain (checked at runtime).

* ``slack_quartic`` (f): the auxiliary quartic
  f(b,r) = (b^4 + 4b^3 + 5b^2 + b(2-12r) + 12r(r-1)) / (8(b+1)), minimized
  over real r at r = (b+1)/2 with value (b+3)(b+1)(b-1)/8, and >= -1/3 at
  integer arguments 1 <= r <= b+1 (minimum 0, attained at (0,1) and (1,1)).

* ``crossing_lower_bound`` / ``crossing_coefficient``: the finite-n bound
  sum_k (n-2k-1) * ceil(Y(k,n)) on the crossing number of a 3-decomposable
  drawing, and its asymptotic coefficient per C(n,4),

      3/8 + 1/216 + (2/27)(79/8 - pi^2)  =  (2/27)(15 - pi^2)  ~ 0.380029,

  using sum_{j>=2} 1/(j^3 (j+1)^3) = 79/8 - pi^2.  The series and the three
  window integrals behind the coefficient are re-verified numerically in
  ``series_and_integral_report``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .circular import ValidSwapDigraph
from .errors import UndefinedWindowError

#: Coefficients (per C(n,4)) of the best known general lower bound and the
#: best known upper-bound construction; reference values for gap-closure
#: comparisons only, never used in exact computation.
GENERAL_LOWER_COEFFICIENT = 0.37968
BEST_UPPER_COEFFICIENT = 0.38054

SERIES_TOLERANCE = 1e-9
QUADRATURE_TOLERANCE = 1e-12


def _require_k_n(k: int, n: int, *, multiple_of_3: bool = True) -> None:
    if multiple_of_3 and n % 3 != 0:
        raise ValueError(f"n must be a multiple of 3, got {n}")
    if not (1 <= k and 2 * k < n):
        raise ValueError(f"k must satisfy 1 <= k < n/2, got k={k}, n={n}")


def _window(k: int, n: int) -> int:
    m = n - 2 * k - 1
    if m < 1:
        raise UndefinedWindowError(
            f"valid window is empty at k={k}, n={n} (m = n-2k-1 = {m})"
        )
    return m


def binom2(x: Fraction | int) -> Fraction:
    """Generalized binomial C(x,2) = x(x-1)/2, clamped to 0 for x < 2."""
    x = Fraction(x)
    if x < 2:
        return Fraction(0)
    return x * (x - 1) / 2


def triangular_threshold(ratio: Fraction) -> int:
    """The unique integer b >= 0 with C(b+1,2) < ratio <= C(b+2,2)."""
    if ratio <= 0:
        raise ValueError(f"ratio must be positive, got {ratio}")
    b = 0
    while math.comb(b + 2, 2) < ratio:
        b += 1
    return b


def refinement_depth(k: int, n: int) -> int:
    """Upper index b of the refinement sum in the (<=k)-set bound: the
    unique integer with C(b+1,2) < n/(n-2k-1) <= C(b+2,2).  Undefined when
    the valid window is empty (k = (n-1)/2)."""
    _require_k_n(k, n)
    m = _window(k, n)
    return triangular_threshold(Fraction(n, m))


@dataclass(frozen=True)
class BqrDecomposition:
    """The unique decomposition j = i*C(b+1,2) + q*(b+1) + r with
    0 <= q < i and 1 <= r <= b+1."""

    b: int
    q: int
    r: int
    i: int
    j: int

    def __post_init__(self) -> None:
        assert self.j == (
            self.i * math.comb(self.b + 1, 2) + self.q * (self.b + 1) + self.r
        )
        assert 0 <= self.q < self.i and 1 <= self.r <= self.b + 1


def _bqr(i: int, j: int) -> BqrDecomposition:
    b = triangular_threshold(Fraction(j, i))
    rem = j - i * math.comb(b + 1, 2)
    q, r = divmod(rem - 1, b + 1)
    return BqrDecomposition(b, q, r + 1, i, j)


def bqr_decompose(i: int, j: int) -> BqrDecomposition:
    """Decompose j over base i: the unique (b, q, r) as documented on
    ``BqrDecomposition``.  Requires 1 <= i <= j."""
    if not (1 <= i <= j):
        raise ValueError(f"need 1 <= i <= j, got i={i}, j={j}")
    return _bqr(i, j)


def kset_lower_bound(k: int, n: int) -> Fraction:
    """Closed-form lower bound Y(k,n) on the number of (<=k)-sets of a
    3-decomposable n-point set (exact rational)."""
    _require_k_n(k, n)
    m = _window(k, n)
    s = n // 3
    total = 3 * binom2(k + 1) + 3 * binom2(k - s + 1) - Fraction(1, 3)
    for j in range(2, refinement_depth(k, n) + 1):
        arg = Fraction(k + 1) - (Fraction(1, 2) - Fraction(1, 3 * j * (j + 1))) * n
        if arg < 2:
            # Arguments decrease in j; all later terms are clamped to 0.
            break
        total += 3 * j * (j + 1) * binom2(arg)
    return total


def heterogeneous_critical_count(k: int, n: int) -> int:
    """Exact number of heterogeneous (<=k)-critical transpositions in any
    halfperiod whose initial permutation is three class blocks:
    3*C(k+1,2) for k <= n/3, else 3*C(n/3+1,2) + (k-n/3)*n."""
    _require_k_n(k, n)
    s = n // 3
    if k <= s:
        return 3 * math.comb(k + 1, 2)
    return 3 * math.comb(s + 1, 2) + (k - s) * n


def homogeneous_lower_bound(k: int, n: int) -> Fraction:
    """Lower bound on homogeneous (<=k)-critical transpositions:
    Y(k,n) minus the exact heterogeneous count.  Zero for k <= n/3 (there
    are halfperiods with no critical homogeneous swaps at all)."""
    _require_k_n(k, n)
    if k <= n // 3:
        return Fraction(0)
    return kset_lower_bound(k, n) - heterogeneous_critical_count(k, n)


def _require_extremal_args(k: int, n: int) -> tuple[int, int]:
    _require_k_n(k, n)
    s = n // 3
    if k <= s:
        raise ValueError(f"extremal digraph needs k > n/3, got k={k}, n={n}")
    return _window(k, n), s


def build_extremal_digraph(k: int, n: int) -> ValidSwapDigraph:
    """The edge-maximal digraph on vertices 1..n/3 under the degree caps
    ind(j) <= min(n-2k-1 + outd(j), j-1).

    Receivers are processed from the top index down; each takes edges from
    the nearest lower-indexed senders, as many as its budget (window plus
    its already-final outdegree) and supply allow.  Deterministic; its edge
    count equals ``extremal_edge_count``.
    """
    m, s = _require_extremal_args(k, n)
    outd = [0] * (s + 1)
    edges = []
    for j in range(s, 1, -1):
        take = min(j - 1, m + outd[j])
        for sender in range(j - 1, j - 1 - take, -1):
            edges.append((sender, j))
            outd[sender] += 1
    return ValidSwapDigraph("synthetic", s, frozenset(edges))


def extremal_edge_summands(k: int, n: int) -> tuple[int, int, int]:
    """The three partial sums of the extremal edge count, obtained by
    splitting the vertices 1..s at alpha = m*C(b+1,2) and
    alpha + beta = alpha + q*(b+1); each part is nonnegative."""
    m, s = _require_extremal_args(k, n)
    d = _bqr(m, s)
    b, q, r = d.b, d.q, d.r
    part_a = 2 * m * m * math.comb(b + 1, 3) + math.comb(b + 1, 2) * math.comb(m, 2)
    part_b = 2 * m * q * math.comb(b + 1, 2) + math.comb(q, 2) * (b + 1)
    part_c = r * (m * b + q)
    return (part_a, part_b, part_c)


def extremal_edge_count(k: int, n: int) -> int:
    """Closed form E(k,n) for the number of edges of the extremal digraph,
    via the (b, q, r) decomposition of s over m."""
    return sum(extremal_edge_summands(k, n))


def extremal_indegree(k: int, n: int, i: int) -> int:
    """Closed-form indegree m*b + q of vertex i in the extremal digraph,
    where (b, q, _) decomposes i over m (b = 0 when i <= m).  The greedy
    construction realizes exactly this indegree multiset."""
    m, s = _require_extremal_args(k, n)
    if not 1 <= i <= s:
        raise ValueError(f"vertex index must be in 1..{s}, got {i}")
    d = _bqr(m, i)
    return m * d.b + d.q


def kset_lower_bound_sharp(k: int, n: int) -> Fraction:
    """The sharper bound L(k,n) from exact extremal edge counts:
    3*C(k+1,2) for k <= n/3, else het(k,n) + 3*(C(n/3,2) - E(k,n)).
    Always >= ``kset_lower_bound`` (verified on every call)."""
    _require_k_n(k, n)
    s = n // 3
    if k <= s:
        return Fraction(3 * math.comb(k + 1, 2))
    _window(k, n)
    value = Fraction(
        heterogeneous_critical_count(k, n)
        + 3 * (math.comb(s, 2) - extremal_edge_count(k, n))
    )
    y = kset_lower_bound(k, n)
    if value < y:
        raise AssertionError(
            f"sharp bound {value} fell below the closed form {y} at k={k}, n={n}"
        )
    return value


def slack_quartic(b: int | Fraction, r: int | Fraction) -> Fraction:
    """The auxiliary quartic f(b,r) bounding the gap between the sharp and
    closed-form k-set bounds:

        f(b,r) = (b^4 + 4b^3 + 5b^2 + b(2 - 12r) + 12 r(r-1)) / (8(b+1)).

    Over real r it is minimized at r = (b+1)/2 with value
    (b+3)(b+1)(b-1)/8; on integers 0 <= b, 1 <= r <= b+1 its minimum is 0
    (at (0,1) and (1,1)), in particular f >= -1/3 there.
    """
    b = Fraction(b)
    r = Fraction(r)
    num = b**4 + 4 * b**3 + 5 * b**2 + b * (2 - 12 * r) + 12 * r * (r - 1)
    return num / (8 * (b + 1))


def min_kset_count(k: int, n: int) -> int:
    """The integer bound an actual (<=k)-set count must meet:
    ceil(Y(k,n)), falling back to 3*C(k+1,2) when the valid window is empty
    (every transposition is then critical, so the fallback is safe)."""
    _require_k_n(k, n)
    try:
        return math.ceil(kset_lower_bound(k, n))
    except UndefinedWindowError:
        return 3 * math.comb(k + 1, 2)


def crossing_lower_bound(n: int) -> int:
    """Finite-n lower bound on the crossing number of a 3-decomposable
    drawing: sum over k of (n-2k-1) * min_kset_count(k, n)."""
    if n % 3 != 0 or n < 3:
        raise ValueError(f"n must be a positive multiple of 3, got {n}")
    total = 0
    for k in range(1, (n - 2) // 2 + 1):
        total += (n - 2 * k - 1) * min_kset_count(k, n)
    return total


def crossing_coefficient() -> float:
    """Asymptotic coefficient per C(n,4) of the crossing-number bound,
    computed at 50 significant digits and returned as float:
    3/8 + 1/216 + (2/27)(79/8 - pi^2) = (2/27)(15 - pi^2) ~ 0.380029."""
    with mpmath.workdps(50):
        pi2 = mpmath.pi**2
        summed = (
            mpmath.mpf(3) / 8
            + mpmath.mpf(1) / 216
            + (mpmath.mpf(2) / 27) * (mpmath.mpf(79) / 8 - pi2)
        )
        closed = (mpmath.mpf(2) / 27) * (15 - pi2)
        # The two expressions are algebraically identical.
        assert mpmath.fabs(summed - closed) < mpmath.mpf(10) ** -30
        return float(summed)


@dataclass(frozen=True)
class IntegralCheck:
    name: str
    quadrature: float
    exact: float
    error: float

    @property
    def ok(self) -> bool:
        return self.error <= QUADRATURE_TOLERANCE


@dataclass(frozen=True)
class SeriesIntegralReport:
    series_sum: float
    series_target: float
    series_error: float
    integrals: tuple[IntegralCheck, ...]

    @property
    def series_ok(self) -> bool:
        return self.series_error <= SERIES_TOLERANCE

    @property
    def ok(self) -> bool:
        return self.series_ok and all(c.ok for c in self.integrals)


def series_and_integral_report(terms: int = 1000) -> SeriesIntegralReport:
    """Numerically confirm the ingredients of the asymptotic coefficient.

    * partial sums of 1/(j^3 (j+1)^3) from j=2 approach 79/8 - pi^2
      (the tail after J is O(1/J^5));
    * quadrature of (1-2x) x^2 over [0, 1/2] gives 1/96;
    * quadrature of (1-2x)(x - 1/3)^2 over [1/3, 1/2] gives 1/7776;
    * quadrature of (1-2x)(x - (1/2 - d))^2 over [1/2 - d, 1/2] gives d^4/6
      for the window widths d = 1/(3j(j+1)), checked for j = 2, 3, 4.
    """
    from scipy.integrate import quad

    series = math.fsum(1.0 / (j**3 * (j + 1) ** 3) for j in range(2, terms + 1))
    with mpmath.workdps(50):
        target = float(mpmath.mpf(79) / 8 - mpmath.pi**2)

    checks = []
    v1, _ = quad(lambda x: (1 - 2 * x) * x * x, 0.0, 0.5)
    checks.append(IntegralCheck("(1-2x)x^2 on [0,1/2]", v1, 1 / 96, abs(v1 - 1 / 96)))
    v2, _ = quad(lambda x: (1 - 2 * x) * (x - 1 / 3) ** 2, 1 / 3, 0.5)
    checks.append(
        IntegralCheck("(1-2x)(x-1/3)^2 on [1/3,1/2]", v2, 1 / 7776, abs(v2 - 1 / 7776))
    )
    for j in (2, 3, 4):
        d = 1.0 / (3 * j * (j + 1))
        v, _ = quad(lambda x: (1 - 2 * x) * (x - (0.5 - d)) ** 2, 0.5 - d, 0.5)
        exact = d**4 / 6
        checks.append(
            IntegralCheck(f"window integral j={j}", v, exact, abs(v - exact))
        )
    return SeriesIntegralReport(
        series_sum=series,
        series_target=target,
        series_error=abs(series - target),
        integrals=tuple(checks),
    )


@dataclass(frozen=True)
class BoundReport:
    """All bound quantities at one (k, n); fields are None where the empty
    valid window (m = 0) leaves them undefined."""

    n: int
    k: int
    m: int
    s: int
    depth: int | None
    y: Fraction | None
    ceil_y: int
    het: int
    hom_lower: Fraction | None
    edges: int | None
    edge_summands: tuple[int, int, int] | None
    l: Fraction | None


def bound_report(k: int, n: int) -> BoundReport:
    """Assemble every bound quantity at (k, n), tolerating the m = 0 case."""
    _require_k_n(k, n)
    s = n // 3
    m = n - 2 * k - 1
    try:
        depth = refinement_depth(k, n)
        y = kset_lower_bound(k, n)
    except UndefinedWindowError:
        depth = None
        y = None
    het = heterogeneous_critical_count(k, n)
    try:
        hom = homogeneous_lower_bound(k, n)
    except UndefinedWindowError:
        hom = None
    edges = summands = None
    if k > s and m >= 1:
        edges = extremal_edge_count(k, n)
        summands = extremal_edge_summands(k, n)
    try:
        sharp = kset_lower_bound_sharp(k, n)
    except UndefinedWindowError:
        sharp = None
    return BoundReport(
        n=n,
        k=k,
        m=m,
        s=s,
        depth=depth,
        y=y,
        ceil_y=min_kset_count(k, n),
        het=het,
        hom_lower=hom,
        edges=edges,
        edge_summands=summands,
        l=sharp,
    )
