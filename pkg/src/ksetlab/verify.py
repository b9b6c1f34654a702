"""Verification suites: each one cross-checks a fast computation against an
independent oracle or sweeps an exact inequality, and returns a structured
result the CLI can render as JSON.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import bounds, circular, decompose
from .geometry import Point, PointSet, is_general_position, k_set_oracle


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    ok: bool
    checks: tuple[CheckResult, ...]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "passed": sum(1 for c in self.checks if c.ok),
            "failed": sum(1 for c in self.checks if not c.ok),
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks
            ],
        }


def _finish(name: str, checks: list[CheckResult]) -> SuiteResult:
    return SuiteResult(name, all(c.ok for c in checks), tuple(checks))


def random_general_position_set(n: int, seed: int, spread: int = 60) -> PointSet:
    """Deterministic random point set with integer coordinates in general
    position (rejection-sampled)."""
    rng = random.Random(seed)
    points: list[Point] = []
    while len(points) < n:
        cand = Point(Fraction(rng.randint(-spread, spread)), Fraction(rng.randint(-spread, spread)))
        trial = points + [cand]
        if is_general_position(PointSet(tuple(trial))):
            points.append(cand)
    return PointSet(tuple(points))


def oracle_suite(
    max_n: int = 12,
    sets_per_n: int = 20,
    base_seed: int = 1000,
    generated_ns: tuple[int, ...] = (6, 9, 12),
    generated_seeds: tuple[int, ...] = (0, 1, 2),
) -> SuiteResult:
    """Halfperiod k-set counts must equal the brute-force pair-line oracle,
    on random sets of every size 4..max_n and on generated 3-decomposable
    sets."""
    checks: list[CheckResult] = []
    for n in range(4, max_n + 1):
        bad = 0
        for t in range(sets_per_n):
            ps = random_general_position_set(n, base_seed + 97 * n + t)
            fast = circular.kset_vector_from_halfperiod(circular.build_halfperiod(ps))
            slow = k_set_oracle(ps)
            if fast != slow:
                bad += 1
        checks.append(
            CheckResult(
                f"random n={n} ({sets_per_n} sets)",
                bad == 0,
                f"{bad} mismatches" if bad else "halfperiod counts = oracle counts",
            )
        )
    for n in generated_ns:
        bad = 0
        for seed in generated_seeds:
            ps = decompose.generate(n, seed)
            fast = circular.kset_vector_from_halfperiod(circular.build_halfperiod(ps))
            slow = k_set_oracle(ps)
            if fast != slow:
                bad += 1
        checks.append(
            CheckResult(
                f"generated n={n} ({len(generated_seeds)} sets)",
                bad == 0,
                f"{bad} mismatches" if bad else "halfperiod counts = oracle counts",
            )
        )
    return _finish("oracle", checks)


def edges_suite(max_n: int = 60) -> SuiteResult:
    """Greedy extremal digraph vs closed-form edge count, degree caps, and
    the closed-form indegree multiset, for all valid (k, n) up to max_n."""
    checks: list[CheckResult] = []
    pairs = 0
    bad_count = bad_degree = bad_multiset = 0
    for n in range(6, max_n + 1, 3):
        s = n // 3
        for k in range(s + 1, (n - 1) // 2 + 1):
            m = n - 2 * k - 1
            if m < 1:
                continue
            pairs += 1
            dig = bounds.build_extremal_digraph(k, n)
            if dig.edge_count != bounds.extremal_edge_count(k, n):
                bad_count += 1
            ind = dig.indegrees()
            out = dig.outdegrees()
            if any(
                ind[j - 1] > min(m + out[j - 1], j - 1) for j in range(1, s + 1)
            ):
                bad_degree += 1
            formula = sorted(bounds.extremal_indegree(k, n, i) for i in range(1, s + 1))
            if sorted(ind) != formula:
                bad_multiset += 1
    checks.append(
        CheckResult(
            f"edge counts ({pairs} pairs)",
            bad_count == 0,
            f"{bad_count} mismatches" if bad_count else "greedy = closed form",
        )
    )
    checks.append(
        CheckResult(
            "degree caps",
            bad_degree == 0,
            "ind <= min(m + outd, j-1) everywhere" if not bad_degree else f"{bad_degree} violations",
        )
    )
    checks.append(
        CheckResult(
            "indegree multisets",
            bad_multiset == 0,
            "greedy realizes the closed-form indegrees" if not bad_multiset else f"{bad_multiset} mismatches",
        )
    )
    return _finish("edges", checks)


def slack_suite(max_b: int = 1000, max_n: int = 300) -> SuiteResult:
    """Scan the slack quartic over its integer domain and sweep the sharp
    bound against the closed form."""
    checks: list[CheckResult] = []
    minimum = None
    argmin = None
    below = 0
    for b in range(max_b + 1):
        for r in range(1, b + 2):
            v = bounds.slack_quartic(b, r)
            if minimum is None or v < minimum:
                minimum, argmin = v, (b, r)
            if v < Fraction(-1, 3):
                below += 1
    checks.append(
        CheckResult(
            f"quartic scan b <= {max_b}",
            below == 0 and minimum == 0 and argmin == (0, 1),
            f"min {minimum} at {argmin}, {below} values below -1/3",
        )
    )
    worst: Fraction | None = None
    negative = 0
    pairs = 0
    for n in range(6, max_n + 1, 3):
        for k in range(1, (n - 1) // 2 + 1):
            if n - 2 * k - 1 < 1:
                continue
            pairs += 1
            gap = bounds.kset_lower_bound_sharp(k, n) - bounds.kset_lower_bound(k, n)
            if worst is None or gap < worst:
                worst = gap
            if gap < 0:
                negative += 1
    checks.append(
        CheckResult(
            f"sharp >= closed form, n<={max_n} ({pairs} pairs)",
            negative == 0,
            f"min gap {worst}",
        )
    )
    return _finish("slack", checks)


def series_suite(terms: int = 1000) -> SuiteResult:
    """Series and quadrature confirmations of the asymptotic coefficient."""
    report = bounds.series_and_integral_report(terms)
    checks = [
        CheckResult(
            f"series partial sum ({terms} terms)",
            report.series_ok,
            f"|sum - (79/8 - pi^2)| = {report.series_error:.3e}",
        )
    ]
    for c in report.integrals:
        checks.append(CheckResult(c.name, c.ok, f"error {c.error:.3e}"))
    coeff = bounds.crossing_coefficient()
    checks.append(
        CheckResult(
            "coefficient value",
            round(coeff, 6) == 0.380029,
            f"coefficient = {coeff:.10f}",
        )
    )
    return _finish("series", checks)


SUITES = {
    "oracle": oracle_suite,
    "edges": edges_suite,
    "slack": slack_suite,
    "series": series_suite,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
