import math
from fractions import Fraction

import pytest

from ksetlab import (
    UndefinedWindowError,
    bqr_decompose,
    build_extremal_digraph,
    crossing_coefficient,
    crossing_lower_bound,
    extremal_edge_count,
    extremal_edge_summands,
    extremal_indegree,
    heterogeneous_critical_count,
    homogeneous_lower_bound,
    kset_lower_bound,
    kset_lower_bound_sharp,
    min_kset_count,
    refinement_depth,
    series_and_integral_report,
    slack_quartic,
    triangular_threshold,
)
from ksetlab.bounds import (
    BEST_UPPER_COEFFICIENT,
    GENERAL_LOWER_COEFFICIENT,
    binom2,
    bound_report,
)

F = Fraction


class TestRefinementDepth:
    def test_examples(self):
        assert refinement_depth(1, 9) == 1  # 9/6 in (C(2,2), C(3,2)]
        assert refinement_depth(3, 9) == 2  # 9/2 in (C(3,2), C(4,2)]
        assert refinement_depth(5, 12) == 4  # 12 in (C(5,2), C(6,2)]

    def test_threshold_brackets_ratio(self):
        for num in range(2, 40):
            for den in range(1, num):
                ratio = F(num, den)
                b = triangular_threshold(ratio)
                assert math.comb(b + 1, 2) < ratio <= math.comb(b + 2, 2)

    def test_empty_window(self):
        with pytest.raises(UndefinedWindowError):
            refinement_depth(4, 9)


class TestBqrDecompose:
    def test_examples(self):
        d = bqr_decompose(3, 10)
        assert (d.b, d.q, d.r) == (2, 0, 1)
        d = bqr_decompose(1, 4)
        assert (d.b, d.q, d.r) == (2, 0, 1)
        d = bqr_decompose(2, 5)
        assert (d.b, d.q, d.r) == (1, 1, 1)

    def test_unique_by_enumeration(self):
        # independent oracle: search all (b, q, r) in range for the identity
        for i in range(1, 8):
            for j in range(i, 40):
                matches = [
                    (b, q, r)
                    for b in range(0, 12)
                    for q in range(0, i)
                    for r in range(1, b + 2)
                    if j == i * math.comb(b + 1, 2) + q * (b + 1) + r
                    and math.comb(b + 1, 2) < F(j, i) <= math.comb(b + 2, 2)
                ]
                d = bqr_decompose(i, j)
                assert matches == [(d.b, d.q, d.r)]

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            bqr_decompose(3, 2)
        with pytest.raises(ValueError):
            bqr_decompose(0, 2)


class TestKsetLowerBound:
    def test_examples(self):
        assert kset_lower_bound(1, 9) == F(8, 3)
        assert kset_lower_bound(3, 9) == F(53, 3)
        assert kset_lower_bound(5, 12) == F(143, 3)

    def test_refinement_terms_clamped_at_5_12(self):
        # at (5, 12) the depth is 4 but every refinement argument is below 2
        n, k = 12, 5
        for j in range(2, 5):
            arg = F(k + 1) - (F(1, 2) - F(1, 3 * j * (j + 1))) * n
            assert arg < 2
            assert binom2(arg) == 0

    def test_refinement_term_active(self):
        # (k, n) = (17, 36): the j = 2 argument is exactly 2, contributing
        # 3 * 2 * 3 * C(2,2) = 18 on top of 459 + 45 - 1/3.
        assert kset_lower_bound(17, 36) == 459 + 45 + 18 - F(1, 3)

    def test_monotone_in_k(self):
        for n in range(6, 91, 3):
            values = [
                kset_lower_bound(k, n)
                for k in range(1, (n - 1) // 2 + 1)
                if n - 2 * k - 1 >= 1
            ]
            assert values == sorted(values)

    def test_window_and_range_errors(self):
        with pytest.raises(UndefinedWindowError):
            kset_lower_bound(4, 9)
        with pytest.raises(ValueError):
            kset_lower_bound(5, 10)  # n not a multiple of 3
        with pytest.raises(ValueError):
            kset_lower_bound(6, 12)  # k >= n/2


class TestGeneralizedBinomial:
    def test_clamp(self):
        assert binom2(2) == 1
        assert binom2(F(1, 2)) == 0  # raw value would be negative
        assert binom2(-3) == 0  # raw value would be positive: clamp matters
        assert binom2(F(7, 2)) == F(35, 8)


class TestHeterogeneousCount:
    def test_examples(self):
        assert heterogeneous_critical_count(2, 9) == 9
        assert heterogeneous_critical_count(4, 12) == 30  # boundary k = n/3
        assert heterogeneous_critical_count(5, 12) == 42

    def test_boundary_continuity(self):
        for n in (9, 12, 15, 18):
            s = n // 3
            low = 3 * math.comb(s + 1, 2)
            assert heterogeneous_critical_count(s, n) == low
            if 2 * (s + 1) < n:
                assert heterogeneous_critical_count(s + 1, n) == low + n


class TestExtremalDigraph:
    def test_edge_count_examples(self):
        assert build_extremal_digraph(5, 12).edge_count == 4
        assert build_extremal_digraph(6, 15).edge_count == 8
        assert extremal_edge_count(5, 12) == 4
        assert extremal_edge_count(6, 15) == 8

    def test_summands_examples(self):
        assert extremal_edge_summands(5, 12) == (2, 0, 2)
        assert extremal_edge_summands(6, 15) == (1, 4, 3)

    def test_summands_nonnegative_and_consistent(self):
        for n in range(6, 61, 3):
            for k in range(n // 3 + 1, (n - 1) // 2 + 1):
                if n - 2 * k - 1 < 1:
                    continue
                parts = extremal_edge_summands(k, n)
                assert all(p >= 0 for p in parts)
                assert sum(parts) == extremal_edge_count(k, n)
                assert extremal_edge_count(k, n) <= math.comb(n // 3, 2)

    def test_greedy_is_maximal_small_cases(self):
        # brute-force maximum over all digraphs with the degree caps
        from itertools import combinations

        def brute_max(m, s):
            pairs = list(combinations(range(1, s + 1), 2))
            best = 0
            for mask in range(1 << len(pairs)):
                ind = [0] * (s + 1)
                out = [0] * (s + 1)
                for t, (l, j) in enumerate(pairs):
                    if mask >> t & 1:
                        ind[j] += 1
                        out[l] += 1
                if all(ind[j] <= min(m + out[j], j - 1) for j in range(1, s + 1)):
                    best = max(best, bin(mask).count("1"))
            return best

        for k, n in ((5, 12), (4, 9)):
            if n - 2 * k - 1 < 1:
                continue
            m, s = n - 2 * k - 1, n // 3
            assert build_extremal_digraph(k, n).edge_count == brute_max(m, s)

    def test_degree_caps_hold(self):
        for k, n in ((5, 12), (6, 15), (7, 18), (8, 18), (13, 30)):
            m = n - 2 * k - 1
            d = build_extremal_digraph(k, n)
            ind, out = d.indegrees(), d.outdegrees()
            for j in range(1, d.order + 1):
                assert ind[j - 1] <= min(m + out[j - 1], j - 1)

    def test_indegree_formula_matches_construction(self):
        for n in range(6, 61, 3):
            for k in range(n // 3 + 1, (n - 1) // 2 + 1):
                if n - 2 * k - 1 < 1:
                    continue
                d = build_extremal_digraph(k, n)
                formula = sorted(
                    extremal_indegree(k, n, i) for i in range(1, n // 3 + 1)
                )
                assert sorted(d.indegrees()) == formula
                assert sum(formula) == extremal_edge_count(k, n)

    def test_parameter_guards(self):
        with pytest.raises(ValueError):
            build_extremal_digraph(3, 9)  # k <= n/3
        with pytest.raises(UndefinedWindowError):
            build_extremal_digraph(4, 9)  # empty window


class TestHomogeneousLowerBound:
    def test_empty_window_error(self):
        with pytest.raises(UndefinedWindowError):
            homogeneous_lower_bound(4, 9)

    def test_zero_below_one_third(self):
        assert homogeneous_lower_bound(3, 9) == 0
        assert homogeneous_lower_bound(2, 12) == 0

    def test_value_and_sharp_companion(self):
        # closed form: Y - het; sharp companion: 3 * (C(s,2) - E)
        assert homogeneous_lower_bound(5, 12) == F(143, 3) - 42
        sharp_hom = kset_lower_bound_sharp(5, 12) - heterogeneous_critical_count(5, 12)
        assert sharp_hom == 48 - 42 == 3 * (math.comb(4, 2) - extremal_edge_count(5, 12))
        assert sharp_hom >= homogeneous_lower_bound(5, 12)


class TestSharpBound:
    def test_examples(self):
        assert kset_lower_bound_sharp(5, 12) == 48
        assert kset_lower_bound_sharp(2, 9) == 9  # k <= n/3 branch
        assert kset_lower_bound_sharp(6, 15) == 66

    def test_sharp_minus_closed_form_example(self):
        assert kset_lower_bound_sharp(5, 12) - kset_lower_bound(5, 12) == F(1, 3)

    def test_window_error(self):
        with pytest.raises(UndefinedWindowError):
            kset_lower_bound_sharp(4, 9)


class TestSlackQuartic:
    def test_values(self):
        assert slack_quartic(0, 1) == 0
        assert slack_quartic(1, 1) == 0
        # numerator at b = 1 is 12 (r - 1)^2, so r = 2 gives 12/16
        assert slack_quartic(1, 2) == F(3, 4)
        assert slack_quartic(2, 1) == 2

    def test_continuous_minimizer_identity(self):
        # both sides are degree-4 polynomials in b, so equality at 6 points
        # proves the identity; check many more anyway
        for b in range(0, 41):
            r0 = F(b + 1, 2)
            assert slack_quartic(b, r0) == F((b + 3) * (b + 1) * (b - 1), 8)

    def test_minimum_on_integer_domain(self):
        values = {
            (b, r): slack_quartic(b, r) for b in range(0, 60) for r in range(1, b + 2)
        }
        assert min(values.values()) == 0
        assert values[(0, 1)] == 0
        assert all(v >= F(-1, 3) for v in values.values())


class TestMinKsetCount:
    def test_examples(self):
        assert min_kset_count(3, 9) == 18
        assert min_kset_count(1, 9) == 3
        assert min_kset_count(5, 12) == 48

    def test_empty_window_fallback(self):
        assert min_kset_count(4, 9) == 3 * math.comb(5, 2)
        assert min_kset_count(1, 3) == 3
        assert min_kset_count(7, 15) == 3 * math.comb(8, 2)


class TestCrossingBound:
    def test_coefficient_six_decimals(self):
        assert round(crossing_coefficient(), 6) == 0.380029

    def test_identity_with_closed_form(self):
        import mpmath

        with mpmath.workdps(40):
            closed = float((mpmath.mpf(2) / 27) * (15 - mpmath.pi**2))
        assert abs(crossing_coefficient() - closed) < 1e-10

    def test_gap_closure(self):
        closure = (crossing_coefficient() - GENERAL_LOWER_COEFFICIENT) / (
            BEST_UPPER_COEFFICIENT - GENERAL_LOWER_COEFFICIENT
        )
        assert closure > 0.40

    def test_finite_n_ratio_approaches_coefficient(self):
        coeff = crossing_coefficient()
        ratios = {
            n: crossing_lower_bound(n) / math.comb(n, 4) for n in (30, 90, 150, 300)
        }
        # cubic-order error band: |ratio - coeff| = O(1/n)
        for n, ratio in ratios.items():
            assert abs(ratio - coeff) < 12.0 / n
        assert abs(ratios[300] - coeff) < abs(ratios[30] - coeff)

    def test_small_value(self):
        # n = 6: weights (n-2k-1) = 3, 1 for k = 1, 2
        assert min_kset_count(1, 6) == 3 and min_kset_count(2, 6) == 9
        assert crossing_lower_bound(6) == 3 * 3 + 1 * 9 == 18


class TestSeriesAndIntegrals:
    def test_report(self):
        report = series_and_integral_report(terms=1000)
        assert report.series_ok and report.ok
        assert report.series_error <= 1e-9
        quoted = {c.name: c for c in report.integrals}
        assert abs(quoted["(1-2x)x^2 on [0,1/2]"].exact - 1 / 96) == 0
        assert abs(quoted["(1-2x)(x-1/3)^2 on [1/3,1/2]"].exact - 1 / 7776) == 0
        # j = 2 window: delta = 1/18, closed form delta^4/6 = 1/629856
        assert abs(quoted["window integral j=2"].exact - 1 / 629856) < 1e-18

    def test_series_tail_shrinks(self):
        short = series_and_integral_report(terms=50).series_error
        long = series_and_integral_report(terms=1000).series_error
        assert long < short


class TestBoundReport:
    def test_regular_case(self):
        br = bound_report(5, 12)
        assert (br.y, br.l, br.edges, br.ceil_y) == (F(143, 3), 48, 4, 48)
        assert br.edge_summands == (2, 0, 2)

    def test_empty_window_case(self):
        br = bound_report(4, 9)
        assert br.m == 0
        assert br.y is None and br.l is None and br.edges is None
        assert br.ceil_y == 30

    def test_low_k_case(self):
        br = bound_report(2, 9)
        assert br.l == 9 and br.edges is None and br.hom_lower == 0
