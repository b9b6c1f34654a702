"""Command-line harness: gen, analyze, bounds, verify, sweep.

Batch, non-interactive.  Exact quantities are printed as fraction strings;
decimal renderings carry a ``_dec`` suffix and are never fed back into any
computation.  Exit codes: 0 success, 1 verification failure, 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb
from pathlib import Path

from . import bounds as bounds_mod
from . import circular, decompose, verify
from .errors import GeneralPositionError, LabelingError
from .geometry import PointSet, require_general_position
from .io import load_point_set, save_point_set

ANALYZE_COLUMNS = [
    "n", "k", "e_k", "e_le_k", "het", "hom", "Y", "ceilY", "L", "E", "satisfied",
]
BOUNDS_COLUMNS = [
    "n", "k", "m", "depth", "Y", "Y_dec", "ceilY", "het", "hom", "L", "E",
    "cr_lower", "cr_ratio_dec",
]
SWEEP_COLUMNS = ["n", "seed", "shape", "k", "e_le_k", "ceilY", "satisfied"]

UNDEF = "undefined"


def _frac_cell(value: Fraction | int | None) -> str:
    return UNDEF if value is None else str(Fraction(value))


def _open_out(path: str | None):
    return open(path, "w", newline="") if path else sys.stdout


def _write_csv(path: str | None, columns: list[str], rows: list[dict]) -> None:
    out = _open_out(path)
    try:
        writer = csv.DictWriter(out, fieldnames=columns)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if path:
            out.close()


def cmd_gen(args: argparse.Namespace) -> int:
    ps = decompose.generate(args.n, args.seed, args.shape)
    save_point_set(ps, args.out)
    witness = decompose.check_partition(ps)
    assert witness is not None  # generate() only returns checked sets
    witness = decompose.locate_halfperiod_witness(ps, witness)
    print(f"wrote {ps.n} labeled points to {args.out}")
    for name, d in zip(("l1", "l2", "l3"), witness.directions):
        if d is not None:
            print(f"{name} = ({d[0]}, {d[1]})")
    if witness.halfperiod_indices is not None:
        s, t = witness.halfperiod_indices
        print(f"halfperiod witness: permutations {s} (b,a,c) and {t} (b,c,a)")
    return 0


def _analyze_rows(ps: PointSet, k_lo: int, k_hi: int) -> tuple[list[dict], bool]:
    n = ps.n
    h = circular.build_halfperiod(ps)
    vec = circular.kset_vector_from_halfperiod(h)
    rows = []
    any_violation = False
    for k in range(k_lo, k_hi + 1):
        row: dict = {"n": n, "k": k, "e_k": vec.e[k], "e_le_k": vec.prefix[k]}
        if ps.labels is not None:
            rep = circular.critical_counts(h, k)
            row["het"] = rep.het
            row["hom"] = rep.hom
        else:
            row["het"] = row["hom"] = UNDEF
        if n % 3 == 0:
            br = bounds_mod.bound_report(k, n)
            row["Y"] = _frac_cell(br.y)
            row["ceilY"] = br.ceil_y
            row["L"] = _frac_cell(br.l)
            row["E"] = UNDEF if br.edges is None else br.edges
            satisfied = vec.prefix[k] >= br.ceil_y
            row["satisfied"] = "true" if satisfied else "false"
            if not satisfied:
                any_violation = True
        else:
            row["Y"] = row["ceilY"] = row["L"] = row["E"] = UNDEF
            row["satisfied"] = UNDEF
        rows.append(row)
    return rows, any_violation


def _parse_range(text: str, what: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise SystemExit(f"error: bad {what} range {text!r}, expected LO:HI") from None


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        ps = load_point_set(args.input)
    except (OSError, ValueError, KeyError, LabelingError) as exc:
        print(f"error: cannot read point set: {exc}", file=sys.stderr)
        return 2
    try:
        require_general_position(ps)
    except GeneralPositionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.require_decomp:
        if ps.labels is not None:
            witness = decompose.check_partition(ps, mode=args.decomp_mode)
        else:
            witness = decompose.find_partition(ps, mode=args.decomp_mode)
            if witness is not None:
                ps = ps.with_labels(witness.partition)
        if witness is None:
            print(
                "error: point set is not 3-decomposable "
                f"({args.decomp_mode}-condition mode); refusing to analyze",
                file=sys.stderr,
            )
            return 2
    n = ps.n
    if n < 3:
        print("error: need at least 3 points", file=sys.stderr)
        return 2
    k_max = (n - 1) // 2
    k_lo, k_hi = 1, k_max
    if args.k_range:
        k_lo, k_hi = _parse_range(args.k_range, "k")
        k_lo, k_hi = max(1, k_lo), min(k_max, k_hi)
    rows, violation = _analyze_rows(ps, k_lo, k_hi)
    _write_csv(args.out, ANALYZE_COLUMNS, rows)
    return 1 if violation else 0


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.coefficient:
        coeff = bounds_mod.crossing_coefficient()
        closure = (coeff - bounds_mod.GENERAL_LOWER_COEFFICIENT) / (
            bounds_mod.BEST_UPPER_COEFFICIENT - bounds_mod.GENERAL_LOWER_COEFFICIENT
        )
        print(f"coefficient = {coeff:.10f}")
        print(
            f"gap closure over [{bounds_mod.GENERAL_LOWER_COEFFICIENT}, "
            f"{bounds_mod.BEST_UPPER_COEFFICIENT}] = {closure:.4f}"
        )
        return 0
    if args.n is not None:
        ns = [args.n]
    elif args.n_range:
        lo, hi = _parse_range(args.n_range, "n")
        ns = list(range(lo, hi + 1))
    else:
        print("error: give --n, --n-range or --coefficient", file=sys.stderr)
        return 2
    ns = [n for n in ns if n % 3 == 0 and n >= 6]
    if not ns:
        print("error: no usable n (need multiples of 3, n >= 6)", file=sys.stderr)
        return 2
    rows = []
    for n in ns:
        cr = bounds_mod.crossing_lower_bound(n)
        ratio = cr / comb(n, 4) if n >= 4 else 0.0
        ks = [args.k] if args.k is not None else list(range(1, (n - 1) // 2 + 1))
        for k in ks:
            if not 1 <= k < n / 2:
                continue
            br = bounds_mod.bound_report(k, n)
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "m": br.m,
                    "depth": UNDEF if br.depth is None else br.depth,
                    "Y": _frac_cell(br.y),
                    "Y_dec": UNDEF if br.y is None else f"{float(br.y):.6f}",
                    "ceilY": br.ceil_y,
                    "het": br.het,
                    "hom": _frac_cell(br.hom_lower),
                    "L": _frac_cell(br.l),
                    "E": UNDEF if br.edges is None else br.edges,
                    "cr_lower": cr,
                    "cr_ratio_dec": f"{ratio:.8f}",
                }
            )
    _write_csv(args.out, BOUNDS_COLUMNS, rows)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        kwargs = {}
        if name == "oracle":
            kwargs = {"max_n": args.max_n or 12, "sets_per_n": args.sets_per_n}
        elif name == "edges":
            kwargs = {"max_n": args.max_n or 60}
        elif name == "slack":
            kwargs = {"max_b": args.max_b, "max_n": args.max_n or 300}
        elif name == "series":
            kwargs = {"terms": args.terms}
        results.append(verify.run_suite(name, **kwargs))
    ok = all(r.ok for r in results)
    payload = results[0].to_dict() if len(results) == 1 else {
        "ok": ok,
        "suites": [r.to_dict() for r in results],
    }
    text = json.dumps(payload, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0 if ok else 1


def _sweep_work(item: tuple[int, int, str]) -> list[dict]:
    n, seed, shape = item
    ps = decompose.generate(n, seed, shape)
    h = circular.build_halfperiod(ps)
    vec = circular.kset_vector_from_halfperiod(h)
    rows = []
    for k in range(1, (n - 1) // 2 + 1):
        need = bounds_mod.min_kset_count(k, n)
        rows.append(
            {
                "n": n,
                "seed": seed,
                "shape": shape,
                "k": k,
                "e_le_k": vec.prefix[k],
                "ceilY": need,
                "satisfied": "true" if vec.prefix[k] >= need else "false",
            }
        )
    return rows


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        ns = [int(x) for x in args.ns.split(",")]
    except ValueError:
        print(f"error: bad --ns list {args.ns!r}", file=sys.stderr)
        return 2
    if any(n % 3 != 0 or n < 3 for n in ns):
        print("error: all n must be positive multiples of 3", file=sys.stderr)
        return 2
    items = [(n, seed, args.shape) for n in sorted(ns) for seed in range(args.seeds)]
    if args.parallel > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            results = dict(zip(items, pool.map(_sweep_work, items)))
    else:
        results = {item: _sweep_work(item) for item in items}
    rows = [row for item in items for row in results[item]]
    _write_csv(args.out, SWEEP_COLUMNS, rows)
    violation = any(r["satisfied"] == "false" for r in rows)
    return 1 if violation else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ksetlab",
        description=(
            "Exact (<=k)-set counts, crossing numbers, and closed-form bounds "
            "for 3-decomposable point sets."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a 3-decomposable point set")
    p.add_argument("--n", type=int, required=True, help="point count (multiple of 3)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--shape", choices=decompose.GENERATOR_SHAPES,
                   default="triangle-clusters")
    p.add_argument("--out", required=True, help="output JSON path")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="per-k report for a point-set file")
    p.add_argument("--input", required=True, help="point-set JSON path")
    p.add_argument("--k-range", help="restrict to LO:HI")
    p.add_argument("--require-decomp", action="store_true",
                   help="refuse sets that are not 3-decomposable")
    p.add_argument("--decomp-mode", choices=("three", "two"), default="three")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="closed-form bound tables")
    p.add_argument("--n", type=int)
    p.add_argument("--n-range", help="LO:HI, multiples of 3 kept")
    p.add_argument("--k", type=int, help="single k (default: all k < n/2)")
    p.add_argument("--coefficient", action="store_true",
                   help="print the asymptotic coefficient and exit")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES) + ["all"], default="all")
    p.add_argument("--max-n", type=int, help="size cap for oracle/edges/slack")
    p.add_argument("--max-b", type=int, default=1000, help="quartic scan cap")
    p.add_argument("--sets-per-n", type=int, default=20)
    p.add_argument("--terms", type=int, default=1000, help="series partial-sum length")
    p.add_argument("--out", help="JSON path (default stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="generate + analyze many sets")
    p.add_argument("--ns", required=True, help="comma list of n, e.g. 6,9,12")
    p.add_argument("--seeds", type=int, default=10, help="seeds 0..S-1 per n")
    p.add_argument("--shape", choices=decompose.GENERATOR_SHAPES,
                   default="triangle-clusters")
    p.add_argument("--parallel", type=int, default=1, help="worker count")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen" and (args.n % 3 != 0 or args.n < 3):
        parser.error(f"--n must be a positive multiple of 3, got {args.n}")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
