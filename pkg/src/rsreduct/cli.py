"""Command-line entry points: single-dataset reduction and the bench harness."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from .dataset import load_csv
from .discernibility import all_reducts, build_matrix, core
from .errors import RsReductError
from .metrics import SpsParams
from .oracle import brute_force_reducts, naive_partition
from .approx import partition
from .reducers import prune_reduct, reduce_discern, reduce_hu, reduce_mibark, reduce_srs
from .rules import extract_rules, write_rules

ORACLE_LIMIT = 12


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsreduct",
        description="Rough-set attribute reduction toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    red = sub.add_parser("reduce", help="reduce a single dataset")
    red.add_argument("file", type=Path)
    red.add_argument(
        "--algo",
        choices=["hu", "mibark", "srs", "discern"],
        default="srs",
    )
    red.add_argument("--alpha", type=float, default=0.5, help="spatial weight for srs")
    red.add_argument("--decision", default=None, help="decision column name or index")
    red.add_argument("--id-column", default=None, help="row-label column, excluded from C")
    red.add_argument(
        "--columns",
        default=None,
        help="comma-separated header for headerless files",
    )
    red.add_argument("--prune", action="store_true", help="post-prune the reduct")
    red.add_argument("--emit-rules", type=Path, default=None, metavar="PATH")
    red.add_argument("--verify", action="store_true", help="run brute-force cross-checks")
    red.add_argument("--dump-matrix", action="store_true", help="print the discernibility matrix")

    ben = sub.add_parser("bench", help="run the comparison suite from a config file")
    ben.add_argument("--config", type=Path, required=True)
    ben.add_argument("--out", type=Path, required=True)
    ben.add_argument(
        "--sweep-alpha",
        default=None,
        metavar="LIST",
        help="comma-separated alpha grid for the spatial reducer",
    )
    ben.add_argument("--format", choices=["csv", "markdown"], default="csv")
    return parser


def _decision_arg(raw: str | None) -> int | str | None:
    if raw is None:
        return None
    return int(raw) if raw.lstrip("-").isdigit() else raw


def _cmd_reduce(args: argparse.Namespace) -> int:
    columns = (
        tuple(c.strip() for c in args.columns.split(",")) if args.columns else None
    )
    t = load_csv(
        args.file,
        decision=_decision_arg(args.decision),
        id_column=args.id_column,
        column_names=columns,
    )
    print(f"{args.file}: {t.n_objects} objects, {t.n_conditions} condition attributes")

    if args.dump_matrix:
        m = build_matrix(t)
        print(f"discernibility matrix: {len(m.entries)} non-zero entries")
        for (i, j), attrs in sorted(m.entries.items()):
            names = ",".join(sorted(m.attr_names[a] for a in attrs))
            print(f"  ({t.object_ids[i]},{t.object_ids[j]}): {{{names}}}")

    if args.algo == "discern":
        results = reduce_discern(t)
    elif args.algo == "hu":
        results = (reduce_hu(t),)
    elif args.algo == "mibark":
        results = (reduce_mibark(t),)
    else:
        results = (reduce_srs(t, SpsParams.from_alpha(args.alpha)),)

    for res in results:
        reduct = res.reduct
        if args.prune:
            reduct = prune_reduct(t, reduct)
        print(
            f"{res.algorithm}: reduct [{', '.join(reduct)}] "
            f"({len(reduct)} attributes), dependency {res.stats.dependency:.4f}, "
            f"similarity {res.stats.spatial_similarity:.4f}, "
            f"{res.stats.rule_count} rules, {res.stats.wall_time_ms:.1f} ms"
        )
        if args.emit_rules:
            write_rules(t, extract_rules(t, reduct), args.emit_rules)
            print(f"rules written to {args.emit_rules}")

    if args.verify:
        _verify(t)
    return 0


def _verify(t) -> None:
    """Cross-check the fast paths against the brute-force oracle."""
    full = tuple(range(t.n_conditions))
    fast = partition(t, full)
    naive = naive_partition(t, full)
    assert fast.masks == naive.masks, "partition mismatch against naive grouping"
    print("verify: partition grouping agrees with pairwise oracle")
    if t.n_conditions <= ORACLE_LIMIT:
        m = build_matrix(t)
        reducts = all_reducts(m, limit=ORACLE_LIMIT)
        brute = brute_force_reducts(t, limit=ORACLE_LIMIT)
        assert reducts == brute, "discernibility reducts disagree with enumeration"
        inter = frozenset.intersection(*reducts) if reducts else frozenset()
        assert core(m) == inter, "core is not the intersection of all reducts"
        print(f"verify: {len(reducts)} minimal reduct(s) confirmed by enumeration")
    else:
        print(
            f"verify: reduct enumeration skipped "
            f"({t.n_conditions} attributes > limit {ORACLE_LIMIT})"
        )


def _cmd_bench(args: argparse.Namespace) -> int:
    config = bench_mod.load_config(args.config)
    if args.sweep_alpha:
        grid = [float(x) for x in args.sweep_alpha.split(",")]
        report = bench_mod.sweep_alpha(config, grid)
    else:
        report = bench_mod.run_bench(config)
    args.out.mkdir(parents=True, exist_ok=True)
    ext = "csv" if args.format == "csv" else "md"
    out_path = args.out / f"report.{ext}"
    bench_mod.emit_report(report, args.format, out_path)
    print(f"report written to {out_path} ({len(report.rows)} rows)")
    if report.notes:
        notes_path = args.out / "notes.txt"
        notes_path.write_text("\n".join(report.notes) + "\n", encoding="utf-8")
        for note in report.notes:
            print(f"note: {note}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "reduce":
            return _cmd_reduce(args)
        return _cmd_bench(args)
    except (RsReductError, OSError, ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
