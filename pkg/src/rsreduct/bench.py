"""Benchmark harness: load datasets, run reducers, emit comparison reports.

The report has one row per (dataset, algorithm, alpha) combination plus one
``original`` pseudo-row per dataset carrying the unreduced attribute count,
so the attribute-count figure can be drawn from the CSV alone.  Reported
similarities and rule counts are always recomputed from the final reduct,
never copied from reducer traces.
"""

from __future__ import annotations

import configparser
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .approx import decision_partition, partition
from .dataset import DecisionTable, load_csv
from .metrics import SpsParams, spatial_similarity
from .reducers import ReductResult, reduce_hu, reduce_mibark, reduce_srs
from .rules import rule_count

DEFAULT_ALGORITHMS = ("hu", "mibark", "srs")

#: Published reference results for the UCI comparison suite, keyed by dataset
#: then algorithm: (reduct size, spatial similarity).  "hu" is the
#: attribute-oriented significance method.
REFERENCE_RESULTS: dict[str, dict[str, tuple[int, float]]] = {
    "zoo": {"srs": (11, 0.95), "mibark": (2, 0.20), "hu": (1, 0.28)},
    "yellow-small": {"srs": (2, 0.84), "mibark": (4, 0.52), "hu": (2, 0.84)},
    "car": {"srs": (6, 0.03), "mibark": (6, 0.03), "hu": (6, 0.03)},
    "breast-cancer": {"srs": (9, 0.20), "mibark": (9, 0.20), "hu": (9, 0.20)},
    "soybean-small": {"srs": (6, 0.92), "mibark": (6, 0.28), "hu": (2, 0.88)},
    "adult+stretch": {"srs": (2, 0.84), "mibark": (4, 0.52), "hu": (2, 0.84)},
    "spect-heart": {"srs": (20, 0.76), "mibark": (15, 0.76), "hu": (22, 0.76)},
    "lymphography": {"srs": (13, 0.40), "mibark": (10, 0.12), "hu": (6, 0.31)},
    "npha-doctor-visits": {"srs": (13, 0.27), "mibark": (13, 0.27), "hu": (14, 0.27)},
    "primary-tumor": {"srs": (15, 0.48), "mibark": (15, 0.48), "hu": (16, 0.48)},
}

CSV_HEADER = "dataset,algorithm,alpha,n_attributes,spatial_similarity,rule_count,runtime_ms"


@dataclass(frozen=True)
class DatasetSpec:
    """One dataset entry of a bench configuration.

    ``expected_rows``/``expected_conditions``/``sha256`` are optional manifest
    fields; when present they are verified at load time so a wrong or stale
    download fails loudly instead of skewing the comparison.
    """

    name: str
    path: Path
    decision: int | str | None = None
    id_column: str | None = None
    columns: tuple[str, ...] | None = None
    expected_rows: int | None = None
    expected_conditions: int | None = None
    sha256: str | None = None

    def load(self) -> DecisionTable:
        if self.sha256:
            import hashlib

            digest = hashlib.sha256(self.path.read_bytes()).hexdigest()
            if digest != self.sha256:
                raise ValueError(
                    f"{self.path}: sha256 mismatch (got {digest}, manifest says {self.sha256})"
                )
        t = load_csv(
            self.path,
            decision=self.decision,
            id_column=self.id_column,
            column_names=self.columns,
        )
        if self.expected_rows is not None and t.n_objects != self.expected_rows:
            raise ValueError(
                f"{self.path}: {t.n_objects} rows, manifest expects {self.expected_rows}"
            )
        if (
            self.expected_conditions is not None
            and t.n_conditions != self.expected_conditions
        ):
            raise ValueError(
                f"{self.path}: {t.n_conditions} condition attributes, "
                f"manifest expects {self.expected_conditions}"
            )
        return t


@dataclass
class BenchConfig:
    datasets: list[DatasetSpec]
    algorithms: tuple[str, ...] = DEFAULT_ALGORITHMS
    alphas: tuple[float, ...] = (0.5,)
    discern_limit: int = 20


@dataclass(frozen=True)
class BenchRow:
    dataset: str
    algorithm: str
    alpha: float | None
    n_attributes: int
    spatial_similarity: float
    rule_count: int
    runtime_ms: float


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def load_config(path: str | Path) -> BenchConfig:
    """Parse a plain key-value config file.

    One section per dataset (section order is report order) with keys
    ``path`` (relative to the config file), ``decision`` (name or index,
    default last column), ``id_column`` and ``columns`` (comma-separated
    header for headerless files).  An optional ``[bench]`` section sets
    ``algorithms`` (space-separated) and ``alpha``.
    """
    path = Path(path)
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keep case of column names
    with path.open(encoding="utf-8") as fh:
        parser.read_file(fh)

    algorithms = DEFAULT_ALGORITHMS
    alphas: tuple[float, ...] = (0.5,)
    datasets: list[DatasetSpec] = []
    for section in parser.sections():
        if section == "bench":
            raw = parser.get(section, "algorithms", fallback=None)
            if raw:
                algorithms = tuple(raw.split())
            raw = parser.get(section, "alpha", fallback=None)
            if raw:
                alphas = (float(raw),)
            continue
        sec = parser[section]
        decision: int | str | None = sec.get("decision", fallback=None)
        if decision is not None and decision.lstrip("-").isdigit():
            decision = int(decision)
        columns_raw = sec.get("columns", fallback=None)
        columns = (
            tuple(c.strip() for c in columns_raw.split(",")) if columns_raw else None
        )
        expected_rows = sec.get("expected_rows", fallback=None)
        expected_conditions = sec.get("expected_conditions", fallback=None)
        datasets.append(
            DatasetSpec(
                name=section,
                path=(path.parent / sec["path"]).resolve(),
                decision=decision,
                id_column=sec.get("id_column", fallback=None) or None,
                columns=columns,
                expected_rows=int(expected_rows) if expected_rows else None,
                expected_conditions=(
                    int(expected_conditions) if expected_conditions else None
                ),
                sha256=sec.get("sha256", fallback=None) or None,
            )
        )
    return BenchConfig(datasets=datasets, algorithms=algorithms, alphas=alphas)


def _annotate(name: str, exc: Exception) -> Exception:
    try:
        return type(exc)(f"[dataset {name}] {exc}")
    except TypeError:
        return RuntimeError(f"[dataset {name}] {exc}")


def _row_from_result(spec: DatasetSpec, t: DecisionTable, res: ReductResult, alpha: float | None) -> BenchRow:
    sim = spatial_similarity(partition(t, res.reduct), decision_partition(t))
    return BenchRow(
        dataset=spec.name,
        algorithm=res.algorithm,
        alpha=alpha,
        n_attributes=len(res.reduct),
        spatial_similarity=sim,
        rule_count=rule_count(t, res.reduct),
        runtime_ms=res.stats.wall_time_ms,
    )


def _original_row(spec: DatasetSpec, t: DecisionTable) -> BenchRow:
    t0 = time.perf_counter()
    full = tuple(range(t.n_conditions))
    sim = spatial_similarity(partition(t, full), decision_partition(t))
    n_rules = rule_count(t, full)
    return BenchRow(
        dataset=spec.name,
        algorithm="original",
        alpha=None,
        n_attributes=t.n_conditions,
        spatial_similarity=sim,
        rule_count=n_rules,
        runtime_ms=(time.perf_counter() - t0) * 1000.0,
    )


def run_bench(config: BenchConfig) -> BenchReport:
    """Run every requested algorithm on every dataset of the config.

    Rows are ordered by (config dataset order, algorithm order, alpha).
    Errors are re-raised annotated with the dataset name.
    """
    from .reducers import reduce_discern

    report = BenchReport()
    for spec in config.datasets:
        try:
            t = spec.load()
            report.rows.append(_original_row(spec, t))
            for algo in config.algorithms:
                if algo == "hu":
                    report.rows.append(_row_from_result(spec, t, reduce_hu(t), None))
                elif algo == "mibark":
                    report.rows.append(
                        _row_from_result(spec, t, reduce_mibark(t), None)
                    )
                elif algo == "srs":
                    for alpha in config.alphas:
                        res = reduce_srs(t, SpsParams.from_alpha(alpha))
                        report.rows.append(_row_from_result(spec, t, res, alpha))
                elif algo == "discern":
                    if t.n_conditions > config.discern_limit:
                        report.notes.append(
                            f"{spec.name}: discern skipped "
                            f"({t.n_conditions} attributes > limit {config.discern_limit})"
                        )
                        continue
                    for res in reduce_discern(t, limit=config.discern_limit):
                        report.rows.append(_row_from_result(spec, t, res, None))
                else:
                    raise ValueError(f"unknown algorithm: {algo!r}")
        except Exception as exc:  # noqa: BLE001 - annotate and re-raise
            raise _annotate(spec.name, exc) from exc
    report.notes.extend(divergence_notes(report))
    return report


def sweep_alpha(config: BenchConfig, grid: Sequence[float]) -> BenchReport:
    """Rerun the bench with the spatial reducer swept over an alpha grid."""
    for a in grid:
        if not 0.0 <= a <= 1.0:
            raise ValueError(f"alpha {a} outside [0, 1]")
    swept = BenchConfig(
        datasets=config.datasets,
        algorithms=config.algorithms,
        alphas=tuple(grid),
        discern_limit=config.discern_limit,
    )
    return run_bench(swept)


def _matches(row: BenchRow, ref: tuple[int, float], sim_tol: float = 0.015) -> bool:
    return row.n_attributes == ref[0] and abs(row.spatial_similarity - ref[1]) <= sim_tol


def divergence_notes(report: BenchReport) -> list[str]:
    """Compare against the published reference results where available.

    For every (dataset, algorithm) with a reference entry, if no report row
    matches it (any alpha counts for the spatial reducer), emit a note
    listing the closest configuration produced.
    """
    notes: list[str] = []
    by_key: dict[tuple[str, str], list[BenchRow]] = {}
    for row in report.rows:
        by_key.setdefault((row.dataset, row.algorithm), []).append(row)
    for (dataset, algorithm), rows in sorted(by_key.items()):
        ref = REFERENCE_RESULTS.get(dataset, {}).get(algorithm)
        if ref is None:
            continue
        if any(_matches(row, ref) for row in rows):
            continue
        closest = min(
            rows,
            key=lambda r: (
                abs(r.n_attributes - ref[0]),
                abs(r.spatial_similarity - ref[1]),
            ),
        )
        alpha = "" if closest.alpha is None else f" (alpha={closest.alpha:g})"
        notes.append(
            f"divergence {dataset}/{algorithm}: reference {ref[0]} attrs "
            f"sim {ref[1]:.2f}; closest run{alpha}: {closest.n_attributes} attrs "
            f"sim {closest.spatial_similarity:.4f}"
        )
    return notes


def _csv_lines(report: BenchReport) -> list[str]:
    lines = [CSV_HEADER]
    for r in report.rows:
        alpha = "" if r.alpha is None else f"{r.alpha:g}"
        lines.append(
            f"{r.dataset},{r.algorithm},{alpha},{r.n_attributes},"
            f"{r.spatial_similarity:.4f},{r.rule_count},{r.runtime_ms:.3f}"
        )
    return lines


def _markdown_lines(report: BenchReport) -> list[str]:
    datasets: list[str] = []
    for r in report.rows:
        if r.dataset not in datasets:
            datasets.append(r.dataset)
    columns: list[tuple[str, float | None]] = []
    for r in report.rows:
        key = (r.algorithm, r.alpha)
        if r.algorithm != "original" and key not in columns:
            columns.append(key)
    by_key = {
        (r.dataset, r.algorithm, r.alpha): r for r in report.rows
    }

    def label(algo: str, alpha: float | None) -> str:
        return algo if alpha is None else f"{algo} a={alpha:g}"

    head = "| DataSet | " + " | ".join(
        f"{label(a, al)} attrs | {label(a, al)} sim" for a, al in columns
    ) + " |"
    sep = "|" + "---|" * (1 + 2 * len(columns))
    lines = [head, sep]
    for d in datasets:
        cells = [d]
        for a, al in columns:
            row = by_key.get((d, a, al))
            if row is None:
                cells.extend(["-", "-"])
            else:
                cells.extend([str(row.n_attributes), f"{row.spatial_similarity:.4f}"])
        lines.append("| " + " | ".join(cells) + " |")
    return lines


def emit_report(report: BenchReport, format: str, path: str | Path) -> None:
    """Write the report as CSV (exact column contract) or markdown."""
    if format == "csv":
        lines = _csv_lines(report)
    elif format == "markdown":
        lines = _markdown_lines(report)
    else:
        raise ValueError(f"unknown report format: {format!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
