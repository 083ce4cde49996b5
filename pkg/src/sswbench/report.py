"""Sweeps over network size and seed, and their CSV / plot-data renderings.

Sizes are reported in decimal kilobytes (1 KB = 1000 bytes).
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from statistics import fmean

from .netsim import RadioEnergyModel, TopologyError, build_topology, run
from .observation import SensorReading, reference_reading
from .payload import DEFAULT_OPTIONS, EncodeOptions, EncodingId

CSV_HEADER = ("n", "encoding", "seed", "total_tx_kb", "lifetime_rounds", "energy_spent_j")


@dataclass(frozen=True)
class SimConfig:
    radio_range: float = 50.0
    # fixed density by default: the field grows with n
    area_per_node: float = 800.0
    field_side: float | None = None
    rounds: int = 10
    initial_energy_j: float = 2.0
    energy: RadioEnergyModel = RadioEnergyModel()
    options: EncodeOptions = DEFAULT_OPTIONS
    template: SensorReading = field(default_factory=reference_reading)
    workers: int = 1

    def side_for(self, n: int) -> float:
        return self.field_side if self.field_side else math.sqrt(self.area_per_node * n)


@dataclass(frozen=True)
class SweepRow:
    n: int
    encoding: EncodingId
    seed: int
    total_tx_kb: float
    lifetime_rounds: int | None
    energy_spent_j: float

    @property
    def key(self):
        return (self.n, list(EncodingId).index(self.encoding), self.seed)


@dataclass(frozen=True)
class CellFailure:
    n: int
    seed: int
    message: str


@dataclass
class SweepResult:
    rows: list[SweepRow] = field(default_factory=list)
    failures: list[CellFailure] = field(default_factory=list)

    def means(self) -> dict[tuple[int, EncodingId], float]:
        """Mean total_tx_kb per (n, encoding) over seeds."""
        groups: dict[tuple[int, EncodingId], list[float]] = {}
        for row in self.rows:
            groups.setdefault((row.n, row.encoding), []).append(row.total_tx_kb)
        return {k: fmean(v) for k, v in sorted(groups.items(), key=lambda kv: (kv[0][0], list(EncodingId).index(kv[0][1])))}


def _run_cell(n: int, seed: int, encodings: tuple[EncodingId, ...], config: SimConfig):
    try:
        topo = build_topology(n, config.side_for(n), config.radio_range, seed)
    except TopologyError as exc:
        return CellFailure(n, seed, str(exc))
    rows = []
    for enc in encodings:
        m = run(topo, enc, config.template, config.rounds, config.energy, config.initial_energy_j, config.options)
        rows.append(SweepRow(n, enc, seed, m.total_tx_bytes / 1000, m.rounds_until_first_death, m.energy_spent))
    return rows


def sweep(n_list, encodings, seeds, config: SimConfig = SimConfig()) -> SweepResult:
    """Run every (n, encoding, seed) cell; both encodings share each (n, seed) topology."""
    n_list, seeds = list(n_list), list(seeds)
    encodings = tuple(dict.fromkeys(EncodingId(e) for e in encodings))
    if not n_list or not seeds or not encodings:
        raise ValueError("n_list, encodings and seeds must all be non-empty")
    cells = [(n, seed) for n in n_list for seed in seeds]
    if config.workers > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            outcomes = list(pool.map(_run_cell, *zip(*cells),
                                     [encodings] * len(cells), [config] * len(cells)))
    else:
        outcomes = [_run_cell(n, seed, encodings, config) for n, seed in cells]

    result = SweepResult()
    for outcome in outcomes:
        if isinstance(outcome, CellFailure):
            result.failures.append(outcome)
        else:
            result.rows.extend(outcome)
    result.rows.sort(key=lambda r: r.key)
    return result


def emit_csv(result: SweepResult) -> str:
    if not result.rows:
        raise ValueError("empty sweep result")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in result.rows:
        lifetime = "" if r.lifetime_rounds is None else r.lifetime_rounds
        writer.writerow([r.n, r.encoding.value, r.seed, repr(r.total_tx_kb), lifetime, repr(r.energy_spent_j)])
    return buf.getvalue()


def parse_csv(text: str) -> SweepResult:
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {','.join(header)}")
    rows = []
    for n, enc, seed, kb, lifetime, joules in reader:
        rows.append(SweepRow(int(n), EncodingId(enc), int(seed), float(kb),
                             int(lifetime) if lifetime else None, float(joules)))
    return SweepResult(rows)


def emit_plotdata(result: SweepResult) -> str:
    """Whitespace-separated table: n, then one mean-KB column per encoding."""
    if not result.rows:
        raise ValueError("empty sweep result")
    means = result.means()
    encodings = [e for e in EncodingId if any(k[1] is e for k in means)]
    lines = ["# mean total_tx_kb over seeds (1 KB = 1000 bytes)",
             "# " + " ".join(["n", *(e.name for e in encodings)])]
    for n in sorted({k[0] for k in means}):
        cols = [repr(means[(n, e)]) if (n, e) in means else "nan" for e in encodings]
        lines.append(" ".join([str(n), *cols]))
    return "\n".join(lines) + "\n"


def format_summary(result: SweepResult) -> str:
    means = result.means()
    encodings = [e for e in EncodingId if any(k[1] is e for k in means)]
    lines = [f"{'n':>5} " + " ".join(f"{e.name + ' KB':>12}" for e in encodings)]
    for n in sorted({k[0] for k in means}):
        lines.append(f"{n:>5} " + " ".join(f"{means.get((n, e), float('nan')):>12.3f}" for e in encodings))
    for f in result.failures:
        lines.append(f"failed cell n={f.n} seed={f.seed}: {f.message}")
    return "\n".join(lines)
