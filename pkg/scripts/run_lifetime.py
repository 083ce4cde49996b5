"""Rounds until the first node death, per cell, for both encodings.

Uses a low initial energy so every cell sees a death within the horizon.
Prints one line per (n, seed) and a per-n mean table; writes the raw CSV.

    python3 scripts/run_lifetime.py [--config scenarios/lifetime.toml] [--out results]
"""

import argparse
from pathlib import Path
from statistics import fmean

from sswbench.files import load_scenario
from sswbench.payload import EncodingId
from sswbench.report import emit_csv, sweep

ROOT = Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--config", default=ROOT / "scenarios" / "lifetime.toml", type=Path)
    ap.add_argument("--out", default=ROOT / "results", type=Path)
    args = ap.parse_args()

    cfg = load_scenario(args.config)
    result = sweep(cfg.n_list, (EncodingId.SSW, EncodingId.ES3N), cfg.seeds, cfg.sim)
    life = {(r.n, r.encoding, r.seed): r.lifetime_rounds for r in result.rows}

    print(f"{'n':>4} {'seed':>4} {'SSW':>6} {'ES3N':>6}")
    strict = violations = 0
    for n in cfg.n_list:
        for s in cfg.seeds:
            a, b = life.get((n, EncodingId.SSW, s)), life.get((n, EncodingId.ES3N, s))
            fmt = lambda v: "-" if v is None else str(v)  # noqa: E731
            print(f"{n:>4} {s:>4} {fmt(a):>6} {fmt(b):>6}")
            if a is not None and b is not None:
                strict += a > b
                violations += a < b
    print(f"cells where SSW outlives ES3N: {strict}; cells where ES3N outlives SSW: {violations}")

    print(f"\n{'n':>4} {'SSW mean':>9} {'ES3N mean':>9}")
    for n in cfg.n_list:
        cols = []
        for enc in (EncodingId.SSW, EncodingId.ES3N):
            vals = [life[(n, enc, s)] for s in cfg.seeds if life.get((n, enc, s)) is not None]
            cols.append(f"{fmean(vals):>9.1f}" if vals else f"{'-':>9}")
        print(f"{n:>4} " + " ".join(cols))

    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / cfg.csv_path).write_text(emit_csv(result))
    for f in result.failures:
        print(f"failed cell n={f.n} seed={f.seed}: {f.message}")


if __name__ == "__main__":
    main()
