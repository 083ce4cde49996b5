"""Transmitted volume against network size for both encodings.

Writes results/volume.csv and results/volume.dat, plus results/volume.png when
matplotlib is available.

    python3 scripts/run_volume.py [--config scenarios/volume.toml] [--out results]
"""

import argparse
from pathlib import Path

from sswbench.files import load_scenario
from sswbench.report import emit_csv, emit_plotdata, format_summary, sweep

ROOT = Path(__file__).resolve().parent.parent


def plot(result, path: Path) -> bool:
    try:
        import matplotlib
    except ImportError:
        return False
    matplotlib.use("Agg")
    from matplotlib import pyplot as plt

    means = result.means()
    fig, ax = plt.subplots(figsize=(6, 4))
    for enc in sorted({k[1] for k in means}, key=lambda e: e.name):
        ns = sorted(n for n, e in means if e is enc)
        ax.plot(ns, [means[(n, enc)] for n in ns], marker="o", label=enc.name)
    ax.set_xlabel("number of sensors")
    ax.set_ylabel("data transmitted (KB)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    return True


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--config", default=ROOT / "scenarios" / "volume.toml", type=Path)
    ap.add_argument("--out", default=ROOT / "results", type=Path)
    args = ap.parse_args()

    cfg = load_scenario(args.config)
    result = sweep(cfg.n_list, cfg.encodings, cfg.seeds, cfg.sim)
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / cfg.csv_path).write_text(emit_csv(result))
    (args.out / cfg.plotdata_path).write_text(emit_plotdata(result))
    print(format_summary(result))
    if plot(result, args.out / "volume.png"):
        print(f"plot: {args.out / 'volume.png'}")


if __name__ == "__main__":
    main()
