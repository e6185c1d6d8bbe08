"""Render GOSPA-vs-time figures from aggregate metrics CSVs.

Consumes only the documented aggregate schema (k, mean_gospa, stderr)
written by the tracking pipeline; one line per input series, optional
standard-error bands. Outputs are regenerated idempotently.

Usage:
    tbdbp-plot --inputs a.csv b.csv --labels "L=1" "L=2" --out gospa.png
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

REQUIRED_COLUMNS = ("k", "mean_gospa", "stderr")


class MissingColumn(ValueError):
    """An input CSV lacks one of the required aggregate columns."""


class RangeMismatch(ValueError):
    """Input series cover different time-step ranges."""


@dataclass
class FigureSpec:
    inputs: list[Path]
    labels: list[str]
    out: Path
    error_bands: bool = True
    title: str | None = None

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("need at least one input series")
        if len(self.labels) != len(self.inputs):
            raise ValueError("one label per input series required")


def read_series(path: Path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(k, mean, stderr) arrays from one aggregate CSV."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        missing = set(REQUIRED_COLUMNS) - set(reader.fieldnames or [])
        if missing:
            raise MissingColumn(f"{path}: missing columns {sorted(missing)}")
        rows = [(int(r["k"]), float(r["mean_gospa"]), float(r["stderr"])) for r in reader]
    if not rows:
        raise RangeMismatch(f"{path}: no data rows")
    rows.sort()
    k, mean, stderr = (np.array(col) for col in zip(*rows))
    return k, mean, stderr


def plot_gospa_vs_time(spec: FigureSpec) -> Path:
    series = [read_series(path) for path in spec.inputs]
    k0 = series[0][0]
    for path, (k, _, _) in zip(spec.inputs, series):
        if not np.array_equal(k, k0):
            raise RangeMismatch(f"{path}: time steps differ from {spec.inputs[0]}")

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for label, (k, mean, stderr) in zip(spec.labels, series):
        (line,) = ax.plot(k, mean, label=label, linewidth=1.5)
        if spec.error_bands:
            ax.fill_between(k, mean - stderr, mean + stderr, color=line.get_color(), alpha=0.2, linewidth=0)
    ax.set_xlabel("time step k")
    ax.set_ylabel("GOSPA")
    ax.set_ylim(bottom=0)
    ax.grid(alpha=0.3)
    ax.legend()
    if spec.title:
        ax.set_title(spec.title)
    fig.tight_layout()
    spec.out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.out, dpi=150)
    plt.close(fig)
    return spec.out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="tbdbp-plot", description=__doc__)
    parser.add_argument("--inputs", nargs="+", type=Path, required=True, help="aggregate metrics CSVs")
    parser.add_argument("--labels", nargs="*", default=None, help="legend labels (default: file stems)")
    parser.add_argument("--out", type=Path, required=True, help="output image path")
    parser.add_argument("--no-bands", action="store_true", help="disable +/- stderr bands")
    parser.add_argument("--title", default=None)
    args = parser.parse_args(argv)
    labels = args.labels if args.labels else [p.stem for p in args.inputs]
    try:
        spec = FigureSpec(
            inputs=args.inputs, labels=labels, out=args.out, error_bands=not args.no_bands, title=args.title
        )
        out = plot_gospa_vs_time(spec)
    except (MissingColumn, RangeMismatch, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
