"""Render mean-regret curves with +- one standard-error bands.

The renderer consumes only the harness summary JSON (keys: config_digest,
algos, checkpoints, mean, stderr) and never recomputes statistics from raw
traces, so a figure is a pure function of its input file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

__all__ = ["PlotSpec", "SummaryError", "load_summary", "render"]

_REQUIRED_KEYS = ("algos", "checkpoints", "mean", "stderr")


class SummaryError(ValueError):
    """Missing or malformed experiment summary."""


@dataclass
class PlotSpec:
    """What to draw: which directory, which algorithms, where to write."""

    input_dir: Path
    out_path: Path
    algos: tuple[str, ...] | None = None  # None = all algorithms in the summary
    log_x: bool = False


def load_summary(input_dir: str | Path) -> dict:
    """Load and validate summary.json from an experiment directory."""
    path = Path(input_dir) / "summary.json"
    if not path.exists():
        raise SummaryError(f"no summary.json in {input_dir}")
    try:
        summary = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise SummaryError(f"malformed summary.json: {e}") from None
    for key in _REQUIRED_KEYS:
        if key not in summary:
            raise SummaryError(f"summary.json missing key {key!r}")
    n = len(summary["checkpoints"])
    for algo in summary["algos"]:
        for section in ("mean", "stderr"):
            series = summary[section].get(algo)
            if series is None or len(series) != n:
                raise SummaryError(
                    f"summary.json: {section} series for {algo!r} absent or wrong length"
                )
    return summary


def render(spec: PlotSpec) -> Path:
    """Draw one curve per algorithm with a shaded +-SE band; returns out_path."""
    summary = load_summary(spec.input_dir)
    algos = spec.algos if spec.algos is not None else tuple(summary["algos"])
    missing = [a for a in algos if a not in summary["algos"]]
    if missing:
        raise SummaryError(f"algorithms not in summary: {missing}")

    checkpoints = summary["checkpoints"]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for algo in algos:
        mean = summary["mean"][algo]
        se = summary["stderr"][algo]
        lo = [m - s for m, s in zip(mean, se)]
        hi = [m + s for m, s in zip(mean, se)]
        (line,) = ax.plot(checkpoints, mean, label=algo)
        ax.fill_between(checkpoints, lo, hi, alpha=0.25, color=line.get_color())
    if spec.log_x:
        ax.set_xscale("log")
    ax.set_xlabel("round t")
    ax.set_ylabel("cumulative regret")
    ax.legend()
    fig.tight_layout()
    spec.out_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.out_path)
    plt.close(fig)
    return spec.out_path
