"""Scan report rendering: delimited output plus a figure.

Writes the per-entry verdict table as CSV and renders a verdict strip chart
to PNG with matplotlib (Agg backend, no display needed).
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Dict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .decider import ScanResult
from .rationals import format_rat

_STATUS_LEVEL = {"rational": 1, "not_rational": 0, "skipped": -1, "error": -1}
_STATUS_COLOR = {
    "rational": "tab:blue",
    "not_rational": "tab:red",
    "skipped": "tab:gray",
    "error": "black",
}


def write_scan_csv(result: ScanResult, path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["c", "status", "detail"])
        for entry in result.entries:
            writer.writerow([format_rat(entry.c), entry.status, entry.detail])
    return path


def write_scan_figure(result: ScanResult, path) -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(10, 3))
    for status in ("rational", "not_rational", "skipped", "error"):
        xs = [float(e.c) for e in result.entries if e.status == status]
        if not xs:
            continue
        ys = [_STATUS_LEVEL[status]] * len(xs)
        ax.scatter(xs, ys, s=12, color=_STATUS_COLOR[status], label=status)
    ax.set_yticks([-1, 0, 1])
    ax.set_yticklabels(["skipped/error", "not rational", "rational"])
    ax.set_ylim(-1.6, 1.6)
    ax.set_xlabel("c")
    ax.set_title(
        f"family {result.family}: a={format_rat(result.a)}, "
        f"b={format_rat(result.b)}, d={result.d_rule}"
    )
    ax.legend(loc="center left", bbox_to_anchor=(1.01, 0.5), fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_scan_report(result: ScanResult, out_dir, basename: str = "scan") -> Dict[str, str]:
    """Write CSV and PNG for a scan; returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = write_scan_csv(result, out_dir / f"{basename}.csv")
    png_path = write_scan_figure(result, out_dir / f"{basename}.png")
    return {"csv": str(csv_path), "figure": str(png_path)}
