"""File renderers for scan and growth results.

Each renderer writes a delimited CSV next to a PNG figure in the chosen
directory and returns the paths written.  matplotlib is imported lazily
with the Agg backend so the library works headless and importing this
module stays cheap when no report is requested.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

from .pell import nth, params
from .scan import SearchReport

__all__ = ["render_scan_report", "render_growth_report"]


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


_OUTCOME_COLORS = {
    "both_representable": "tab:green",
    "poisoned": "tab:red",
    "unknown": "tab:orange",
    "filtered_out": "tab:gray",
}


def render_scan_report(reports: Sequence[SearchReport], outdir: str | Path) -> list[Path]:
    """Write scan.csv and scan.png for one scan run; returns written paths."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "scan.csv"
    png_path = out / "scan.png"

    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "d",
                "index",
                "prefilter_passed",
                "side",
                "value_bits",
                "outcome",
                "witness_w",
                "witness_t",
                "poison",
                "poison_exponent",
                "overall",
            ]
        )
        for rep in reports:
            if not rep.side_verdicts:
                writer.writerow(
                    [rep.d, rep.index, rep.prefilter_passed, "", "", "", "", "", "", "", rep.overall.kind]
                )
            for side in sorted(rep.side_verdicts):
                verdict = rep.side_verdicts[side]
                wit = verdict.witness if verdict.is_representable else None
                writer.writerow(
                    [
                        rep.d,
                        rep.index,
                        rep.prefilter_passed,
                        side,
                        rep.side_values[side].bit_length(),
                        verdict.kind,
                        "" if wit is None else wit[0],
                        "" if wit is None else wit[1],
                        "" if verdict.poison is None else verdict.poison,
                        "" if verdict.exponent is None else verdict.exponent,
                        rep.overall.kind,
                    ]
                )

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(10, 5))
    seen: set[str] = set()
    for rep in reports:
        color = _OUTCOME_COLORS[rep.overall.kind]
        label = rep.overall.kind if rep.overall.kind not in seen else None
        seen.add(rep.overall.kind)
        bits = max(v.bit_length() for v in rep.side_values.values())
        ax.scatter([rep.index], [bits], color=color, label=label, s=24)
    d = reports[0].d if reports else 0
    ax.set_xlabel("index")
    ax.set_ylabel("max side bit length")
    ax.set_title(f"representability scan, d = {d}")
    if seen:
        ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]


def render_growth_report(d: int, n_max: int, outdir: str | Path) -> list[Path]:
    """Write growth.csv and growth.png comparing x1^(n-1) against y_n."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "growth.csv"
    png_path = out / "growth.png"

    x1 = params(d).x1
    rows = []
    power = x1
    for n in range(2, n_max + 1):
        rows.append((n, power.bit_length(), nth(d, n).y.bit_length()))
        power *= x1

    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "lower_bound_bits", "y_bits"])
        writer.writerows(rows)

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(8, 5))
    ns = [r[0] for r in rows]
    ax.plot(ns, [r[1] for r in rows], label="x1^(n-1) bits", color="tab:blue")
    ax.plot(ns, [r[2] for r in rows], label="y_n bits", color="tab:green", linestyle="--")
    ax.set_xlabel("n")
    ax.set_ylabel("bit length")
    ax.set_title(f"exponential growth of y_n, d = {d}")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]
