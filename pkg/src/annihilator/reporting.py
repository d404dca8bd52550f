"""Figure and CSV rendering for CLI report output.

Every writer drops a delimited summary next to a matplotlib figure so a
verification run leaves both a machine-readable and a glanceable artifact.
Imported lazily by the CLI; matplotlib is only touched here.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_STATUS_ORDER = ["Holds", "NotApplicable", "Violated", "Error"]
_STATUS_COLORS = {
    "Holds": "#2a9d8f",
    "NotApplicable": "#b0b0b0",
    "Violated": "#e63946",
    "Error": "#e9c46a",
}


def write_search_report(report_dict: dict, out_dir: str | Path, stem: str = "search") -> list[Path]:
    """CSV of per-theorem tallies plus a stacked verdict bar chart."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    tallies = report_dict["tallies"]
    theorems = sorted(tallies)

    csv_path = out / f"{stem}_tallies.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["theorem", *[s.lower() for s in _STATUS_ORDER]])
        for theorem in theorems:
            writer.writerow([theorem, *[tallies[theorem].get(s, 0) for s in _STATUS_ORDER]])

    fig, ax = plt.subplots(figsize=(max(4.0, 1.4 * len(theorems) + 1.5), 4.0))
    bottoms = [0] * len(theorems)
    for status in _STATUS_ORDER:
        heights = [tallies[t].get(status, 0) for t in theorems]
        ax.bar(theorems, heights, bottom=bottoms, label=status, color=_STATUS_COLORS[status])
        bottoms = [b + h for b, h in zip(bottoms, heights)]
    ax.set_ylabel("graphs")
    ax.set_title(f"verdicts over {report_dict['graphs_examined']} graphs")
    ax.legend(fontsize=8)
    plt.setp(ax.get_xticklabels(), rotation=20, ha="right", fontsize=8)
    fig.tight_layout()
    png_path = out / f"{stem}_tallies.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]


_INVARIANT_KEYS = ["alpha", "a", "alpha_crit", "mu", "crit_diff"]


def write_invariant_table(rows: list[dict], out_dir: str | Path, stem: str) -> list[Path]:
    """CSV of invariant values per graph plus a line chart across the rows.

    Each row needs a ``label`` (parameter value or input index) and the
    usual invariant keys; missing values stay blank.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    csv_path = out / f"{stem}_invariants.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["label", "n", "m", *_INVARIANT_KEYS])
        for row in rows:
            writer.writerow(
                [row.get("label"), row.get("n"), row.get("m")]
                + [row.get(key) for key in _INVARIANT_KEYS]
            )

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    labels = [row.get("label") for row in rows]
    for key in _INVARIANT_KEYS:
        values = [row.get(key) for row in rows]
        if all(v is None for v in values):
            continue
        ax.plot(labels, values, marker="o", markersize=3, label=key)
    ax.set_xlabel("instance")
    ax.set_ylabel("value")
    ax.set_title(stem.replace("_", " "))
    ax.legend(fontsize=8)
    fig.tight_layout()
    png_path = out / f"{stem}_invariants.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]
