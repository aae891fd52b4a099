"""Report rendering for classification runs.

Writes the atlas twice (JSON lines and CSV) next to matplotlib figures: a
gallery of the canonical chord diagrams and a bar chart of boundary
component counts. Everything lands in the requested directory; stdout is
untouched so pipelines stay clean.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

GALLERY_LIMIT = 30


def write_report(records: list[dict], out_dir: str | Path) -> list[Path]:
    """Write atlas files and figures for a list of class records."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    jsonl = out / "atlas.jsonl"
    with jsonl.open("w") as handle:
        for record in records:
            handle.write(json.dumps(record) + "\n")
    written.append(jsonl)

    table = out / "atlas.csv"
    with table.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["code", "components", "alexander", "det", "signature", "lk"])
        for record in records:
            writer.writerow(
                [
                    " ".join(str(x) for x in record["code"]),
                    record["components"],
                    record["alexander"],
                    record["det"],
                    record["signature"],
                    " ".join(str(x) for x in record["lk"]),
                ]
            )
    written.append(table)

    gallery = records[:GALLERY_LIMIT]
    if gallery:
        cols = min(6, len(gallery))
        rows = (len(gallery) + cols - 1) // cols
        fig, axes = plt.subplots(rows, cols, figsize=(2.2 * cols, 2.4 * rows))
        axes = [axes] if rows * cols == 1 else list(axes.flat)
        for ax in axes[len(gallery):]:
            ax.axis("off")
        for ax, record in zip(axes, gallery):
            _draw_chords(ax, record["code"])
            ax.set_title(" ".join(str(x) for x in record["code"]), fontsize=7)
        fig.suptitle("canonical chord diagrams")
        fig.tight_layout()
        path = out / "classes.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)

    counts: dict[int, int] = {}
    for record in records:
        counts[record["components"]] = counts.get(record["components"], 0) + 1
    if counts:
        fig, ax = plt.subplots(figsize=(4, 3))
        keys = sorted(counts)
        ax.bar([str(k) for k in keys], [counts[k] for k in keys], color="#4878a8")
        ax.set_xlabel("boundary components")
        ax.set_ylabel("canonical classes")
        fig.tight_layout()
        path = out / "components.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)

    return written


def _draw_chords(ax, word: list[int]) -> None:
    size = len(word)
    theta = [2 * math.pi * k / size for k in range(size)] if size else []
    circle = [2 * math.pi * k / 256 for k in range(257)]
    ax.plot([math.cos(a) for a in circle], [math.sin(a) for a in circle], color="#333333", lw=1)
    seen: dict[int, int] = {}
    for pos, label in enumerate(word):
        if label in seen:
            a, b = theta[seen[label]], theta[pos]
            ax.plot(
                [math.cos(a), math.cos(b)],
                [math.sin(a), math.sin(b)],
                lw=1.4,
            )
        else:
            seen[label] = pos
    ax.set_aspect("equal")
    ax.axis("off")
