"""Report files: tab-separated tables plus PNG figures."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "figure.figsize": (6.0, 3.6),
    "figure.dpi": 110,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 9,
}


def write_tsv(path: Path, header: Sequence[str], rows: Sequence[Sequence]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as fh:
        fh.write("\t".join(header) + "\n")
        for row in rows:
            fh.write("\t".join(str(x) for x in row) + "\n")
    return path


def order_counts_figure(path: Path, got: Mapping[int, int], expected: Mapping[int, int] | None = None,
                        title: str = "graphs per order") -> Path:
    """Bar chart of per-order counts, with the expected counts as outlined bars."""
    orders = sorted(set(got) | set(expected or {}))
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        width = 0.4 if expected else 0.7
        ax.bar([n - width / 2 if expected else n for n in orders], [got.get(n, 0) for n in orders],
               width=width, label="found", color="#3b6ea8")
        if expected:
            ax.bar([n + width / 2 for n in orders], [expected.get(n, 0) for n in orders], width=width,
                   label="expected", fill=False, edgecolor="#c05030", hatch="//")
            ax.legend(frameon=False)
        ax.set_xticks(orders)
        ax.set_xlabel("order n")
        ax.set_ylabel("count")
        ax.set_title(title)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return Path(path)


def levels_figure(path: Path, levels: Mapping[int, int], title: str = "search nodes per order") -> Path:
    orders = sorted(levels)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        ax.plot(orders, [levels[n] for n in orders], marker="o", color="#3b6ea8")
        ax.set_yscale("log")
        ax.set_xlabel("order n")
        ax.set_ylabel("canonical forms stored")
        ax.set_title(title)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return Path(path)


def catalog_report(out_dir: Path, name: str, report, expected: Mapping[int, int]) -> list[Path]:
    """TSV of checks and per-graph rows plus a per-order figure for one catalogue report."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = [
        write_tsv(out_dir / f"{name}_checks.tsv", ["status", "check", "detail"],
                  [("PASS" if c.ok else "FAIL", c.name, c.detail) for c in report.checks]),
    ]
    cols = ["index", "order", "edges", "hfree", "chi", "vertex_critical", "hfree_critical", "canonical"]
    files.append(write_tsv(out_dir / f"{name}_graphs.tsv", cols, [[row[c] for c in cols] for row in report.per_graph]))
    got: dict[int, int] = {}
    for row in report.per_graph:
        got[row["order"]] = got.get(row["order"], 0) + 1
    files.append(order_counts_figure(out_dir / f"{name}_orders.png", got, expected, title=f"{name}: graphs per order"))
    return files


def generator_report(out_dir: Path, stats, outputs: Sequence[str], name: str = "gen") -> list[Path]:
    from .graph import parse_graph6

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = [write_tsv(out_dir / f"{name}_stats.tsv", ["key", "value"], [line.split("=", 1) for line in stats.lines()])]
    got: dict[int, int] = {}
    for g6 in outputs:
        n = parse_graph6(g6).n
        got[n] = got.get(n, 0) + 1
    files.append(write_tsv(out_dir / f"{name}_outputs.tsv", ["order", "count"], sorted(got.items())))
    files.append(order_counts_figure(out_dir / f"{name}_orders.png", got, title="outputs per order"))
    if stats.levels:
        files.append(levels_figure(out_dir / f"{name}_levels.png", stats.levels))
    return files
