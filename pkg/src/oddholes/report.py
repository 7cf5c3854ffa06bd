"""JSONL serialization and figure rendering for suite reports."""

from __future__ import annotations

import json
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .verdicts import STATUSES


def dumps(obj) -> str:
    """One deterministic JSON line."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def report_lines(report) -> list[str]:
    """Instance records first, summary object last."""
    lines = [dumps(rec) for rec in report.instances]
    lines.append(dumps({"summary": report.summary()}))
    return lines


def write_jsonl(lines, out=None) -> None:
    text = "\n".join(lines) + "\n"
    if out is None:
        print(text, end="")
    else:
        with open(out, "w") as f:
            f.write(text)


def render_verdict_counts(report, figures_dir: str) -> str:
    """Bar chart of verdict counts, returns the written path."""
    os.makedirs(figures_dir, exist_ok=True)
    counts = report.counts
    fig, ax = plt.subplots(figsize=(5, 3.2))
    xs = list(STATUSES)
    ys = [counts[s] for s in xs]
    colors = ["#2a9d2a", "#c0392b", "#888888", "#e6a817"]
    ax.bar(xs, ys, color=colors)
    ax.set_ylabel("instances")
    ax.set_title(f"{report.suite}: verdicts")
    for x, y in zip(xs, ys):
        ax.text(x, y, str(y), ha="center", va="bottom", fontsize=8)
    fig.tight_layout()
    path = os.path.join(figures_dir, f"{_slug(report.suite)}_verdicts.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_hole_histogram(spectrum, figures_dir: str, name: str = "holes") -> str:
    """Histogram of hole lengths, odd and even side by side."""
    os.makedirs(figures_dir, exist_ok=True)
    fig, ax = plt.subplots(figsize=(5, 3.2))
    odd = dict(sorted(spectrum.odd_lengths.items()))
    even = dict(sorted(spectrum.even_lengths.items()))
    all_lengths = sorted(set(odd) | set(even))
    ax.bar([l - 0.2 for l in all_lengths], [odd.get(l, 0) for l in all_lengths],
           width=0.4, label="odd", color="#c0392b")
    ax.bar([l + 0.2 for l in all_lengths], [even.get(l, 0) for l in all_lengths],
           width=0.4, label="even", color="#2c6fb3")
    ax.set_xlabel("hole length")
    ax.set_ylabel("count")
    ax.set_title(f"{name}: hole spectrum (girth {spectrum.girth})")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(figures_dir, f"{_slug(name)}_spectrum.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _slug(s: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in s)
