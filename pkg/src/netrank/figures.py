"""Optional matplotlib rendering of ranking figures.

Figures are sidecar artifacts written next to the delimited outputs; the
data files stay the source of truth.
"""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def _safe(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "-_." else "_" for ch in name)


def render_curves(curves, out_dir) -> list[Path]:
    """One figure per criterion overlaying every network's density curve.

    curves: iterable of (network, criterion, x array, density array).
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    by_criterion: dict[str, list] = {}
    for network, criterion, x, y in curves:
        by_criterion.setdefault(criterion, []).append((network, x, y))
    paths = []
    for criterion, series in by_criterion.items():
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for network, x, y in series:
            ax.plot(x, y, label=network)
        ax.set_xlabel("events per node")
        ax.set_ylabel("density")
        ax.set_title(f"estimated event distributions: {criterion}")
        ax.legend()
        ax.grid(alpha=0.3)
        fig.tight_layout()
        path = out_dir / f"curves_{_safe(criterion)}.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        paths.append(path)
    return paths


def render_closeness(names, closeness, out_dir) -> Path:
    """Bar chart of relative closeness, best network first."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    pairs = sorted(zip(names, closeness), key=lambda p: -p[1])
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.bar([p[0] for p in pairs], [p[1] for p in pairs], color="tab:blue")
    ax.set_ylabel("relative closeness")
    ax.set_ylim(0, 1.05)
    ax.set_title("network ranking")
    ax.grid(axis="y", alpha=0.3)
    fig.tight_layout()
    path = out_dir / "closeness.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
