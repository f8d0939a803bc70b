"""Matplotlib pictures of finite translation quivers.

Vertices are drawn at their ZΔ representative, one fundamental domain of
the band, with arrows that stay inside the domain.  Arrows that wrap
around the glued ends are omitted.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .dynkin import diagram  # noqa: E402
from .tquiver import TranslationQuiver  # noqa: E402
from .ztrans import height  # noqa: E402


def _row_heights(q: TranslationQuiver) -> tuple[dict, dict]:
    family, rank = q.meta.family, q.meta.rank
    try:
        d = diagram(family, rank)
    except Exception:
        rows = sorted({q.row(v) for v in range(q.n) if q.row(v) is not None})
        return {j: 0 for j in rows}, {j: j for j in rows}
    xoff = height(d)
    y = {j: float(j) for j in d.vertices}
    if d.family == "D":
        y[rank] = rank - 1.5
    elif d.family == "E":
        y[rank] = 3.5
    return xoff, y


def positions(q: TranslationQuiver) -> dict[int, tuple[float, float]]:
    xoff, y = _row_heights(q)
    pos = {}
    for v in range(q.n):
        lab = q.labels[v]
        if not isinstance(lab, tuple):
            continue
        i, j = lab
        pos[v] = (2 * i + xoff.get(j, 0), y.get(j, j))
    return pos


def draw_quiver(q: TranslationQuiver, path, highlight=(), title: str | None = None):
    """Render q to `path`; vertices in `highlight` are drawn as deleted."""
    highlight = set(highlight)
    pos = positions(q)
    width = max((p[0] for p in pos.values()), default=1)
    fig, ax = plt.subplots(figsize=(min(2 + 0.35 * width, 40), 1.5 + 0.6 * (q.meta.rank or 4)))
    for a, b in q.arrows:
        if a not in pos or b not in pos:
            continue
        (x0, y0), (x1, y1) = pos[a], pos[b]
        if abs(x1 - x0) > 1.01:
            continue
        ax.annotate(
            "",
            xy=(x1, y1),
            xytext=(x0, y0),
            arrowprops=dict(arrowstyle="->", lw=0.7, color="0.35", shrinkA=5, shrinkB=5),
        )
    keep = [v for v in pos if v not in highlight]
    gone = [v for v in pos if v in highlight]
    ax.scatter([pos[v][0] for v in keep], [pos[v][1] for v in keep], s=22, color="k", zorder=3)
    if gone:
        ax.scatter(
            [pos[v][0] for v in gone],
            [pos[v][1] for v in gone],
            s=30,
            marker="x",
            color="tab:red",
            zorder=3,
            label="deleted",
        )
        ax.legend(loc="upper right", fontsize=7, frameon=False)
    ticks = {}
    for v, (_, yy) in pos.items():
        ticks.setdefault(yy, q.row(v))
    ax.set_yticks(sorted(ticks))
    ax.set_yticklabels([str(ticks[t]) for t in sorted(ticks)])
    ax.set_xticks([])
    ax.set_ylabel("row")
    for side in ("top", "right", "bottom"):
        ax.spines[side].set_visible(False)
    if title:
        ax.set_title(title, fontsize=9)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, bbox_inches="tight", dpi=150, metadata={"Software": None})
    plt.close(fig)
    return path
