"""Complex-plane figures of codeword spectra with their ring constraints."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Circle  # noqa: E402

from .codec import CodebookProfile  # noqa: E402
from .constraints import Ring  # noqa: E402
from .report import CodebookRow  # noqa: E402


def _panel_size(count: int, width: float = 4.5) -> tuple[float, float]:
    return width * count, width


def plot_spectrum_plane(
    rows: Sequence[CodebookRow],
    profile: CodebookProfile,
    components: Sequence[int],
    path: str | Path,
    dpi: int = 150,
) -> Path:
    """One panel per component: z*_m of every codeword, labeled by rank, plus the ring."""
    components = list(components) or [0]
    fig, axes = plt.subplots(1, len(components), figsize=_panel_size(len(components)), squeeze=False)
    for ax, m in zip(axes[0], components):
        xs = [row.components[m].real for row in rows]
        ys = [row.components[m].imag for row in rows]
        ax.scatter(xs, ys, s=18, color="k", zorder=3)
        labels: dict[tuple[float, float], list[str]] = {}
        for row, x, y in zip(rows, xs, ys):
            labels.setdefault((round(x, 6) + 0.0, round(y, 6) + 0.0), []).append(str(row.index))
        for (x, y), names in labels.items():
            ax.annotate(",".join(names), (x, y), textcoords="offset points", xytext=(4, 4), fontsize=7)
        slot = profile.rings[m]
        if isinstance(slot, Ring):
            c = slot.center
            for radius, style in ((slot.inner, "--"), (slot.outer, "-")):
                if radius > 0:
                    ax.add_patch(Circle((c.real, c.imag), radius, fill=False, ls=style, color="tab:red"))
            ax.plot([c.real], [c.imag], marker="+", color="tab:red", ms=10)
        ax.axhline(0, color="0.7", lw=0.6)
        ax.axvline(0, color="0.7", lw=0.6)
        lim = profile.n + 0.5
        ax.set_xlim(-lim, lim)
        ax.set_ylim(-lim, lim)
        ax.set_aspect("equal")
        ax.set_xlabel(r"$\Re$")
        ax.set_ylabel(r"$\Im$")
        ax.set_title(f"$z^*_{{{m}}}$, n={profile.n}, {len(rows)} words", fontsize=9)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    return path
