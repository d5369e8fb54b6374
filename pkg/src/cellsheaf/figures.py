"""Static renderings of complexes and report dimensions.

Deterministic output only: vertices sit on a circle in identifier
order, so the same input always produces the same image.  Rendering is
headless (Agg); figures are written to files, never shown.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .complexes import SimplicialComplex, as_face

VERTEX_FILL = "#1f477d"
VERTEX_EMPTY = "white"
EDGE_COLOR = "#444444"
FACE_SHADE = "#d9e2f0"


def circular_layout(cx: SimplicialComplex) -> dict:
    """Vertex id -> (x, y) on the unit circle, in identifier order."""
    ids = list(cx.vertices)
    n = len(ids)
    if n == 1:
        return {ids[0]: (0.0, 0.0)}
    layout = {}
    for k, vid in enumerate(ids):
        angle = math.pi / 2 + 2 * math.pi * k / n
        layout[vid] = (math.cos(angle), math.sin(angle))
    return layout


def _normalize_highlight(highlight) -> set:
    faces = set()
    for item in highlight:
        faces.add(as_face(item if isinstance(item, tuple) else (item,)))
    return faces


def complex_figure(cx: SimplicialComplex, highlight=(), title: str = ""):
    """Draw a complex of dimension <= 2.

    highlight is an iterable of faces (or bare vertex ids); highlighted
    vertices are filled, highlighted edges drawn heavier.  Triangles are
    shaded regardless.
    """
    marked = _normalize_highlight(highlight)
    layout = circular_layout(cx)
    fig, ax = plt.subplots(figsize=(4.0, 4.0))
    for t in cx.faces(2):
        xs = [layout[v][0] for v in t]
        ys = [layout[v][1] for v in t]
        ax.fill(xs, ys, color=FACE_SHADE, zorder=1)
    for e in cx.faces(1):
        (x0, y0), (x1, y1) = layout[e[0]], layout[e[1]]
        heavy = e in marked
        ax.plot(
            [x0, x1],
            [y0, y1],
            color=VERTEX_FILL if heavy else EDGE_COLOR,
            linewidth=3.0 if heavy else 1.5,
            zorder=2,
        )
    for vid in cx.vertices:
        x, y = layout[vid]
        filled = (vid,) in marked
        ax.scatter(
            [x],
            [y],
            s=260,
            facecolor=VERTEX_FILL if filled else VERTEX_EMPTY,
            edgecolor=EDGE_COLOR,
            linewidth=1.5,
            zorder=3,
        )
        ax.annotate(
            str(vid),
            (x, y),
            ha="center",
            va="center",
            fontsize=9,
            color="white" if filled else "black",
            zorder=4,
        )
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return fig


def dimension_figure(items, title: str = ""):
    """Bar chart of labeled non-negative integer dimensions."""
    labels = [str(k) for k, _ in items]
    values = [int(v) for _, v in items]
    fig, ax = plt.subplots(figsize=(max(3.0, 1.1 * len(items)), 3.0))
    ax.bar(range(len(values)), values, color=VERTEX_FILL)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels)
    top = max(values + [1])
    ax.set_yticks(range(0, top + 1, max(1, top // 6)))
    ax.set_ylabel("dimension")
    if title:
        ax.set_title(title)
    return fig


def save_figure(fig, path, dpi: int = 150) -> None:
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
