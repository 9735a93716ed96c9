"""Deterministic pictures and text exports of webs.

Boundary vertices sit on a dashed disk rim, clockwise from the top-left
(where the marked first vertex goes); interior vertices are placed by a
seeded force-directed layout, so the same web always renders to the same
bytes.  Webs can also be written as annotated DOT text carrying the full
rotation system, and read back.
"""

from __future__ import annotations

import math
import re
from typing import Mapping, Sequence

import matplotlib
import networkx as nx
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure
from matplotlib.patches import Circle

from .errors import ValidationError
from .strings import BLACK
from .webs import Web

SVG_HASHSALT = "oscweb"
_SVG_RC = {"svg.hashsalt": SVG_HASHSALT, "svg.fonttype": "none"}


def boundary_positions(web: Web, radius: float = 1.0) -> dict[int, tuple[float, float]]:
    """Rim coordinates: vertex at position i+1 sits at 135° − i·360°/k."""
    out = {}
    for i, v in enumerate(web.boundary):
        theta = math.radians(135.0 - 360.0 * i / web.k)
        out[v] = (radius * math.cos(theta), radius * math.sin(theta))
    return out


def layout_web(
    web: Web,
    radius: float = 1.0,
    spacing: float | None = None,
    seed: int = 0,
    iterations: int = 150,
) -> dict[int, tuple[float, float]]:
    """Positions for every vertex: rim vertices pinned to the circle,
    interior vertices by force-directed placement from a fixed seed."""
    pos = boundary_positions(web, radius)
    if not web.internal:
        return pos
    graph = nx.Graph()
    graph.add_nodes_from(web.colors)
    graph.add_edges_from((a, b) for a, b, _ in web.edges)
    if pos:
        placed = nx.spring_layout(
            graph,
            pos={v: list(p) for v, p in pos.items()},
            fixed=list(pos),
            k=spacing,
            seed=seed,
            iterations=iterations,
        )
    else:
        placed = nx.spring_layout(graph, k=spacing, seed=seed, iterations=iterations)
    return {v: (float(x), float(y)) for v, (x, y) in placed.items()}


def _vertex_dot(ax, x, y, color, size):
    face = "black" if color == BLACK else "white"
    ax.plot(
        [x], [y], marker="o", markersize=size,
        markerfacecolor=face, markeredgecolor="black", linestyle="none", zorder=3,
    )


def render_svg(
    web: Web,
    path: str,
    *,
    radius: float = 1.0,
    spacing: float | None = None,
    labels: bool = True,
) -> str:
    """Draw the web into an SVG file and return the path."""
    pos = layout_web(web, radius=radius, spacing=spacing)
    fig = Figure(figsize=(5.0, 5.0))
    FigureCanvasSVG(fig)
    ax = fig.add_subplot(111)
    ax.set_aspect("equal")
    ax.axis("off")
    pad = 1.25 * radius
    ax.set_xlim(-pad, pad)
    ax.set_ylim(-pad, pad)
    ax.add_patch(
        Circle((0.0, 0.0), radius, fill=False, linestyle="--", edgecolor="0.75")
    )
    for a, b, label in web.edges:
        (xa, ya), (xb, yb) = pos[a], pos[b]
        ax.plot([xa, xb], [ya, yb], color="black", linewidth=1.2, zorder=1)
        if labels:
            ax.text(
                (xa + xb) / 2, (ya + yb) / 2, str(label),
                fontsize=8, ha="center", va="center", color="0.35",
                bbox={"boxstyle": "round,pad=0.1", "facecolor": "white", "edgecolor": "none"},
                zorder=2,
            )
    for v, color in web.colors.items():
        x, y = pos[v]
        _vertex_dot(ax, x, y, color, 9.0 if v in set(web.boundary) else 6.5)
    for i, v in enumerate(web.boundary):
        x, y = pos[v]
        scale = 1.13
        ax.text(
            scale * x, scale * y, str(i + 1),
            fontsize=9, ha="center", va="center",
            fontweight="bold" if i == 0 else "normal",
        )
    with matplotlib.rc_context(_SVG_RC):
        fig.savefig(path, format="svg", metadata={"Date": None})
    return path


# ---------------------------------------------------------------------------
# DOT text


def render_dot(web: Web) -> str:
    """DOT text for the web, annotated with everything needed to rebuild it:
    edge ids, per-vertex counterclockwise edge order, boundary order."""
    boundary = " ".join(str(v) for v in web.boundary)
    lines = ["graph web {"]
    lines.append('  node [shape=circle fixedsize=true width=0.25];')
    lines.append(f'  graph [boundary="{boundary}"];')
    on_rim = set(web.boundary)
    for v in sorted(web.colors):
        rot = " ".join(str(h // 2) for h in web.rotation[v])
        fill = "black" if web.colors[v] == BLACK else "white"
        font = "white" if web.colors[v] == BLACK else "black"
        lines.append(
            f'  {v} [color="{web.colors[v]}" boundary="{str(v in on_rim).lower()}"'
            f' rot="{rot}" style=filled fillcolor={fill} fontcolor={font}];'
        )
    for eid, (a, b, label) in enumerate(web.edges):
        lines.append(f'  {a} -- {b} [label="{label}" eid="{eid}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE_LINE = re.compile(r"^\s*(\d+)\s*\[(.*)\];\s*$")
_EDGE_LINE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*\[(.*)\];\s*$")
_GRAPH_LINE = re.compile(r"^\s*graph\s*\[(.*)\];\s*$")
_ATTR = re.compile(r'(\w+)="([^"]*)"')


def parse_dot(text: str) -> Web:
    """Rebuild a web from DOT text produced by ``render_dot``."""
    boundary: list[int] = []
    vertices: list[dict] = []
    rotation: dict[str, list[int]] = {}
    edges: dict[int, dict] = {}
    for line in text.splitlines():
        match = _GRAPH_LINE.match(line)
        if match:
            attrs = dict(_ATTR.findall(match.group(1)))
            if "boundary" in attrs:
                boundary = [int(tok) for tok in attrs["boundary"].split()]
            continue
        match = _EDGE_LINE.match(line)
        if match:
            attrs = dict(_ATTR.findall(match.group(3)))
            if "eid" not in attrs or "label" not in attrs:
                raise ValidationError(f"edge line without eid/label: {line!r}")
            edges[int(attrs["eid"])] = {
                "a": int(match.group(1)),
                "b": int(match.group(2)),
                "label": int(attrs["label"]),
            }
            continue
        match = _NODE_LINE.match(line)
        if match:
            attrs = dict(_ATTR.findall(match.group(2)))
            if "color" not in attrs:
                continue  # style-only node defaults
            vid = int(match.group(1))
            vertices.append(
                {
                    "id": vid,
                    "color": attrs["color"],
                    "boundary": attrs.get("boundary") == "true",
                }
            )
            rotation[str(vid)] = [int(tok) for tok in attrs.get("rot", "").split()]
    if sorted(edges) != list(range(len(edges))):
        raise ValidationError("edge ids are not consecutive from 0")
    data = {
        "vertices": vertices,
        "edges": [edges[i] for i in range(len(edges))],
        "rotation": rotation,
        "boundary": boundary,
        "leftmost": boundary[0] if boundary else None,
    }
    return Web.from_json(data)


# ---------------------------------------------------------------------------
# report figures


def save_count_figure(
    counts: Mapping[int, int], path: str, *, title: str, xlabel: str, ylabel: str
) -> str:
    """Bar chart of per-size check counts for the verification reports."""
    fig = Figure(figsize=(6.0, 3.5))
    FigureCanvasSVG(fig)
    ax = fig.add_subplot(111)
    keys = sorted(counts)
    ax.bar(keys, [counts[k] for k in keys], color="0.4")
    if any(counts[k] > 0 for k in keys):
        ax.set_yscale("log")
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_xticks(keys)
    fig.tight_layout()
    with matplotlib.rc_context(_SVG_RC):
        fig.savefig(path, format="svg", metadata={"Date": None})
    return path


def save_csp_figure(reports: Sequence, path: str) -> str:
    """Fixed points of each promotion power against the q-analog evaluated
    at the matching root of unity, one panel per rectangle."""
    fig = Figure(figsize=(4.0 * len(reports), 3.2))
    FigureCanvasSVG(fig)
    for idx, report in enumerate(reports):
        ax = fig.add_subplot(1, len(reports), idx + 1)
        ds = list(range(1, report.order + 1))
        ax.plot(ds, list(report.fixed_counts), "o", label="fixed points", color="black")
        ax.plot(
            ds,
            [abs(z) for z in report.evaluations],
            "+",
            markersize=10,
            label="|X(ζ^d)|",
            color="0.45",
        )
        ax.set_title(f"{report.rows}×{report.cols}")
        ax.set_xlabel("d")
        ax.set_xticks(ds)
        if idx == 0:
            ax.set_ylabel("count")
            ax.legend(fontsize=8)
    fig.tight_layout()
    with matplotlib.rc_context(_SVG_RC):
        fig.savefig(path, format="svg", metadata={"Date": None})
    return path
