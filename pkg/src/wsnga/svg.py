"""Minimal static SVG charts.

Output is plain text built from fixed-precision numbers, so the same input
always produces the same bytes.
"""

from __future__ import annotations

from html import escape

import numpy as np

from .network import Deployment

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
WIDTH, HEIGHT = 640, 420
MARGIN = dict(left=70, right=20, top=40, bottom=50)


def _f(v: float) -> str:
    return f"{v:.2f}"


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _label(v: float) -> str:
    return f"{v:.4g}"


def line_chart(series: dict[str, tuple], title: str = "", xlabel: str = "", ylabel: str = "") -> str:
    """Line chart of ``{name: (x, y)}`` series."""
    xs = np.concatenate([np.asarray(x, float) for x, _ in series.values()])
    ys = np.concatenate([np.asarray(y, float) for _, y in series.values()])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y0, y1 = y0 - 1, y1 + 1
    pw = WIDTH - MARGIN["left"] - MARGIN["right"]
    ph = HEIGHT - MARGIN["top"] - MARGIN["bottom"]

    def sx(v):
        return MARGIN["left"] + (v - x0) / (x1 - x0) * pw

    def sy(v):
        return MARGIN["top"] + (1 - (v - y0) / (y1 - y0)) * ph

    out = [_header(WIDTH, HEIGHT)]
    out.append(
        f'<rect x="{MARGIN["left"]}" y="{MARGIN["top"]}" width="{pw}" height="{ph}" fill="none" stroke="#000"/>'
    )
    for t in _ticks(x0, x1):
        out.append(f'<text x="{_f(sx(t))}" y="{HEIGHT - MARGIN["bottom"] + 18}" text-anchor="middle" font-size="11">{_label(t)}</text>')
    for t in _ticks(y0, y1):
        out.append(f'<text x="{MARGIN["left"] - 6}" y="{_f(sy(t) + 4)}" text-anchor="end" font-size="11">{_label(t)}</text>')
    for i, (name, (x, y)) in enumerate(series.items()):
        pts = " ".join(f"{_f(sx(a))},{_f(sy(b))}" for a, b in zip(x, y))
        color = PALETTE[i % len(PALETTE)]
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        ly = MARGIN["top"] + 14 + 16 * i
        lx = WIDTH - MARGIN["right"] - 150
        out.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 20}" y2="{ly - 4}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 26}" y="{ly}" font-size="11">{escape(name)}</text>')
    out.append(f'<text x="{WIDTH / 2}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>')
    out.append(f'<text x="{WIDTH / 2}" y="{HEIGHT - 10}" text-anchor="middle" font-size="12">{escape(xlabel)}</text>')
    out.append(
        f'<text x="16" y="{HEIGHT / 2}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 16 {HEIGHT / 2})">{escape(ylabel)}</text>'
    )
    out.append("</svg>\n")
    return "\n".join(out)


def cluster_map(deployment: Deployment, heads, owner=None, links: bool = False, size: int = 520) -> str:
    """Field scatter: sink as a black square, members small blue, heads large yellow.

    Dead nodes are drawn as small grey crosses. ``links`` draws a line from
    each member to its head (``owner`` required).
    """
    xmin, xmax, ymin, ymax = deployment.config.bounds
    pad = 20
    scale = (size - 2 * pad) / max(xmax - xmin, ymax - ymin)

    def sx(v):
        return pad + (v - xmin) * scale

    def sy(v):
        return size - pad - (v - ymin) * scale

    heads = np.asarray(heads, dtype=bool)
    alive = deployment.alive
    out = [_header(size, size)]
    out.append(
        f'<rect x="{_f(sx(xmin))}" y="{_f(sy(ymax))}" width="{_f((xmax - xmin) * scale)}" '
        f'height="{_f((ymax - ymin) * scale)}" fill="none" stroke="#888"/>'
    )
    pos = deployment.positions
    if links and owner is not None:
        for v in np.flatnonzero(alive & ~heads):
            h = owner[v]
            if h >= 0:
                out.append(
                    f'<line x1="{_f(sx(pos[v, 0]))}" y1="{_f(sy(pos[v, 1]))}" '
                    f'x2="{_f(sx(pos[h, 0]))}" y2="{_f(sy(pos[h, 1]))}" stroke="#bbb" stroke-width="0.6"/>'
                )
    for v in range(deployment.node_count):
        x, y = _f(sx(pos[v, 0])), _f(sy(pos[v, 1]))
        if not alive[v]:
            out.append(f'<text x="{x}" y="{y}" font-size="8" fill="#999" text-anchor="middle">x</text>')
        elif heads[v]:
            out.append(f'<circle cx="{x}" cy="{y}" r="6" fill="#ffd500" stroke="#000" stroke-width="0.8"/>')
        else:
            out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="#1f5fd6"/>')
    sxk, syk = deployment.config.sink_position
    out.append(f'<rect x="{_f(sx(sxk) - 6)}" y="{_f(sy(syk) - 6)}" width="12" height="12" fill="#000"/>')
    out.append("</svg>\n")
    return "\n".join(out)


def _header(w: int, h: int) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
        f'<rect width="{w}" height="{h}" fill="#fff"/>'
    )
