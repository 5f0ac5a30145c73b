"""Minimal self-contained SVG line charts (no plotting dependency).

Output is a pure function of the input arrays so files are byte-reproducible.
"""

import math
from xml.sax.saxutils import escape

WIDTH = 900
PANEL_HEIGHT = 300
MARGIN_LEFT = 70
MARGIN_RIGHT = 150
MARGIN_TOP = 30
MARGIN_BOTTOM = 45

POP_COLORS = {"pop00": "#1f77b4", "pop01": "#ff7f0e", "pop10": "#2ca02c", "pop11": "#d62728"}
Q_COLORS = {"c_pdd": "#000000", "c_l1": "#9467bd", "c_re": "#8c564b"}
LABELS = {
    "pop00": "|00>", "pop01": "|01>", "pop10": "|10>", "pop11": "|11>",
    "c_pdd": "C_PDD", "c_l1": "C_l1", "c_re": "C_re",
}


def _fmt(v):
    return f"{v:.2f}"


def _panel(out, top, title, x, series, colors, x_lo, x_hi):
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = PANEL_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    y0 = top + MARGIN_TOP
    span = (x_hi - x_lo) or 1.0

    def px(xv):
        return MARGIN_LEFT + (xv - x_lo) / span * plot_w

    def py(yv):
        yv = min(max(yv, -0.05), 1.05)
        return y0 + (1.0 - yv) * plot_h

    out.append(f'<text x="{MARGIN_LEFT}" y="{top + 20}" font-size="14">{escape(title)}</text>')
    out.append(
        f'<rect x="{MARGIN_LEFT}" y="{y0}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#444" stroke-width="1"/>'
    )
    for k in range(5):
        yv = k / 4
        out.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{_fmt(py(yv) + 4)}" font-size="11" '
            f'text-anchor="end">{yv:.2f}</text>'
        )
        xv = x_lo + k / 4 * span
        out.append(
            f'<text x="{_fmt(px(xv))}" y="{y0 + plot_h + 18}" font-size="11" '
            f'text-anchor="middle">{xv / math.pi:.2f}&#960;</text>'
        )
    out.append(
        f'<text x="{MARGIN_LEFT + plot_w / 2:.2f}" y="{y0 + plot_h + 36}" font-size="12" '
        'text-anchor="middle">pulse area</text>'
    )
    for i, (name, ys) in enumerate(series.items()):
        pts = " ".join(f"{_fmt(px(a))},{_fmt(py(b))}" for a, b in zip(x, ys))
        out.append(
            f'<polyline data-series="{name}" fill="none" stroke="{colors[name]}" '
            f'stroke-width="1.5" points="{pts}"/>'
        )
        ly = y0 + 15 + 18 * i
        lx = MARGIN_LEFT + plot_w + 15
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" stroke="{colors[name]}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 26}" y="{ly + 4}" font-size="12">{escape(LABELS[name])}</text>')


def render_trajectory_svg(columns):
    """Two stacked panels: basis populations and coherence quantifiers vs pulse area.

    ``columns`` maps CSV column names to equal-length float sequences.
    """
    x = list(columns["area"])
    x_lo, x_hi = (min(x), max(x)) if x else (0.0, 1.0)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{2 * PANEL_HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {2 * PANEL_HEIGHT}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    _panel(out, 0, "Basis-state populations", x,
           {k: columns[k] for k in POP_COLORS}, POP_COLORS, x_lo, x_hi)
    _panel(out, PANEL_HEIGHT, "Coherence quantifiers", x,
           {k: columns[k] for k in Q_COLORS}, Q_COLORS, x_lo, x_hi)
    out.append("</svg>")
    return "\n".join(out) + "\n"
