"""Static SVG heatmaps for region grids.

The renderer is a pure function of the already-computed grid: cell labels
are painted as two-color run-length-merged rectangles and the analytic
boundary curves attached to the grid are drawn as polylines.  No game math
is ever recomputed here.
"""

from __future__ import annotations

from .regions import RegionGrid

_MARGIN = 56.0
_PLOT = 520.0
_CURVE_COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2")


def _f(v: float) -> str:
    return f"{v:.2f}"


def render_region_svg(
    grid: RegionGrid,
    flag_field: str,
    flag_value,
    title: str = "",
    flag_color: str = "#3b6ea5",
    base_color: str = "#eef1f5",
) -> str:
    """Render a two-color heatmap of ``flag_field == flag_value``.

    Cells matching the flag get ``flag_color``; runs of equal color along
    the x axis are merged into single rectangles per row to keep the file
    small.  Overlay curves come straight from ``grid.curves``.
    """
    nx, ny = len(grid.x_values), len(grid.y_values)
    x0, x1 = grid.x_range
    y0, y1 = grid.y_range

    def px(x: float) -> float:
        return _MARGIN + (x - x0) / (x1 - x0) * _PLOT

    def py(y: float) -> float:
        return _MARGIN + _PLOT - (y - y0) / (y1 - y0) * _PLOT

    width = height = 2 * _MARGIN + _PLOT
    cell_w = _PLOT / nx
    cell_h = _PLOT / ny
    flags = grid.column(flag_field)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">',
        f'<rect x="{_f(_MARGIN)}" y="{_f(_MARGIN)}" width="{_f(_PLOT)}" '
        f'height="{_f(_PLOT)}" fill="{base_color}"/>',
    ]
    for yi in range(ny):
        top = _MARGIN + _PLOT - (yi + 1) * cell_h
        xi = 0
        while xi < nx:
            if flags[grid.cell_index(xi, yi)] != flag_value:
                xi += 1
                continue
            run = xi
            while run < nx and flags[grid.cell_index(run, yi)] == flag_value:
                run += 1
            parts.append(
                f'<rect x="{_f(_MARGIN + xi * cell_w)}" y="{_f(top)}" '
                f'width="{_f((run - xi) * cell_w)}" height="{_f(cell_h)}" '
                f'fill="{flag_color}"/>'
            )
            xi = run
    for k, curve in enumerate(grid.curves):
        if len(curve.points) < 2:
            continue
        pts = " ".join(f"{_f(px(x))},{_f(py(y))}" for x, y in curve.points)
        color = _CURVE_COLORS[k % len(_CURVE_COLORS)]
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
    parts.append(
        f'<rect x="{_f(_MARGIN)}" y="{_f(_MARGIN)}" width="{_f(_PLOT)}" '
        f'height="{_f(_PLOT)}" fill="none" stroke="#333333" stroke-width="1"/>'
    )
    ticks = 5
    for k in range(ticks + 1):
        fx = x0 + (x1 - x0) * k / ticks
        fy = y0 + (y1 - y0) * k / ticks
        parts.append(
            f'<text x="{_f(px(fx))}" y="{_f(_MARGIN + _PLOT + 18.0)}" font-size="11" '
            f'text-anchor="middle" font-family="sans-serif">{fx:.2g}</text>'
        )
        parts.append(
            f'<text x="{_f(_MARGIN - 8.0)}" y="{_f(py(fy) + 4.0)}" font-size="11" '
            f'text-anchor="end" font-family="sans-serif">{fy:.2g}</text>'
        )
    parts.append(
        f'<text x="{_f(_MARGIN + _PLOT / 2)}" y="{_f(_MARGIN + _PLOT + 38.0)}" font-size="13" '
        f'text-anchor="middle" font-family="sans-serif">{grid.x_name}</text>'
    )
    parts.append(
        f'<text x="{_f(16.0)}" y="{_f(_MARGIN + _PLOT / 2)}" font-size="13" '
        f'text-anchor="middle" font-family="sans-serif" '
        f'transform="rotate(-90 16 {_f(_MARGIN + _PLOT / 2)})">{grid.y_name}</text>'
    )
    if title:
        parts.append(
            f'<text x="{_f(width / 2)}" y="{_f(_MARGIN - 16.0)}" font-size="14" '
            f'text-anchor="middle" font-family="sans-serif">{title}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
