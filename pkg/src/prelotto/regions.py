"""Rectangular parameter grids with per-cell labels and overlay curves.

A ``RegionGrid`` is the common product of the two-player and three-player
parameter sweeps.  Cells are stored as flat columns in row-major order (the
x axis outermost) so the CSV serialization is a plain dump of the columns in
their declared order.  Analytic boundary curves are precomputed by the sweep
that builds the grid; renderers must never recompute game math.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def fmt12(value) -> str:
    """Serialize one CSV field: floats at 12 significant digits."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


@dataclass(frozen=True)
class BoundaryCurve:
    """A named polyline in grid coordinates, for heatmap overlays."""

    name: str
    points: tuple[tuple[float, float], ...]


@dataclass
class RegionGrid:
    """Grid over two parameters with one record per cell.

    ``x_values`` / ``y_values`` are the axis sample coordinates (cell
    centers), ``x_range`` / ``y_range`` the covered intervals.  ``fields``
    fixes the CSV column order; the first two fields are the axis
    coordinates of each cell.
    """

    x_name: str
    y_name: str
    x_values: list[float]
    y_values: list[float]
    x_range: tuple[float, float]
    y_range: tuple[float, float]
    fields: tuple[str, ...]
    cells: dict[str, list]
    curves: list[BoundaryCurve] = field(default_factory=list)

    @property
    def n_rows(self) -> int:
        return len(self.x_values) * len(self.y_values)

    def column(self, name: str) -> list:
        return self.cells[name]

    def cell_index(self, xi: int, yi: int) -> int:
        return xi * len(self.y_values) + yi

    def nearest_cell(self, x: float, y: float) -> int:
        """Flat index of the cell whose center is closest to ``(x, y)``."""
        xi = min(range(len(self.x_values)), key=lambda i: abs(self.x_values[i] - x))
        yi = min(range(len(self.y_values)), key=lambda j: abs(self.y_values[j] - y))
        return self.cell_index(xi, yi)

    def to_csv(self) -> str:
        """RFC-4180-style CSV: header row, 12 significant digits, LF endings."""
        lines = [",".join(self.fields)]
        columns = [self.cells[name] for name in self.fields]
        for row in range(self.n_rows):
            lines.append(",".join(fmt12(col[row]) for col in columns))
        return "\n".join(lines) + "\n"
