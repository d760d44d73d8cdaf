"""Counting grid of even-zeroed paths by endpoint.

``label(t, h)`` is the number of even-zeroed paths from the origin to
``(t, h)``. Each label is the sum of the labels at ``(t-1, h-1)`` and
``(t-1, h+1)``, except that nodes on the axis with ``t % 4 != 0`` are
forbidden and carry 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import caps as _caps


def forbidden(t: int, h: int) -> bool:
    return h == 0 and t % 4 != 0


@dataclass(frozen=True)
class TriangleGrid:
    max_t: int
    rows: tuple[dict[int, int], ...]

    def label(self, t: int, h: int) -> int:
        if not 0 <= t <= self.max_t:
            raise IndexError(f"row {t} outside grid 0..{self.max_t}")
        return self.rows[t].get(h, 0)

    def row_sum(self, t: int) -> int:
        return sum(self.rows[t].values())

    def nodes(self):
        """Every lattice node ``(t, h)`` of the grid, row by row, top to bottom."""
        for t in range(self.max_t + 1):
            for h in range(t, -t - 1, -2):
                yield t, h

    def to_json(self) -> dict:
        # labels as decimal strings, heights descending, so the output is stable
        return {
            "max_t": self.max_t,
            "rows": [
                {"t": t, "labels": {str(h): str(self.rows[t].get(h, 0)) for h in range(t, -t - 1, -2)}}
                for t in range(self.max_t + 1)
            ],
        }


def grid(max_t: int, cap: int | None = None) -> TriangleGrid:
    cap = _caps.current().triangle if cap is None else cap
    _caps.check("triangle columns", max_t, cap)
    rows = [{0: 1}]
    for t in range(1, max_t + 1):
        prev = rows[-1]
        row = {}
        for h in range(-t, t + 1, 2):
            row[h] = 0 if forbidden(t, h) else prev.get(h - 1, 0) + prev.get(h + 1, 0)
        rows.append(row)
    return TriangleGrid(max_t, tuple(rows))


def triangle(N: int, cap: int | None = None) -> TriangleGrid:
    """Grid through column ``4N``."""
    return grid(4 * N, cap)
