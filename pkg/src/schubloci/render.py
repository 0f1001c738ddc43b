"""Plain-text pictures of diagrams.

Symbols: ``×`` marks (i, w(i)), ``■`` an essential cell, ``□`` any other
diagram cell, ``·`` an empty position.  Row i is line i, column j is the
j-th symbol.
"""

from __future__ import annotations

from .involution import involution_diagram
from .perms import Permutation, essential_set, rothe_diagram

CROSS, ESSENTIAL, CELL, EMPTY = "×", "■", "□", "·"


def diagram_cells(w: Permutation, flavor: str | None = None) -> frozenset:
    """D(w) for flavor None, D^O(w) or D^Sp(w) for "O" / "Sp"."""
    if flavor is None:
        return rothe_diagram(w)
    return involution_diagram(w, flavor)


def render_diagram(w: Permutation, flavor: str | None = None) -> str:
    cells = diagram_cells(w, flavor)
    ess = essential_set(cells)
    n = w.n
    lines = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if w(i) == j:
                row.append(CROSS)
            elif (i, j) in ess:
                row.append(ESSENTIAL)
            elif (i, j) in cells:
                row.append(CELL)
            else:
                row.append(EMPTY)
        lines.append(" ".join(row))
    return "\n".join(lines)
