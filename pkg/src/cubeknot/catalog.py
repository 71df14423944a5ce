"""Built-in cubic knots.

The trefoil and figure-eight were found by snapping a parametric curve to
the lattice and shortening it with M2 moves (random walks, then a bounded
breadth-first search), which never change the
knot type; their Jones polynomials identify them.  24 edges is the known
minimum for a trefoil on the cubic lattice.
"""

from dataclasses import dataclass
from typing import Dict

from .lattice import CubicKnot, from_vertices


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    knot: CubicKnot
    note: str


_RAW = {
    "unknot4": (
        [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)],
        "unit square"),
    "unknot12": (
        [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 1), (2, 2, 1),
         (2, 2, 2), (1, 2, 2), (0, 2, 2), (0, 1, 2), (0, 0, 2), (0, 0, 1)],
        "staircase X+ Y+ Z+ X+ Y+ Z+ back along X- X- Y- Y- Z- Z-"),
    "trefoil24": (
        [(0, 0, 2), (0, 0, 1), (1, 0, 1), (1, 1, 1), (1, 2, 1), (0, 2, 1),
         (-1, 2, 1), (-1, 1, 1), (-1, 0, 1), (-1, -1, 1), (0, -1, 1), (0, -1, 2),
         (1, -1, 2), (1, 0, 2), (1, 1, 2), (0, 1, 2), (0, 1, 1), (0, 1, 0),
         (-1, 1, 0), (-2, 1, 0), (-2, 0, 0), (-2, 0, 1), (-2, 0, 2), (-1, 0, 2)],
        "minimal-length lattice trefoil (left-handed), 3 crossings in projection"),
    "fig8": (
        [(0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0), (3, -1, 0), (3, -2, 0), (2, -2, 0),
         (1, -2, 0), (1, -2, 1), (1, -1, 1), (1, 0, 1), (1, 1, 1), (0, 1, 1), (-1, 1, 1),
         (-1, 0, 1), (-1, -1, 1), (-1, -2, 1), (0, -2, 1), (0, -3, 1), (1, -3, 1),
         (2, -3, 1), (2, -2, 1), (2, -1, 1), (2, -1, 0), (2, -1, -1), (2, 0, -1),
         (2, 1, -1), (2, 1, 0), (2, 1, 1), (2, 1, 2), (1, 1, 2), (0, 1, 2), (0, 0, 2),
         (0, 0, 1)],
        "lattice figure-eight, 4 crossings in projection"),
}


def _build() -> Dict[str, CatalogEntry]:
    out = {}
    for name, (pts, note) in _RAW.items():
        out[name] = CatalogEntry(name, from_vertices(pts), note)
    return out


CATALOG = _build()


def get(name: str) -> CubicKnot:
    try:
        return CATALOG[name].knot
    except KeyError:
        raise KeyError(f"no catalog entry {name!r}; have {', '.join(CATALOG)}") from None


def names():
    return list(CATALOG)
