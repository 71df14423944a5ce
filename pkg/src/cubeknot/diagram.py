"""Regular diagrams of cubic knots under the projection along (1, pi, pi^2).

Conventions (ours; fixed so that output is reproducible):

* the viewer sits at ``+infinity * N``, so the strand with larger ``<x, N>``
  is over;
* a crossing is positive when the over tangent turns counterclockwise onto
  the under tangent as seen by that viewer (right-handed);
* traversal starts at the anchor vertex and follows the stored orientation;
  crossing ids are assigned in order of first encounter, starting at 1;
* PD tuples list arcs counterclockwise starting from the incoming under arc,
  with arcs labelled ``1..2c`` in traversal order.
"""

import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import cmp_to_key
from math import pi as _pi, sqrt
from typing import List, Tuple

from .errors import DegenerateDiagram, ParseError
from .lattice import CubicKnot
from .qpi import (Cross, Over, PiPoly, ProjectedSegment, cross_n,
                  crossing_parameters, over_under, pi_decimal,
                  segments_cross, sign)


@dataclass(frozen=True)
class EdgeParam:
    """Exact fraction ``num / den`` of the way along an edge."""
    num: PiPoly
    den: PiPoly

    def compare(self, other) -> int:
        cross = self.num * other.den - other.num * self.den
        return sign(cross) * sign(self.den) * sign(other.den)

    def __lt__(self, other):
        return self.compare(other) < 0

    def value(self, digits=17) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 5
            return self.num.evaluate(digits + 5) / self.den.evaluate(digits + 5)


@dataclass(frozen=True)
class Crossing:
    id: int
    over: Tuple[int, EdgeParam]
    under: Tuple[int, EdgeParam]
    sign: int


@dataclass(frozen=True)
class Passage:
    crossing: int
    over: bool
    edge: int
    param: EdgeParam


@dataclass(frozen=True)
class KnotDiagram:
    knot: CubicKnot
    crossings: Tuple[Crossing, ...]
    passages: Tuple[Passage, ...]

    def __len__(self):
        return len(self.crossings)


def _basis_floats():
    n = (1.0, _pi, _pi * _pi)
    u = (_pi, -1.0, 0.0)
    v = (n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0])
    nu = sqrt(sum(c * c for c in u))
    nv = sqrt(sum(c * c for c in v))
    return tuple(c / nu for c in u), tuple(c / nv for c in v)


_U, _V = _basis_floats()


def _boxes(vs):
    """Float bounding boxes of projected edges, padded far beyond rounding error."""
    pts = [(x * _U[0] + y * _U[1], x * _V[0] + y * _V[1] + z * _V[2]) for x, y, z in vs]
    n = len(pts)
    out = []
    for i in range(n):
        (a0, a1), (b0, b1) = pts[i], pts[(i + 1) % n]
        pad = 1e-6 * (1.0 + abs(a0) + abs(a1))
        out.append((min(a0, b0) - pad, max(a0, b0) + pad, min(a1, b1) - pad, max(a1, b1) + pad))
    return out


def build_diagram(k: CubicKnot) -> KnotDiagram:
    """Find every crossing of the projected knot and order the passages.

    All decisions are exact; the float bounding-box test only discards pairs
    whose boxes are separated by far more than any rounding error.
    """
    vs = k.vertices
    n = len(vs)
    segs = [ProjectedSegment.from_edge(vs[i], vs[(i + 1) % n], i) for i in range(n)]
    boxes = _boxes(vs)
    found = []
    for i in range(n):
        bi = boxes[i]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            bj = boxes[j]
            if bi[1] < bj[0] or bj[1] < bi[0] or bi[3] < bj[2] or bj[3] < bi[2]:
                continue
            kind = segments_cross(segs[i], segs[j])
            if kind is Cross.NONE:
                continue
            if kind is Cross.DEGENERATE:
                raise DegenerateDiagram(i, j)
            (tn, td), (sn, sd) = crossing_parameters(segs[i], segs[j])
            pi_, pj = EdgeParam(tn, td), EdgeParam(sn, sd)
            if over_under(segs[i], segs[j]) is Over.FIRST:
                over, under = (i, pi_), (j, pj)
            else:
                over, under = (j, pj), (i, pi_)
            s = sign(cross_n(segs[over[0]].direction, segs[under[0]].direction))
            found.append((over, under, s))
    return _assemble(k, found)


def _assemble(k, found):
    per_edge = {}
    for idx, (over, under, s) in enumerate(found):
        per_edge.setdefault(over[0], []).append((over[1], idx, True))
        per_edge.setdefault(under[0], []).append((under[1], idx, False))
    order = []
    for e in sorted(per_edge):
        items = per_edge[e]
        items.sort(key=cmp_to_key(lambda a, b: a[0].compare(b[0])))
        for param, idx, is_over in items:
            order.append((idx, is_over, e, param))
    ids = {}
    for idx, _, _, _ in order:
        ids.setdefault(idx, len(ids) + 1)
    crossings = sorted((Crossing(ids[idx], over, under, s) for idx, (over, under, s) in enumerate(found)),
                       key=lambda c: c.id)
    passages = tuple(Passage(ids[idx], is_over, e, param) for idx, is_over, e, param in order)
    return KnotDiagram(k, tuple(crossings), passages)


# -- codes -------------------------------------------------------------------

def gauss_code(d: KnotDiagram) -> List[str]:
    """Signed Gauss code, e.g. ``['O1+', 'U2-', ...]``."""
    signs = {c.id: c.sign for c in d.crossings}
    return [f"{'O' if p.over else 'U'}{p.crossing}{'+' if signs[p.crossing] > 0 else '-'}"
            for p in d.passages]


def format_gauss(tokens) -> str:
    return " ".join(tokens)


_GAUSS_TOKEN = re.compile(r"^([OU])(\d+)([+-])$")


def parse_gauss(text: str) -> List[str]:
    tokens = text.split()
    for t in tokens:
        if not _GAUSS_TOKEN.match(t):
            raise ParseError(f"bad Gauss token {t!r}")
    return tokens


def pd_code(d: KnotDiagram) -> List[Tuple[int, int, int, int]]:
    """PD code ``(incoming under, right, outgoing under, left)`` per crossing."""
    m = len(d.passages)
    where = {}
    for k, p in enumerate(d.passages):
        where[(p.crossing, p.over)] = k
    out = []
    for c in d.crossings:
        ku, ko = where[(c.id, False)], where[(c.id, True)]
        u_in, u_out = ku + 1, (ku + 1) % m + 1
        o_in, o_out = ko + 1, (ko + 1) % m + 1
        if c.sign > 0:
            out.append((u_in, o_out, u_out, o_in))
        else:
            out.append((u_in, o_in, u_out, o_out))
    return out


def format_pd(code) -> str:
    return "".join(f"X({a},{b},{c},{e})\n" for a, b, c, e in code)


_PD_LINE = re.compile(r"^X\((-?\d+),(-?\d+),(-?\d+),(-?\d+)\)$")


def parse_pd(text: str) -> List[Tuple[int, int, int, int]]:
    code = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.replace(" ", "")
        if not line:
            continue
        m = _PD_LINE.match(line)
        if not m:
            raise ParseError(f"bad PD line {raw!r}", lineno)
        code.append(tuple(int(g) for g in m.groups()))
    return code


def writhe(d: KnotDiagram) -> int:
    return sum(c.sign for c in d.crossings)


# -- plot export --------------------------------------------------------------

def _basis_decimal(digits):
    pi = pi_decimal(digits)
    with localcontext() as ctx:
        ctx.prec = digits
        u = (pi, Decimal(-1), Decimal(0))
        v = (pi * pi, pi * pi * pi, -1 - pi * pi)
        nu = sum(c * c for c in u).sqrt()
        nv = sum(c * c for c in v).sqrt()
        return tuple(c / nu for c in u), tuple(c / nv for c in v)


def export_plot(d: KnotDiagram, precision: int = 17) -> str:
    """Planar coordinates of the diagram, for drawing only.

    Records: ``V x y`` per vertex in knot order, ``S i j`` per edge, and
    ``B id x y`` marking the break in the under strand at each crossing.
    Coordinates are in an orthonormal basis of the projection plane,
    oriented counterclockwise as seen from +N.  The numbers are rounded to
    ``precision`` significant digits; they are lossy.
    """
    work = precision + 10
    u, v = _basis_decimal(work)
    vs = d.knot.vertices
    n = len(vs)

    def coords(p):
        with localcontext() as ctx:
            ctx.prec = work
            return (sum(Decimal(c) * b for c, b in zip(p, u)),
                    sum(Decimal(c) * b for c, b in zip(p, v)))

    def fmt(x):
        with localcontext() as ctx:
            ctx.prec = precision
            x = +x
        if x == 0:
            x = Decimal(0)
        return f"{x:.{precision}g}"

    lines = []
    for p in vs:
        x, y = coords(p)
        lines.append(f"V {fmt(x)} {fmt(y)}")
    lines.extend(f"S {i} {(i + 1) % n}" for i in range(n))
    for c in d.crossings:
        e, param = c.under
        t = param.value(work)
        a, b = vs[e], vs[(e + 1) % n]
        with localcontext() as ctx:
            ctx.prec = work
            ax, ay = coords(a)
            bx, by = coords(b)
            x, y = ax + t * (bx - ax), ay + t * (by - ay)
        lines.append(f"B {c.id} {fmt(x)} {fmt(y)}")
    return "\n".join(lines) + "\n"


def edge_pairs_crossing(k: CubicKnot):
    """Set of ``(edge_i, edge_j)`` pairs, ``i < j``, whose projections cross."""
    d = build_diagram(k)
    return sorted(tuple(sorted((c.over[0], c.under[0]))) for c in d.crossings)

