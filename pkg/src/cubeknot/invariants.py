"""Knot invariants computed from a diagram's PD code.

Every function accepts a :class:`~cubeknot.diagram.KnotDiagram` or a bare PD
code (list of 4-tuples), so hand-written diagrams can be fed in directly.

The Jones polynomial is kept in Kauffman's variable ``A``; the usual
variable is recovered with ``t = A**-4``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .diagram import KnotDiagram, pd_code, writhe as diagram_writhe
from .errors import ParseError, TooManyCrossings

#: Default limit on crossings for the 2^c state sum.
CROSSING_CAP = 20

_CHUNK_BITS = 14


class LaurentPoly:
    """Laurent polynomial in ``A`` with exact integer or rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self.terms: Dict[int, object] = {int(k): c for k, c in terms.items() if c != 0}

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({k: c * other for k, c in self.terms.items()})
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers only for monomials; use monomial()")
        out = LaurentPoly({0: 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mirror(self):
        """Substitute ``A -> 1/A``."""
        return LaurentPoly({-k: c for k, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


def format_laurent(p: LaurentPoly) -> str:
    """``c*A^k`` terms joined by `` + ``, highest exponent first.

    The constant term is written bare, so the unknot's polynomial is ``1``.
    """
    if not p.terms:
        return "0"
    return " + ".join(f"{c}*A^{k}" if k else f"{c}"
                      for k, c in sorted(p.terms.items(), reverse=True))


_TERM = re.compile(r"^(-?\d+(?:/\d+)?)(?:\*A\^(-?\d+))?$")


def parse_laurent(text: str) -> LaurentPoly:
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    terms = {}
    for chunk in text.split(" + "):
        m = _TERM.match(chunk.strip())
        if not m:
            raise ParseError(f"bad polynomial term {chunk!r}")
        c = Fraction(m.group(1))
        k = int(m.group(2) or 0)
        if k in terms:
            raise ParseError(f"repeated exponent {k}")
        terms[k] = int(c) if c.denominator == 1 else c
    return LaurentPoly(terms)


DELTA = LaurentPoly({2: -1, -2: -1})


def _as_pd(d) -> List[Tuple[int, int, int, int]]:
    if isinstance(d, KnotDiagram):
        return pd_code(d)
    return [tuple(x) for x in d]


def pd_writhe(pd: Sequence[Tuple[int, int, int, int]]) -> int:
    """Writhe read off labels: the over strand runs from its lower label up.

    Ambiguous when there are only two labels; pass the writhe explicitly then.
    """
    labels = {x for t in pd for x in t}
    m = len(labels)
    total = 0
    for a, b, c, d in pd:
        fwd = (b - d) % m == 1
        back = (d - b) % m == 1
        if fwd == back:
            raise ValueError(f"crossing {(a, b, c, d)} has no readable orientation")
        total += 1 if fwd else -1
    return total


# -- Fox colorings and determinant -------------------------------------------

def _arcs(pd):
    """Arc index for each PD label: labels on one over strand are merged."""
    labels = sorted({x for t in pd for x in t})
    parent = {x: x for x in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, b, _, d in pd:
        rb, rd = find(b), find(d)
        if rb != rd:
            parent[max(rb, rd)] = min(rb, rd)
    roots = sorted({find(x) for x in labels})
    index = {r: i for i, r in enumerate(roots)}
    return {x: index[find(x)] for x in labels}, len(roots)


def coloring_matrix(d) -> List[List[int]]:
    """Rows ``2*over - in - out`` per crossing, columns over arcs."""
    pd = _as_pd(d)
    if not pd:
        return []
    arc, n_arcs = _arcs(pd)
    rows = []
    for a, b, c, _ in pd:
        row = [0] * n_arcs
        row[arc[b]] += 2
        row[arc[a]] -= 1
        row[arc[c]] -= 1
        rows.append(row)
    return rows


def _rank_mod(rows, p):
    rows = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class Colorings:
    p: int
    count: int
    arcs: int
    rank: int

    @property
    def nontrivial(self) -> bool:
        """Some coloring uses more than one color."""
        return self.count > self.p


def colorings(d, p: int = 3) -> Colorings:
    """Number of Fox ``p``-colorings, ``p ** (arcs - rank mod p)``."""
    if p < 3 or p % 2 == 0 or any(p % q == 0 for q in range(3, int(p ** 0.5) + 1, 2)):
        raise ValueError(f"p must be an odd prime, got {p}")
    rows = coloring_matrix(d)
    if not rows:
        return Colorings(p, p, 1, 0)
    n_arcs = len(rows[0])
    rank = _rank_mod(rows, p)
    return Colorings(p, p ** (n_arcs - rank), n_arcs, rank)


def bareiss_det(m: List[List[int]]) -> int:
    """Integer determinant by fraction-free elimination."""
    m = [list(r) for r in m]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(d) -> int:
    """``|det|`` of the coloring matrix with one row and one column removed."""
    rows = coloring_matrix(d)
    if not rows:
        return 1
    if len(rows) != len(rows[0]):
        raise ValueError("coloring matrix is not square; not a knot diagram")
    minor = [r[:-1] for r in rows[:-1]]
    return abs(bareiss_det(minor))


# -- Kauffman bracket ----------------------------------------------------------

def _loop_counts(pairs_a, pairs_b, n_labels, states):
    """Number of loops for each state in ``states`` (bit i set = B at crossing i)."""
    S = len(states)
    c = pairs_a.shape[0]
    bits = ((states[:, None] >> np.arange(c)) & 1).astype(bool)
    # (S, c, 2, 2) chosen endpoint pairs per crossing
    chosen = np.where(bits[:, :, None, None], pairs_b[None], pairs_a[None])
    xs = chosen[:, :, :, 0].reshape(S, -1)
    ys = chosen[:, :, :, 1].reshape(S, -1)
    lab = np.tile(np.arange(n_labels, dtype=np.int32), (S, 1))
    rows = np.arange(S)[:, None]
    while True:
        lx = lab[rows, xs]
        ly = lab[rows, ys]
        low = np.minimum(lx, ly)
        new = lab.copy()
        np.minimum.at(new, (np.broadcast_to(rows, xs.shape), xs), low)
        np.minimum.at(new, (np.broadcast_to(rows, ys.shape), ys), low)
        new = np.take_along_axis(new, new, axis=1)
        if np.array_equal(new, lab):
            break
        lab = new
    return (lab == np.arange(n_labels)).sum(axis=1)


def kauffman_bracket(d, cap: int = CROSSING_CAP) -> LaurentPoly:
    """State sum ``sum_s A^(a(s) - b(s)) delta^(loops(s) - 1)``.

    For a crossing ``(a, b, c, d)`` the A-smoothing joins ``a-b`` and
    ``c-d``; the B-smoothing joins ``a-d`` and ``b-c``.  States are processed
    in chunks as numpy arrays; the result is exact.
    """
    pd = _as_pd(d)
    c = len(pd)
    if c > cap:
        raise TooManyCrossings(c, cap)
    if c == 0:
        return LaurentPoly({0: 1})
    labels = sorted({x for t in pd for x in t})
    idx = {x: i for i, x in enumerate(labels)}
    pa = np.array([[[idx[a], idx[b]], [idx[cc], idx[dd]]] for a, b, cc, dd in pd], dtype=np.int32)
    pb = np.array([[[idx[a], idx[dd]], [idx[b], idx[cc]]] for a, b, cc, dd in pd], dtype=np.int32)
    hist = {}
    total = 1 << c
    chunk = 1 << min(c, _CHUNK_BITS)
    for start in range(0, total, chunk):
        states = np.arange(start, min(start + chunk, total), dtype=np.int64)
        loops = _loop_counts(pa, pb, len(labels), states)
        nb = np.zeros(len(states), dtype=np.int64)
        for i in range(c):
            nb += (states >> i) & 1
        key = nb * (len(labels) + 1) + loops
        values, counts = np.unique(key, return_counts=True)
        for v, cnt in zip(values.tolist(), counts.tolist()):
            hist[v] = hist.get(v, 0) + cnt
    result = LaurentPoly()
    powers = {}
    for key, cnt in hist.items():
        b, loops = divmod(key, len(labels) + 1)
        if loops - 1 not in powers:
            powers[loops - 1] = DELTA ** (loops - 1)
        result = result + LaurentPoly.monomial(c - 2 * b, cnt) * powers[loops - 1]
    return result


def jones(d, cap: int = CROSSING_CAP, writhe: int = None) -> LaurentPoly:
    """Writhe-normalised bracket ``(-A^3)^(-w) <D>``."""
    if writhe is None:
        writhe = diagram_writhe(d) if isinstance(d, KnotDiagram) else pd_writhe(_as_pd(d))
    bracket = kauffman_bracket(d, cap)
    factor = LaurentPoly.monomial(-3 * writhe, -1 if writhe % 2 else 1)
    return factor * bracket


def jones_t(p: LaurentPoly) -> Dict[Fraction, object]:
    """Rewrite a polynomial in ``A`` in the variable ``t = A^-4``."""
    return {Fraction(-k, 4): c for k, c in p.terms.items()}
