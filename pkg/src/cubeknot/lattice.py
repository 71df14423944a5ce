"""Discrete encodings of cubic knots.

A cubic knot is a closed, self-avoiding path in the edges of the unit cubic
lattice.  Two encodings are supported:

* a cyclic sequence of lattice points ``(v_0, ..., v_{n-1})`` where each point
  is joined to the next (and the last to the first) by a unit edge, and
* an *anchored word*: the first vertex plus the cyclic word of unit step
  directions over the six letters ``X+ X- Y+ Y- Z+ Z-``.

Lattice points are plain ``(x, y, z)`` integer tuples.  All values are
immutable.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence, Tuple

from .errors import (NonUnitStep, NotClosed, ParseError, RepeatedVertex,
                     TooLong, TooShort)

Point = Tuple[int, int, int]

#: Upper bound on the number of vertices accepted by the constructors.
MAX_VERTICES = 10 ** 6


class Direction(IntEnum):
    """One of the six unit steps.

    The integer values fix the letter order ``X+ < X- < Y+ < Y- < Z+ < Z-``
    used for canonical forms.
    """
    XP = 0
    XM = 1
    YP = 2
    YM = 3
    ZP = 4
    ZM = 5

    @property
    def axis(self) -> int:
        """Coordinate axis, 1, 2 or 3."""
        return (self >> 1) + 1

    @property
    def orientation(self) -> int:
        return -1 if self & 1 else 1

    @property
    def vector(self) -> Point:
        return _VECTORS[self]

    @property
    def token(self) -> str:
        return _TOKENS[self]

    def __neg__(self):
        return Direction(self ^ 1)

    def perpendicular(self, other) -> bool:
        return (self >> 1) != (other >> 1)

    @classmethod
    def from_token(cls, token: str) -> "Direction":
        try:
            return cls(_TOKENS.index(token))
        except ValueError:
            raise ValueError(f"unknown direction token {token!r}") from None

    @classmethod
    def from_vector(cls, vec) -> "Direction":
        return cls(_STEP_INDEX[tuple(vec)])

    def __str__(self):
        return self.token


_TOKENS = ("X+", "X-", "Y+", "Y-", "Z+", "Z-")
_VECTORS = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))
_STEP_INDEX = {v: i for i, v in enumerate(_VECTORS)}

XP, XM, YP, YM, ZP, ZM = Direction


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


class CubicKnot:
    """A validated cubic knot, stored as its cyclic vertex sequence.

    The stored order is the orientation and ``vertices[0]`` is the anchor.
    Use :func:`from_vertices` or :func:`from_anchored_word` to build one.
    """

    __slots__ = ("_vertices", "_word", "_vertex_set")

    def __init__(self, vertices: Iterable[Sequence[int]]):
        knot = from_vertices(vertices)
        self._vertices = knot._vertices
        self._word = knot._word
        self._vertex_set = None

    @classmethod
    def _trusted(cls, vertices, word=None):
        # Skips validation; callers guarantee the invariants.
        obj = object.__new__(cls)
        obj._vertices = vertices
        obj._word = word
        obj._vertex_set = None
        return obj

    @property
    def vertices(self) -> Tuple[Point, ...]:
        return self._vertices

    @property
    def anchor(self) -> Point:
        return self._vertices[0]

    @property
    def word(self) -> Tuple[Direction, ...]:
        if self._word is None:
            vs = self._vertices
            n = len(vs)
            self._word = tuple(
                Direction(_STEP_INDEX[sub(vs[(i + 1) % n], vs[i])])
                for i in range(n))
        return self._word

    @property
    def vertex_set(self) -> frozenset:
        if self._vertex_set is None:
            self._vertex_set = frozenset(self._vertices)
        return self._vertex_set

    def __len__(self):
        return len(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, CubicKnot):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self):
        return hash(self._vertices)

    def __repr__(self):
        return f"CubicKnot(n={len(self)}, anchor={self.anchor}, word={format_tokens(self.word)!r})"

    def translate(self, t: Point) -> "CubicKnot":
        return CubicKnot._trusted(tuple(add(v, t) for v in self._vertices), self._word)

    def reversed(self) -> "CubicKnot":
        """Same anchor, opposite orientation."""
        vs = self._vertices
        return CubicKnot._trusted((vs[0],) + tuple(reversed(vs[1:])))

    def rotated(self, k: int) -> "CubicKnot":
        """Re-anchor at vertex ``k`` (same cycle, same orientation)."""
        k %= len(self)
        vs = self._vertices
        word = None if self._word is None else self._word[k:] + self._word[:k]
        return CubicKnot._trusted(vs[k:] + vs[:k], word)

    def extents(self) -> Point:
        """Bounding-box side lengths along x, y, z."""
        return tuple(max(v[a] for v in self._vertices) - min(v[a] for v in self._vertices)
                     for a in range(3))

    def axis_counts(self):
        """``{Direction: count}`` over the word."""
        counts = dict.fromkeys(Direction, 0)
        for d in self.word:
            counts[d] += 1
        return counts


@dataclass(frozen=True)
class AnchoredWord:
    anchor: Point
    word: Tuple[Direction, ...]

    def __post_init__(self):
        object.__setattr__(self, "anchor", tuple(int(c) for c in self.anchor))
        object.__setattr__(self, "word", tuple(Direction(d) for d in self.word))

    def __len__(self):
        return len(self.word)


@dataclass(frozen=True)
class CanonicalForm:
    """Translation- and rotation-free representative of a knot.

    ``word`` is the lexicographically least rotation (and, when ``oriented``
    is false, also least over the reversed-and-negated word).  The anchor is
    the origin.
    """
    word: Tuple[Direction, ...]
    oriented: bool = True

    def to_knot(self) -> CubicKnot:
        return from_anchored_word(AnchoredWord((0, 0, 0), self.word))

    def __str__(self):
        return format_tokens(self.word)


def _check_length(n, max_vertices):
    if n < 4:
        raise TooShort(n)
    if n > max_vertices:
        raise TooLong(n, max_vertices)


def from_vertices(pts: Iterable[Sequence[int]], max_vertices: int = MAX_VERTICES) -> CubicKnot:
    """Validate a cyclic vertex sequence and wrap it as a :class:`CubicKnot`."""
    vs = tuple((int(p[0]), int(p[1]), int(p[2])) for p in pts)
    n = len(vs)
    _check_length(n, max_vertices)
    word = []
    for i in range(n):
        step = sub(vs[(i + 1) % n], vs[i])
        d = _STEP_INDEX.get(step)
        if d is None:
            raise NonUnitStep(i)
        word.append(Direction(d))
    _check_distinct(vs)
    return CubicKnot._trusted(vs, tuple(word))


def _check_distinct(vs):
    seen = {}
    for j, v in enumerate(vs):
        i = seen.setdefault(v, j)
        if i != j:
            raise RepeatedVertex(i, j)


def to_anchored_word(k: CubicKnot) -> AnchoredWord:
    return AnchoredWord(k.anchor, k.word)


def from_anchored_word(w: AnchoredWord, max_vertices: int = MAX_VERTICES) -> CubicKnot:
    """Rebuild the vertex cycle from partial sums of the word."""
    word = tuple(Direction(d) for d in w.word)
    n = len(word)
    _check_length(n, max_vertices)
    x, y, z = w.anchor
    vs = []
    for d in word:
        vs.append((x, y, z))
        dx, dy, dz = _VECTORS[d]
        x += dx
        y += dy
        z += dz
    if (x, y, z) != tuple(w.anchor):
        raise NotClosed(sub((x, y, z), w.anchor))
    _check_distinct(vs)
    return CubicKnot._trusted(tuple(vs), word)


def walk(anchor: Point, word: Sequence[int]) -> Tuple[Point, ...]:
    """Partial sums of ``word`` starting at ``anchor`` (no validation)."""
    x, y, z = anchor
    out = []
    for d in word:
        out.append((x, y, z))
        dx, dy, dz = _VECTORS[d]
        x += dx
        y += dy
        z += dz
    return tuple(out)


# -- canonical forms ---------------------------------------------------------

def least_rotation(seq: Sequence) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    s = list(seq) * 2
    n = len(seq)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n if n else 0


def min_rotation(seq: Sequence) -> tuple:
    k = least_rotation(seq)
    return tuple(seq[k:]) + tuple(seq[:k])


def reverse_word(word: Sequence[int]) -> tuple:
    """Word of the same cycle traversed backwards."""
    return tuple(d ^ 1 for d in reversed(word))


def canonical_word(word: Sequence[int], oriented: bool = True) -> tuple:
    """Canonical representative of a cyclic word as a tuple of ints."""
    best = min_rotation(tuple(int(d) for d in word))
    if not oriented:
        other = min_rotation(reverse_word(word))
        if other < best:
            best = other
    return best


def canonical_form(k: CubicKnot, oriented: bool = True) -> CanonicalForm:
    word = canonical_word(k.word, oriented)
    return CanonicalForm(tuple(Direction(d) for d in word), oriented)


def equivalent_as_anchored(k1: AnchoredWord, k2: AnchoredWord) -> bool:
    """True when some translation ``x -> x + b - v`` carries the vertex cycle
    of ``k1`` onto that of ``k2`` with the same cyclic order.

    This is equality of representations, not isotopy.
    """
    if len(k1) != len(k2):
        return False
    return min_rotation(tuple(k1.word)) == min_rotation(tuple(k2.word))


# -- text formats ------------------------------------------------------------

def format_tokens(word: Iterable[int]) -> str:
    return " ".join(_TOKENS[d] for d in word)


def parse_tokens(line: str, lineno=None) -> Tuple[Direction, ...]:
    try:
        return tuple(Direction.from_token(t) for t in line.split())
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_triple(fields, lineno):
    if len(fields) != 3:
        raise ParseError(f"expected 3 integers, got {len(fields)} fields", lineno)
    try:
        return tuple(int(f) for f in fields)
    except ValueError:
        raise ParseError(f"non-integer coordinate in {' '.join(fields)!r}", lineno) from None


def parse_vertices(text: str) -> CubicKnot:
    pts = [_parse_triple(line.split(), lineno) for lineno, line in _content_lines(text)]
    return from_vertices(pts)


def format_vertices(k: CubicKnot) -> str:
    return "".join(f"{x} {y} {z}\n" for x, y, z in k.vertices)


def parse_word(text: str) -> AnchoredWord:
    lines = list(_content_lines(text))
    if len(lines) != 2:
        raise ParseError(f"word format needs 2 content lines, got {len(lines)}")
    (ln1, head), (ln2, body) = lines
    fields = head.split()
    if not fields or fields[0] != "anchor":
        raise ParseError("first line must start with 'anchor'", ln1)
    return AnchoredWord(_parse_triple(fields[1:], ln1), parse_tokens(body, ln2))


def format_word(w: AnchoredWord) -> str:
    x, y, z = w.anchor
    return f"anchor {x} {y} {z}\n{format_tokens(w.word)}\n"


def parse_knot(text: str) -> CubicKnot:
    """Read either text format, telling them apart by the ``anchor`` keyword."""
    for _, line in _content_lines(text):
        if line.split()[0] == "anchor":
            return from_anchored_word(parse_word(text))
        break
    return parse_vertices(text)
