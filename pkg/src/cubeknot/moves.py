"""Cubulated moves as exact rewrites of anchored words.

``M1`` subdivides every edge into ``m`` unit edges.  Rather than shrinking
the edges to length ``1/m`` we scale the whole knot by ``m`` so that all
coordinates stay integral; the two pictures differ by a global homothety.

``M2`` replaces an arc of a unit square face by the complementary arc.  On
the word it takes three shapes:

``1to3``  ``(..., d', ...)        -> (..., d, d', -d, ...)``   (push out a bump)
``3to1``  ``(..., d, d', -d, ...) -> (..., d', ...)``          (flatten a bump)
``swap``  ``(..., a, b, ...)      -> (..., b, a, ...)``        (flip a corner)

Positions index the word of the knot the move is applied to and are taken
cyclically, so a pattern may straddle the anchor.  When the anchor vertex is
removed or moved the result is re-anchored: a flattened bump keeps the
remaining letters in their linear order and starts at the first surviving
letter, and a corner flip at the last position moves the anchor to the new
corner.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from typing import List, Optional, Sequence, Tuple, Union

from .errors import (BadFactor, NotApplicable, ParseError, StepFailed,
                     TooShortResult, VertexCollision)
from .lattice import (AnchoredWord, CubicKnot, Direction, _VECTORS, add,
                      canonical_form, format_word, from_anchored_word,
                      parse_word, to_anchored_word)


class M2Case(IntEnum):
    ONE_TO_THREE = 0
    THREE_TO_ONE = 1
    TWO_SWAP = 2

    @property
    def token(self):
        return ("1to3", "3to1", "swap")[self]

    @classmethod
    def from_token(cls, token):
        try:
            return cls(("1to3", "3to1", "swap").index(token))
        except ValueError:
            raise ValueError(f"unknown M2 case {token!r}") from None


ONE_TO_THREE, THREE_TO_ONE, TWO_SWAP = M2Case


@dataclass(frozen=True)
class MoveM1:
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise BadFactor(self.m)

    def __str__(self):
        return f"M1 {self.m}"


@dataclass(frozen=True, order=True)
class MoveM2:
    case: M2Case
    position: int
    bump: Optional[Direction] = None

    def __post_init__(self):
        object.__setattr__(self, "case", M2Case(self.case))
        if self.case == ONE_TO_THREE:
            if self.bump is None:
                raise ValueError("1to3 moves need a bump direction")
            object.__setattr__(self, "bump", Direction(self.bump))
        elif self.bump is not None:
            raise ValueError(f"{self.case.token} moves take no bump direction")

    def __str__(self):
        s = f"M2 {self.case.token} {self.position}"
        return s + f" {self.bump.token}" if self.bump is not None else s


Move = Union[MoveM1, MoveM2]


@dataclass(frozen=True)
class MoveCertificate:
    start: AnchoredWord
    steps: Tuple[Move, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self):
        return len(self.steps)


# -- M1 ----------------------------------------------------------------------

def apply_m1(k: CubicKnot, m: int) -> CubicKnot:
    """Subdivide every edge into ``m`` unit edges (knot scaled by ``m``)."""
    if m < 2:
        raise BadFactor(m)
    out = []
    for v, d in zip(k.vertices, k.word):
        base = (m * v[0], m * v[1], m * v[2])
        dx, dy, dz = _VECTORS[d]
        out.extend((base[0] + j * dx, base[1] + j * dy, base[2] + j * dz) for j in range(m))
    word = tuple(d for d in k.word for _ in range(m))
    return CubicKnot._trusted(tuple(out), word)


# -- M2 kernels on raw (vertices, word) ---------------------------------------

def _one_to_three(vs, word, occupied, p, d):
    n = len(word)
    dp = word[p]
    if (d >> 1) == (dp >> 1):
        raise NotApplicable(f"bump {Direction(d).token} is not perpendicular to edge {p}")
    step = _VECTORS[d]
    a = add(vs[p], step)
    if a in occupied:
        raise VertexCollision(a)
    b = add(vs[(p + 1) % n], step)
    if b in occupied:
        raise VertexCollision(b)
    return (vs[:p + 1] + (a, b) + vs[p + 1:],
            word[:p] + (Direction(d), dp, Direction(d ^ 1)) + word[p + 1:])


def _three_to_one(vs, word, p):
    n = len(word)
    a, b, c = word[p], word[(p + 1) % n], word[(p + 2) % n]
    if c != a ^ 1 or (a >> 1) == (b >> 1):
        raise NotApplicable(f"no (d, d', -d) pattern at position {p}")
    if n - 2 < 4:
        raise TooShortResult()
    gone = (p, (p + 2) % n)
    new_word = tuple(w for i, w in enumerate(word) if i not in gone)
    dropped = ((p + 1) % n, (p + 2) % n)
    new_vs = tuple(v for i, v in enumerate(vs) if i not in dropped)
    if p == n - 1:
        # the surviving middle letter now leads the word; it starts at v_{n-1}
        new_vs = new_vs[-1:] + new_vs[:-1]
    return new_vs, new_word


def _two_swap(vs, word, occupied, p):
    n = len(word)
    q = (p + 1) % n
    a, b = word[p], word[q]
    if (a >> 1) == (b >> 1):
        raise NotApplicable(f"edges {p} and {q} are not perpendicular")
    u = add(vs[p], _VECTORS[b])
    if u in occupied:
        raise VertexCollision(u)
    vs = list(vs)
    vs[q] = u
    word = list(word)
    word[p], word[q] = b, a
    return tuple(vs), tuple(word)


def _apply_raw(vs, word, occupied, mv):
    n = len(word)
    if not 0 <= mv.position < n:
        raise NotApplicable(f"position {mv.position} out of range for {n} edges")
    if mv.case == ONE_TO_THREE:
        return _one_to_three(vs, word, occupied, mv.position, mv.bump)
    if mv.case == THREE_TO_ONE:
        return _three_to_one(vs, word, mv.position)
    return _two_swap(vs, word, occupied, mv.position)


def neighbors(vs, word, occupied):
    """Yield ``(move, vertices, word)`` for every applicable M2 move.

    Order is by case, then position, then bump letter.  This is the inner
    loop of the search, so it works on raw tuples.
    """
    n = len(word)
    for p in range(n):
        dp = word[p]
        va = vs[p]
        vb = vs[(p + 1) % n]
        for d in Direction:
            if (d >> 1) == (dp >> 1):
                continue
            sx, sy, sz = _VECTORS[d]
            a = (va[0] + sx, va[1] + sy, va[2] + sz)
            if a in occupied:
                continue
            b = (vb[0] + sx, vb[1] + sy, vb[2] + sz)
            if b in occupied:
                continue
            yield (MoveM2(ONE_TO_THREE, p, d), vs[:p + 1] + (a, b) + vs[p + 1:],
                   word[:p] + (d, dp, Direction(d ^ 1)) + word[p + 1:])
    if n >= 6:
        for p in range(n):
            a, b, c = word[p], word[(p + 1) % n], word[(p + 2) % n]
            if c == a ^ 1 and (a >> 1) != (b >> 1):
                new_vs, new_word = _three_to_one(vs, word, p)
                yield MoveM2(THREE_TO_ONE, p), new_vs, new_word
    for p in range(n):
        q = (p + 1) % n
        a, b = word[p], word[q]
        if (a >> 1) == (b >> 1):
            continue
        bx, by, bz = _VECTORS[b]
        va = vs[p]
        u = (va[0] + bx, va[1] + by, va[2] + bz)
        if u in occupied:
            continue
        new_vs = list(vs)
        new_vs[q] = u
        new_word = list(word)
        new_word[p], new_word[q] = b, a
        yield MoveM2(TWO_SWAP, p), tuple(new_vs), tuple(new_word)


def enumerate_m2(k: CubicKnot) -> List[MoveM2]:
    """All M2 moves applicable to ``k``, in (case, position, bump) order.

    A bump is listed only if both new corners are free, a corner flip only if
    the new corner is free, and a flattening only if at least 4 edges remain.
    """
    return [mv for mv, _, _ in neighbors(k.vertices, k.word, k.vertex_set)]


def apply_m2(k: CubicKnot, mv: MoveM2) -> CubicKnot:
    vs, word = _apply_raw(k.vertices, k.word, k.vertex_set, mv)
    return CubicKnot._trusted(vs, word)


def apply_move(k: CubicKnot, mv: Move) -> CubicKnot:
    if isinstance(mv, MoveM1):
        return apply_m1(k, mv.m)
    return apply_m2(k, mv)


def track_position(mv: MoveM2, n: int, i: int) -> Optional[int]:
    """Where word position ``i`` of an ``n``-edge knot lands after ``mv``.

    Returns None for letters the move deletes.  Inserted letters have no
    preimage.
    """
    p = mv.position
    if mv.case == TWO_SWAP:
        q = (p + 1) % n
        return q if i == p else p if i == q else i
    if mv.case == ONE_TO_THREE:
        if i < p:
            return i
        return i + 1 if i == p else i + 2
    gone = (p, (p + 2) % n)
    if i in gone:
        return None
    return i - sum(1 for g in gone if g < i)


def invert(mv: MoveM2, k: CubicKnot) -> MoveM2:
    """The move that undoes ``mv`` on ``apply_m2(k, mv)``."""
    apply_m2(k, mv)  # raises if mv is not applicable
    if mv.case == ONE_TO_THREE:
        return MoveM2(THREE_TO_ONE, mv.position)
    if mv.case == TWO_SWAP:
        return mv
    n = len(k)
    middle = track_position(mv, n, (mv.position + 1) % n)
    return MoveM2(ONE_TO_THREE, middle, k.word[mv.position])


def lift(mv: MoveM2, k: CubicKnot, m: int) -> List[MoveM2]:
    """M2 moves on ``apply_m1(k, m)`` that realise ``mv`` at scale ``m``.

    A unit face move becomes an ``m x m`` face move, which is swept out by
    unit moves one row at a time.
    """
    apply_m2(k, mv)
    if m < 2:
        raise BadFactor(m)
    n = len(k)
    N = n * m
    s = mv.position * m
    moves = []
    if mv.case == TWO_SWAP:
        # a^m b^m -> b^m a^m by adjacent transpositions
        for j in range(m):
            for q in range(s + m + j - 1, s + j - 1, -1):
                moves.append(MoveM2(TWO_SWAP, q % N))
    elif mv.case == ONE_TO_THREE:
        # d^(r-1) d'^m (-d)^(r-1) -> d^r d'^m (-d)^r, starting at s
        for r in range(1, m + 1):
            moves.append(MoveM2(ONE_TO_THREE, s + r - 1, mv.bump))
            for q in range(s + r + 1, s + r + m):
                moves.append(MoveM2(TWO_SWAP, q))
    else:
        # d^r d'^m (-d)^r -> d^(r-1) d'^m (-d)^(r-1), the block may wrap
        length = N
        for r in range(m, 0, -1):
            for q in range(s + r + m - 1, s + r, -1):
                moves.append(MoveM2(TWO_SWAP, q % length))
            flat = MoveM2(THREE_TO_ONE, (s + r - 1) % length)
            moves.append(flat)
            s = track_position(flat, length, s % length) if r > 1 else s
            length -= 2
    return moves


# -- certificates ------------------------------------------------------------

def replay(cert: MoveCertificate) -> CubicKnot:
    """Apply the steps in order; :class:`StepFailed` names the first bad one."""
    k = from_anchored_word(cert.start)
    for i, mv in enumerate(cert.steps):
        try:
            k = apply_move(k, mv)
        except (ValueError, IndexError) as exc:
            raise StepFailed(i, exc) from exc
    return k


def check_undo(k: CubicKnot, mv: MoveM2) -> bool:
    """Apply ``mv`` then its inverse; compare canonical forms."""
    there = apply_m2(k, mv)
    back = apply_m2(there, invert(mv, k))
    return canonical_form(back) == canonical_form(k)


def parse_move(text: str, lineno=None) -> Move:
    fields = text.split()
    try:
        if fields[0] == "M1" and len(fields) == 2:
            return MoveM1(int(fields[1]))
        if fields[0] == "M2" and len(fields) in (3, 4):
            case = M2Case.from_token(fields[1])
            bump = Direction.from_token(fields[3]) if len(fields) == 4 else None
            return MoveM2(case, int(fields[2]), bump)
    except (ValueError, IndexError) as exc:
        raise ParseError(f"bad move {text!r}: {exc}", lineno) from None
    raise ParseError(f"bad move {text!r}", lineno)


def format_certificate(cert: MoveCertificate, footer: Sequence[str] = ()) -> str:
    lines = [format_word(cert.start)]
    lines.extend(f"{mv}\n" for mv in cert.steps)
    lines.extend(f"# {line}\n" for line in footer)
    return "".join(lines)


def parse_certificate(text: str) -> MoveCertificate:
    content = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            content.append((lineno, line))
    if len(content) < 2:
        raise ParseError("certificate needs an anchored-word header")
    start = parse_word("\n".join(line for _, line in content[:2]))
    steps = tuple(parse_move(line, lineno) for lineno, line in content[2:])
    return MoveCertificate(start, steps)


def certificate_for(k: CubicKnot, steps: Sequence[Move] = ()) -> MoveCertificate:
    return MoveCertificate(to_anchored_word(k), tuple(steps))
