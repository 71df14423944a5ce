"""Bounded search for move certificates.

States are canonical words (unoriented by default), so translates, rotations
of the starting vertex and, optionally, reversals of one knot collapse to a
single state.  The search is a layer-synchronous bidirectional BFS; the move
graph is undirected because every M2 move has an inverse M2 move.

A certificate is replayed on the caller's own anchored word, so it is
checkable without trusting anything here.  ``NotFound`` only means the
budget ran out.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .errors import StepFailed
from .lattice import (CanonicalForm, CubicKnot, canonical_word,
                      from_anchored_word, AnchoredWord, to_anchored_word)
from .moves import (MoveCertificate, MoveM1, apply_m1, apply_move, neighbors,
                    replay, THREE_TO_ONE)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchBudget:
    """Limits on the explored state space.

    ``max_length`` and ``bounding_box`` default to a little more than what
    the two endpoints need.  ``bounding_box`` bounds the side lengths of the
    axis-aligned box around a knot, so it is translation invariant.
    """
    max_states: int = 100_000
    max_length: Optional[int] = None
    bounding_box: Optional[Tuple[int, int, int]] = None
    allow_m1: bool = False
    m1_factors: Tuple[int, ...] = (2,)
    oriented: bool = False

    def __post_init__(self):
        if self.max_states <= 0:
            raise ValueError("max_states must be positive")
        if self.max_length is not None and self.max_length < 4:
            raise ValueError("max_length must be at least 4")
        if self.bounding_box is not None and any(b <= 0 for b in self.bounding_box):
            raise ValueError("bounding box extents must be positive")

    def resolved(self, *knots):
        length = self.max_length
        if length is None:
            length = max(len(k) for k in knots) + 4
        box = self.bounding_box
        if box is None:
            box = tuple(max(k.extents()[a] for k in knots) + 1 for a in range(3))
        return length, box


@dataclass
class SearchStats:
    states: int = 0
    expanded: int = 0
    depth: int = 0

    def lines(self):
        return [f"states {self.states}", f"expanded {self.expanded}", f"depth {self.depth}"]


@dataclass
class SearchResult:
    certificate: Optional[MoveCertificate]
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def found(self):
        return self.certificate is not None


def _within(vs, box):
    for a in range(3):
        lo = hi = vs[0][a]
        for v in vs:
            c = v[a]
            if c < lo:
                lo = c
            elif c > hi:
                hi = c
        if hi - lo > box[a]:
            return False
    return True


def _successors(state, oriented, max_length, box):
    """``(child_state)`` for every move out of a canonical state, in move order."""
    k = from_anchored_word(AnchoredWord((0, 0, 0), state))
    vs, word = k.vertices, k.word
    occupied = k.vertex_set
    for mv, nvs, nword in neighbors(vs, word, occupied):
        if len(nword) > max_length:
            continue
        if len(nword) > len(word) and not _within(nvs, box):
            continue
        yield canonical_word(nword, oriented)


def _path(parents, state):
    out = []
    while state is not None:
        out.append(state)
        state = parents[state]
    return out


def _realise(k1: CubicKnot, path, oriented, m1_roots):
    """Turn a path of canonical states into moves on ``k1``'s own word."""
    steps = []
    current = k1
    rest = path[1:]
    if path[0] in m1_roots:
        m = m1_roots[path[0]]
        steps.append(MoveM1(m))
        current = apply_m1(current, m)
    for target in rest:
        for mv, nvs, nword in neighbors(current.vertices, current.word, current.vertex_set):
            if canonical_word(nword, oriented) == target:
                steps.append(mv)
                current = CubicKnot._trusted(nvs, nword)
                break
        else:  # pragma: no cover - the state graph guarantees a move exists
            raise RuntimeError("no move realises a search edge")
    return MoveCertificate(to_anchored_word(k1), tuple(steps))


def find_certificate(k1: CubicKnot, k2: CubicKnot, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Bidirectional BFS from ``k1`` and ``k2`` over canonical states."""
    oriented = budget.oriented
    max_length, box = budget.resolved(k1, k2)
    stats = SearchStats()
    c1 = canonical_word(k1.word, oriented)
    c2 = canonical_word(k2.word, oriented)
    if c1 == c2:
        stats.states = 1
        return SearchResult(MoveCertificate(to_anchored_word(k1)), stats)

    fwd: Dict[tuple, Optional[tuple]] = {c1: None}
    m1_roots = {}
    if budget.allow_m1:
        for m in budget.m1_factors:
            ck = canonical_word(apply_m1(k1, m).word, oriented)
            if ck not in fwd:
                fwd[ck] = None
                m1_roots[ck] = m
                max_length = max(max_length, len(k1) * m + 4)
                box = tuple(max(b, e + 1) for b, e in zip(box, apply_m1(k1, m).extents()))
    bwd: Dict[tuple, Optional[tuple]] = {c2: None}
    fwd_frontier = list(fwd)
    bwd_frontier = [c2]
    meet = c2 if c2 in fwd else None
    while fwd_frontier and bwd_frontier and meet is None:
        if len(fwd) + len(bwd) >= budget.max_states:
            break
        grow_fwd = len(fwd_frontier) <= len(bwd_frontier)
        mine, other = (fwd, bwd) if grow_fwd else (bwd, fwd)
        frontier = fwd_frontier if grow_fwd else bwd_frontier
        nxt = []
        stats.depth += 1
        for state in frontier:
            stats.expanded += 1
            for child in _successors(state, oriented, max_length, box):
                if child in mine:
                    continue
                mine[child] = state
                if child in other:
                    meet = child
                    break
                nxt.append(child)
            if meet is not None or len(fwd) + len(bwd) >= budget.max_states:
                break
        if grow_fwd:
            fwd_frontier = nxt
        else:
            bwd_frontier = nxt
    stats.states = len(fwd) + len(bwd)
    if meet is None:
        log.info("no certificate within budget: %s", ", ".join(stats.lines()))
        return SearchResult(None, stats)
    path = list(reversed(_path(fwd, meet))) + _path(bwd, meet)[1:]
    return SearchResult(_realise(k1, path, oriented, m1_roots), stats)


def verify_certificate(k1: CubicKnot, cert: MoveCertificate, k2: CubicKnot,
                       oriented: bool = False) -> bool:
    """Replay ``cert`` from ``k1`` and compare the end with ``k2``.

    Translation never matters; orientation matters only when ``oriented``.
    """
    if cert.start != to_anchored_word(k1):
        log.info("certificate does not start at the given knot")
        return False
    try:
        end = replay(cert)
    except StepFailed as exc:
        log.info("%s", exc)
        return False
    return canonical_word(end.word, oriented) == canonical_word(k2.word, oriented)


def simplify(k: CubicKnot, budget: SearchBudget = SearchBudget(max_states=5_000)):
    """Shorten ``k`` with M2 moves; never returns a longer knot.

    Flattens bumps greedily; when none is available, runs a BFS capped at
    the current length looking for any shorter state.
    """
    steps = []
    current = k
    oriented = budget.oriented
    while True:
        flat = next((mv for mv, _, _ in neighbors(current.vertices, current.word, current.vertex_set)
                     if mv.case == THREE_TO_ONE), None)
        if flat is not None:
            steps.append(flat)
            current = apply_move(current, flat)
            continue
        path = _shorter_state(current, budget, oriented)
        if path is None:
            break
        cert = _realise(current, path, oriented, {})
        steps.extend(cert.steps)
        current = replay(cert)
    return current, MoveCertificate(to_anchored_word(k), tuple(steps))


def _shorter_state(k, budget, oriented):
    n = len(k)
    box = budget.bounding_box or tuple(e + 1 for e in k.extents())
    # allow one bump of slack so that corner flips can route around obstacles
    max_length = min(budget.max_length or n + 2, n + 2)
    root = canonical_word(k.word, oriented)
    parents = {root: None}
    frontier = [root]
    while frontier and len(parents) < budget.max_states:
        nxt = []
        for state in frontier:
            for child in _successors(state, oriented, max_length, box):
                if child in parents:
                    continue
                parents[child] = state
                if len(child) < n:
                    return list(reversed(_path(parents, child)))
                nxt.append(child)
                if len(parents) >= budget.max_states:
                    return None
        frontier = nxt
    return None

