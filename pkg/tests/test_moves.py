import random

import pytest
from hypothesis import given, settings, strategies as st

from cubeknot import catalog
from cubeknot.errors import BadFactor, NotApplicable, StepFailed, TooShortResult, VertexCollision
from cubeknot.lattice import XM, XP, YM, YP, ZM, ZP, canonical_form, from_vertices, to_anchored_word
from cubeknot.moves import (M2Case, MoveCertificate, MoveM1, MoveM2, apply_m1, apply_m2, apply_move,
                            check_undo, enumerate_m2, invert, lift, replay, track_position)

from conftest import BENT_PTS, random_move, random_orbit
from oracles import try_all_moves

ONE, THREE, SWAP = M2Case


def test_m1_square(square):
    k = apply_m1(square, 2)
    assert k.vertices == ((0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 1, 0), (2, 2, 0), (1, 2, 0), (0, 2, 0), (0, 1, 0))
    assert k.word == (XP, XP, YP, YP, XM, XM, YM, YM)


def test_m1_composes(catalog_knot):
    assert apply_m1(apply_m1(catalog_knot, 2), 3) == apply_m1(catalog_knot, 6)


def test_m1_bent_counts(bent):
    k = apply_m1(bent, 3)
    assert len(k) == 18
    counts = k.axis_counts()
    assert counts[XP] == counts[XM] == 3 and counts[ZP] == counts[ZM] == 3


def test_m1_bad_factor(square):
    with pytest.raises(BadFactor):
        apply_m1(square, 1)
    with pytest.raises(BadFactor):
        MoveM1(0)


def test_enumerate_square(square):
    moves = enumerate_m2(square)
    assert MoveM2(ONE, 0, ZP) in moves
    assert MoveM2(SWAP, 0) not in moves
    # (X+, Y+, X-) would flatten to two edges
    assert not any(mv.case == THREE for mv in moves)
    with pytest.raises(TooShortResult):
        apply_m2(square, MoveM2(THREE, 0))


def test_enumerate_bent(bent):
    assert MoveM2(THREE, 0) in enumerate_m2(bent)


def test_apply_examples(square, bent):
    assert apply_m2(square, MoveM2(ONE, 0, ZP)) == bent
    assert to_anchored_word(bent).word == (ZP, XP, ZM, YP, XM, YM)
    assert apply_m2(bent, MoveM2(THREE, 0)) == square
    with pytest.raises(VertexCollision) as e:
        apply_m2(square, MoveM2(SWAP, 0))
    assert e.value.vertex == (0, 1, 0)


def test_not_applicable(square):
    with pytest.raises(NotApplicable):
        apply_m2(square, MoveM2(ONE, 0, XM))
    with pytest.raises(NotApplicable):
        apply_m2(square, MoveM2(SWAP, 9))


def test_move_descriptor_validation():
    with pytest.raises(ValueError):
        MoveM2(ONE, 0)
    with pytest.raises(ValueError):
        MoveM2(SWAP, 0, ZP)


def test_wraparound_flatten_keeps_anchor_rule():
    # bump straddling the end of the word: letters n-1, 0, 1
    k = from_vertices([(0, 0, 1), (1, 0, 1), (1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 0, 0)])
    assert k.word[-1] == ZP and k.word[1] == ZM
    out = apply_m2(k, MoveM2(THREE, len(k) - 1))
    assert len(out) == 4
    assert canonical_form(out) == canonical_form(from_vertices([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]))
    assert out.vertices[0] == (0, 0, 0)


def test_swap_at_end_moves_anchor():
    k = catalog.get("unknot12")
    for mv in enumerate_m2(k):
        if mv.case == SWAP and mv.position == len(k) - 1:
            out = apply_m2(k, mv)
            assert out.anchor != k.anchor
            assert out.vertices[1:] == k.vertices[1:]


def test_invert_examples(square, bent):
    assert invert(MoveM2(ONE, 0, ZP), square) == MoveM2(THREE, 0)
    k = catalog.get("unknot12")
    swap = next(mv for mv in enumerate_m2(k) if mv.case == SWAP)
    assert invert(swap, k) == swap
    for mv in enumerate_m2(bent):
        assert check_undo(bent, mv)


def test_track_position():
    assert track_position(MoveM2(ONE, 2, ZP), 8, 1) == 1
    assert track_position(MoveM2(ONE, 2, ZP), 8, 2) == 3
    assert track_position(MoveM2(ONE, 2, ZP), 8, 5) == 7
    assert track_position(MoveM2(THREE, 2), 8, 2) is None
    assert track_position(MoveM2(THREE, 2), 8, 3) == 2
    assert track_position(MoveM2(THREE, 7), 8, 0) == 0
    assert track_position(MoveM2(SWAP, 7), 8, 0) == 7


def test_replay_examples(square, bent):
    assert replay(MoveCertificate(to_anchored_word(square), (MoveM2(ONE, 0, ZP), MoveM2(THREE, 0)))) == square
    with pytest.raises(StepFailed) as e:
        replay(MoveCertificate(to_anchored_word(square), (MoveM2(SWAP, 0),)))
    assert e.value.index == 0 and isinstance(e.value.cause, VertexCollision)
    k = replay(MoveCertificate(to_anchored_word(square), (MoveM1(2), MoveM2(ONE, 0, ZP))))
    assert len(k) == 10


def test_enumerate_sound_and_complete():
    corpus = [from_vertices(BENT_PTS)]
    for name in catalog.names():
        corpus += random_orbit(catalog.get(name), 6, seed=11)[::2]
    for k in corpus:
        listed = enumerate_m2(k)
        assert listed == sorted(listed)
        assert set(listed) == set(try_all_moves(k))


def _orbit_corpus():
    out = []
    for i, name in enumerate(catalog.names()):
        out += random_orbit(catalog.get(name), 20, seed=i)[::4]
    return out


@pytest.mark.parametrize("m", [2, 3])
def test_lift_commutes_with_m1(m):
    """canonical(M1(M2(k))) == canonical(lifted moves on M1(k))."""
    rng = random.Random(m)
    for k in _orbit_corpus():
        for _ in range(4):
            mv = random_move(rng, k)
            want = canonical_form(apply_m1(apply_m2(k, mv), m))
            big = apply_m1(k, m)
            for step in lift(mv, k, m):
                big = apply_m2(big, step)
            assert canonical_form(big) == want, (mv, m)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(catalog.names()), st.integers(0, 10 ** 6))
def test_moves_preserve_validity_and_undo(name, seed):
    rng = random.Random(seed)
    k = random_orbit(catalog.get(name), rng.randrange(10), seed=seed)[-1]
    mv = random_move(rng, k)
    out = apply_m2(k, mv)
    # full re-validation from raw points
    assert from_vertices(out.vertices) == out
    assert check_undo(k, mv)
    assert apply_move(k, mv) == out
