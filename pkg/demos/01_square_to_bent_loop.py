"""Encodings and single moves on the smallest cubic knot.

Run: python3 demos/01_square_to_bent_loop.py
"""

from cubeknot import catalog
from cubeknot.lattice import ZP, canonical_form, format_tokens, to_anchored_word
from cubeknot.moves import M2Case, MoveM2, apply_m1, apply_m2, enumerate_m2, invert

square = catalog.get("unknot4")
print("square vertices:", square.vertices)
print("anchored word:  ", format_tokens(to_anchored_word(square).word))

moves = enumerate_m2(square)
print(f"{len(moves)} M2 moves apply to the square, e.g. {moves[0]}")

# push edge 0 up one unit: the square becomes a bent 6-edge loop
bump = MoveM2(M2Case.ONE_TO_THREE, 0, ZP)
bent = apply_m2(square, bump)
print("after", bump, "->", format_tokens(bent.word))

undo = invert(bump, square)
back = apply_m2(bent, undo)
print("undo with", undo, "->", format_tokens(back.word))
print("same canonical form:", canonical_form(back) == canonical_form(square))

# M1 subdivides: every letter repeats m times
print("M1(2):", format_tokens(apply_m1(square, 2).word))
