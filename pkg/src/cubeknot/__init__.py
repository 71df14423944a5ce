"""Knots on the cubic lattice: moves, exact projection, diagrams, invariants."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .lattice import (AnchoredWord, CanonicalForm, CubicKnot, Direction, canonical_form,
                      equivalent_as_anchored, from_anchored_word, from_vertices,
                      parse_knot, to_anchored_word)
from .moves import (M2Case, MoveCertificate, MoveM1, MoveM2, apply_m1, apply_m2,
                    apply_move, enumerate_m2, invert, lift, replay)
from .qpi import LambdaPoint, PiPoly, embed, orient, project, sign
from .diagram import KnotDiagram, build_diagram, gauss_code, pd_code, writhe
from .invariants import LaurentPoly, colorings, determinant, jones, kauffman_bracket
from .search import SearchBudget, find_certificate, simplify, verify_certificate
from . import catalog
