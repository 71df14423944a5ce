"""Exception hierarchy.

Everything raised for bad domain input derives from :class:`KnotError`, which
the command line maps to exit status 1.
"""


class KnotError(ValueError):
    """Base class for domain errors."""


# -- encodings ---------------------------------------------------------------

class InvalidKnot(KnotError):
    pass


class TooShort(InvalidKnot):
    def __init__(self, n):
        super().__init__(f"a cubic knot needs at least 4 vertices, got {n}")
        self.n = n


class TooLong(InvalidKnot):
    def __init__(self, n, cap):
        super().__init__(f"knot has {n} vertices, cap is {cap}")
        self.n = n
        self.cap = cap


class NonUnitStep(InvalidKnot):
    def __init__(self, i):
        super().__init__(f"step {i} is not a unit lattice step")
        self.index = i


class RepeatedVertex(InvalidKnot):
    def __init__(self, i, j):
        super().__init__(f"vertices {i} and {j} coincide")
        self.i = i
        self.j = j


class NotClosed(InvalidKnot):
    def __init__(self, offset):
        super().__init__(f"word does not close up (net displacement {offset})")
        self.offset = offset


class ParseError(KnotError):
    def __init__(self, msg, line=None):
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)
        self.line = line


# -- moves -------------------------------------------------------------------

class MoveError(KnotError):
    pass


class BadFactor(MoveError):
    def __init__(self, m):
        super().__init__(f"subdivision factor must be >= 2, got {m}")
        self.m = m


class NotApplicable(MoveError):
    pass


class VertexCollision(MoveError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} is already on the knot")
        self.vertex = vertex


class TooShortResult(MoveError):
    def __init__(self):
        super().__init__("move would leave fewer than 4 edges")


class StepFailed(MoveError):
    def __init__(self, index, cause):
        super().__init__(f"step {index} failed: {cause}")
        self.index = index
        self.cause = cause


# -- exact geometry ----------------------------------------------------------

class DegreeOverflow(KnotError):
    def __init__(self, degree, bound):
        super().__init__(f"polynomial degree {degree} exceeds bound {bound}")
        self.degree = degree


class DegenerateIntersection(KnotError):
    pass


class DegenerateDiagram(KnotError):
    def __init__(self, edge1, edge2):
        super().__init__(f"projection of edges {edge1} and {edge2} is degenerate")
        self.edges = (edge1, edge2)


# -- invariants --------------------------------------------------------------

class TooManyCrossings(KnotError):
    def __init__(self, c, cap):
        super().__init__(f"{c} crossings exceeds the state-sum cap of {cap}")
        self.crossings = c
        self.cap = cap
