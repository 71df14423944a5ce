"""Exact arithmetic in Q[pi] and the projection along N = (1, pi, pi^2).

Every geometric test needed to draw a knot diagram reduces to the sign of a
polynomial in pi with rational coefficients.  Because pi is transcendental
such a polynomial vanishes at pi only if all its coefficients are zero, so
the sign is decided exactly: zero by inspection, otherwise by evaluating on
a rigorous enclosure of pi, refined until the enclosure excludes zero.

Projected lattice points live in the rank-3 group spanned by
``f_i = p(e_i)``; a point ``m1 f1 + m2 f2 + m3 f3`` is stored by its integer
coordinates.  Planar predicates on the projection plane reduce to
determinants ``det[u, w, N]`` of integer vectors.
"""

import threading
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import isfinite
from typing import Sequence, Tuple

from .errors import DegenerateIntersection, DegreeOverflow

#: Largest degree a PiPoly may reach.
MAX_DEGREE = 16

INITIAL_BITS = 64
SCHEDULE_CAP = 4096


# -- enclosures of pi --------------------------------------------------------

def _arctan_inv(x, one):
    """Fixed-point ``one * arctan(1/x)`` and a bound on its absolute error."""
    x2 = x * x
    power = one // x          # floor(one / x^(2k+1)), exact floor
    total = power
    k = 0
    err = 1
    sign = 1
    while power:
        k += 1
        sign = -sign
        power //= x2
        total += sign * (power // (2 * k + 1))
        err += 2
    # alternating tail is below the first omitted term, itself below 1 unit
    return total, err + 1


@lru_cache(maxsize=None)
def pi_enclosure(bits: int) -> Tuple[int, int]:
    """Integers ``(lo, hi)`` with ``lo / 2**bits < pi < hi / 2**bits``.

    Machin's formula in fixed point with explicit truncation bounds; the
    width of the enclosure is a few units in the last place.
    """
    guard = 16
    one = 1 << (bits + guard)
    a5, e5 = _arctan_inv(5, one)
    a239, e239 = _arctan_inv(239, one)
    approx = 16 * a5 - 4 * a239
    err = 16 * e5 + 4 * e239
    lo = (approx - err) >> guard
    hi = -((-(approx + err)) >> guard)
    return lo, hi + 1


def pi_decimal(digits: int) -> Decimal:
    """pi to about ``digits`` significant digits, for display only."""
    bits = int(digits * 3.33) + 16
    lo, _ = pi_enclosure(bits)
    with localcontext() as ctx:
        ctx.prec = digits + 5
        return Decimal(lo) / (Decimal(2) ** bits)


class _Stats(threading.local):
    # per-thread so concurrent callers do not race on the counter
    def __init__(self):
        self.max_bits = 0
        self.interval_calls = 0


stats = _Stats()


# -- PiPoly ------------------------------------------------------------------

def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class PiPoly:
    """``sum(c_k * pi**k)`` with exact rational coefficients.

    Coefficients may be ints or Fractions; trailing zeros are trimmed, so
    the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        coeffs = _trim(c if isinstance(c, (int, Fraction)) else Fraction(c) for c in coeffs)
        if len(coeffs) - 1 > MAX_DEGREE:
            raise DegreeOverflow(len(coeffs) - 1, MAX_DEGREE)
        self.coeffs = coeffs

    @classmethod
    def pi_power(cls, k: int, c=1) -> "PiPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = PiPoly([other])
        if not isinstance(other, PiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PiPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*pi^{k}")
        return " + ".join(terms)

    def _coerce(self, other):
        if isinstance(other, PiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return PiPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return PiPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return PiPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PiPoly()
        if len(a) + len(b) - 2 > MAX_DEGREE:
            raise DegreeOverflow(len(a) + len(b) - 2, MAX_DEGREE)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PiPoly(out)

    __rmul__ = __mul__

    def __float__(self):
        return sign_float(self.coeffs)[0]

    def evaluate(self, digits: int = 17) -> Decimal:
        """Decimal value at pi; display only, never fed back to predicates."""
        pi = pi_decimal(digits + 10)
        with localcontext() as ctx:
            ctx.prec = digits + 10
            acc = Decimal(0)
            for c in reversed(self.coeffs):
                c = Fraction(c)
                acc = acc * pi + Decimal(c.numerator) / Decimal(c.denominator)
        with localcontext() as ctx:
            ctx.prec = digits
            return +acc


# -- sign --------------------------------------------------------------------

_PI_F = 3.141592653589793


def sign_float(coeffs):
    """Float value and a bound on its error, or ``(nan, inf)`` on overflow."""
    acc = 0.0
    mag = 0.0
    try:
        for c in reversed(coeffs):
            fc = float(c)
            acc = acc * _PI_F + fc
            mag = mag * _PI_F + abs(fc)
    except OverflowError:
        return float("nan"), float("inf")
    # each Horner step and each conversion loses at most a couple of ulps
    bound = mag * (4 * len(coeffs) + 4) * 2.0 ** -52
    return acc, bound


def _interval_sign(coeffs, bits):
    """Sign from a rigorous integer interval evaluation, or 0 if undecided."""
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    lo_pi, hi_pi = pi_enclosure(bits)
    d = len(ints) - 1
    lower = 0
    upper = 0
    lo_pow = 1
    hi_pow = 1
    for k, a in enumerate(ints):
        scale = 1 << (bits * (d - k))
        if a > 0:
            lower += a * lo_pow * scale
            upper += a * hi_pow * scale
        elif a < 0:
            lower += a * hi_pow * scale
            upper += a * lo_pow * scale
        lo_pow *= lo_pi
        hi_pow *= hi_pi
    if lower > 0:
        return 1
    if upper < 0:
        return -1
    return 0


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def sign(q) -> int:
    """Exact sign of ``q`` evaluated at pi: -1, 0 or +1.

    Zero exactly when every coefficient is zero.  Otherwise a float filter
    with a rigorous error bound settles most cases and integer interval
    evaluation settles the rest, doubling the precision of the pi enclosure
    from 64 bits until the interval excludes zero.  Termination is
    guaranteed for nonzero input because pi is transcendental.
    """
    if not isinstance(q, PiPoly):
        q = PiPoly([q]) if isinstance(q, (int, Fraction)) else PiPoly(q)
    coeffs = q.coeffs
    if not coeffs:
        return 0
    if len(coeffs) == 1:
        return 1 if coeffs[0] > 0 else -1
    value, bound = sign_float(coeffs)
    if isfinite(value) and abs(value) > bound:
        return 1 if value > 0 else -1
    stats.interval_calls += 1
    bits = INITIAL_BITS
    while True:
        if bits > stats.max_bits:
            stats.max_bits = bits
        s = _interval_sign(coeffs, bits)
        if s:
            return s
        bits = bits * 2 if bits < SCHEDULE_CAP else bits + SCHEDULE_CAP


# -- projection --------------------------------------------------------------

@dataclass(frozen=True, order=True)
class LambdaPoint:
    """``m1 f1 + m2 f2 + m3 f3`` in the projected lattice."""
    m1: int
    m2: int
    m3: int

    def __add__(self, other):
        return LambdaPoint(self.m1 + other.m1, self.m2 + other.m2, self.m3 + other.m3)

    def __sub__(self, other):
        return LambdaPoint(self.m1 - other.m1, self.m2 - other.m2, self.m3 - other.m3)

    def __neg__(self):
        return LambdaPoint(-self.m1, -self.m2, -self.m3)

    def __iter__(self):
        return iter((self.m1, self.m2, self.m3))


N = (PiPoly([1]), PiPoly([0, 1]), PiPoly([0, 0, 1]))
#: <N, N> = 1 + pi^2 + pi^4, always positive
NORM2 = PiPoly([1, 0, 1, 0, 1])


def project(v) -> LambdaPoint:
    """Coordinates of ``p(v)`` in the basis ``f1, f2, f3``."""
    return LambdaPoint(*v)


def height(v) -> PiPoly:
    """``<v, N> = x + y pi + z pi^2``: position along the viewing axis."""
    x, y, z = v
    return PiPoly([x, y, z])


def embed(w: LambdaPoint) -> Tuple[PiPoly, PiPoly, PiPoly]:
    """R^3 coordinates of the projected point, times ``<N, N>``.

    ``<N,N> p(v) = <N,N> v - <v,N> N``; the common factor is positive so
    signs are unaffected.
    """
    h = height(tuple(w))
    return tuple(NORM2 * c - h * n for c, n in zip(tuple(w), N))


def dot(u, v) -> PiPoly:
    acc = PiPoly()
    for a, b in zip(u, v):
        acc = acc + (a if isinstance(a, PiPoly) else PiPoly([a])) * b
    return acc


def det3(r1, r2, r3):
    """Determinant of three rows whose entries are ints or PiPolys."""
    def P(x):
        return x if isinstance(x, PiPoly) else PiPoly([x])
    a, b, c = map(P, r1)
    d, e, f = map(P, r2)
    g, h, i = map(P, r3)
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def cross_n(u, w) -> PiPoly:
    """``det[u, w, N]`` for integer vectors: ``N . (u x w)``."""
    cx = u[1] * w[2] - u[2] * w[1]
    cy = u[2] * w[0] - u[0] * w[2]
    cz = u[0] * w[1] - u[1] * w[0]
    return PiPoly([cx, cy, cz])


def orient(a: LambdaPoint, b: LambdaPoint, c: LambdaPoint) -> int:
    """Orientation of three projected points, +1 counterclockwise seen from +N.

    ``det[D p(u), D p(w), N] = D^2 det[u, w, N]`` for ``D = <N,N> > 0``, so the
    sign is that of ``det[b - a, c - a, N]`` on the integer coordinates.
    """
    return sign(cross_n(tuple(b - a), tuple(c - a)))


def orient_embedded(a: LambdaPoint, b: LambdaPoint, c: LambdaPoint) -> int:
    """Same predicate computed literally from the embedded coordinates."""
    ea, eb, ec = embed(a), embed(b), embed(c)
    r1 = tuple(x - y for x, y in zip(eb, ea))
    r2 = tuple(x - y for x, y in zip(ec, ea))
    return sign(det3(r1, r2, N))


class Cross(Enum):
    NONE = "none"
    PROPER = "proper"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class ProjectedSegment:
    """Image of one lattice edge; ``family`` is the axis (1, 2, 3) of the edge."""
    start: LambdaPoint
    end: LambdaPoint
    family: int
    edge: int = -1

    def __post_init__(self):
        diff = tuple(self.end - self.start)
        if sorted(map(abs, diff)) != [0, 0, 1] or diff[self.family - 1] == 0:
            raise ValueError(f"segment {self} is not a unit step along axis {self.family}")

    @property
    def direction(self):
        return tuple(self.end - self.start)

    @classmethod
    def from_edge(cls, a, b, edge=-1):
        diff = tuple(y - x for x, y in zip(a, b))
        family = next(i for i, c in enumerate(diff) if c) + 1
        return cls(project(a), project(b), family, edge)


def _on_segment(p, a, b):
    # p collinear with a, b in R^3 (zero orientation forces this); check betweenness
    u = tuple(b - a)
    w = tuple(p - a)
    t = sum(x * y for x, y in zip(u, w))
    return 0 <= t <= sum(x * x for x in u)


def segments_cross(s1: ProjectedSegment, s2: ProjectedSegment) -> Cross:
    """Classify how the projections of two unit edges meet.

    A zero orientation means three of the lattice points are collinear in
    space, not just in the plane, since ``det[u, w, N]`` vanishes only when
    ``u x w = 0``.
    """
    a, b, c, d = s1.start, s1.end, s2.start, s2.end
    if s1.family == s2.family and not cross_n(s1.direction, tuple(c - a)).is_zero():
        # distinct parallel lines of one family never share a projected point
        return Cross.NONE
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return Cross.PROPER
    if ((o1 == 0 and _on_segment(c, a, b)) or (o2 == 0 and _on_segment(d, a, b))
            or (o3 == 0 and _on_segment(a, c, d)) or (o4 == 0 and _on_segment(b, c, d))):
        return Cross.DEGENERATE
    return Cross.NONE


class Over(Enum):
    FIRST = 1
    SECOND = 2


def crossing_parameters(s1: ProjectedSegment, s2: ProjectedSegment):
    """Exact position of the projected intersection along each segment.

    Returns ``((num1, den1), (num2, den2))`` with ``t_i = num_i / den_i`` the
    fraction of the way along segment ``i``; solves
    ``a + t u = c + s w + lam N`` by Cramer's rule.
    """
    u, w = s1.direction, s2.direction
    r = tuple(s2.start - s1.start)
    den = cross_n(u, w)
    t_num = cross_n(r, w)
    s_num = cross_n(r, u)
    return (t_num, den), (s_num, den)


def over_under(s1: ProjectedSegment, s2: ProjectedSegment) -> Over:
    """Which strand passes on top, i.e. has larger ``<x, N>`` on the fiber.

    The point on ``s1`` minus the point on ``s2`` is ``lam N`` with
    ``lam = -det[u, w, r] / det[u, w, N]``; ``s1`` is over iff ``lam > 0``.
    """
    u, w = s1.direction, s2.direction
    r = tuple(s2.start - s1.start)
    num = -(u[0] * (w[1] * r[2] - w[2] * r[1]) - u[1] * (w[0] * r[2] - w[2] * r[0])
            + u[2] * (w[0] * r[1] - w[1] * r[0]))
    if num == 0:
        raise DegenerateIntersection(f"segments {s1.edge} and {s2.edge} meet in space")
    den = cross_n(u, w)
    if den.is_zero():
        raise DegenerateIntersection(f"segments {s1.edge} and {s2.edge} are parallel")
    return Over.FIRST if sign(den * num) > 0 else Over.SECOND
