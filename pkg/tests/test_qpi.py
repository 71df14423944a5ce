import itertools
import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cubeknot.errors import DegreeOverflow
from cubeknot.qpi import (MAX_DEGREE, N, Cross, LambdaPoint, Over, PiPoly, ProjectedSegment,
                          crossing_parameters, dot, embed, height, orient, orient_embedded,
                          over_under, pi_decimal, pi_enclosure, project, segments_cross, sign, stats)

from oracles import numeric_sign, numeric_value

coeff = st.one_of(st.integers(-10 ** 6, 10 ** 6),
                  st.fractions(min_value=-1000, max_value=1000, max_denominator=1000))
polys = st.lists(coeff, max_size=9).map(PiPoly)
points = st.tuples(*[st.integers(-20, 20)] * 3)


@pytest.mark.parametrize("bits", [64, 128, 512, 1024, 4096])
def test_pi_enclosure(bits):
    lo, hi = pi_enclosure(bits)
    assert lo < hi
    with mpmath.workprec(bits + 200):
        pi = mpmath.pi
        assert mpmath.mpf(lo) / 2 ** bits < pi < mpmath.mpf(hi) / 2 ** bits


def test_pi_decimal():
    assert str(pi_decimal(30)).startswith("3.14159265358979323846264338327")


def test_sign_examples():
    assert sign(PiPoly([Fraction(22, 7), -1])) == 1
    assert sign(PiPoly()) == 0
    assert sign(PiPoly([0, -3, 1])) == 1
    assert sign(PiPoly([Fraction(355, 113), -1])) == 1
    assert sign(height((0, 1, 0)) - height((3, 0, 0))) == 1


def test_sign_hard_case_uses_intervals():
    # 355/113 - pi is about 2.7e-7; scale it so the float filter cannot decide
    q = PiPoly([355 * 10 ** 20, -113 * 10 ** 20]) * PiPoly([1, 0, 1])
    before = stats.interval_calls
    assert sign(q) == 1
    # a polynomial whose value is far below float resolution
    with mpmath.workdps(60):
        approx = mpmath.nstr(mpmath.pi, 40)
    frac = Fraction(approx)
    tiny = PiPoly([frac, -1])
    assert sign(tiny) == numeric_sign(tiny.coeffs)
    assert stats.interval_calls > before


@settings(max_examples=300, deadline=None)
@given(polys)
def test_sign_matches_numeric(q):
    assert sign(q) == numeric_sign(q.coeffs)


@given(polys, polys)
def test_ring_laws(p, q):
    assert p + q == q + p
    assert (p - q) + q == p
    if p.degree + q.degree <= MAX_DEGREE:
        assert p * q == q * p
        assert sign(p * q) == sign(p) * sign(q)


def test_degree_overflow():
    with pytest.raises(DegreeOverflow):
        PiPoly([0] * MAX_DEGREE + [0, 1])
    with pytest.raises(DegreeOverflow):
        PiPoly.pi_power(9) * PiPoly.pi_power(9)


def test_evaluate():
    with mpmath.workdps(50):
        assert abs(mpmath.mpf(str(PiPoly([1, 2, 3]).evaluate(30))) - numeric_value([1, 2, 3], 40)) < mpmath.mpf(10) ** -25


def test_project_examples():
    assert project((1, 2, 3)) == LambdaPoint(1, 2, 3)
    assert project((0, 0, 0)) == LambdaPoint(0, 0, 0)
    assert height((1, 2, 3)) == PiPoly([1, 2, 3])
    assert height((0, 0, 0)).is_zero()
    assert all(c.is_zero() for c in embed(LambdaPoint(0, 0, 0)))
    e1 = embed(project((1, 0, 0)))
    assert dot(e1, N).is_zero()
    assert any(sign(c) != 0 for c in e1)


@given(points, points)
def test_projection_additive(a, b):
    s = tuple(x + y for x, y in zip(a, b))
    assert project(a) + project(b) == project(s)
    ea, eb, es = embed(project(a)), embed(project(b)), embed(project(s))
    assert tuple(x + y for x, y in zip(ea, eb)) == es
    assert dot(es, N).is_zero()


def test_orient_examples():
    a = LambdaPoint(0, 0, 0)
    assert orient(a, LambdaPoint(1, 0, 0), LambdaPoint(2, 0, 0)) == 0
    s = orient(a, LambdaPoint(1, 0, 0), LambdaPoint(0, 1, 0))
    assert s == 1
    assert orient(a, LambdaPoint(0, 1, 0), LambdaPoint(1, 0, 0)) == -s


@settings(max_examples=60, deadline=None)
@given(points, points, points)
def test_orient_matches_embedded(a, b, c):
    a, b, c = map(project, (a, b, c))
    assert orient(a, b, c) == orient_embedded(a, b, c)


def _seg(a, axis):
    b = list(a)
    b[axis] += 1
    return ProjectedSegment.from_edge(a, tuple(b))


def test_same_family_distinct_lines():
    assert segments_cross(_seg((0, 0, 0), 0), _seg((5, 1, -2), 0)) is Cross.NONE


def test_pinned_pairs():
    x_edge = ProjectedSegment.from_edge((0, 1, 0), (1, 1, 0))
    y_edge = ProjectedSegment.from_edge((1, 0, 1), (1, 1, 1))
    assert segments_cross(x_edge, y_edge) is Cross.NONE
    low = ProjectedSegment.from_edge((0, 0, 0), (1, 0, 0))
    assert segments_cross(low, y_edge) is Cross.PROPER
    # the y edge sits one unit higher in z, so it is on top
    assert over_under(low, y_edge) is Over.SECOND
    assert over_under(y_edge, low) is Over.FIRST


def test_collinear_overlap_is_degenerate():
    assert segments_cross(_seg((0, 0, 0), 0), _seg((0, 0, 0), 0)) is Cross.DEGENERATE


def _float_crossing(s1, s2):
    """Solve a + t u = c + s w + lam N in floats."""
    n = np.array([1.0, np.pi, np.pi ** 2])
    a, c = np.array(tuple(s1.start), float), np.array(tuple(s2.start), float)
    m = np.column_stack([np.array(s1.direction, float), -np.array(s2.direction, float), -n])
    return np.linalg.solve(m, c - a)


def test_crossings_against_floats():
    """Every proper crossing between unit edges in a small box, checked numerically."""
    rng = random.Random(7)
    edges = [_seg(p, ax) for p in itertools.product(range(-2, 3), repeat=3) for ax in range(3)]
    checked = 0
    for _ in range(15000):
        s1, s2 = rng.sample(edges, 2)
        if s1.family == s2.family:
            continue
        kind = segments_cross(s1, s2)
        t, s, lam = _float_crossing(s1, s2)
        inside = 0 < t < 1 and 0 < s < 1
        if kind is Cross.PROPER:
            checked += 1
            assert inside
            (tn, td), (sn, sd) = crossing_parameters(s1, s2)
            assert abs(float(tn.evaluate()) / float(td.evaluate()) - t) < 1e-9
            assert abs(float(sn.evaluate()) / float(sd.evaluate()) - s) < 1e-9
            # point on s1 minus point on s2 is lam * N
            assert (over_under(s1, s2) is Over.FIRST) == (lam > 0)
        elif kind is Cross.NONE:
            assert not (1e-9 < t < 1 - 1e-9 and 1e-9 < s < 1 - 1e-9)
    assert checked > 50
