from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from onesided.errors import NonPrimitive, NotOneSidedSlope, ZeroCurve
from onesided.slope_core import (QuadrantSlope, Slope, det, intersection_number, make_slope,
                                 quadrant_project)

ints = st.integers(min_value=-10**30, max_value=10**30)


@st.composite
def slopes(draw, one_sided=False):
    l = draw(ints)
    m = draw(ints)
    if one_sided:
        l = 2 * l
        m = 2 * m + 1
    assume((l, m) != (0, 0) and gcd(l, m) == 1)
    return make_slope(l, m)


def test_make_slope_canonical():
    assert make_slope(-8, 3) == Slope(8, -3)
    assert make_slope(0, -1) == Slope(0, 1)
    assert make_slope(8, -3) == make_slope(-8, 3)


def test_make_slope_errors():
    with pytest.raises(NonPrimitive):
        make_slope(6, 2)
    with pytest.raises(ZeroCurve):
        make_slope(0, 0)
    with pytest.raises(NonPrimitive):
        make_slope(0, 3)


def test_slope_rejects_non_canonical():
    with pytest.raises(ValueError):
        Slope(-8, 3)


@pytest.mark.parametrize("u, v, expected", [
    ((4, 1), (10, 3), 2),
    ((0, 1), (2, 1), -2),
])
def test_intersection_examples(u, v, expected):
    assert intersection_number(u, v) == expected


def test_intersection_on_raw_spanning_curves():
    # bq - 2pa = 1 for (p, q, a, b) = (4, 3, 1, 3)
    p, q, a, b = 4, 3, 1, 3
    assert det(4 * q - 2 * p, -4 * a + b, -2 * p, b) == 4
    assert abs(intersection_number((4 * q - 2 * p, -4 * a + b), (-2 * p, b))) == 4


@given(slopes(), slopes())
def test_intersection_antisymmetric(u, v):
    assert intersection_number(u, v) == -intersection_number(v, u)
    assert (intersection_number(u, v) == 0) == (u == v)


@given(slopes(), slopes(), st.booleans(), st.booleans())
def test_intersection_magnitude_sign_free(u, v, fu, fv):
    su = (-u.longitude, -u.meridian) if fu else tuple(u)
    sv = (-v.longitude, -v.meridian) if fv else tuple(v)
    assert abs(det(*su, *sv)) == abs(intersection_number(u, v))


@given(slopes(one_sided=True), slopes(one_sided=True))
def test_intersection_even_for_even_longitudes(u, v):
    assert intersection_number(u, v) % 2 == 0


def test_quadrant_project_examples():
    assert quadrant_project((20, -7)) == QuadrantSlope(20, 7)
    assert quadrant_project((0, 1)) == QuadrantSlope(0, 1)
    assert quadrant_project((-2, 1)) == QuadrantSlope(2, 1)
    assert quadrant_project((0, -1)) == QuadrantSlope(0, 1)


@pytest.mark.parametrize("s", [(3, 2), (5, 1), (1, 0)])
def test_quadrant_project_rejects_two_sided(s):
    with pytest.raises(NotOneSidedSlope):
        quadrant_project(s)


@given(slopes(one_sided=True))
def test_quadrant_project_idempotent(s):
    once = quadrant_project(s)
    assert quadrant_project(once) == once
    assert once.longitude >= 0 and once.meridian > 0
    assert gcd(once.longitude, once.meridian) == 1


def test_big_integers():
    big = 2**200
    s = make_slope(-big, -(big + 1))
    assert s == Slope(big, big + 1)
    assert intersection_number(s, (big + 2, big + 3)) == -2
