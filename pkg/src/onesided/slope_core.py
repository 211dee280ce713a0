"""Exact arithmetic on torus slopes.

A slope is a primitive integer pair ``(longitude, meridian)`` taken up to
overall sign. Python ints are arbitrary precision, so nothing here overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NonPrimitive, NotOneSidedSlope, ZeroCurve


def det(l1: int, m1: int, l2: int, m2: int) -> int:
    """Signed 2x2 determinant ``l1*m2 - l2*m1`` of two raw coordinate pairs."""
    return l1 * m2 - l2 * m1


@dataclass(frozen=True, order=True)
class Slope:
    longitude: int
    meridian: int

    def __post_init__(self):
        l, m = self.longitude, self.meridian
        if l == 0 and m == 0:
            raise ZeroCurve("(0,0) is not a curve")
        if gcd(l, m) != 1:
            raise NonPrimitive(f"non-primitive slope ({l},{m})")
        if l < 0 or (l == 0 and m != 1):
            raise ValueError(f"({l},{m}) is not in canonical form; use make_slope")

    def __iter__(self):
        yield self.longitude
        yield self.meridian

    def __str__(self):
        return f"({self.longitude},{self.meridian})"

    def as_list(self) -> list[int]:
        return [self.longitude, self.meridian]


@dataclass(frozen=True, order=True)
class QuadrantSlope:
    """First-quadrant image of a one-sided slope: even longitude, odd meridian."""

    longitude: int
    meridian: int

    def __post_init__(self):
        l, m = self.longitude, self.meridian
        if l < 0 or m < 0:
            raise ValueError(f"({l},{m}) is not in the first quadrant")
        if (l, m) != (0, 1):
            if l % 2 or m % 2 == 0:
                raise NotOneSidedSlope(f"({l},{m}) does not bound a one-sided surface")
            if gcd(l, m) != 1:
                raise NonPrimitive(f"non-primitive slope ({l},{m})")

    def __iter__(self):
        yield self.longitude
        yield self.meridian

    def __str__(self):
        return f"({self.longitude},{self.meridian})"

    def as_list(self) -> list[int]:
        return [self.longitude, self.meridian]


def make_slope(longitude: int, meridian: int) -> Slope:
    """Build the canonical representative of the unoriented slope.

    >>> make_slope(-8, 3)
    Slope(longitude=8, meridian=-3)
    >>> make_slope(0, -1)
    Slope(longitude=0, meridian=1)
    """
    longitude, meridian = int(longitude), int(meridian)
    if longitude == 0 and meridian == 0:
        raise ZeroCurve("(0,0) is not a curve")
    if gcd(longitude, meridian) != 1:
        raise NonPrimitive(f"non-primitive slope ({longitude},{meridian})")
    if longitude < 0 or (longitude == 0 and meridian < 0):
        longitude, meridian = -longitude, -meridian
    return Slope(longitude, meridian)


def intersection_number(u, v) -> int:
    """Signed algebraic intersection of two slopes.

    Computed on canonical representatives, so only the absolute value is
    independent of how the inputs were oriented.
    """
    if not isinstance(u, Slope):
        u = make_slope(*u)
    if not isinstance(v, Slope):
        v = make_slope(*v)
    return det(u.longitude, u.meridian, v.longitude, v.meridian)


def is_one_sided(s) -> bool:
    l, m = s
    return (abs(l), abs(m)) == (0, 1) or (l % 2 == 0 and m % 2 == 1)


def quadrant_project(s) -> QuadrantSlope:
    """Componentwise absolute value of a one-sided slope."""
    if not isinstance(s, (Slope, QuadrantSlope)):
        s = make_slope(*s)
    l, m = s
    if not is_one_sided((l, m)):
        raise NotOneSidedSlope(f"({l},{m}) does not bound a one-sided surface")
    return QuadrantSlope(abs(l), abs(m))
