"""Exact rational plane geometry for chord-diagram layouts.

Boundary positions of a disk are realized as rational points on the unit
circle through the tangent half-angle parametrization, so intersection
tests, intersection parameters, and crossing signs are all computed with
``fractions.Fraction`` and never touch floating point.

Only the cyclic order of the parameters matters combinatorially: two
chords of a circle cross if and only if their endpoints interleave, so any
strictly increasing parameter assignment realizes the same crossing
structure as equally spaced points.
"""

from __future__ import annotations

from fractions import Fraction

Point = tuple[Fraction, Fraction]
Vector = tuple[Fraction, Fraction]


def circle_point(param: int | Fraction) -> Point:
    """Rational point on the unit circle; angle increases with ``param``.

    Uses (x, y) = ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)); for t >= 0 the points
    sweep counter-clockwise through the closed upper half circle.
    """
    t = Fraction(param)
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def sub(a: Point, b: Point) -> Vector:
    return (a[0] - b[0], a[1] - b[1])


def cross(u: Vector, v: Vector) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def cross_sign(u: Vector, v: Vector) -> int:
    """Sign of the 2D cross product u x v (+1, 0, or -1)."""
    c = cross(u, v)
    if c > 0:
        return 1
    if c < 0:
        return -1
    return 0


def segment_intersection_params(
    a: Point, b: Point, c: Point, d: Point
) -> tuple[Fraction, Fraction] | None:
    """Parameters (t, u) with a + t(b-a) = c + u(d-c), or None if parallel.

    The parameters are unconstrained; callers check the (0, 1) range when a
    proper crossing is required.
    """
    r = sub(b, a)
    s = sub(d, c)
    denom = cross(r, s)
    if denom == 0:
        return None
    ac = sub(c, a)
    t = cross(ac, s) / denom
    u = cross(ac, r) / denom
    return (t, u)
