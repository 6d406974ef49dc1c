"""Exact rational arithmetic on the circle R/Z and the times-d covering map.

Angles are reduced fractions in [0, 1); all operations are exact, so periodic
orbits of the map theta -> d*theta (mod 1) can be followed without drift for
arbitrarily large denominators.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class Angle(Fraction):
    """A point of the circle R/Z, stored as a reduced fraction in [0, 1).

    Accepts anything Fraction accepts (plus an optional denominator) and
    wraps the value mod 1:

    >>> Angle(3, 6)
    Angle(1/2)
    >>> Angle(9, 7)
    Angle(2/7)
    >>> Angle("0/5")
    Angle(0/1)
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        if denominator is None:
            value = Fraction(numerator)
        else:
            value = Fraction(numerator, denominator)
        return super().__new__(cls, value % 1)

    def __repr__(self) -> str:
        return f"Angle({self.numerator}/{self.denominator})"

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def angle_from_string(text: str) -> Angle:
    """Parse "p/q" (or a plain integer string) into an Angle."""
    return Angle(Fraction(text.strip()))


def _require_degree(d: int) -> None:
    if abs(d) < 2:
        raise ValueError(f"degree must satisfy |d| >= 2, got {d}")


def multiply(theta: Angle, d: int) -> Angle:
    """Apply the degree-d covering theta -> d*theta (mod 1), exactly.

    >>> multiply(Angle(1, 7), 2)
    Angle(2/7)
    """
    _require_degree(d)
    return Angle(d * Fraction(theta))


def circle_dist(a: Angle, b: Angle) -> Fraction:
    """Exact arc-length distance on a circle of total length 1, in [0, 1/2]."""
    diff = abs(Fraction(a) - Fraction(b))
    return min(diff, 1 - diff)


def periodic_angles(d: int, nu: int) -> list[Angle]:
    """All solutions of d^nu * theta = theta (mod 1), sorted around the circle.

    These are k/N for N = |d^nu - 1|; for d >= 2 there are exactly d^nu - 1
    of them.
    """
    _require_degree(d)
    if nu < 1:
        raise ValueError(f"nu must be >= 1, got {nu}")
    n = abs(d**nu - 1)
    return [Angle(k, n) for k in range(n)]


def exact_period(theta: Angle, d: int) -> int | None:
    """Least n with d^n * theta = theta (mod 1), or None if theta is not periodic.

    theta = p/q (reduced) is periodic iff gcd(q, d) = 1, in which case the
    period is the multiplicative order of d mod q.  Strictly preperiodic
    angles (denominator sharing a factor with d) return None.
    """
    _require_degree(d)
    q = theta.denominator
    if q == 1:
        return 1
    if gcd(abs(d), q) != 1:
        return None
    e = d % q
    n = 1
    while e != 1:
        e = (e * d) % q
        n += 1
    return n


def cyclic_order(a: Angle, b: Angle, c: Angle) -> bool:
    """True iff b lies in the positively oriented open arc from a to c.

    >>> cyclic_order(Angle(3, 4), Angle(0), Angle(1, 4))
    True
    """
    if a == b or b == c or a == c:
        raise ValueError("cyclic_order requires pairwise distinct angles")
    return (Fraction(b) - Fraction(a)) % 1 < (Fraction(c) - Fraction(a)) % 1


def orbit(theta: Angle, d: int) -> list[Angle]:
    """Forward orbit of theta under multiplication by d, up to first repeat.

    Finite for every rational angle; the returned list starts at theta and
    contains each visited angle once.
    """
    _require_degree(d)
    seen: dict[Angle, int] = {}
    out: list[Angle] = []
    cur = theta
    while cur not in seen:
        seen[cur] = len(out)
        out.append(cur)
        cur = multiply(cur, d)
    return out
