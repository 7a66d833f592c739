"""Elliptic curves ``y^2 = x^3 + ax + b`` over Q with exact group law.

The group origin is the point at infinity ``O`` of the Weierstrass model.
Points are plain values and do not remember their curve; every public
operation takes the curve explicitly and checks membership.

The module also builds the two families of distinguished points used by the
Du Val and elliptic ruled constructions:

* ``p10(g) = -g p_1 - ... - g p_8 - (g-1) p_9`` for a nine-point fixture,
* ``s(g) = r + [g] t`` where ``t`` represents the non-torsion class ``eta``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidFixture, PointNotOnCurve, TorsionEta
from .rational import render, to_fraction

__all__ = [
    "EllipticCurveQ",
    "RationalPoint",
    "O",
    "NinePointFixture",
    "add",
    "negate",
    "sub",
    "scalar_mul",
    "point_sum",
    "torsion_order",
    "MAZUR_BOUND",
    "naive_height",
    "p10",
    "s_point",
    "nine_point_fixture",
    "fixture_to_json",
    "fixture_from_json",
    "load_fixture",
    "E17_P6_TYPO",
]

# Largest order of a rational torsion point (Mazur).
MAZUR_BOUND = 12


@dataclass(frozen=True)
class RationalPoint:
    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self) -> None:
        if (self.x is None) != (self.y is None):
            raise ValueError("an affine point needs both coordinates")
        if self.x is not None:
            object.__setattr__(self, "x", to_fraction(self.x))
            object.__setattr__(self, "y", to_fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({render(self.x)}, {render(self.y)})"

    def to_json(self):
        return None if self.is_infinity else [render(self.x), render(self.y)]


O = RationalPoint()


@dataclass(frozen=True)
class EllipticCurveQ:
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", to_fraction(self.a))
        object.__setattr__(self, "b", to_fraction(self.b))
        if self.discriminant == 0:
            raise ValueError(f"{self} is singular")

    @property
    def discriminant(self) -> Fraction:
        return -16 * (4 * self.a**3 + 27 * self.b**2)

    def contains(self, P: RationalPoint) -> bool:
        if P.is_infinity:
            return True
        return P.y * P.y == P.x**3 + self.a * P.x + self.b

    def point(self, x, y) -> RationalPoint:
        P = RationalPoint(x, y)
        self.check(P)
        return P

    def check(self, P: RationalPoint) -> None:
        if not self.contains(P):
            raise PointNotOnCurve(f"{P} does not lie on {self}")

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({render(self.a)})x + ({render(self.b)})"


def _add(curve: EllipticCurveQ, P: RationalPoint, Q: RationalPoint) -> RationalPoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return O
        slope = (3 * P.x * P.x + curve.a) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope * slope - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return RationalPoint(x3, y3)


def _neg(P: RationalPoint) -> RationalPoint:
    return P if P.is_infinity else RationalPoint(P.x, -P.y)


def _mul(curve: EllipticCurveQ, n: int, P: RationalPoint) -> RationalPoint:
    if n < 0:
        return _mul(curve, -n, _neg(P))
    result = O
    addend = P
    while n:
        if n & 1:
            result = _add(curve, result, addend)
        n >>= 1
        if n:
            addend = _add(curve, addend, addend)
    return result


def add(curve: EllipticCurveQ, P: RationalPoint, Q: RationalPoint) -> RationalPoint:
    """Chord-tangent sum ``P + Q``."""
    curve.check(P)
    curve.check(Q)
    return _add(curve, P, Q)


def negate(curve: EllipticCurveQ, P: RationalPoint) -> RationalPoint:
    curve.check(P)
    return _neg(P)


def sub(curve: EllipticCurveQ, P: RationalPoint, Q: RationalPoint) -> RationalPoint:
    curve.check(P)
    curve.check(Q)
    return _add(curve, P, _neg(Q))


def scalar_mul(curve: EllipticCurveQ, n: int, P: RationalPoint) -> RationalPoint:
    """``[n]P`` for any integer ``n`` by double-and-add."""
    curve.check(P)
    return _mul(curve, int(n), P)


def point_sum(curve: EllipticCurveQ, points: Iterable[RationalPoint]) -> RationalPoint:
    total = O
    for P in points:
        curve.check(P)
        total = _add(curve, total, P)
    return total


def torsion_order(curve: EllipticCurveQ, P: RationalPoint) -> int | None:
    """Exact order of ``P``, or ``None`` if ``P`` has infinite order.

    Over Q a torsion point has order at most 12, so it suffices to look at
    the first twelve multiples.
    """
    curve.check(P)
    Q = P
    for n in range(1, MAZUR_BOUND + 1):
        if Q.is_infinity:
            return n
        Q = _add(curve, Q, P)
    return None


def naive_height(P: RationalPoint) -> int:
    """``max(|num x|, |den x|)``; 1 for the origin."""
    if P.is_infinity:
        return 1
    return max(abs(P.x.numerator), P.x.denominator)


@dataclass(frozen=True)
class NinePointFixture:
    curve: EllipticCurveQ
    points: tuple[RationalPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        validate_fixture(self)

    def total(self) -> RationalPoint:
        """``p_1 + ... + p_9`` in the group of the curve."""
        return point_sum(self.curve, self.points)


def validate_fixture(fixture: NinePointFixture) -> None:
    pts = fixture.points
    if len(pts) != 9:
        raise InvalidFixture(f"a fixture has exactly 9 points, got {len(pts)}")
    for i, P in enumerate(pts, start=1):
        if P.is_infinity:
            raise InvalidFixture(f"p_{i} is the point at infinity")
        if not fixture.curve.contains(P):
            raise InvalidFixture(f"p_{i} = {P} does not lie on {fixture.curve}")
    if len(set(pts)) != 9:
        raise InvalidFixture("fixture points are not pairwise distinct")


def p10(g: int, fixture: NinePointFixture) -> RationalPoint:
    """``-g p_1 - ... - g p_8 - (g-1) p_9``, the base point of the genus-``g`` Du Val system."""
    if g < 1:
        raise ValueError(f"p10 is defined for g >= 1, got {g}")
    curve = fixture.curve
    coeffs = [-g] * 8 + [-(g - 1)]
    total = O
    for c, P in zip(coeffs, fixture.points):
        total = _add(curve, total, _mul(curve, c, P))
    return total


def s_point(g: int, r: RationalPoint, t: RationalPoint, curve: EllipticCurveQ) -> RationalPoint:
    """The point ``s`` with ``O(s - r) = eta^g``, where ``eta = O(t - O)``.

    ``t`` stands in for a non-torsion degree-zero class, so torsion ``t`` is
    rejected.
    """
    if g < 1:
        raise ValueError(f"s_point is defined for g >= 1, got {g}")
    curve.check(r)
    if torsion_order(curve, t) is not None:
        raise TorsionEta(f"{t} is a torsion point; eta must be non-torsion")
    return _add(curve, r, _mul(curve, g, t))


# (5234, 37866) is off the curve; the integral point with that x-coordinate
# is (5234, 378661).
E17_P6_TYPO = (5234, 37866)

_E17_POINTS = (
    (-2, 3),
    (-1, -4),
    (2, 5),
    (4, 9),
    (52, 375),
    (5234, 378661),
    (8, -23),
    (43, 282),
    (Fraction(1, 4), Fraction(-33, 8)),
)


def nine_point_fixture() -> NinePointFixture:
    """The curve ``y^2 = x^3 + 17`` with its nine general rational points."""
    curve = EllipticCurveQ(0, 17)
    return NinePointFixture(curve, tuple(RationalPoint(x, y) for x, y in _E17_POINTS))


def fixture_to_json(fixture: NinePointFixture) -> str:
    payload = {
        "a": render(fixture.curve.a),
        "b": render(fixture.curve.b),
        "points": [P.to_json() for P in fixture.points],
    }
    return json.dumps(payload, indent=2) + "\n"


def fixture_from_json(text: str) -> NinePointFixture:
    try:
        payload = json.loads(text)
        curve = EllipticCurveQ(_exact(payload["a"]), _exact(payload["b"]))
        points = tuple(RationalPoint(_exact(x), _exact(y)) for x, y in payload["points"])
    except InvalidFixture:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidFixture(f"malformed fixture: {exc}") from None
    return NinePointFixture(curve, points)


def _exact(value) -> Fraction:
    # JSON numbers would be ambiguous (floats); only strings and ints are exact.
    if isinstance(value, float):
        raise ValueError(f"decimal value {value!r} is not allowed, use a 'num/den' string")
    return to_fraction(value)


def load_fixture(path) -> NinePointFixture:
    with open(path, encoding="utf-8") as fh:
        return fixture_from_json(fh.read())
