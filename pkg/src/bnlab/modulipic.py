"""Divisor classes on the universal curve and on the moduli space of curves.

Coefficient vectors are exact rationals over fixed generator lists:

* on the universal curve ``C_g`` (space ``"C"``): ``lambda, psi, delta_irr,
  delta_1, ..., delta_{g-1}``, where ``delta_i`` has the marked point on the
  genus-``i`` side;
* on ``M_g`` (space ``"M"``): ``lambda, delta_irr, delta_1, ...,
  delta_{floor(g/2)}``.

A one-parameter family is recorded by its degrees on the generators
(:class:`PencilNumbers`), and :func:`pair` evaluates a family on a class.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .errors import GenusMismatch, NegativeCoefficient, SpaceMismatch
from .rational import render, to_fraction

__all__ = [
    "generators",
    "UCClass",
    "MgClass",
    "PencilNumbers",
    "pullback_pi",
    "forget_point",
    "weierstrass_class",
    "bn_class",
    "pointed_bn_cone",
    "z10_class",
    "z10_class_truncated",
    "duval_pencil",
    "iota_pencil",
    "iota_bar_pencil",
    "k3_pencil",
    "pair",
    "to_json",
    "from_json",
]


def generators(g: int, space: str = "C") -> tuple[str, ...]:
    if g < 1:
        raise ValueError(f"genus must be positive, got {g}")
    if space == "C":
        return ("lambda", "psi", "delta_irr") + tuple(f"delta_{i}" for i in range(1, g))
    if space == "M":
        return ("lambda", "delta_irr") + tuple(f"delta_{i}" for i in range(1, g // 2 + 1))
    raise ValueError(f"unknown space {space!r}; use 'C' or 'M'")


class _Vector:
    space: str = "C"
    __slots__ = ()

    def __init__(self, g: int, coeffs: Sequence) -> None:
        coeffs = tuple(to_fraction(c) for c in coeffs)
        names = generators(g, self.space)
        if len(coeffs) != len(names):
            raise ValueError(
                f"{type(self).__name__} of genus {g} has {len(names)} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def from_dict(cls, g: int, coeffs: Mapping[str, object] | None = None, **kw):
        """Build from named coefficients; unnamed generators get 0."""
        values = dict(coeffs or {}, **kw)
        names = generators(g, cls.space)
        unknown = set(values) - set(names)
        if unknown:
            raise KeyError(f"unknown generators for genus {g}: {sorted(unknown)}")
        return cls(g, tuple(values.get(n, 0) for n in names))

    @classmethod
    def zero(cls, g: int):
        return cls(g, (0,) * len(generators(g, cls.space)))

    @property
    def names(self) -> tuple[str, ...]:
        return generators(self.g, self.space)

    def __getitem__(self, name: str) -> Fraction:
        return self.coeffs[self.names.index(name)]

    def to_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.names, self.coeffs))

    def _same(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.g != self.g:
            raise GenusMismatch(f"genus {self.g} vs genus {other.g}")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.g, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same(other)
        return type(self)(self.g, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return type(self)(self.g, tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar):
        try:
            q = to_fraction(scalar)
        except TypeError:
            return NotImplemented
        return type(self)(self.g, tuple(q * a for a in self.coeffs))

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and (self.g, self.coeffs) == (other.g, other.coeffs)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.g, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(f"{n}={render(c)}" for n, c in zip(self.names, self.coeffs) if c)
        return f"{type(self).__name__}(g={self.g}{', ' if body else ''}{body})"


class UCClass(_Vector):
    """A rational divisor class on the universal curve of genus ``g``."""

    __slots__ = ("g", "coeffs")
    space = "C"


class MgClass(_Vector):
    """A rational divisor class on ``M_g``."""

    __slots__ = ("g", "coeffs")
    space = "M"


class PencilNumbers(_Vector):
    """Degrees of a one-parameter family on the generators of its space."""

    __slots__ = ("g", "coeffs", "space", "label")

    def __init__(self, g: int, values: Sequence, space: str = "C", label: str = "") -> None:
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "label", label)
        super().__init__(g, values)

    @classmethod
    def from_dict(cls, g: int, values: Mapping[str, object] | None = None, space: str = "C", label: str = "", **kw):
        values = dict(values or {}, **kw)
        names = generators(g, space)
        unknown = set(values) - set(names)
        if unknown:
            raise KeyError(f"unknown generators for genus {g}: {sorted(unknown)}")
        return cls(g, tuple(values.get(n, 0) for n in names), space=space, label=label)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return self.coeffs

    def _same(self, other) -> None:
        super()._same(other)
        if other.space != self.space:
            raise SpaceMismatch(f"pencils over {self.space!r} and {other.space!r}")

    def __add__(self, other):
        self._same(other)
        return PencilNumbers(self.g, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.space)

    def __sub__(self, other):
        self._same(other)
        return PencilNumbers(self.g, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.space)

    def __neg__(self):
        return PencilNumbers(self.g, tuple(-a for a in self.coeffs), self.space)

    def __rmul__(self, scalar):
        return PencilNumbers(self.g, tuple(to_fraction(scalar) * a for a in self.coeffs), self.space)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PencilNumbers)
            and (self.g, self.space, self.coeffs) == (other.g, other.space, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash(("PencilNumbers", self.g, self.space, self.coeffs))

    @property
    def delta_total(self) -> Fraction:
        """Sum of the degrees on all boundary generators."""
        return sum((c for n, c in zip(self.names, self.coeffs) if n.startswith("delta")), Fraction(0))


def pullback_pi(c: MgClass) -> UCClass:
    """Pull back along the map forgetting the marked point.

    ``delta_i`` goes to ``delta_i + delta_{g-i}`` for ``i < g/2`` and the middle
    ``delta_{g/2}`` (``g`` even) goes to itself.
    """
    g = c.g
    out = {"lambda": c["lambda"], "delta_irr": c["delta_irr"]}
    for i in range(1, g // 2 + 1):
        coef = c[f"delta_{i}"]
        out[f"delta_{i}"] = out.get(f"delta_{i}", 0) + coef
        if 2 * i != g:
            out[f"delta_{g - i}"] = out.get(f"delta_{g - i}", 0) + coef
    return UCClass.from_dict(g, out)


def forget_point(p: PencilNumbers) -> PencilNumbers:
    """Compose a family in ``C_g`` with the forgetful map: the result takes
    ``m`` to ``pair(p, pullback_pi(m))``."""
    if p.space != "C":
        raise SpaceMismatch("forget_point needs a family in the universal curve")
    g = p.g
    out = {"lambda": p["lambda"], "delta_irr": p["delta_irr"]}
    for i in range(1, g // 2 + 1):
        out[f"delta_{i}"] = p[f"delta_{i}"] + (p[f"delta_{g - i}"] if 2 * i != g else 0)
    return PencilNumbers.from_dict(g, out, space="M", label=f"pi o {p.label}" if p.label else "")


def weierstrass_class(g: int) -> UCClass:
    """Closure of the Weierstrass divisor:
    ``-lambda + C(g+1,2) psi - sum_i C(g-i+1,2) delta_i``."""
    if g < 2:
        raise ValueError("the Weierstrass divisor needs g >= 2")
    coeffs = {"lambda": -1, "psi": comb(g + 1, 2)}
    for i in range(1, g):
        coeffs[f"delta_{i}"] = -comb(g - i + 1, 2)
    return UCClass.from_dict(g, coeffs)


def bn_class(g: int) -> UCClass:
    """``(g+3) lambda - (g+1)/6 delta_irr - sum_i i(g-i) delta_i``."""
    if g < 2:
        raise ValueError("the Brill-Noether class needs g >= 2")
    coeffs = {"lambda": g + 3, "delta_irr": -Fraction(g + 1, 6)}
    for i in range(1, g):
        coeffs[f"delta_{i}"] = -i * (g - i)
    return UCClass.from_dict(g, coeffs)


def pointed_bn_cone(mu, nu, g: int) -> UCClass:
    """``mu W + nu BN`` with ``mu, nu >= 0``: where pointed Brill-Noether divisors live."""
    mu, nu = to_fraction(mu), to_fraction(nu)
    if mu < 0 or nu < 0:
        raise NegativeCoefficient(f"cone coefficients must be nonnegative, got mu={mu}, nu={nu}")
    return mu * weierstrass_class(g) + nu * bn_class(g)


# Slope-7 K3 divisor on M_10: 7 lambda - delta_irr - 5 delta_1 - 9 delta_2 - 12 delta_3 - 14 delta_4 - 15 delta_5.
_Z10_MG = {"lambda": 7, "delta_irr": -1, "delta_1": -5, "delta_2": -9, "delta_3": -12, "delta_4": -14, "delta_5": -15}


def z10_class() -> UCClass:
    """Pull-back to ``C_10`` of the divisor of curves lying on a K3 surface."""
    return pullback_pi(MgClass.from_dict(10, _Z10_MG))


def z10_class_truncated() -> UCClass:
    """The truncation ``7 lambda - 5 delta_irr - delta_1 - delta_9 - 12 delta_2 - 12 delta_8``
    with elided terms set to zero.  It pairs to -261 with the Du Val pencil,
    so it is not the class of ``Z_10``; kept for comparison."""
    return UCClass.from_dict(
        10, {"lambda": 7, "delta_irr": -5, "delta_1": -1, "delta_9": -1, "delta_2": -12, "delta_8": -12}
    )


def duval_pencil(g: int) -> PencilNumbers:
    """Pointed Du Val pencil: ``lambda = g, psi = 1, delta_irr = 6(g+1), delta_1 = 1``."""
    if g < 2:
        raise ValueError("pencils are tabulated for g >= 2")
    return PencilNumbers.from_dict(
        g, {"lambda": g, "psi": 1, "delta_irr": 6 * (g + 1), "delta_1": 1}, label="j"
    )


def iota_pencil(g: int) -> PencilNumbers:
    """Pencil on the blown-up indecomposable ruled surface:
    ``lambda = g-1, psi = 1, delta_irr = 6(g-1), delta_1 = delta_{g-1} = 1``.

    For ``g = 2`` the two boundary divisors coincide and the degree there is 2.
    """
    if g < 2:
        raise ValueError("pencils are tabulated for g >= 2")
    values = {"lambda": g - 1, "psi": 1, "delta_irr": 6 * (g - 1), "delta_1": 1}
    values[f"delta_{g - 1}"] = values.get(f"delta_{g - 1}", 0) + 1
    return PencilNumbers.from_dict(g, values, label="iota")


def iota_bar_pencil(g: int) -> PencilNumbers:
    """The same pencil with the marked point forgotten, a family in ``M_g``."""
    if g < 2:
        raise ValueError("pencils are tabulated for g >= 2")
    return PencilNumbers.from_dict(
        g, {"lambda": g - 1, "delta_irr": 6 * (g - 1), "delta_1": 2}, space="M", label="iota_bar"
    )


def k3_pencil(g: int) -> PencilNumbers:
    """Lefschetz pencil on a general K3 surface: ``lambda = g+1, delta_irr = 6g+18``.

    Recorded with universal-curve arity; ``psi`` and all ``delta_i`` are 0, so
    it pairs with pull-backs exactly as the family in ``M_g`` does.
    """
    if g < 2:
        raise ValueError("pencils are tabulated for g >= 2")
    return PencilNumbers.from_dict(g, {"lambda": g + 1, "delta_irr": 6 * g + 18}, label="R")


def pair(p: PencilNumbers, c: UCClass | MgClass) -> Fraction:
    """Degree of the class ``c`` on the family ``p``."""
    if not isinstance(c, (UCClass, MgClass)):
        raise TypeError(f"cannot pair a pencil with {type(c).__name__}")
    if p.g != c.g:
        raise GenusMismatch(f"pencil of genus {p.g} paired with a class of genus {c.g}")
    if p.space != c.space:
        raise SpaceMismatch(f"pencil over {p.space!r} paired with a class over {c.space!r}")
    return sum((a * b for a, b in zip(p.coeffs, c.coeffs)), Fraction(0))


# -- serialization -----------------------------------------------------------

def to_json(obj: UCClass | MgClass | PencilNumbers) -> str:
    kind = "pencil" if isinstance(obj, PencilNumbers) else "class"
    payload = {"kind": kind, "space": obj.space, "genus": obj.g}
    if kind == "pencil" and obj.label:
        payload["label"] = obj.label
    payload["coefficients"] = {n: render(c) for n, c in zip(obj.names, obj.coeffs)}
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> UCClass | MgClass | PencilNumbers:
    payload = json.loads(text)
    g = int(payload["genus"])
    space = payload["space"]
    coeffs = {k: to_fraction(v) for k, v in payload["coefficients"].items()}
    if payload["kind"] == "pencil":
        return PencilNumbers.from_dict(g, coeffs, space=space, label=payload.get("label", ""))
    if payload["kind"] != "class":
        raise ValueError(f"unknown kind {payload['kind']!r}")
    cls = UCClass if space == "C" else MgClass
    if space not in ("C", "M"):
        raise ValueError(f"unknown space {space!r}")
    return cls.from_dict(g, coeffs)
