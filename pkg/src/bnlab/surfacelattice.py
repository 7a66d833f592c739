"""Numerical intersection lattices of the surfaces carrying the pencils.

Everything here is numerical: a surface is recorded by its intersection form
on a chosen basis, the numerical class of its canonical divisor, ``chi(O)``
and ``c_2``.  Blown-up points are assumed general (off every named curve),
and ``h^0`` counts are reproduced as Euler characteristics under the
vanishing of ``h^1`` and ``h^2``.

Models built here:

* ``blown_up_plane(n)``: P^2 blown up at ``n`` points, basis ``l, E1..En``.
  ``n = 9`` is S' and ``n = 10`` is S.
* ``ruled_models()``: the decomposable ruled surface ``Y = P(O + eta)`` and the
  indecomposable ``X' = P(E)`` over an elliptic curve, basis ``J0, f``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import InvalidModel, InvalidSection, LatticeMismatch, OddParity

__all__ = [
    "Lattice",
    "DivClass",
    "SurfaceModel",
    "PencilInvariants",
    "intersect",
    "blown_up_plane",
    "ruled_models",
    "k3_model",
    "blow_up",
    "adjunction_genus",
    "chi_of_class",
    "duval_class",
    "lg_class",
    "lambda_class",
    "elliptic_class",
    "lambda_hyperplane_identity",
    "pencil_numbers",
    "model_to_json",
    "model_from_json",
]


@dataclass(frozen=True)
class Lattice:
    basis_names: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        names = tuple(self.basis_names)
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "basis_names", names)
        object.__setattr__(self, "gram", gram)
        n = len(names)
        if len(set(names)) != n:
            raise InvalidModel(f"duplicate basis names in {names}")
        if len(gram) != n or any(len(row) != n for row in gram):
            raise InvalidModel(f"gram matrix is not {n}x{n}")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise InvalidModel(f"gram matrix is not symmetric at ({i}, {j})")

    @property
    def rank(self) -> int:
        return len(self.basis_names)

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a basis element of {self.basis_names}") from None

    def zero(self) -> "DivClass":
        return DivClass(self, (0,) * self.rank)

    def basis(self, name: str) -> "DivClass":
        coeffs = [0] * self.rank
        coeffs[self.index(name)] = 1
        return DivClass(self, tuple(coeffs))

    def element(self, coeffs: Mapping[str, int] | None = None, **kw: int) -> "DivClass":
        """Class with the given named coefficients, e.g. ``lat.element(J0=3, f=1)``."""
        values = dict(coeffs or {}, **kw)
        vec = [0] * self.rank
        for name, c in values.items():
            vec[self.index(name)] = int(c)
        return DivClass(self, tuple(vec))

    def extends(self, other: "Lattice") -> bool:
        """True when ``other`` is a prefix sublattice of ``self``."""
        k = other.rank
        return self.basis_names[:k] == other.basis_names and all(
            self.gram[i][:k] == other.gram[i] for i in range(k)
        )


@dataclass(frozen=True)
class DivClass:
    lattice: Lattice
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.lattice.rank:
            raise LatticeMismatch(
                f"{len(self.coeffs)} coefficients for a lattice of rank {self.lattice.rank}"
            )

    def _same(self, other: "DivClass") -> None:
        if not isinstance(other, DivClass):
            raise TypeError(f"expected a DivClass, got {type(other).__name__}")
        if other.lattice != self.lattice:
            raise LatticeMismatch("classes live on different lattices")

    def __add__(self, other: "DivClass") -> "DivClass":
        self._same(other)
        return DivClass(self.lattice, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivClass") -> "DivClass":
        self._same(other)
        return DivClass(self.lattice, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivClass":
        return DivClass(self.lattice, tuple(-a for a in self.coeffs))

    def __rmul__(self, n: int) -> "DivClass":
        if not isinstance(n, int):
            return NotImplemented
        return DivClass(self.lattice, tuple(n * a for a in self.coeffs))

    def dot(self, other: "DivClass") -> int:
        return intersect(self, other)

    def square(self) -> int:
        return intersect(self, self)

    def coefficient(self, name: str) -> int:
        return self.coeffs[self.lattice.index(name)]

    def lift(self, lattice: Lattice) -> "DivClass":
        """Total transform to a lattice obtained from this one by blowing up."""
        if not lattice.extends(self.lattice):
            raise LatticeMismatch("target lattice does not extend the class's lattice")
        return DivClass(lattice, self.coeffs + (0,) * (lattice.rank - self.lattice.rank))

    def __str__(self) -> str:
        terms = []
        for c, name in zip(self.coeffs, self.lattice.basis_names):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign} {mag}{name}")
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def intersect(a: DivClass, b: DivClass) -> int:
    """Bilinear form ``a^T . gram . b``."""
    a._same(b)
    gram = a.lattice.gram
    return sum(
        ai * gram[i][j] * bj
        for i, ai in enumerate(a.coeffs)
        if ai
        for j, bj in enumerate(b.coeffs)
        if bj
    )


@dataclass(frozen=True)
class SurfaceModel:
    """Numerical data of a smooth projective surface.

    ``base_points`` is bookkeeping for the distinguished linear system moved
    in the pencil constructions (not part of the lattice data).
    """

    name: str
    lattice: Lattice
    canonical: DivClass
    chi_O: int
    c2: int
    base_points: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.canonical.lattice != self.lattice:
            raise LatticeMismatch("canonical class is not on the model's lattice")
        if 12 * self.chi_O != self.canonical.square() + self.c2:
            raise InvalidModel(
                f"Noether's formula fails on {self.name}: 12*{self.chi_O} != "
                f"{self.canonical.square()} + {self.c2}"
            )

    @property
    def K2(self) -> int:
        return self.canonical.square()

    def __getitem__(self, name: str) -> DivClass:
        return self.lattice.basis(name)

    def element(self, coeffs: Mapping[str, int] | None = None, **kw: int) -> DivClass:
        return self.lattice.element(coeffs, **kw)


def _diagonal(names: Sequence[str], diag: Sequence[int]) -> Lattice:
    n = len(names)
    return Lattice(tuple(names), tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)))


def blown_up_plane(n: int) -> SurfaceModel:
    if n < 0:
        raise ValueError("number of blown-up points must be nonnegative")
    names = ["l"] + [f"E{i}" for i in range(1, n + 1)]
    lattice = _diagonal(names, [1] + [-1] * n)
    canonical = DivClass(lattice, (-3,) + (1,) * n)
    return SurfaceModel(f"Bl_{n}(P2)", lattice, canonical, chi_O=1, c2=3 + n)


def ruled_models() -> tuple[SurfaceModel, SurfaceModel]:
    """``(Y, X')``: decomposable and indecomposable elliptic ruled surfaces.

    Both have ``J0^2 = f^2 = 0``, ``J0.f = 1`` and ``K = -2 J0`` numerically.
    They differ only in how many base points ``|g J0 + f|`` has: two on ``Y``,
    one on ``X'``.
    """
    lattice = Lattice(("J0", "f"), ((0, 1), (1, 0)))
    canonical = DivClass(lattice, (-2, 0))
    decomposable = SurfaceModel("Y=P(O+eta)", lattice, canonical, chi_O=0, c2=0, base_points=2)
    indecomposable = SurfaceModel("X'=P(E)", lattice, canonical, chi_O=0, c2=0, base_points=1)
    return decomposable, indecomposable


def k3_model(g: int) -> SurfaceModel:
    """A polarized K3 surface of genus ``g``, recorded by ``H^2 = 2g - 2`` alone."""
    lattice = Lattice(("H",), ((2 * g - 2,),))
    return SurfaceModel(f"K3_{g}", lattice, lattice.zero(), chi_O=2, c2=24)


def blow_up(model: SurfaceModel, k: int, names: Sequence[str] | None = None, prefix: str = "B") -> SurfaceModel:
    """Blow up ``k`` general points; each new class ``F`` has ``F^2 = -1`` and ``K += F``."""
    if k < 1:
        raise ValueError("blow_up needs k >= 1")
    if names is None:
        start = 1
        taken = set(model.lattice.basis_names)
        names = []
        while len(names) < k:
            cand = f"{prefix}{start}"
            if cand not in taken:
                names.append(cand)
            start += 1
    names = list(names)
    if len(names) != k:
        raise ValueError(f"expected {k} names, got {len(names)}")
    old = model.lattice
    n = old.rank
    gram = [list(row) + [0] * k for row in old.gram]
    for i in range(k):
        gram.append([0] * (n + k))
        gram[n + i][n + i] = -1
    lattice = Lattice(old.basis_names + tuple(names), tuple(tuple(r) for r in gram))
    canonical = DivClass(lattice, model.canonical.coeffs + (1,) * k)
    return SurfaceModel(
        f"Bl_{k}({model.name})", lattice, canonical, chi_O=model.chi_O, c2=model.c2 + k,
        base_points=model.base_points,
    )


def _half_adjunction(model: SurfaceModel, c: DivClass, sign: int) -> int:
    total = c.square() + sign * c.dot(model.canonical)
    if total % 2:
        raise OddParity(f"c^2 {'+' if sign > 0 else '-'} c.K = {total} is odd for {c}")
    return total // 2


def adjunction_genus(model: SurfaceModel, c: DivClass) -> int:
    """Arithmetic genus ``1 + (c^2 + c.K)/2``."""
    return 1 + _half_adjunction(model, c, +1)


def chi_of_class(model: SurfaceModel, c: DivClass) -> int:
    """Riemann-Roch: ``chi(O(c)) = chi(O) + c.(c - K)/2``."""
    return model.chi_O + _half_adjunction(model, c, -1)


# -- Du Val surfaces ---------------------------------------------------------

def _check_plane_model(model: SurfaceModel, needed: int) -> None:
    if not model.lattice.extends(blown_up_plane(needed).lattice):
        raise LatticeMismatch(f"model {model.name} does not carry l, E1..E{needed}")


def lg_class(g: int, model: SurfaceModel | None = None) -> DivClass:
    """``3g l - g(E1+...+E8) - (g-1)E9`` (the system L_g on S', total transform elsewhere)."""
    model = model or blown_up_plane(9)
    _check_plane_model(model, 9)
    coeffs = {"l": 3 * g, "E9": -(g - 1)}
    coeffs.update({f"E{i}": -g for i in range(1, 9)})
    return model.element(coeffs)


def duval_class(g: int, model: SurfaceModel | None = None) -> DivClass:
    """Strict transform on S of a genus-``g`` Du Val curve: ``L_g - E10``."""
    model = model or blown_up_plane(10)
    _check_plane_model(model, 10)
    return lg_class(g, model) - model["E10"]


def lambda_class(g: int, model: SurfaceModel | None = None) -> DivClass:
    """Class of ``Lambda_{g-1}`` on S: genus-``(g-1)`` Du Val curves, no ``E10`` term."""
    model = model or blown_up_plane(10)
    _check_plane_model(model, 10)
    return lg_class(g - 1, model)


def elliptic_class(model: SurfaceModel | None = None) -> DivClass:
    """Strict transform ``J = 3l - E1 - ... - E10`` of the cubic through the ten points."""
    model = model or blown_up_plane(10)
    _check_plane_model(model, 10)
    coeffs = {"l": 3}
    coeffs.update({f"E{i}": -1 for i in range(1, 11)})
    return model.element(coeffs)


def lambda_hyperplane_identity(g: int) -> bool:
    """``Lambda_{g-1} + J = L_g`` on S, with ``D.J = 1`` for ``D`` in ``Lambda_{g-1}``."""
    S = blown_up_plane(10)
    D = lambda_class(g, S)
    J = elliptic_class(S)
    return D + J == duval_class(g, S) and D.dot(J) == 1


# -- Lefschetz pencils -------------------------------------------------------

@dataclass(frozen=True)
class PencilInvariants:
    genus: int
    lambda_: int
    psi: int | None
    delta_total: int
    blown_up: SurfaceModel

    def as_dict(self) -> dict:
        return {"genus": self.genus, "lambda": self.lambda_, "psi": self.psi, "delta_total": self.delta_total}


def pencil_numbers(model: SurfaceModel, c: DivClass, section: DivClass | None) -> PencilInvariants:
    """Invariants of a Lefschetz pencil in ``|c|``.

    The ``c^2`` base points are blown up; the fibration then has
    ``lambda = chi(O) + g - 1`` and ``c_2 + 4g - 4`` singular fibres.
    ``section`` (a curve meeting ``c`` once and avoiding the base points)
    gives ``psi = -section^2``; pass ``None`` for an unpointed pencil.
    """
    n = c.square()
    if n < 0:
        raise ValueError(f"pencil class has negative square {n}")
    if section is not None and section.dot(c) != 1:
        raise InvalidSection(f"section meets the pencil class {section.dot(c)} times, not once")
    g = adjunction_genus(model, c)
    blown = blow_up(model, n) if n else model
    psi = None
    if section is not None:
        psi = -section.lift(blown.lattice).square()
    return PencilInvariants(
        genus=g,
        lambda_=blown.chi_O + g - 1,
        psi=psi,
        delta_total=blown.c2 + 4 * g - 4,
        blown_up=blown,
    )


# -- serialization -----------------------------------------------------------

def model_to_json(model: SurfaceModel) -> str:
    payload = {
        "name": model.name,
        "basis": list(model.lattice.basis_names),
        "gram": [list(row) for row in model.lattice.gram],
        "canonical": list(model.canonical.coeffs),
        "chi_O": model.chi_O,
        "c2": model.c2,
    }
    if model.base_points is not None:
        payload["base_points"] = model.base_points
    return json.dumps(payload, indent=2) + "\n"


def model_from_json(text: str) -> SurfaceModel:
    payload = json.loads(text)
    lattice = Lattice(tuple(payload["basis"]), tuple(tuple(r) for r in payload["gram"]))
    return SurfaceModel(
        payload["name"],
        lattice,
        DivClass(lattice, tuple(payload["canonical"])),
        chi_O=int(payload["chi_O"]),
        c2=int(payload["c2"]),
        base_points=payload.get("base_points"),
    )
