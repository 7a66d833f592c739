"""Numerical skeleton of the elliptic-tail induction for limit linear series.

A genus-``g`` curve degenerates to a genus-``(g-1)`` curve ``D`` glued at one
node to an elliptic tail.  A refined limit ``g^r_d`` restricts to ``D`` with
some index ``gamma`` at the node and to the tail with ``gamma^c`` there.  On
the tail, the two special points differ by a non-torsion class, so its
existence question is combinatorial.  Recursing down to genus one gives a
decision procedure (:func:`chain_dim`) whose only geometric input is the
two-pointed elliptic rule in :func:`elliptic_two_point_dim`.

Empty loci are reported as ``None``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import InvalidIndex, InvalidPartition, InvalidSequence, MixedContext
from .schubert import (
    SchubertIndex,
    VanishingSequence,
    all_indices,
    complement,
    pointed_rho,
    rho,
    weight,
)

__all__ = [
    "ChainProblem",
    "TailSplit",
    "GrassmannPair",
    "ChainResult",
    "additivity_identity",
    "three_component_identity",
    "torsion_obstructed",
    "degree_obstructed",
    "elliptic_two_point_dim",
    "schubert_nonempty",
    "schubert_nonempty_bruteforce",
    "chain_dim",
    "chain_solve",
    "additivity_sweep",
]


@dataclass(frozen=True)
class ChainProblem:
    g: int
    r: int
    d: int
    alpha: SchubertIndex
    beta: SchubertIndex | None = None

    def __post_init__(self) -> None:
        if self.g < 1:
            raise ValueError(f"chain problems need g >= 1, got {self.g}")
        for idx in (self.alpha, self.beta):
            if idx is not None and idx.context != (self.r, self.d):
                raise InvalidIndex(f"index {idx} is not of type (r={self.r}, d={self.d})")

    @property
    def expected_dimension(self) -> int:
        return pointed_rho(self.g, self.r, self.d, self.alpha, self.beta)


@dataclass(frozen=True)
class TailSplit:
    """Index of the genus-``(g-1)`` aspect at the node."""

    gamma: SchubertIndex


@dataclass(frozen=True)
class GrassmannPair:
    """Two Schubert conditions on ``G(k, n)`` with respect to opposite flags."""

    k: int
    n: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.n:
            raise InvalidPartition(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        box = self.n - self.k
        for name in ("lam", "mu"):
            part = tuple(int(x) for x in getattr(self, name))
            if len(part) > self.k:
                raise InvalidPartition(f"{name}={part} has more than k={self.k} parts")
            if any(x < 0 or x > box for x in part):
                raise InvalidPartition(f"{name}={part} has a part outside [0, {box}]")
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                raise InvalidPartition(f"{name}={part} is not weakly decreasing")
            object.__setattr__(self, name, part + (0,) * (self.k - len(part)))


@dataclass(frozen=True)
class ChainResult:
    dimension: int | None
    path: tuple[SchubertIndex, ...]

    @property
    def empty(self) -> bool:
        return self.dimension is None


def _check(r: int, d: int, *indices: SchubertIndex | None) -> None:
    for idx in indices:
        if idx is not None and idx.context != (r, d):
            raise InvalidIndex(f"index {idx} is not of type (r={r}, d={d})")


def additivity_identity(
    g: int,
    r: int,
    d: int,
    alpha: SchubertIndex,
    beta: SchubertIndex | None,
    gamma: SchubertIndex,
) -> bool:
    """``rho(g-1,r,d,alpha,gamma) + rho(1,r,d,gamma^c,beta) == rho(g,r,d,alpha,beta)``.

    ``beta=None`` is the one-pointed case (trivial second index).
    """
    if g < 2:
        raise ValueError("the elliptic-tail split needs g >= 2")
    _check(r, d, alpha, beta, gamma)
    lhs = pointed_rho(g - 1, r, d, alpha, gamma) + pointed_rho(1, r, d, complement(gamma), beta)
    return lhs == pointed_rho(g, r, d, alpha, beta)


def three_component_identity(
    g: int, r: int, d: int, alpha: SchubertIndex, gamma_d: SchubertIndex, gamma_j: SchubertIndex
) -> bool:
    """Split through a rational bridge carrying the marked point:
    ``rho(g-1,gamma_D) + rho(0,gamma_D^c,gamma_J^c,alpha) + rho(1,gamma_J) == rho(g,alpha)``.
    """
    if g < 2:
        raise ValueError("the three-component split needs g >= 2")
    _check(r, d, alpha, gamma_d, gamma_j)
    lhs = (
        pointed_rho(g - 1, r, d, gamma_d)
        + pointed_rho(0, r, d, complement(gamma_d), complement(gamma_j), alpha)
        + pointed_rho(1, r, d, gamma_j)
    )
    return lhs == pointed_rho(g, r, d, alpha)


def _as_sequence(r: int, d: int, seq: VanishingSequence | Sequence[int]) -> VanishingSequence:
    if isinstance(seq, VanishingSequence):
        if (seq.r, seq.d) != (r, d):
            raise InvalidSequence(f"vanishing sequence of type ({seq.r},{seq.d}), expected ({r},{d})")
        return seq
    try:
        return VanishingSequence(r, d, tuple(seq))
    except InvalidIndex as exc:
        raise InvalidSequence(str(exc)) from None


def _full_pairs(r: int, d: int, a, b) -> list[int]:
    a, b = _as_sequence(r, d, a), _as_sequence(r, d, b)
    return [a.a[i] + b.a[r - i] for i in range(r + 1)]


def torsion_obstructed(r: int, d: int, a, b) -> bool:
    """True when at least two ``i`` have ``a_i + b_{r-i} >= d``.

    Two such pairs would make the underlying line bundle equal to two
    different combinations ``a_i x + b_{r-i} y``, forcing ``x - y`` to be torsion.
    """
    return sum(1 for s in _full_pairs(r, d, a, b) if s >= d) >= 2


def degree_obstructed(r: int, d: int, a, b) -> bool:
    """True when some section would vanish to total order above ``d``."""
    return any(s > d for s in _full_pairs(r, d, a, b))


def elliptic_two_point_dim(r: int, d: int, alpha: SchubertIndex, beta: SchubertIndex) -> int | None:
    """Dimension of ``G^r_d(E, (x, alpha), (y, beta))`` for ``x - y`` non-torsion, or ``None``.

    Nonempty exactly when ``rho(1,r,d,alpha,beta) >= 0``, the pair is not
    torsion-obstructed and no vanishing pair exceeds the degree; the
    dimension is then the expected one.
    """
    _check(r, d, alpha, beta)
    expected = pointed_rho(1, r, d, alpha, beta)
    if expected < 0:
        return None
    a, b = alpha.vanishing(), beta.vanishing()
    if torsion_obstructed(r, d, a, b) or degree_obstructed(r, d, a, b):
        return None
    return expected


def schubert_nonempty(p: GrassmannPair) -> bool:
    """Two-flag criterion: ``lam_i + mu_{k+1-i} <= n - k`` for all ``i``."""
    box = p.n - p.k
    return all(p.lam[i] + p.mu[p.k - 1 - i] <= box for i in range(p.k))


def schubert_nonempty_bruteforce(p: GrassmannPair) -> bool:
    """Search the torus-fixed points (coordinate subspaces) of ``X_lam(F) & X_mu(G)``.

    ``F`` is the standard flag ``<e_1..e_j>`` and ``G`` the opposite flag
    ``<e_n..e_{n-j+1}>``.  The intersection is closed and torus-stable, so it is
    nonempty iff it contains a coordinate subspace.
    """
    k, n = p.k, p.n

    def meets(subset, lam, flag):
        for i in range(1, k + 1):
            j = n - k + i - lam[i - 1]
            if sum(1 for s in subset if flag(s, j)) < i:
                return False
        return True

    for subset in combinations(range(1, n + 1), k):
        if meets(subset, p.lam, lambda s, j: s <= j) and meets(subset, p.mu, lambda s, j: s > n - j):
            return True
    return False


@lru_cache(maxsize=None)
def _solve(g: int, r: int, d: int, alpha: SchubertIndex, beta: SchubertIndex | None):
    """Witness path of node indices, or ``None`` when no admissible path exists.

    One-pointed problems (``beta is None``) put ``alpha`` on the elliptic tail;
    two-pointed ones keep ``alpha`` on the genus-``(g-1)`` side and put ``beta``
    on the tail.
    """
    if g == 1:
        other = beta if beta is not None else SchubertIndex.trivial(r, d)
        return () if elliptic_two_point_dim(r, d, alpha, other) is not None else None
    tail_index = alpha if beta is None else beta
    for gamma in all_indices(r, d):
        # solvable problems have rho >= 0 by induction, so this prunes nothing real
        if pointed_rho(g - 1, r, d, alpha if beta is not None else None, gamma) < 0:
            continue
        if elliptic_two_point_dim(r, d, complement(gamma), tail_index) is None:
            continue
        sub = _solve(g - 1, r, d, gamma, None) if beta is None else _solve(g - 1, r, d, alpha, gamma)
        if sub is not None:
            return (gamma,) + sub
    return None


def chain_solve(p: ChainProblem) -> ChainResult:
    path = _solve(p.g, p.r, p.d, p.alpha, p.beta)
    if path is None:
        return ChainResult(None, ())
    return ChainResult(p.expected_dimension, path)


def chain_dim(p: ChainProblem) -> int | None:
    """``rho(g,r,d,alpha[,beta])`` if the elliptic-tail recursion admits a path, else ``None``."""
    return chain_solve(p).dimension


def additivity_sweep(
    g_max: int = 8, r_max: int = 3, d_max: int = 8, variant: str = "two-pointed"
) -> tuple[int, list[tuple]]:
    """Evaluate a splitting identity on every index triple; return ``(checked, exceptions)``.

    ``variant`` is ``"two-pointed"`` (triples ``alpha, beta, gamma``),
    ``"one-pointed"`` (``alpha, gamma``, second index trivial) or
    ``"three-component"`` (``alpha, gamma_D, gamma_J``).  The identity is
    evaluated elementwise over the whole triple grid at once.
    """
    if variant not in ("two-pointed", "one-pointed", "three-component"):
        raise ValueError(f"unknown variant {variant!r}")
    checked = 0
    exceptions: list[tuple] = []
    for r in range(r_max + 1):
        for d in range(r, d_max + 1):
            idx = list(all_indices(r, d))
            w = np.array([weight(i) for i in idx], dtype=np.int64)
            wc = np.array([weight(complement(i)) for i in idx], dtype=np.int64)
            A = w[:, None, None]
            for g in range(2, g_max + 1):
                if variant == "two-pointed":
                    B, G, Gc = w[None, :, None], w[None, None, :], wc[None, None, :]
                    lhs = (rho(g - 1, r, d) - A - G) + (rho(1, r, d) - Gc - B)
                    rhs = rho(g, r, d) - A - B
                elif variant == "one-pointed":
                    A1, G, Gc = w[:, None], w[None, :], wc[None, :]
                    lhs = (rho(g - 1, r, d) - G) + (rho(1, r, d) - Gc - A1)
                    rhs = rho(g, r, d) - A1
                else:
                    GD, GDc = w[None, :, None], wc[None, :, None]
                    GJ, GJc = w[None, None, :], wc[None, None, :]
                    lhs = (rho(g - 1, r, d) - GD) + (rho(0, r, d) - GDc - GJc - A) + (rho(1, r, d) - GJ)
                    rhs = rho(g, r, d) - A
                lhs, rhs = np.broadcast_arrays(lhs, rhs)
                checked += lhs.size
                for pos in np.argwhere(lhs != rhs):
                    exceptions.append((g, r, d) + tuple(idx[int(i)] for i in pos))
    return checked, exceptions
