"""Schubert indices and Brill-Noether numerics.

A Schubert index of type ``(r, d)`` is a nondecreasing sequence
``0 <= alpha_0 <= ... <= alpha_r <= d - r``.  Attached to a marked point it
records the ramification a linear series ``g^r_d`` is required to have there;
its vanishing sequence is ``a_i = alpha_i + i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .errors import InvalidIndex, MixedContext, NotApplicable

__all__ = [
    "SchubertIndex",
    "VanishingSequence",
    "BNProblem",
    "all_indices",
    "weight",
    "complement",
    "rho",
    "rho_pointed",
    "pointed_rho",
    "eh_exists",
    "plucker_total",
    "divisorial_witness",
    "lex_leq",
    "componentwise_leq",
]


@dataclass(frozen=True, order=False)
class SchubertIndex:
    r: int
    d: int
    alpha: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        if self.r < 0 or self.d < 0:
            raise InvalidIndex(f"rank and degree must be nonnegative, got r={self.r}, d={self.d}")
        if len(self.alpha) != self.r + 1:
            raise InvalidIndex(
                f"a Schubert index of type (r={self.r}, d={self.d}) has {self.r + 1} entries, "
                f"got {len(self.alpha)}"
            )
        top = self.d - self.r
        if top < 0:
            raise InvalidIndex(f"no Schubert index of type (r={self.r}, d={self.d}) exists: d < r")
        if self.alpha[0] < 0:
            raise InvalidIndex(f"alpha_0 = {self.alpha[0]} violates 0 <= alpha_0")
        for i in range(self.r):
            if self.alpha[i] > self.alpha[i + 1]:
                raise InvalidIndex(
                    f"alpha_{i} = {self.alpha[i]} > alpha_{i + 1} = {self.alpha[i + 1]} "
                    "violates monotonicity"
                )
        if self.alpha[-1] > top:
            raise InvalidIndex(f"alpha_{self.r} = {self.alpha[-1]} violates alpha_r <= d - r = {top}")

    @classmethod
    def trivial(cls, r: int, d: int) -> "SchubertIndex":
        return cls(r, d, (0,) * (r + 1))

    @classmethod
    def parse(cls, r: int, d: int, text: str) -> "SchubertIndex":
        """Build an index from a comma-separated string such as ``"0,0,1"`` or ``"(0,0,1)"``."""
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        try:
            entries = tuple(int(t) for t in body.split(",") if t.strip() != "")
        except ValueError:
            raise InvalidIndex(f"malformed Schubert index {text!r}") from None
        return cls(r, d, entries)

    @property
    def context(self) -> tuple[int, int]:
        return (self.r, self.d)

    @property
    def is_trivial(self) -> bool:
        return not any(self.alpha)

    def vanishing(self) -> "VanishingSequence":
        return VanishingSequence(self.r, self.d, tuple(a + i for i, a in enumerate(self.alpha)))

    def __iter__(self):
        return iter(self.alpha)

    def __len__(self) -> int:
        return len(self.alpha)

    def __getitem__(self, i):
        return self.alpha[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.alpha) + ")"


@dataclass(frozen=True)
class VanishingSequence:
    """Strictly increasing orders of vanishing ``0 <= a_0 < ... < a_r <= d``."""

    r: int
    d: int
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) != self.r + 1:
            raise InvalidIndex(f"a vanishing sequence of rank {self.r} has {self.r + 1} entries")
        if self.a[0] < 0 or self.a[-1] > self.d:
            raise InvalidIndex(f"vanishing orders {self.a} must lie in [0, {self.d}]")
        if any(self.a[i] >= self.a[i + 1] for i in range(self.r)):
            raise InvalidIndex(f"vanishing orders {self.a} are not strictly increasing")

    def ramification(self) -> SchubertIndex:
        return SchubertIndex(self.r, self.d, tuple(x - i for i, x in enumerate(self.a)))


@dataclass(frozen=True)
class BNProblem:
    g: int
    r: int
    d: int
    ramification: tuple[SchubertIndex, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "ramification", tuple(self.ramification))
        if min(self.g, self.r, self.d) < 0:
            raise ValueError("g, r, d must be nonnegative")
        for idx in self.ramification:
            if idx.context != (self.r, self.d):
                raise MixedContext(
                    f"index {idx} has type (r={idx.r}, d={idx.d}), problem has (r={self.r}, d={self.d})"
                )


def all_indices(r: int, d: int, max_entry: int | None = None) -> Iterator[SchubertIndex]:
    """Every valid index of type ``(r, d)``, in lexicographic order.

    ``max_entry`` further caps every entry (used by the second branch of
    :func:`divisorial_witness`).
    """
    top = d - r
    if r < 0 or top < 0:
        return
    if max_entry is not None:
        top = min(top, max_entry)
        if top < 0:
            return
    # nondecreasing sequences of length r+1 in [0, top] <-> (r+1)-subsets of [0, top+r]
    for subset in combinations(range(top + r + 1), r + 1):
        yield SchubertIndex(r, d, tuple(s - i for i, s in enumerate(subset)))


def weight(idx: SchubertIndex) -> int:
    return sum(idx.alpha)


def complement(idx: SchubertIndex) -> SchubertIndex:
    top = idx.d - idx.r
    return SchubertIndex(idx.r, idx.d, tuple(top - a for a in reversed(idx.alpha)))


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number ``g - (r+1)(g-d+r)``; may be negative."""
    return g - (r + 1) * (g - d + r)


def rho_pointed(problem: BNProblem) -> int:
    return rho(problem.g, problem.r, problem.d) - sum(weight(idx) for idx in problem.ramification)


def pointed_rho(g: int, r: int, d: int, *indices: SchubertIndex | None) -> int:
    """Shorthand for ``rho_pointed(BNProblem(g, r, d, indices))``; ``None`` entries are skipped."""
    return rho_pointed(BNProblem(g, r, d, tuple(i for i in indices if i is not None)))


def eh_exists(g: int, r: int, d: int, idx: SchubertIndex) -> bool:
    """Existence criterion on a general pointed curve of genus ``g``:
    ``sum_i max(alpha_i + g - d + r, 0) <= g``.
    """
    if idx.context != (r, d):
        raise MixedContext(f"index {idx} is not of type (r={r}, d={d})")
    return sum(max(a + g - d + r, 0) for a in idx.alpha) <= g


def plucker_total(g: int, r: int, d: int) -> int:
    """Total ramification weight ``(r+1)d + r(r+1)(g-1)`` of a ``g^r_d``."""
    return (r + 1) * d + r * (r + 1) * (g - 1)


def lex_leq(a: SchubertIndex, b: SchubertIndex) -> bool:
    if a.context != b.context:
        raise MixedContext(f"cannot compare indices of types {a.context} and {b.context}")
    return a.alpha <= b.alpha


def componentwise_leq(a: SchubertIndex, b: SchubertIndex) -> bool:
    if a.context != b.context:
        raise MixedContext(f"cannot compare indices of types {a.context} and {b.context}")
    return all(x <= y for x, y in zip(a.alpha, b.alpha))


def divisorial_witness(
    g: int, r: int, d: int, observed: SchubertIndex, order: str = "lex"
) -> tuple[int, SchubertIndex]:
    """Return ``(d', alpha')`` with ``rho(g, r, d', alpha') = -1``.

    Two situations produce a witness:

    * ``rho(g,r,d) >= 0`` and ``weight(observed) > rho(g,r,d)``: ``d' = d`` and
      ``alpha'`` is the lexicographically largest index of weight
      ``rho(g,r,d) + 1`` that is ``<= observed`` (``order="lex"``, the default,
      or ``order="componentwise"``).
    * ``rho(g,r,d) < -1``: ``d'`` is the least degree above ``d`` admitting an
      index with all entries ``<= d' - d`` and weight ``rho(g,r,d') + 1``;
      ``alpha'`` is the lexicographically smallest such index.

    Anything else raises :class:`NotApplicable`.
    """
    if observed.context != (r, d):
        raise MixedContext(f"observed index {observed} is not of type (r={r}, d={d})")
    if order == "lex":
        leq = lex_leq
    elif order == "componentwise":
        leq = componentwise_leq
    else:
        raise ValueError(f"unknown order {order!r}")

    base = rho(g, r, d)
    if base >= 0 and weight(observed) > base:
        target = base + 1
        best = None
        for cand in all_indices(r, d):
            if weight(cand) == target and leq(cand, observed):
                best = cand  # lexicographic enumeration: the last hit is the largest
        assert best is not None, "a componentwise reduction of observed always exists"
        return d, best

    if base < -1:
        # rho(g, r, d + k) = base + (r+1)k, and weights with entries <= k reach (r+1)k,
        # so k = ceil((-base - 1)/(r+1)) is the first candidate; scan upward from there.
        k = max(1, -((base + 1) // (r + 1)))
        while True:
            dp = d + k
            target = rho(g, r, dp) + 1
            if 0 <= target <= (r + 1) * min(k, dp - r):
                for cand in all_indices(r, dp, max_entry=k):
                    if weight(cand) == target:
                        return dp, cand
            k += 1

    raise NotApplicable(
        f"rho({g},{r},{d}) = {base} with observed weight {weight(observed)}: "
        "no divisorial witness is needed"
    )
