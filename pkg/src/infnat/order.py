"""Comparison, distance, landmark classes, and the archimedean dichotomy.

Two comparison notions coexist. *Cardinal* comparison follows set size:
a finite element is below every infinite one, and two infinite elements
are always equivalent, counting as Equal only when they are the same
named element. *Structural* comparison is the total order in which the
whole number line is laid out: finite numbers first, then each landmark
neighborhood in index order, then the neighborhood of w last.

Distance counts successor steps and is finite exactly within a family:
between finite numbers, between elements of one landmark class, or
between neighbors of w. Across families no finite chain of successors
connects the endpoints.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .arith import add
from .errors import PreconditionError, WrongClassError
from .model import Fin, Lmk, MNumber, W, canonical_name, is_infinite


class Comparison(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    EQUIVALENT_NOT_EQUAL = "equivalent"


@dataclass(frozen=True)
class FiniteDist:
    """Number of successor steps separating two elements of one family."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("distances are nonnegative")


@dataclass(frozen=True)
class InfiniteDist:
    """No finite successor path connects the two elements."""


INFINITE_DIST = InfiniteDist()

Distance = Union[FiniteDist, InfiniteDist]


@dataclass(frozen=True)
class LandmarkClass:
    """All elements at a finite distance from one landmark, kept intensional."""

    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError("landmark index must be >= 1")

    def __contains__(self, x: object) -> bool:
        return isinstance(x, Lmk) and x.index == self.index

    def member(self, offset: int) -> Lmk:
        return Lmk(self.index, offset)


def cardinal_compare(x: MNumber, y: MNumber) -> Comparison:
    """Compare by set size: finite below infinite, infinite all equivalent."""
    fx, fy = isinstance(x, Fin), isinstance(y, Fin)
    if fx and fy:
        if x.n < y.n:
            return Comparison.LESS
        if x.n > y.n:
            return Comparison.GREATER
        return Comparison.EQUAL
    if fx:
        return Comparison.LESS
    if fy:
        return Comparison.GREATER
    if x == y:
        return Comparison.EQUAL
    return Comparison.EQUIVALENT_NOT_EQUAL


def structural_key(x: MNumber) -> tuple:
    """Sort key realizing the total layout of the number line."""
    if isinstance(x, Fin):
        return (0, 0, x.n)
    if isinstance(x, Lmk):
        return (1, x.index, x.offset)
    return (2, 0, x.offset)


def structural_compare(x: MNumber, y: MNumber) -> Comparison:
    """Total order over all elements; never returns an equivalence."""
    kx, ky = structural_key(x), structural_key(y)
    if kx < ky:
        return Comparison.LESS
    if kx > ky:
        return Comparison.GREATER
    return Comparison.EQUAL


def distance(x: MNumber, y: MNumber) -> Distance:
    """Successor-path length between two elements, when one exists."""
    if isinstance(x, Fin) and isinstance(y, Fin):
        return FiniteDist(abs(x.n - y.n))
    if isinstance(x, W) and isinstance(y, W):
        return FiniteDist(abs(x.offset - y.offset))
    if isinstance(x, Lmk) and isinstance(y, Lmk) and x.index == y.index:
        return FiniteDist(abs(x.offset - y.offset))
    return INFINITE_DIST


def z_project(index: int, x: MNumber) -> int:
    """Offset of a landmark-class member; the class maps exactly onto Z."""
    if not (isinstance(x, Lmk) and x.index == index):
        raise WrongClassError(
            f"{canonical_name(x)} is not in landmark class {index}"
        )
    return x.offset


@dataclass(frozen=True)
class Witness:
    """Least multiplier whose multiple passes the larger operand."""

    p: int


@dataclass(frozen=True)
class NoWitnessUpTo:
    """No multiplier up to the bound could be certified."""

    bound: int


@dataclass(frozen=True)
class ProvablyNone:
    """No multiplier can ever work: the multiples stay finite forever."""


PROVABLY_NONE = ProvablyNone()

ArchResult = Union[Witness, NoWitnessUpTo, ProvablyNone]


def archimedean_witness(m: MNumber, n: MNumber, p_bound: int) -> ArchResult:
    """Search for p with p*m above n, given 0 < m < n structurally.

    Finite pairs always have a witness. A finite m below an infinite n
    provably has none: every multiple of m is finite and every finite
    element sits below every infinite one. For infinite m the repeated sum
    escalates to the cardinal stratum after one step, where no order
    against n can be certified, so the search reports its bound.
    """
    if structural_compare(Fin(0), m) is not Comparison.LESS:
        raise PreconditionError(f"need 0 < m, got m = {canonical_name(m)}")
    if structural_compare(m, n) is not Comparison.LESS:
        raise PreconditionError(
            f"need m < n, got m = {canonical_name(m)}, n = {canonical_name(n)}"
        )
    if isinstance(m, Fin):
        if isinstance(n, Fin):
            return Witness(n.n // m.n + 1)
        return PROVABLY_NONE
    total: object = m
    for _ in range(2, p_bound + 1):
        total = add(total, m)  # escalates to a cardinal at the first step
        if not isinstance(total, (Fin, Lmk, W)):
            break
    return NoWitnessUpTo(p_bound)
