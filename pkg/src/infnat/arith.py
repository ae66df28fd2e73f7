"""Arithmetic on individual elements, and their binary digit patterns.

Successor and predecessor move within a family by bumping the offset;
``succ(W(0))`` steps from ``w`` (all digits one) to ``w_1``, which has no
digit pattern at all. Addition and subtraction of a finite amount are
iterated successor/predecessor collapsed into offset arithmetic. Any
operation that combines two infinite elements, or multiplies/divides by an
infinite one, only has a cardinal-level answer and escalates to the
:mod:`infnat.cardinal` table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .cardinal import card_add, card_div, card_mul, card_sub
from .errors import (
    DivisionByZeroError,
    NoPredecessorError,
    NotRepresentableError,
    UndefinedDifferenceError,
    UndefinedQuotientError,
)
from .model import CardValue, Fin, FinCard, K, Lmk, MNumber, W, canonical_name, is_infinite


@dataclass(frozen=True)
class FiniteSupport:
    """Digit pattern with finitely many ones; ``positions`` are the one-bits."""

    positions: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", frozenset(self.positions))
        if any(i < 1 for i in self.positions):
            raise ValueError("digit positions start at 1")


@dataclass(frozen=True)
class CoFiniteSupport:
    """All-ones pattern except finitely many zeros; ``positions`` are the zero-bits."""

    positions: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", frozenset(self.positions))
        if any(i < 1 for i in self.positions):
            raise ValueError("digit positions start at 1")


DigitForm = Union[FiniteSupport, CoFiniteSupport]


def succ(x: MNumber) -> MNumber:
    if isinstance(x, Fin):
        return Fin(x.n + 1)
    if isinstance(x, W):
        return W(x.offset + 1)
    return Lmk(x.index, x.offset + 1)


def pred(x: MNumber) -> MNumber:
    if isinstance(x, Fin):
        if x.n == 0:
            raise NoPredecessorError("0 has no predecessor")
        return Fin(x.n - 1)
    if isinstance(x, W):
        return W(x.offset - 1)
    return Lmk(x.index, x.offset - 1)


def _shift(x: MNumber, amount: int) -> MNumber:
    # iterated succ/pred on an infinite element, collapsed to one offset move
    if isinstance(x, W):
        return W(x.offset + amount)
    return Lmk(x.index, x.offset + amount)


def _card_image(x: MNumber) -> CardValue:
    return FinCard(x.n) if isinstance(x, Fin) else K


def add(x: MNumber, y: MNumber) -> MNumber | CardValue:
    """Element sum; two infinite summands only have the cardinal answer K."""
    if isinstance(x, Fin) and isinstance(y, Fin):
        return Fin(x.n + y.n)
    if isinstance(x, Fin):
        return _shift(y, x.n)
    if isinstance(y, Fin):
        return _shift(x, y.n)
    return card_add(_card_image(x), _card_image(y))


def sub(x: MNumber, y: MNumber) -> MNumber | CardValue:
    """Element difference; raises when no element or cardinal answers it."""
    if isinstance(x, Fin) and isinstance(y, Fin):
        if x.n < y.n:
            raise UndefinedDifferenceError(
                f"{x.n} - {y.n} has no value: there are no negative naturals"
            )
        return Fin(x.n - y.n)
    if isinstance(y, Fin):
        return _shift(x, -y.n)
    if isinstance(x, Fin):
        raise UndefinedDifferenceError(
            f"{canonical_name(x)} - {canonical_name(y)} has no value: "
            "every infinite element exceeds every finite one"
        )
    return card_sub(_card_image(x), _card_image(y))


def mul(x: MNumber, y: MNumber) -> MNumber | CardValue:
    """Element product; an infinite factor escalates to the cardinal table.

    A factor of zero still gives the element zero. Nothing offset-precise
    is attempted for infinite factors: doubling an infinite element has
    only the cardinal answer K, not some shifted element.
    """
    if isinstance(x, Fin) and isinstance(y, Fin):
        return Fin(x.n * y.n)
    if (isinstance(x, Fin) and x.n == 0) or (isinstance(y, Fin) and y.n == 0):
        return Fin(0)
    return card_mul(_card_image(x), _card_image(y))


def div(x: MNumber, y: MNumber) -> MNumber | CardValue:
    """Element quotient; finite division is euclidean (floor)."""
    if isinstance(y, Fin) and y.n == 0:
        raise DivisionByZeroError(f"{canonical_name(x)} / 0 is not defined")
    if isinstance(x, Fin):
        if isinstance(y, Fin):
            return Fin(x.n // y.n)
        raise UndefinedQuotientError(
            f"{canonical_name(x)} / {canonical_name(y)} has no value: "
            "no rule divides a finite element by an infinite one"
        )
    return card_div(_card_image(x), _card_image(y))


def _bit_positions(n: int) -> frozenset:
    return frozenset(i + 1 for i in range(n.bit_length()) if (n >> i) & 1)


def to_digits(x: MNumber) -> DigitForm:
    """Binary digit pattern of an element.

    Finite numbers have finite support. ``W(k)`` with ``k <= 0`` is the
    all-ones pattern minus the bits of ``|k|``. ``W(k)`` with ``k > 0``
    has no pattern (there is no digit left to flip past all-ones), and no
    pattern is known for landmark elements.
    """
    if isinstance(x, Fin):
        return FiniteSupport(_bit_positions(x.n))
    if isinstance(x, W):
        if x.offset > 0:
            raise NotRepresentableError(
                f"{canonical_name(x)} has no binary digit pattern: "
                "it lies past the all-ones pattern"
            )
        return CoFiniteSupport(_bit_positions(-x.offset))
    raise NotRepresentableError(
        f"{canonical_name(x)} has no known binary digit pattern"
    )


def from_digits(d: DigitForm) -> MNumber:
    """Inverse of :func:`to_digits` on its domain."""
    value = sum(1 << (i - 1) for i in d.positions)
    if isinstance(d, FiniteSupport):
        return Fin(value)
    return W(-value)


def digit_at(d: DigitForm, i: int) -> int:
    """Digit at position ``i`` (lowest digit is position 1)."""
    if i < 1:
        raise ValueError("digit positions start at 1")
    if isinstance(d, FiniteSupport):
        return 1 if i in d.positions else 0
    return 0 if i in d.positions else 1


def truncation_value(d: DigitForm, m: int) -> int:
    """Plain integer value of the lowest ``m`` digits."""
    return sum(digit_at(d, i) << (i - 1) for i in range(1, m + 1))


def render_digits(d: DigitForm, width: int = 16, ascii_marker: bool = False) -> str:
    """Text rendering, lowest digit rightmost.

    Finite patterns render in full; co-finite ones show the lowest
    ``width`` digits behind a leading marker for the infinite run of ones.
    """
    if isinstance(d, FiniteSupport):
        return format(sum(1 << (i - 1) for i in d.positions), "b")
    marker = "..." if ascii_marker else "…"
    bits = "".join(str(digit_at(d, i)) for i in range(width, 0, -1))
    return marker + bits
