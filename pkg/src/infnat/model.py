"""Canonical symbolic elements and their cardinal stratum.

Every nameable number lives in exactly one of three element families:

* ``Fin(n)``, the ordinary finite naturals;
* ``Lmk(i, k)``, the element at signed offset ``k`` from the landmark
  ``o_i`` (each landmark neighborhood is order-isomorphic to the integers);
* ``W(k)``, the element at signed offset ``k`` from ``w``, the number whose
  binary digits are all ones. ``k <= 0`` still has an all-but-finitely-ones
  digit pattern; ``k > 0`` (the successors ``w_1, w_2, ...``) does not.

Set sizes live in a separate stratum, :data:`CardValue`: a finite cardinal,
the single infinite cardinal ``K``, or the indeterminate ``kappa`` ("either
``K`` or some finite natural", carrying no further information). Keeping
cardinals out of the element union is deliberate: ``K`` stands for *any*
infinite number, not a particular one.

All values are immutable and compare structurally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import MalformedNameError


@dataclass(frozen=True)
class Fin:
    """A finite natural number (arbitrary precision)."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"finite naturals are nonnegative, got {self.n}")


@dataclass(frozen=True)
class Lmk:
    """Signed finite offset from the landmark ``o_index``."""

    index: int
    offset: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"landmark index must be >= 1, got {self.index}")


@dataclass(frozen=True)
class W:
    """Signed finite offset from ``w``; offset 0 is ``w`` itself."""

    offset: int


MNumber = Union[Fin, Lmk, W]


def is_infinite(x: MNumber) -> bool:
    return isinstance(x, (Lmk, W))


@dataclass(frozen=True)
class FinCard:
    """Cardinal of a finite set."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"cardinals are nonnegative, got {self.n}")


@dataclass(frozen=True)
class InfiniteCard:
    """The cardinal of the finite naturals; any infinite number in arithmetic."""


@dataclass(frozen=True)
class IndeterminateCard:
    """Either the infinite cardinal or some finite natural; nothing more is known."""


K = InfiniteCard()
KAPPA = IndeterminateCard()

CardValue = Union[FinCard, InfiniteCard, IndeterminateCard]


def canonical_name(x: MNumber) -> str:
    """Return the unique printable name of an element.

    Decimal for finite numbers; ``w``, ``w_k``, ``w-m`` around ``w``;
    ``o_i``, ``o_i+k``, ``o_i-k`` around landmarks. ``parse_name``
    inverts this exactly.
    """
    if isinstance(x, Fin):
        return str(x.n)
    if isinstance(x, W):
        if x.offset == 0:
            return "w"
        if x.offset > 0:
            return f"w_{x.offset}"
        return f"w-{-x.offset}"
    if isinstance(x, Lmk):
        if x.offset == 0:
            return f"o_{x.index}"
        if x.offset > 0:
            return f"o_{x.index}+{x.offset}"
        return f"o_{x.index}-{-x.offset}"
    raise TypeError(f"not an element: {x!r}")


def card_name(c: CardValue, ascii_symbols: bool = False) -> str:
    """Printable name of a cardinal-stratum value."""
    if isinstance(c, FinCard):
        return str(c.n)
    if isinstance(c, InfiniteCard):
        return "K"
    if isinstance(c, IndeterminateCard):
        return "kappa" if ascii_symbols else "κ"
    raise TypeError(f"not a cardinal value: {c!r}")


_NAME_RE = re.compile(
    r"""^(?:
        (?P<nat>\d+)
      | w_(?P<wsucc>\d+)
      | w-(?P<wpred>\d+)
      | (?P<w>w)
      | o_(?P<idx>\d+)(?:(?P<sign>[+-])(?P<off>\d+))?
    )$""",
    re.VERBOSE,
)

_CARDINAL_NAMES = ("K", "kappa", "κ")


def parse_name(s: str) -> MNumber:
    """Parse a canonical element name back into its element.

    Raises :class:`MalformedNameError` for anything outside the grammar,
    naming the offending token.
    """
    m = _NAME_RE.match(s)
    if m is None:
        if s in _CARDINAL_NAMES:
            raise MalformedNameError(
                f"'{s}' names a cardinal-stratum value, not an element"
            )
        raise MalformedNameError(f"malformed name: '{s}'")
    if m.group("nat") is not None:
        return Fin(int(m.group("nat")))
    if m.group("wsucc") is not None:
        return W(int(m.group("wsucc")))
    if m.group("wpred") is not None:
        return W(-int(m.group("wpred")))
    if m.group("w") is not None:
        return W(0)
    index = int(m.group("idx"))
    if index < 1:
        raise MalformedNameError(f"malformed name: '{s}' (landmark index must be >= 1)")
    offset = 0
    if m.group("off") is not None:
        offset = int(m.group("off"))
        if m.group("sign") == "-":
            offset = -offset
    return Lmk(index, offset)


def parse_value(s: str) -> MNumber | CardValue:
    """Parse an element name or one of the cardinal names ``K`` / ``kappa``."""
    if s == "K":
        return K
    if s in ("kappa", "κ"):
        return KAPPA
    return parse_name(s)
