"""Arithmetic on the cardinal stratum: finite cardinals, K, and kappa.

The four operations are total lookup tables over the three variants, with
exact arbitrary-precision arithmetic as the finite base case. Cases the
table leaves without a value (for example ``kappa - K``, whose finite
instantiations have no value at all) raise rather than guess.

``kappa`` is a fresh indeterminate at every occurrence; no identity is
tracked across an expression, so ``K - K`` and ``kappa`` never cancel.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Union

from .errors import (
    DivisionByZeroError,
    InvalidSetError,
    UndefinedDifferenceError,
    UndefinedQuotientError,
)
from .model import KAPPA, CardValue, FinCard, IndeterminateCard, InfiniteCard, K, card_name


def card_add(a: CardValue, b: CardValue) -> CardValue:
    """Sum of two cardinals: exact when finite, K absorbs everything else."""
    if isinstance(a, FinCard) and isinstance(b, FinCard):
        return FinCard(a.n + b.n)
    if isinstance(a, InfiniteCard) or isinstance(b, InfiniteCard):
        return K
    # kappa + finite, kappa + kappa: instantiations mix K with finite sums
    return KAPPA


def card_sub(a: CardValue, b: CardValue) -> CardValue:
    """Difference of two cardinals; raises where no value exists."""
    if isinstance(a, FinCard):
        if isinstance(b, FinCard):
            if a.n < b.n:
                raise UndefinedDifferenceError(
                    f"{a.n} - {b.n} has no value: there are no negative naturals"
                )
            return FinCard(a.n - b.n)
        raise UndefinedDifferenceError(
            f"{card_name(a, True)} - {card_name(b, True)} has no value: "
            "every infinite cardinal exceeds every finite one"
        )
    if isinstance(a, InfiniteCard):
        if isinstance(b, FinCard):
            return K
        return KAPPA  # K - K and K - kappa are indeterminate
    # a is kappa
    if isinstance(b, FinCard):
        return KAPPA
    raise UndefinedDifferenceError(
        f"kappa - {card_name(b, True)} has no value: kappa may be finite"
    )


def card_mul(a: CardValue, b: CardValue) -> CardValue:
    """Product of two cardinals; any factor of zero gives zero."""
    if isinstance(a, FinCard) and isinstance(b, FinCard):
        return FinCard(a.n * b.n)
    if (isinstance(a, FinCard) and a.n == 0) or (isinstance(b, FinCard) and b.n == 0):
        return FinCard(0)
    if isinstance(a, InfiniteCard) or isinstance(b, InfiniteCard):
        return K  # includes K * kappa = K
    return KAPPA


def card_div(a: CardValue, b: CardValue) -> CardValue:
    """Quotient of two cardinals; finite division is euclidean (floor)."""
    if isinstance(b, FinCard) and b.n == 0:
        raise DivisionByZeroError(f"{card_name(a, True)} / 0 is not defined")
    if isinstance(a, FinCard):
        if isinstance(b, FinCard):
            return FinCard(a.n // b.n)
        raise UndefinedQuotientError(
            f"{card_name(a, True)} / {card_name(b, True)} has no value: "
            "a finite set has no infinite parts"
        )
    if isinstance(a, InfiniteCard):
        if isinstance(b, FinCard):
            return K
        return KAPPA  # K / K and K / kappa are indeterminate
    # a is kappa
    if isinstance(b, FinCard):
        return KAPPA
    raise UndefinedQuotientError(
        f"kappa / {card_name(b, True)} has no value: kappa may be finite"
    )


class NStream:
    """Descriptor for a stream with one element per finite natural index."""

    def __repr__(self) -> str:
        return "N_STREAM"


N_STREAM = NStream()

SetDescriptor = Union[NStream, Iterable[Hashable]]


def card_of_stream(desc: SetDescriptor) -> CardValue:
    """Cardinal of a described set.

    An explicit finite list of distinct elements counts to a finite
    cardinal; the symbolic N-indexed stream descriptor has cardinal K.
    """
    if isinstance(desc, NStream):
        return K
    elems = list(desc)
    seen = set()
    for e in elems:
        if e in seen:
            raise InvalidSetError(f"duplicate element {e!r} in explicit set")
        seen.add(e)
    return FinCard(len(elems))
