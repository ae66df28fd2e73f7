"""Symbolic limits of the built-in sequence families.

Evaluation is a closed case analysis, not numeric extrapolation: each
(family, domain) pair either has a fixed definitional answer or raises.
The ordinary limit is a point not passed; the extreme-part limit ("xtr")
asks what lies at the far end of the index set itself, which for the full
number line is the apeiron sentinel, something that is not a number and
never enters arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .arith import succ
from .errors import BoundExceededError, UnsupportedCombinationError
from .model import Fin, MNumber, W


@dataclass(frozen=True)
class OnesRun:
    """Term n is the binary string of n ones, the value 2**n - 1."""


@dataclass(frozen=True)
class Pow2:
    """Term n is 2**n, one past the run of n ones."""


@dataclass(frozen=True)
class Identity:
    """Term n is n itself."""


@dataclass(frozen=True)
class Affine:
    """A base family shifted upward by a fixed finite amount."""

    base: "SeqFamily"
    shift: int

    def __post_init__(self) -> None:
        if self.shift < 0:
            raise ValueError("shift must be nonnegative")


SeqFamily = Union[OnesRun, Pow2, Identity, Affine]

ONES_RUN = OnesRun()
POW2 = Pow2()
IDENTITY = Identity()


class IndexDomain(enum.Enum):
    L = "L"  # indices ranging over the digit-representable elements
    N = "N"  # indices ranging over the finite naturals only
    M = "M"  # indices ranging over every element


@dataclass(frozen=True)
class LimitValue:
    """The limit is a specific element."""

    value: MNumber


@dataclass(frozen=True)
class LimitCardK:
    """The limit is the infinite cardinal, not a specific element."""


@dataclass(frozen=True)
class NoLimit:
    """The limit does not exist."""


@dataclass(frozen=True)
class Apeiron:
    """Sentinel for what lies beyond every element; never a number."""


LIMIT_K = LimitCardK()
NO_LIMIT = NoLimit()
APEIRON = Apeiron()

LimitResult = Union[LimitValue, LimitCardK, NoLimit, Apeiron]


def eval_limit(f: SeqFamily, d: IndexDomain) -> LimitResult:
    """Ordinary limit of a family over an index domain.

    The run of ones over L converges to w; 2**n over L is the shifted run
    and converges to w_1; n over N has no limit. A shifted family takes
    the base limit and applies that many successors, the sum rule that
    justifies the 2**n case. Every other pairing has no rule and raises.
    """
    if isinstance(f, OnesRun):
        if d is IndexDomain.L:
            return LimitValue(W(0))
        raise UnsupportedCombinationError(
            f"no limit rule for the ones-run family over domain {d.value}"
        )
    if isinstance(f, Pow2):
        return eval_limit(Affine(ONES_RUN, 1), d)
    if isinstance(f, Identity):
        if d is IndexDomain.N:
            return NO_LIMIT
        raise UnsupportedCombinationError(
            f"no limit rule for the identity family over domain {d.value}"
        )
    base = eval_limit(f.base, d)
    if isinstance(base, LimitValue):
        x = base.value
        for _ in range(f.shift):
            x = succ(x)
        return LimitValue(x)
    raise UnsupportedCombinationError(
        "a shifted family only has a limit when its base converges to an element"
    )


def eval_xtr_limit(f: SeqFamily, d: IndexDomain) -> LimitResult:
    """Extreme-part limit; defined only for the identity family."""
    if isinstance(f, Identity):
        if d is IndexDomain.N:
            return LIMIT_K
        if d is IndexDomain.M:
            return APEIRON
    raise UnsupportedCombinationError(
        "the extreme-part limit is defined only for the identity family over N or M"
    )


PREFIX_BOUND = 10_000


def _term(f: SeqFamily, n: int) -> int:
    if isinstance(f, OnesRun):
        return (1 << n) - 1
    if isinstance(f, Pow2):
        return 1 << n
    if isinstance(f, Identity):
        return n
    return _term(f.base, n) + f.shift


def prefix_table(f: SeqFamily, upto: int) -> list:
    """First ``upto`` terms of a family as finite elements (n starts at 1)."""
    if upto < 1:
        raise ValueError("prefix length must be positive")
    if upto > PREFIX_BOUND:
        raise BoundExceededError(
            f"prefix length {upto} exceeds the supported bound {PREFIX_BOUND}"
        )
    return [Fin(_term(f, n)) for n in range(1, upto + 1)]
