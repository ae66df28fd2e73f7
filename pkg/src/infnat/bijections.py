"""Executable one-to-one correspondences over symbolic two-ended streams.

The witnesses behind the cardinal equations are concrete enumeration
schedules. Elements are symbolic tokens: a stream can be entered from the
bottom (0, 1, 2, ... or a_1, a_2, ...) or from the top (K, K-1, K-2, ...),
and a token is just (end, label, index), never a materialized number.
Each enumerator maps a nonnegative position to the token scheduled there,
so injectivity and coverage are checkable on finite prefixes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Union

from .errors import MalformedLayoutError


@dataclass(frozen=True)
class Bottom:
    """Token indexed from the bottom end of its stream."""

    label: str
    i: int

    def __post_init__(self) -> None:
        if self.i < 0:
            raise ValueError("stream indices are nonnegative")


@dataclass(frozen=True)
class Top:
    """Token indexed downward from the top end: 0 is K, j is K-j."""

    label: str
    j: int

    def __post_init__(self) -> None:
        if self.j < 0:
            raise ValueError("stream indices are nonnegative")


StreamToken = Union[Bottom, Top]


def token_name(tok: StreamToken) -> str:
    """Display name matching the union/difference enumerator streams."""
    if isinstance(tok, Top):
        core = "K" if tok.j == 0 else f"K-{tok.j}"
        return core if tok.label.isupper() else f"{tok.label}_{core}"
    if tok.label.isupper():
        return str(tok.i)
    if tok.label == "b":
        # the lettered bottom stream b_1, b_2, ... counts from index 0
        return f"b_{tok.i + 1}"
    return f"{tok.label}_{tok.i}"


def union_interleave_fin(n: int, idx: int) -> StreamToken:
    """Union of n extra elements with a two-ended stream.

    The n lettered elements a_1 .. a_n come first; after them the
    two-ended stream is consumed by strict alternation starting at the
    top: K, 0, K-1, 1, K-2, 2, ...
    """
    if idx < n:
        return Bottom("a", idx + 1)
    t = idx - n
    if t % 2 == 0:
        return Top("B", t // 2)
    return Bottom("B", t // 2)


def diff_interleave(n: int, idx: int) -> StreamToken:
    """Two-ended stream with its top n elements removed.

    Even positions walk the remaining top end downward starting at
    K-(n-1); odd positions enumerate the bottom end 0, 1, 2, ...
    """
    if idx % 2 == 0:
        return Top("A", (n - 1) + idx // 2)
    return Bottom("A", idx // 2)


def union_interleave_kk(idx: int) -> StreamToken:
    """Union of two infinite streams on a period-4 schedule.

    Both ends of the first stream and both ends of the lettered second
    stream take turns: K, 0, b_K, b_1, K-1, 1, b_K-1, b_2, ...
    """
    q, r = divmod(idx, 4)
    if r == 0:
        return Top("A", q)
    if r == 1:
        return Bottom("A", q)
    if r == 2:
        return Top("b", q)
    return Bottom("b", q)


@dataclass(frozen=True)
class PairIndex:
    """Cell of the infinite grid, rows and columns counted from 1."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < 1:
            raise ValueError("grid indices start at 1")


def pair_index(p: PairIndex) -> int:
    """Zigzag diagonal position of a grid cell.

    Diagonal d holds the cells with i + j - 1 = d. Even diagonals are
    walked with i ascending, odd ones with i descending, which yields
    (1,1), (1,2), (2,1), (3,1), (2,2), (1,3), (1,4), ...
    """
    d = p.i + p.j - 1
    base = d * (d - 1) // 2
    if d % 2 == 0:
        return base + (p.i - 1)
    return base + (d - p.i)


def pair_unindex(m: int) -> PairIndex:
    """Inverse of :func:`pair_index`."""
    if m < 0:
        raise ValueError("positions are nonnegative")
    d = (1 + isqrt(1 + 8 * m)) // 2
    offset = m - d * (d - 1) // 2
    if d % 2 == 0:
        i = offset + 1
    else:
        i = d - offset
    return PairIndex(i, d + 1 - i)


def gap_block_enumerate(
    layout, upto: int, separator_label: str = "b"
) -> list:
    """Number the runs of tokens that sit between separator tokens.

    ``layout`` is a finite token sequence in stream order; tokens whose
    label equals ``separator_label`` separate the runs. Two adjacent
    separators are rejected (an internal empty run cannot occur when no
    separator immediately follows another). A leading separator has no
    run before it; a trailing run still counts. Returns at most ``upto``
    pairs of (run, position).
    """
    blocks = []
    run = []
    prev_was_sep = False
    for tok in layout:
        if tok.label == separator_label:
            if prev_was_sep:
                raise MalformedLayoutError(
                    f"separator {token_name(tok)} immediately follows another separator"
                )
            if run:
                blocks.append(tuple(run))
                run = []
            prev_was_sep = True
        else:
            run.append(tok)
            prev_was_sep = False
    if run:
        blocks.append(tuple(run))
    return [(blk, i) for i, blk in enumerate(blocks[:upto])]
