"""Bitmask representation of carrier subsets.

A subset of the carrier {0..order-1} is an int whose bit i is set iff
element i belongs to the subset.  All set algebra is exact; unions and
containment are single int operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def elements(mask: int) -> tuple[int, ...]:
    """Members of the mask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def set_str(mask: int) -> str:
    return "{" + ",".join(str(e) for e in elements(mask)) + "}"
