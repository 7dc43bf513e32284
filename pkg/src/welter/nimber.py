"""Nimber arithmetic on signed integers: nim-sum, mex and the mating function.

The nim-sum of nonnegative integers is carryless binary addition, i.e.
XOR.  Python's ``^`` on unbounded ints already implements the two's
complement extension to negative numbers (sign-extended to infinite
width), so ``5 ^ -1 == -6`` and in general ``n ^ -1 == -1 - n``.
"""

from __future__ import annotations

from functools import reduce
from operator import xor
from typing import Iterable


def nim_sum(values: Iterable[int]) -> int:
    """XOR of all values under two's-complement semantics (0 if empty)."""
    return reduce(xor, values, 0)


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer not in values."""
    s = set(values)
    n = 0
    while n in s:
        n += 1
    return n


def mating(x: int, y: int) -> int:
    """The mating value of x and y: 2^(n+1) - 1 where 2^n exactly divides
    x - y, and -1 when x = y.  Symmetric; 1 whenever x and y have
    different parities."""
    if x == y:
        return -1
    d = x - y
    low = d & -d
    return (low << 1) - 1
