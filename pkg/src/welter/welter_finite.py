"""Finite Welter's Game: coins on squares 0, 1, 2, ... where a move slides
one coin to a smaller unoccupied square.

The Grundy value of a position equals its Welter function: the XOR of all
coin squares and of the mating values of every pair.  Two independent
evaluation paths are provided (the pairwise definition and the pair-by-
maximal-mating reduction) plus equation solving and winning-move
synthesis built on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .moves import Move
from .nimber import mating, nim_sum


def canonical_coins(coins: Iterable[int]) -> tuple[int, ...]:
    """Sorted tuple of the coins; rejects negatives and duplicates."""
    cs = tuple(sorted(coins))
    for c in cs:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ValueError(f"coin squares must be nonnegative integers, got {c!r}")
    for a, b in zip(cs, cs[1:]):
        if a == b:
            raise ValueError(f"duplicate coin on square {a}")
    return cs


def welter_value_pairwise(coins: Iterable[int]) -> int:
    """Welter function by definition: XOR of coins and all pairwise matings."""
    cs = canonical_coins(coins)
    v = nim_sum(cs)
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            v ^= mating(cs[i], cs[j])
    return v


def welter_value_mating(coins: Iterable[int]) -> int:
    """Welter function by the mating method.

    Repeatedly extracts the pair with the largest mating value and XORs the
    two-coin values a^b-1 (a pair with globally maximal mating value is
    cancelled against every third coin, so the rest splits off); a lone
    leftover coin contributes itself.
    """
    rem = list(canonical_coins(coins))
    acc = 0
    while len(rem) >= 2:
        best = None
        for i in range(len(rem)):
            for j in range(i + 1, len(rem)):
                m = mating(rem[i], rem[j])
                if best is None or m > best[0]:
                    best = (m, i, j)
        _, i, j = best
        acc ^= (rem[i] ^ rem[j]) - 1
        del rem[j]
        del rem[i]
    if rem:
        acc ^= rem[0]
    return acc


def mating_pairs(coins: Iterable[int]) -> tuple[tuple[tuple[int, int], ...], int | None]:
    """The pairing the mating method produces: ((a, b), ...) plus the lone
    coin for odd counts (None otherwise)."""
    rem = list(canonical_coins(coins))
    pairs = []
    while len(rem) >= 2:
        best = None
        for i in range(len(rem)):
            for j in range(i + 1, len(rem)):
                m = mating(rem[i], rem[j])
                if best is None or m > best[0]:
                    best = (m, i, j)
        _, i, j = best
        pairs.append((rem[i], rem[j]))
        del rem[j]
        del rem[i]
    return tuple(pairs), (rem[0] if rem else None)


@dataclass(frozen=True)
class AnimatingFn:
    """A composition of XOR-by-constant and add-by-constant maps on the
    integers, applied left to right; the empty composition is the
    identity.  These maps are bijections and form a group."""

    steps: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        for op, c in self.steps:
            if op not in ("xor", "add"):
                raise ValueError(f"unknown step {op!r}")
            if not isinstance(c, int):
                raise ValueError("step constant must be an integer")

    @staticmethod
    def xor(c: int) -> "AnimatingFn":
        return AnimatingFn((("xor", c),))

    @staticmethod
    def add(c: int) -> "AnimatingFn":
        return AnimatingFn((("add", c),))

    def __call__(self, x: int) -> int:
        for op, c in self.steps:
            x = (x ^ c) if op == "xor" else (x + c)
        return x

    def compose(self, other: "AnimatingFn") -> "AnimatingFn":
        """The map x -> self(other(x))."""
        return AnimatingFn(other.steps + self.steps)

    def invert(self) -> "AnimatingFn":
        inv = []
        for op, c in reversed(self.steps):
            inv.append((op, c if op == "xor" else -c))
        return AnimatingFn(tuple(inv))


def _value_with_extra(base: int, frozen: Sequence[int], x: int) -> int:
    # [frozen + {x}] = [frozen] ^ x ^ XOR of matings of x against frozen
    v = base ^ x
    for a in frozen:
        v ^= mating(x, a)
    return v


def solve_welter(frozen: Iterable[int], s: int, max_doublings: int = 16) -> int:
    """The unique nonnegative x, distinct from the frozen coins, with
    welter_value_pairwise(frozen + {x}) = s.

    Scans x over [0, 2^(B+2)) with B the bit length of max(s, frozen),
    doubling the window if empty; a second hit or an exhausted window
    means the uniqueness/existence theory was violated and raises.
    """
    fs = canonical_coins(frozen)
    if s < 0:
        raise ValueError("target value must be nonnegative")
    base = welter_value_pairwise(fs)
    occupied = set(fs)
    bits = max([s, *fs], default=0).bit_length()
    width = 1 << (bits + 2)
    lo = 0
    hit: int | None = None
    for _ in range(max_doublings):
        for x in range(lo, width):
            if x in occupied:
                continue
            if _value_with_extra(base, fs, x) == s:
                if hit is not None:
                    raise RuntimeError(
                        f"solve_welter found two solutions {hit} and {x} "
                        f"for frozen={fs} s={s}"
                    )
                hit = x
        if hit is not None:
            return hit
        lo, width = width, width * 2
    raise RuntimeError(f"solve_welter found no solution for frozen={fs} s={s}")


def winning_moves_finite(coins: Iterable[int]) -> list[Move]:
    """All moves to Grundy value 0, ascending by source square.

    Moving coin i leaves the rest frozen, so the winning target per coin
    is the unique solution of [x | rest] = 0; the move exists iff that x
    is below the coin.  Empty exactly on P-positions.
    """
    cs = canonical_coins(coins)
    moves = []
    for idx, a in enumerate(cs):
        rest = cs[:idx] + cs[idx + 1:]
        x = solve_welter(rest, 0)
        if x < a:
            moves.append(Move(index=idx, source=a, target=x, value=0))
    return moves


def move_to_value_finite(coins: Iterable[int], beta: int) -> Move:
    """A legal move whose resulting position has Welter value beta.

    Requires beta < the current value (the Grundy witness guaranteed by
    mex); scans coins in ascending order and solves for each coin's unique
    target.
    """
    cs = canonical_coins(coins)
    current = welter_value_pairwise(cs)
    if beta < 0 or beta >= current:
        raise ValueError(f"no witness required for beta={beta} from value {current}")
    for idx, a in enumerate(cs):
        rest = cs[:idx] + cs[idx + 1:]
        x = solve_welter(rest, beta)
        if x < a:
            return Move(index=idx, source=a, target=x, value=beta)
    raise RuntimeError(f"no witness move found for beta={beta} from {cs}")
