"""Ground truth and strategy validation.

GrundyOracle computes Grundy values of finite Nim and Welter positions by
memoized mex recursion over the full option set, independent of every
closed form in this package; the exhaustive comparison suites are built
on it.  run_playout pits the engine (always moving to value 0 when it
can) against a seeded random adversary on finite or transfinite boards.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .moves import Move
from .nimber import mex
from .nim_transfinite import grundy_nim, move_to_value_nim
from .ordinal import ZERO, Ordinal, sample_below
from .welter_finite import canonical_coins
from .welter_transfinite import (
    canonical_position,
    grundy_welter_transfinite,
    move_to_value_transfinite,
)

GAME_KINDS = ("nim", "welter")


class OracleBudgetExceeded(RuntimeError):
    """The node budget ran out; shrink the instance."""


class PlayoutCeilingExceeded(RuntimeError):
    """A playout exceeded its move ceiling; a strategy or termination bug."""


class GrundyOracle:
    """Memoized mex recursion for one game kind.

    The memo table lives on the instance, so one oracle can value many
    positions of the same kind while sharing subgame results; independent
    instances never share state.
    """

    def __init__(self, kind: str, node_budget: int = 10_000_000):
        if kind not in GAME_KINDS:
            raise ValueError(f"unknown game kind {kind!r}")
        self.kind = kind
        self.node_budget = node_budget
        self.expansions = 0
        self.table: dict[tuple[int, ...], int] = {}

    def key(self, position) -> tuple[int, ...]:
        if self.kind == "nim":
            heaps = tuple(position)
            for h in heaps:
                if not isinstance(h, int) or h < 0:
                    raise ValueError(f"nim heaps must be nonnegative integers, got {h!r}")
            return tuple(sorted(h for h in heaps if h > 0))
        return canonical_coins(position)

    def children(self, key: tuple[int, ...]):
        if self.kind == "nim":
            for i, h in enumerate(key):
                rest = key[:i] + key[i + 1:]
                for v in range(h):
                    yield tuple(sorted(rest + (v,) if v else rest))
        else:
            occupied = set(key)
            for i, c in enumerate(key):
                rest = key[:i] + key[i + 1:]
                for t in range(c):
                    if t not in occupied:
                        yield tuple(sorted(rest + (t,)))

    def value(self, position) -> int:
        return self._value(self.key(position))

    def _value(self, key: tuple[int, ...]) -> int:
        cached = self.table.get(key)
        if cached is not None:
            return cached
        self.expansions += 1
        if self.expansions > self.node_budget:
            raise OracleBudgetExceeded(
                f"exceeded {self.node_budget} expansions; shrink the position"
            )
        v = mex(self._value(child) for child in self.children(key))
        self.table[key] = v
        return v


def grundy_oracle(kind: str, position, node_budget: int = 10_000_000) -> int:
    """Brute-force Grundy value of a finite position by mex recursion."""
    return GrundyOracle(kind, node_budget).value(position)


@dataclass(frozen=True)
class Playout:
    """One finished game: who moved what, and who made the last move."""

    transcript: tuple[tuple[str, Move], ...]
    winner: str
    final: tuple[Ordinal, ...]


def is_terminal(position: tuple[Ordinal, ...], kind: str) -> bool:
    """No legal move left: empty heaps (nim) or coins jammed on 0..n-1."""
    if kind == "nim":
        return all(h.is_zero for h in position)
    if not all(c.is_finite for c in position):
        return False
    return sorted(c.to_int() for c in position) == list(range(len(position)))


def apply_move(position: tuple[Ordinal, ...], move: Move, kind: str) -> tuple[Ordinal, ...]:
    if kind == "nim":
        out = list(position)
        out[move.index] = move.target
        return tuple(out)
    out = [c for c in position if c != move.source]
    out.append(move.target)
    return tuple(sorted(out))


def sampled_move(position, kind, rng: random.Random, budget: int) -> Move:
    if kind == "nim":
        candidates = [i for i, h in enumerate(position) if not h.is_zero]
        i = rng.choice(candidates)
        target = sample_below(position[i], rng.getrandbits(32), budget)
        return Move(index=i, source=position[i], target=target)
    occupied = set(position)
    for idx in rng.sample(range(len(position)), len(position)):
        coin = position[idx]
        cands = set()
        if not coin.is_zero:
            for _ in range(3):
                t = sample_below(coin, rng.getrandbits(32), budget)
                if t not in occupied:
                    cands.add(t)
        for n in range(len(position) + 1):
            t = Ordinal.from_int(n)
            if t < coin and t not in occupied:
                cands.add(t)
        if cands:
            target = rng.choice(sorted(cands))
            return Move(index=idx, source=coin, target=target)
    raise RuntimeError("no legal move in a non-terminal position")


def engine_move(position, kind, rng: random.Random, budget: int) -> Move:
    """The engine policy: to value 0 when possible, else a sampled move."""
    if kind == "nim":
        if not grundy_nim(position).is_zero:
            return move_to_value_nim(position, ZERO)
    else:
        if not grundy_welter_transfinite(position).is_zero:
            return move_to_value_transfinite(position, ZERO)
    return sampled_move(position, kind, rng, budget)


def run_playout(
    start,
    kind: str,
    engine_side: str = "first",
    seed: int = 0,
    budget: int = 64,
) -> Playout:
    """Play the engine against a sample_below-driven adversary.

    The engine moves to value 0 whenever the position is an N-position and
    plays a sampled legal move otherwise; the adversary always samples.
    Normal play: whoever cannot move loses.  Raises
    PlayoutCeilingExceeded past 10 * items * (budget + total CNF terms)
    moves, which well-foundedness forbids for a correct engine.
    """
    if kind not in GAME_KINDS:
        raise ValueError(f"unknown game kind {kind!r}")
    if engine_side not in ("first", "second"):
        raise ValueError("engine_side must be 'first' or 'second'")
    position = tuple(start) if kind == "nim" else canonical_position(start)
    rng = random.Random(seed)
    total_terms = sum(len(x.terms) for x in position)
    ceiling = 10 * max(1, len(position)) * (budget + total_terms)

    mover = "engine" if engine_side == "first" else "adversary"
    transcript: list[tuple[str, Move]] = []
    while not is_terminal(position, kind):
        if len(transcript) >= ceiling:
            raise PlayoutCeilingExceeded(f"exceeded {ceiling} moves")
        if mover == "engine":
            move = engine_move(position, kind, rng, budget)
        else:
            move = sampled_move(position, kind, rng, budget)
        transcript.append((mover, move))
        position = apply_move(position, move, kind)
        mover = "adversary" if mover == "engine" else "engine"
    winner = "adversary" if mover == "engine" else "engine"
    return Playout(transcript=tuple(transcript), winner=winner, final=position)
