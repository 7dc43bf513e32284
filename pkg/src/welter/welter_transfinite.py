"""Transfinite Welter's Game: coins on an ordinal-indexed belt, one coin
per square, a move slides a coin to any smaller unoccupied square.

Writing each coin as w*lam + m (finite m), the coins group into blocks
S_lam of finite parts sharing the quotient lam.  The Grundy value of the
position is

    w * (nim-sum of all lam's)  +  XOR over blocks of [S_lam]

with [.] the finite Welter function.  A position is a P-position iff both
summands vanish.  Winning moves come in two shapes: when the lam part is
already 0, within-block moves fixing the finite XOR; otherwise moves that
carry one coin into the block forced by the lam nim-sum, with the finite
part pinned by equation solving.
"""

from __future__ import annotations

from typing import Iterable

from .moves import Move
from .nimber import nim_sum
from .ordinal import ZERO, Ordinal, cmp, nim_sum_ord, omega_split, omega_unsplit
from .welter_finite import (
    move_to_value_finite,
    solve_welter,
    welter_value_pairwise,
)


def canonical_position(coins: Iterable[Ordinal]) -> tuple[Ordinal, ...]:
    """Sorted coin tuple; rejects duplicates (one coin per square)."""
    cs = tuple(sorted(coins))
    for c in cs:
        if not isinstance(c, Ordinal):
            raise ValueError(f"coins must be Ordinals, got {c!r}")
    for a, b in zip(cs, cs[1:]):
        if a == b:
            raise ValueError(f"duplicate coin on square {a}")
    return cs


def blocks(coins: Iterable[Ordinal]) -> dict[Ordinal, frozenset[int]]:
    """Group coins by their omega quotient: lam -> set of finite parts."""
    cs = canonical_position(coins)
    table: dict[Ordinal, set[int]] = {}
    for c in cs:
        lam, m = omega_split(c)
        table.setdefault(lam, set()).add(m)
    return {lam: frozenset(ms) for lam, ms in table.items()}


def grundy_welter_transfinite(coins: Iterable[Ordinal]) -> Ordinal:
    """Grundy value of a transfinite Welter position (0 for no coins)."""
    cs = canonical_position(coins)
    lam_xor = nim_sum_ord(omega_split(c)[0] for c in cs)
    fin = nim_sum(welter_value_pairwise(ms) for ms in blocks(cs).values())
    return omega_unsplit(lam_xor, fin)


def is_p_position(coins: Iterable[Ordinal]) -> bool:
    """True iff both the lam nim-sum and the block-value XOR vanish."""
    cs = canonical_position(coins)
    lam_xor = nim_sum_ord(omega_split(c)[0] for c in cs)
    if not lam_xor.is_zero:
        return False
    return nim_sum(welter_value_pairwise(ms) for ms in blocks(cs).values()) == 0


def legal_move_check(coins: Iterable[Ordinal], source: Ordinal, target: Ordinal) -> bool:
    """True iff source holds a coin, target is free and strictly smaller."""
    cs = set(canonical_position(coins))
    return source in cs and target not in cs and cmp(target, source) < 0


def winning_moves_transfinite(coins: Iterable[Ordinal]) -> list[Move]:
    """The complete, finite set of moves to value 0.

    With lam nim-sum L = 0 no block change can keep the omega part zero,
    so only within-block moves qualify; each block is scanned against the
    XOR of the others.  With L != 0 only block changes qualify, the target
    block is forced to lam (+) L per coin, and the finite part is the
    unique equation solution.  Empty exactly on P-positions.
    """
    cs = canonical_position(coins)
    table = blocks(cs)
    vals = {lam: welter_value_pairwise(ms) for lam, ms in table.items()}
    lam_of = [omega_split(c) for c in cs]
    big_l = nim_sum_ord(lam for lam, _ in lam_of)
    a0 = nim_sum(vals.values())

    moves = []
    if big_l.is_zero:
        if a0 == 0:
            return []
        for idx, coin in enumerate(cs):
            lam, m = lam_of[idx]
            block = table[lam]
            others = a0 ^ vals[lam]
            for t in range(m):
                if t in block:
                    continue
                replaced = (block - {m}) | {t}
                if welter_value_pairwise(replaced) == others:
                    moves.append(
                        Move(index=idx, source=coin, target=omega_unsplit(lam, t), value=ZERO)
                    )
    else:
        for idx, coin in enumerate(cs):
            lam, m = lam_of[idx]
            dest_lam = nim_sum_ord([lam, big_l])
            if not dest_lam < lam:
                continue
            source_rest = table[lam] - {m}
            dest = table.get(dest_lam, frozenset())
            needed = (
                a0
                ^ vals[lam]
                ^ welter_value_pairwise(source_rest)
                ^ vals.get(dest_lam, 0)
            )
            x = solve_welter(dest, needed)
            moves.append(
                Move(index=idx, source=coin, target=omega_unsplit(dest_lam, x), value=ZERO)
            )
    moves.sort(key=lambda mv: (mv.source, mv.target))
    return moves


def move_to_value_transfinite(coins: Iterable[Ordinal], beta: Ordinal) -> Move:
    """A legal move whose resulting position has Grundy value beta.

    Requires beta < the current value.  If beta keeps the omega part, some
    block's value can shrink so that the block XOR matches beta's finite
    part, and the witness is a within-block move.  Otherwise the lam's are
    treated as transfinite Nim heaps, one coin changes block along the Nim
    witness, and its finite part is solved for.
    """
    from .nim_transfinite import move_to_value_nim

    cs = canonical_position(coins)
    value = grundy_welter_transfinite(cs)
    if not beta < value:
        raise ValueError(f"no witness required for beta={beta} from value {value}")

    table = blocks(cs)
    vals = {lam: welter_value_pairwise(ms) for lam, ms in table.items()}
    lam_of = [omega_split(c) for c in cs]
    big_l, a0 = omega_split(value)
    beta_lam, b0 = omega_split(beta)

    if beta_lam == big_l:
        # Finite parts as Nim heaps of block values: some block admits
        # the decrease to c0, and the finite game provides the witness.
        for lam in sorted(table):
            c0 = vals[lam] ^ a0 ^ b0
            if c0 < vals[lam]:
                inner = move_to_value_finite(table[lam], c0)
                source = omega_unsplit(lam, inner.source)
                target = omega_unsplit(lam, inner.target)
                move = Move(index=cs.index(source), source=source, target=target, value=beta)
                break
        else:
            raise RuntimeError(f"no block admits the decrease to reach {beta}")
    else:
        # The Nim witness strictly lowers one lam, so the destination block
        # differs from the source block.
        nim_move = move_to_value_nim([lam for lam, _ in lam_of], beta_lam)
        idx = nim_move.index
        lam, m = lam_of[idx]
        dest_lam = nim_move.target
        source_rest = table[lam] - {m}
        dest = table.get(dest_lam, frozenset())
        needed = (
            b0
            ^ a0
            ^ vals[lam]
            ^ welter_value_pairwise(source_rest)
            ^ vals.get(dest_lam, 0)
        )
        x = solve_welter(dest, needed)
        move = Move(index=idx, source=cs[idx], target=omega_unsplit(dest_lam, x), value=beta)

    after = [c for c in cs if c != move.source] + [move.target]
    if grundy_welter_transfinite(after) != beta:
        raise RuntimeError(f"constructed move {move} does not reach value {beta}")
    return move
