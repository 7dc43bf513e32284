"""Transfinite Nim: heaps of ordinal size, a move replaces one heap by any
strictly smaller ordinal.

The Grundy value of a position is the ordinal nim-sum of the heaps; the
winning strategy mirrors Bouton's, applied to CNF coefficients.
"""

from __future__ import annotations

from typing import Iterable

from .moves import Move
from .ordinal import ZERO, Ordinal, cmp, coefficient, nim_sum_ord


def canonical_heaps(heaps: Iterable[Ordinal]) -> tuple[Ordinal, ...]:
    hs = tuple(heaps)
    for h in hs:
        if not isinstance(h, Ordinal):
            raise ValueError(f"heap sizes must be Ordinals, got {h!r}")
    return hs


def grundy_nim(heaps: Iterable[Ordinal]) -> Ordinal:
    """Grundy value: the ordinal nim-sum of the heap sizes (0 for none)."""
    return nim_sum_ord(canonical_heaps(heaps))


def winning_moves_nim(heaps: Iterable[Ordinal]) -> list[Move]:
    """All moves to value 0: heap i goes to heap_i (+) s whenever that is
    smaller; s is the position value.  Empty exactly on P-positions."""
    hs = canonical_heaps(heaps)
    s = grundy_nim(hs)
    if s.is_zero:
        return []
    moves = []
    for i, h in enumerate(hs):
        t = nim_sum_ord([h, s])
        if t < h:
            moves.append(Move(index=i, source=h, target=t, value=ZERO))
    return moves


def move_to_value_nim(heaps: Iterable[Ordinal], beta: Ordinal) -> Move:
    """A legal move after which the heaps nim-sum to beta (< current value).

    At the highest exponent where the value and beta differ the value's
    coefficient is larger, so some heap's coefficient there shrinks under
    XOR with the difference; that heap's coefficients at and below the
    exponent are rewritten to force the target sum.
    """
    hs = canonical_heaps(heaps)
    s = grundy_nim(hs)
    if not beta < s:
        raise ValueError(f"no witness required for beta={beta} from value {s}")

    grid = sorted(
        {e for h in (*hs, s, beta) for e, _ in h.terms},
        reverse=True,
    )
    pivot = None
    for e in grid:
        if coefficient(s, e) != coefficient(beta, e):
            pivot = e
            break
    assert pivot is not None
    a_p = coefficient(s, pivot)
    b_p = coefficient(beta, pivot)
    assert a_p > b_p
    x = a_p ^ b_p

    for i, h in enumerate(hs):
        m = coefficient(h, pivot)
        if m ^ x < m:
            break
    else:
        raise RuntimeError("no heap admits the coefficient decrease")

    terms = []
    for e in grid:
        c = coefficient(h, e)
        rel = cmp(e, pivot)
        if rel > 0:
            new = c
        elif rel == 0:
            new = c ^ x
        else:
            new = c ^ coefficient(s, e) ^ coefficient(beta, e)
        if new:
            terms.append((e, new))
    target = Ordinal(tuple(terms))
    assert target < h
    return Move(index=i, source=h, target=target, value=beta)
