"""The move record shared by all solvers.

A move relocates one coin (or shrinks one heap): ``index`` identifies the
coin in the canonically sorted position (for sets of coins) or the heap in
the given sequence (for heap lists).  ``source`` and ``target`` are ints
in the finite games and Ordinals in the transfinite ones.  Analysis
routines fill in ``value``, the Grundy value of the resulting position.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Move:
    index: int
    source: Any
    target: Any
    value: Any = None

    def __str__(self) -> str:
        return f"{self.source} -> {self.target}"
