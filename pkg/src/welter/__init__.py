"""Exact solver engine for Nim and Welter's Game, finite and transfinite.

Grundy values come from closed forms (XOR nim-sums, the Welter function
and their ordinal extensions), winning moves from the constructive
strategies behind them, and everything is cross-checked against a
brute-force mex oracle on finite boards.
"""

from .moves import Move
from .nimber import mating, mex, nim_sum
from .nim_transfinite import grundy_nim, move_to_value_nim, winning_moves_nim
from .oracle import (
    GrundyOracle,
    OracleBudgetExceeded,
    Playout,
    PlayoutCeilingExceeded,
    grundy_oracle,
    run_playout,
)
from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    OrdinalParseError,
    cmp,
    format_ordinal,
    nim_sum_ord,
    omega_split,
    omega_unsplit,
    ordinal_from_json,
    ordinal_to_json,
    parse_ordinal,
    sample_below,
)
from .welter_finite import (
    AnimatingFn,
    move_to_value_finite,
    solve_welter,
    welter_value_mating,
    welter_value_pairwise,
    winning_moves_finite,
)
from .welter_transfinite import (
    blocks,
    grundy_welter_transfinite,
    is_p_position,
    legal_move_check,
    move_to_value_transfinite,
    winning_moves_transfinite,
)

__version__ = "0.1.0"

__all__ = [
    "AnimatingFn",
    "GrundyOracle",
    "Move",
    "OMEGA",
    "ONE",
    "OracleBudgetExceeded",
    "Ordinal",
    "OrdinalParseError",
    "Playout",
    "PlayoutCeilingExceeded",
    "ZERO",
    "blocks",
    "cmp",
    "format_ordinal",
    "grundy_nim",
    "grundy_oracle",
    "grundy_welter_transfinite",
    "is_p_position",
    "legal_move_check",
    "mating",
    "mex",
    "move_to_value_finite",
    "move_to_value_nim",
    "move_to_value_transfinite",
    "nim_sum",
    "nim_sum_ord",
    "omega_split",
    "omega_unsplit",
    "ordinal_from_json",
    "ordinal_to_json",
    "parse_ordinal",
    "run_playout",
    "sample_below",
    "solve_welter",
    "welter_value_mating",
    "welter_value_pairwise",
    "winning_moves_finite",
    "winning_moves_nim",
    "winning_moves_transfinite",
]
