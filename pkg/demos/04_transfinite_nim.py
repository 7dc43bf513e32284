# Transfinite Nim: heap sizes are ordinals, a move replaces one heap by any
# strictly smaller ordinal.  The Grundy value is the ordinal nim-sum.
#
# Run:  python demos/04_transfinite_nim.py

from welter import (
    format_ordinal,
    grundy_nim,
    move_to_value_nim,
    parse_ordinal,
    run_playout,
    winning_moves_nim,
)

heaps = [parse_ordinal(s) for s in ("1", "w*2+4", "w^2*3+9", "w^2*2+w*4+16", "w^2+w*5+25")]
print("heaps:", ", ".join(map(format_ordinal, heaps)))

value = grundy_nim(heaps)
print("Grundy value:", format_ordinal(value))
print("verdict:", "P-position" if value.is_zero else "N-position (first player wins)")

print()
print("the complete set of good moves:")
for move in winning_moves_nim(heaps):
    print(f"  heap {move.index}: {format_ordinal(move.source)} -> {format_ordinal(move.target)}")

print()
print("any value below the current one is reachable in one move, e.g.:")
for target in ("w*3+4", "w*2+7", "5", "0"):
    move = move_to_value_nim(heaps, parse_ordinal(target))
    print(f"  to {target:6}: {format_ordinal(move.source)} -> {format_ordinal(move.target)}")

print()
print("a full playout against a random adversary (engine moves first):")
playout = run_playout(heaps, "nim", "first", seed=7)
for mover, move in playout.transcript:
    print(f"  {mover:9} {format_ordinal(move.source)} -> {format_ordinal(move.target)}")
print("winner:", playout.winner)
