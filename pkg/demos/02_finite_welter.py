# Finite Welter's Game: coins on squares 0,1,2,..., one per square, a move
# slides a coin to a smaller free square; whoever cannot move loses.
#
# Run:  python demos/02_finite_welter.py

from welter import (
    grundy_oracle,
    move_to_value_finite,
    solve_welter,
    welter_value_mating,
    welter_value_pairwise,
    winning_moves_finite,
)
from welter.welter_finite import mating_pairs

position = (1, 4, 9, 16, 25)
print("position:", position)
print("value by the pairwise definition:", welter_value_pairwise(position))
print("value by the mating method:      ", welter_value_mating(position))
pairs, lone = mating_pairs(position)
print("mating pairs:", pairs, "lone coin:", lone)

print()
print("the value really is the Grundy number; the mex oracle agrees on")
print("every small position, for example:")
for coins in ((2, 3, 4), (0, 1, 2), (1, 2, 3)):
    print(f"  {coins}: closed form {welter_value_pairwise(coins)}, "
          f"oracle {grundy_oracle('welter', coins)}")

print()
print("winning moves for {1, 2, 3}:")
for move in winning_moves_finite((1, 2, 3)):
    print(f"  {move.source} -> {move.target}")

print()
print("a coin can be steered to any value below the current one:")
move = move_to_value_finite((2, 3, 4), 1)
print(f"  from (2,3,4) to value 1: move {move.source} -> {move.target}")

print()
print("equation solving: [x|a1|...|an] = s has a unique nonnegative")
print("solution distinct from the others:")
print("  [x] = 5          -> x =", solve_welter((), 5))
print("  [x|16] = 13      -> x =", solve_welter((16,), 13))
print("  [x|4|9] = 0      -> x =", solve_welter((4, 9), 0))
