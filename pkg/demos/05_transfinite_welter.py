# Transfinite Welter's Game: the belt is indexed by ordinals, one coin per
# square.  Writing each coin as w*lambda + m groups the coins into blocks
# of finite parts; the Grundy value is w*(nim-sum of the lambdas) plus the
# XOR of the blocks' finite Welter values.
#
# Run:  python demos/05_transfinite_welter.py

from welter import (
    blocks,
    format_ordinal,
    grundy_welter_transfinite,
    is_p_position,
    parse_ordinal,
    welter_value_pairwise,
    winning_moves_transfinite,
)

coins = [parse_ordinal(s) for s in ("1", "w*2+4", "w*2+9", "w^2+w*4+16", "w^2+w*5+25")]
print("coins:", ", ".join(map(format_ordinal, coins)))

table = blocks(coins)
print()
print("block decomposition (lambda -> finite parts -> block value):")
for lam in sorted(table):
    squares = sorted(table[lam])
    print(f"  lambda {format_ordinal(lam):5} squares {squares}  value {welter_value_pairwise(squares)}")

value = grundy_welter_transfinite(coins)
print()
print("Grundy value:", format_ordinal(value))
print("P-position?", is_p_position(coins))

print()
print("winning moves (complete):")
for move in winning_moves_transfinite(coins):
    print(f"  {format_ordinal(move.source)} -> {format_ordinal(move.target)}")

print()
print("why the finite part is 30 and not 6: after the block change the")
print("finite parts must satisfy 1 (+) [4|9] (+) [x|16] = 0, that is")
print("[x|16] = 13; since [x|16] = x (+) 16 - 1, x = 14 (+) 16 = 30.")
print("check with 6:  1 (+) 12 (+) [6|16]  =", 1 ^ 12 ^ welter_value_pairwise([6, 16]))
print("check with 30: 1 (+) 12 (+) [30|16] =", 1 ^ 12 ^ welter_value_pairwise([30, 16]))

after = [parse_ordinal(s) for s in ("1", "w*2+4", "w*2+9", "w^2+w*4+16", "w^2+w*4+30")]
print()
print("after the good move the position is a P-position:", is_p_position(after))
