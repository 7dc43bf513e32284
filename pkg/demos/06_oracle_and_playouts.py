# The safety nets: a brute-force mex oracle for finite boards and seeded
# engine-vs-adversary playouts for the transfinite ones (where option sets
# are infinite and brute force is impossible).
#
# Run:  python demos/06_oracle_and_playouts.py

import itertools

from welter import (
    GrundyOracle,
    format_ordinal,
    nim_sum,
    parse_ordinal,
    run_playout,
    welter_value_pairwise,
)

print("mex oracle vs closed forms on small boards:")
welter_oracle = GrundyOracle("welter")
mismatches = checked = 0
for k in range(4):
    for coins in itertools.combinations(range(12), k):
        checked += 1
        if welter_value_pairwise(coins) != welter_oracle.value(coins):
            mismatches += 1
print(f"  welter: {checked} positions, {mismatches} mismatches")

nim_oracle = GrundyOracle("nim")
mismatches = checked = 0
for k in range(5):
    for heaps in itertools.combinations_with_replacement(range(10), k):
        checked += 1
        if nim_sum(heaps) != nim_oracle.value(heaps):
            mismatches += 1
print(f"  nim:    {checked} positions, {mismatches} mismatches")

print()
print("playouts: the engine moves to value 0 whenever it can, the")
print("adversary plays seeded random legal moves.")
coins = [parse_ordinal(s) for s in ("w^2*2+3", "w*5+1", "7", "w^2+w")]
print("start:", ", ".join(map(format_ordinal, coins)))
for seed in range(3):
    playout = run_playout(coins, "welter", "first", seed=seed)
    print(f"  seed {seed}: {len(playout.transcript)} moves, winner {playout.winner}")

print()
print("from a P-position the engine wins moving second:")
pairs = [parse_ordinal("w*3+4"), parse_ordinal("w*3+4")]
for seed in range(3):
    playout = run_playout(pairs, "nim", "second", seed=seed)
    print(f"  seed {seed}: {len(playout.transcript)} moves, winner {playout.winner}")
