# Ordinals below epsilon_0 in Cantor normal form: parsing, printing,
# comparison, nim-sum, and splitting off the omega quotient.
#
# Run:  python demos/03_ordinal_arithmetic.py

from welter import (
    OMEGA,
    Ordinal,
    cmp,
    format_ordinal,
    nim_sum_ord,
    omega_split,
    omega_unsplit,
    parse_ordinal,
    sample_below,
)

print("the ASCII grammar uses 'w' for omega:")
for text in ("0", "7", "w", "w*3+5", "w^2*3+9", "w^2+w*4+16", "w^(w)+w^2*2"):
    a = parse_ordinal(text)
    print(f"  {text:14} -> {format_ordinal(a)}")

print()
print("comparison is the genuine ordinal order:")
million = Ordinal.from_int(1_000_000)
print("  w > 1000000:", cmp(OMEGA, million) > 0)
print("  w^2*2+1 > w^2+w*9:", cmp(parse_ordinal("w^2*2+1"), parse_ordinal("w^2+w*9")) > 0)

print()
print("ordinal nim-sum works coefficientwise in Cantor normal form:")
parts = [parse_ordinal(s) for s in ("1", "w*2+4", "w^2*3+9", "w^2*2+w*4+16", "w^2+w*5+25")]
print("  summands:", ", ".join(map(format_ordinal, parts)))
print("  nim-sum: ", format_ordinal(nim_sum_ord(parts)))

print()
print("every ordinal splits uniquely as w*lambda + m with finite m:")
for text in ("w^2+w*4+16", "w*2+9", "7"):
    lam, m = omega_split(parse_ordinal(text))
    print(f"  {text:12} -> lambda = {format_ordinal(lam)}, m = {m}")
print("  and back:", format_ordinal(omega_unsplit(parse_ordinal("w+4"), 30)))

print()
print("seeded sampling below an ordinal (for adversary play):")
a = parse_ordinal("w*2+4")
for seed in range(6):
    print(f"  seed {seed}: {format_ordinal(sample_below(a, seed, budget=16))}")
