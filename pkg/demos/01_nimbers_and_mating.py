# Carryless binary addition (nim-sum), mex, and the mating function.
#
# Run:  python demos/01_nimbers_and_mating.py

from welter import mating, mex, nim_sum

print("nim-sum is XOR on nonnegative integers:")
print("  1 (+) 4 (+) 9 (+) 16 (+) 25 =", nim_sum([1, 4, 9, 16, 25]))

print()
print("Python ints are already two's complement of unbounded width,")
print("so the extension to negatives comes for free:")
for n in (0, 5, 12, -3):
    print(f"  {n} (+) -1 = {nim_sum([n, -1])}   (always -1 - n)")

print()
print("mex picks the least missing nonnegative integer:")
for s in ({0, 1, 2}, set(), {1, 2, 5}):
    print(f"  mex({sorted(s)}) = {mex(s)}")

print()
print("the mating value (x|y) is 2^(n+1)-1 where 2^n exactly divides x-y,")
print("and -1 when the arguments are equal:")
for x, y in ((4, 9), (6, 16), (7, 7), (8, 24)):
    print(f"  ({x}|{y}) = {mating(x, y)}")

print()
print("three laws the test suite checks across large ranges:")
x, y = 6, 16
print(f"  (x|y) = (x-y) (+) (x-y-1):        {mating(x, y)} = {nim_sum([x - y, x - y - 1])}")
print(f"  x (+) y (+) (x|y) = x (+) y - 1:  {nim_sum([x, y, mating(x, y)])} = {nim_sum([x, y]) - 1}")
print("  among (x|y), (x|z), (y|z) two are equal, the third is larger:")
x, y, z = 3, 11, 24
print(f"  ({x},{y},{z}) -> {mating(x, y)}, {mating(x, z)}, {mating(y, z)}")
