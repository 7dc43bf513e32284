import itertools

from hypothesis import given
from hypothesis import strategies as st

from welter import mating, mex, nim_sum

ints = st.integers(-256, 256)


class TestNimSum:
    def test_paper_example(self):
        assert nim_sum([1, 4, 9, 16, 25]) == 5

    def test_identity(self):
        for x in (-7, 0, 3, 1024):
            assert nim_sum([x, 0]) == x

    def test_with_minus_one(self):
        assert nim_sum([5, -1]) == -6

    def test_minus_one_lemma_range(self):
        for n in range(-512, 513):
            assert nim_sum([n, -1]) == -1 - n

    def test_matches_xor_on_nonnegatives(self):
        for x in range(0, 256, 7):
            for y in range(0, 256, 5):
                assert nim_sum([x, y]) == x ^ y

    @given(ints, ints, ints)
    def test_associative_commutative(self, a, b, c):
        assert nim_sum([a, b]) == nim_sum([b, a])
        assert nim_sum([nim_sum([a, b]), c]) == nim_sum([a, nim_sum([b, c])])


class TestMex:
    def test_examples(self):
        assert mex({0, 1, 2}) == 3
        assert mex(set()) == 0
        assert mex({1, 2, 5}) == 0

    @given(st.sets(st.integers(0, 40)))
    def test_definition(self, s):
        m = mex(s)
        assert m not in s
        assert all(v in s for v in range(m))


class TestMating:
    def test_different_parity_gives_one(self):
        assert mating(4, 9) == 1

    def test_equal_gives_minus_one(self):
        for x in (-3, 0, 7, 100):
            assert mating(x, x) == -1

    def test_valuation_example(self):
        # x - y = -10 has 2-adic valuation 1, so the value is 2^2 - 1;
        # cross-check the x^y^(x|y) = x^y-1 identity
        assert mating(6, 16) == 3
        assert nim_sum([6, 16, mating(6, 16)]) == nim_sum([6, 16]) - 1

    @given(ints, ints)
    def test_difference_xor_identity(self, x, y):
        if x != y:
            d = x - y
            assert mating(x, y) == nim_sum([d, d - 1])

    @given(ints, ints, ints)
    def test_translation_and_xor_invariance(self, x, y, a):
        assert mating(x + a, y + a) == mating(x, y)
        assert mating(x ^ a, y ^ a) == mating(x, y)

    @given(ints, ints)
    def test_symmetric(self, x, y):
        assert mating(x, y) == mating(y, x)

    @given(ints)
    def test_shift_identities(self, x):
        assert nim_sum([x, mating(x, 0)]) == x - 1
        assert nim_sum([x, mating(x, -1)]) == x + 1

    @given(ints, ints)
    def test_pair_identity(self, x, y):
        assert nim_sum([x, y, mating(x, y)]) == nim_sum([x, y]) - 1

    def test_triangle_lemma_small_range(self):
        for x, y, z in itertools.combinations(range(32), 3):
            values = sorted([mating(x, y), mating(x, z), mating(y, z)])
            assert values[0] == values[1] < values[2]
