import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from welter import (
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

from helpers import ordinals, polynomial_value


def o(text):
    return parse_ordinal(text)


class TestParse:
    def test_paper_example_term(self):
        assert o("w^2*3+9") == Ordinal(((Ordinal.from_int(2), 3), (ZERO, 9)))

    def test_zero(self):
        assert o("0") == ZERO
        assert o("  0  ") == ZERO

    def test_zero_coefficient_rejected(self):
        with pytest.raises(OrdinalParseError):
            o("w*0+3")
        with pytest.raises(OrdinalParseError):
            o("w+0")

    def test_non_canonical_order_rejected(self):
        with pytest.raises(OrdinalParseError):
            o("w+w^2")
        with pytest.raises(OrdinalParseError):
            o("w+w")
        with pytest.raises(OrdinalParseError):
            o("3+5")

    def test_syntax_error_reports_position(self):
        with pytest.raises(OrdinalParseError) as exc:
            o("w^2+q")
        assert exc.value.position == 4
        with pytest.raises(OrdinalParseError):
            o("w^")
        with pytest.raises(OrdinalParseError):
            o("w*2 4")

    def test_whitespace_ignored(self):
        assert o(" w * 2 + 4 ") == o("w*2+4")

    def test_nested_exponent(self):
        a = o("w^(w+1)*2+w^2")
        assert a.terms[0][0] == o("w+1")
        assert a.terms[0][1] == 2

    def test_big_coefficient(self):
        a = o(f"w*{2**64}")
        assert a.terms[0][1] == 2**64


class TestFormat:
    def test_examples(self):
        assert format_ordinal(o("w*3+5")) == "w*3+5"
        assert format_ordinal(ZERO) == "0"
        assert format_ordinal(o("w^2+w*4+6")) == "w^2+w*4+6"

    def test_omits_unit_markers(self):
        assert format_ordinal(OMEGA) == "w"
        assert format_ordinal(o("w^2")) == "w^2"

    def test_infinite_exponent_parenthesized(self):
        assert format_ordinal(o("w^(w)")) == "w^(w)"

    @settings(max_examples=200)
    @given(ordinals())
    def test_round_trip(self, a):
        assert parse_ordinal(format_ordinal(a)) == a


class TestCmp:
    def test_omega_exceeds_every_natural(self):
        assert cmp(OMEGA, Ordinal.from_int(1000000)) > 0

    def test_equal(self):
        assert cmp(o("w*2+4"), o("w*2+4")) == 0

    def test_derived_example_against_injection(self):
        a, b = o("w^2*2+1"), o("w^2+w*9")
        assert cmp(a, b) > 0
        assert polynomial_value(a, 10) > polynomial_value(b, 10)

    def test_zero_least(self):
        for text in ("1", "w", "w^2*3+9"):
            assert cmp(o(text), ZERO) > 0

    @settings(max_examples=200)
    @given(ordinals(depth=1, max_coeff=9), ordinals(depth=1, max_coeff=9))
    def test_agrees_with_polynomial_injection(self, a, b):
        lhs = cmp(a, b)
        rhs = (polynomial_value(a, 10) > polynomial_value(b, 10)) - (
            polynomial_value(a, 10) < polynomial_value(b, 10)
        )
        assert lhs == rhs

    @settings(max_examples=100)
    @given(ordinals(), ordinals(), ordinals())
    def test_total_order(self, a, b, c):
        assert cmp(a, b) == -cmp(b, a)
        if cmp(a, b) <= 0 and cmp(b, c) <= 0:
            assert cmp(a, c) <= 0


class TestNimSumOrd:
    def test_paper_example(self):
        parts = [o("1"), o("w*2+4"), o("w^2*3+9"), o("w^2*2+w*4+16"), o("w^2+w*5+25")]
        assert nim_sum_ord(parts) == o("w*3+5")

    def test_self_inverse(self):
        a = o("w^2+w*4+16")
        assert nim_sum_ord([a, a]) == ZERO

    def test_coefficientwise(self):
        assert nim_sum_ord([o("w+4"), o("w+5")]) == ONE

    @settings(max_examples=150)
    @given(ordinals(), ordinals(), ordinals())
    def test_commutative_associative(self, a, b, c):
        assert nim_sum_ord([a, b]) == nim_sum_ord([b, a])
        assert nim_sum_ord([nim_sum_ord([a, b]), c]) == nim_sum_ord([a, nim_sum_ord([b, c])])

    @settings(max_examples=100)
    @given(ordinals())
    def test_identity(self, a):
        assert nim_sum_ord([a, ZERO]) == a
        assert nim_sum_ord([a, a]) == ZERO

    @given(st.integers(0, 4096), st.integers(0, 4096))
    def test_matches_finite_xor(self, m, n):
        s = nim_sum_ord([Ordinal.from_int(m), Ordinal.from_int(n)])
        assert s == Ordinal.from_int(m ^ n)


class TestOmegaSplit:
    def test_examples(self):
        assert omega_split(o("w^2+w*4+16")) == (o("w+4"), 16)
        assert omega_split(o("7")) == (ZERO, 7)
        assert omega_split(o("w*2+9")) == (o("2"), 9)

    def test_unsplit_examples(self):
        assert omega_unsplit(o("2"), 4) == o("w*2+4")
        assert omega_unsplit(ZERO, 0) == ZERO
        assert omega_unsplit(o("w+4"), 30) == o("w^2+w*4+30")

    @settings(max_examples=200)
    @given(ordinals())
    def test_unsplit_of_split_is_identity(self, a):
        lam, m = omega_split(a)
        assert omega_unsplit(lam, m) == a

    @settings(max_examples=200)
    @given(ordinals(), st.integers(0, 99))
    def test_split_of_unsplit_is_identity(self, lam, m):
        assert omega_split(omega_unsplit(lam, m)) == (lam, m)


class TestSampleBelow:
    def test_below_one_is_zero(self):
        for seed in range(10):
            assert sample_below(ONE, seed, 16) == ZERO

    def test_below_omega_is_finite_below_budget(self):
        for seed in range(20):
            got = sample_below(OMEGA, seed, budget=12)
            assert got.is_finite
            assert got.to_int() < 12

    def test_membership_for_two_term_ordinal(self):
        a = o("w*2+4")
        allowed = {o(f"w*2+{k}") for k in range(1, 4)} | {o("w*2")}
        allowed |= {omega_unsplit(ONE, k) for k in range(0, 64)}
        allowed |= {Ordinal.from_int(k) for k in range(0, 64)}
        for seed in range(40):
            assert sample_below(a, seed, budget=16) in allowed

    def test_always_strictly_below(self):
        rng = random.Random(5)
        from helpers import random_ordinal_below_w3

        for seed in range(200):
            a = random_ordinal_below_w3(rng)
            if a.is_zero:
                continue
            assert cmp(sample_below(a, seed, 16), a) < 0

    def test_deterministic(self):
        a = o("w^2*3+w*5+9")
        assert sample_below(a, 123, 32) == sample_below(a, 123, 32)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            sample_below(ZERO, 0, 8)


class TestJson:
    def test_zero_encoding(self):
        assert ordinal_to_json(ZERO) == {"terms": []}

    def test_round_trip_example(self):
        a = o("w^2+w*5+25")
        assert ordinal_from_json(ordinal_to_json(a)) == a

    @settings(max_examples=100)
    @given(ordinals())
    def test_round_trip(self, a):
        assert ordinal_from_json(ordinal_to_json(a)) == a

    def test_bad_payload(self):
        with pytest.raises(ValueError):
            ordinal_from_json({"nope": 1})


class TestInvariants:
    def test_zero_coefficient_construction_rejected(self):
        with pytest.raises(ValueError):
            Ordinal(((ZERO, 0),))

    def test_increasing_exponents_rejected(self):
        with pytest.raises(ValueError):
            Ordinal(((ZERO, 1), (ONE, 1)))

    def test_negative_coefficient_rejected(self):
        with pytest.raises(ValueError):
            Ordinal(((ONE, -2),))
