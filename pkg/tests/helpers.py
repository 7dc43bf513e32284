"""Shared samplers and little oracles used across the test modules."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from welter import ONE, ZERO, Ordinal

TWO = Ordinal.from_int(2)


def finite_ordinals(max_n: int = 50):
    return st.integers(0, max_n).map(Ordinal.from_int)


@st.composite
def ordinals(draw, depth: int = 2, max_terms: int = 3, max_coeff: int = 9):
    """Random CNF ordinals with exponent nesting up to `depth`."""
    if depth == 0:
        return draw(finite_ordinals(max_coeff))
    exps = draw(
        st.lists(ordinals(depth=depth - 1, max_terms=max_terms, max_coeff=max_coeff),
                 min_size=0, max_size=max_terms, unique=True)
    )
    exps.sort(reverse=True)
    terms = tuple((e, draw(st.integers(1, max_coeff))) for e in exps)
    return Ordinal(terms)


def polynomial_value(a: Ordinal, base: int) -> int:
    """Evaluate an ordinal with finite exponents as a base-`base` numeral.

    With every coefficient below the base this injection is order
    preserving, so it serves as an independent comparison oracle.
    """
    total = 0
    for e, c in a.terms:
        assert c < base, "injection needs coefficients below the base"
        total += base ** e.to_int() * c
    return total


def random_ordinal_below_w3(rng: random.Random, coeff_bound: int = 8) -> Ordinal:
    """An ordinal w^2*a + w*b + c with all coefficients below coeff_bound."""
    terms = []
    a, b, c = (rng.randrange(coeff_bound) for _ in range(3))
    if a:
        terms.append((TWO, a))
    if b:
        terms.append((ONE, b))
    if c:
        terms.append((ZERO, c))
    return Ordinal(tuple(terms))


def random_transfinite_position(
    rng: random.Random, max_coins: int = 5, coeff_bound: int = 8
) -> tuple[Ordinal, ...]:
    n = rng.randint(1, max_coins)
    coins: set[Ordinal] = set()
    while len(coins) < n:
        coins.add(random_ordinal_below_w3(rng, coeff_bound))
    return tuple(sorted(coins))


def random_heaps(
    rng: random.Random, max_heaps: int = 4, coeff_bound: int = 8
) -> tuple[Ordinal, ...]:
    n = rng.randint(1, max_heaps)
    return tuple(random_ordinal_below_w3(rng, coeff_bound) for _ in range(n))


def random_finite_position(
    rng: random.Random, max_coins: int = 6, square_bound: int = 64
) -> tuple[int, ...]:
    n = rng.randint(1, max_coins)
    return tuple(sorted(rng.sample(range(square_bound), n)))
