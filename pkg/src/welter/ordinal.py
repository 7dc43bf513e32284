"""Exact arithmetic for ordinals below epsilon_0 in Cantor normal form.

An ordinal is a tuple of (exponent, coefficient) pairs with strictly
decreasing exponents and positive integer coefficients; the empty tuple
denotes 0.  The value represented is

    w^e0 * c0 + w^e1 * c1 + ... + w^ek * ck        (e0 > e1 > ... > ek)

where each exponent is itself an Ordinal, so the representable values are
exactly the ordinals below epsilon_0.  Coefficients are unbounded Python
ints; positions such as w * 2**64 never overflow.

Text grammar (ASCII, 'w' stands for omega):

    ordinal := term ('+' term)* | '0'
    term    := 'w' ('^' exp)? ('*' nat)? | nat
    exp     := nat | '(' ordinal ')'

Whitespace is ignored.  Exponents must strictly decrease left to right;
non-canonical sums such as "w+w^2" are rejected rather than normalised,
as are zero coefficients ("w*0").
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """An ordinal below epsilon_0 in Cantor normal form."""

    terms: tuple[tuple["Ordinal", int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for item in self.terms:
            if not (isinstance(item, tuple) and len(item) == 2):
                raise ValueError("terms must be (exponent, coefficient) pairs")
            exp, coeff = item
            if not isinstance(exp, Ordinal):
                raise ValueError("exponent must be an Ordinal")
            if not isinstance(coeff, int) or isinstance(coeff, bool) or coeff < 1:
                raise ValueError("coefficient must be a positive integer")
            if prev is not None and cmp(prev, exp) <= 0:
                raise ValueError("exponents must strictly decrease")
            prev = exp

    @staticmethod
    def from_int(n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are nonnegative")
        if n == 0:
            return ZERO
        return Ordinal(((ZERO, n),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    def to_int(self) -> int:
        """The natural number this ordinal denotes; ValueError if infinite."""
        if not self.terms:
            return 0
        if not self.is_finite:
            raise ValueError(f"{self} is not a finite ordinal")
        return self.terms[0][1]

    def __lt__(self, other: "Ordinal") -> bool:
        return cmp(self, other) < 0

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({format_ordinal(self)!r})"


ZERO = Ordinal()
ONE = Ordinal.from_int(1)
OMEGA = Ordinal(((ONE, 1),))


def cmp(a: Ordinal, b: Ordinal) -> int:
    """Compare two ordinals: -1 (less), 0 (equal) or 1 (greater).

    Term sequences are compared lexicographically, exponents (recursively)
    before coefficients; with canonical CNF this is exactly ordinal order.
    """
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def nim_sum_ord(ordinals: Iterable[Ordinal]) -> Ordinal:
    """Ordinal nim-sum: coefficients at each exponent combine by XOR."""
    coeffs: dict[Ordinal, int] = {}
    for a in ordinals:
        for exp, c in a.terms:
            coeffs[exp] = coeffs.get(exp, 0) ^ c
    terms = sorted(
        ((e, c) for e, c in coeffs.items() if c),
        key=lambda t: t[0],
        reverse=True,
    )
    return Ordinal(tuple(terms))


def coefficient(a: Ordinal, exp: Ordinal) -> int:
    """The coefficient of w^exp in a's normal form (0 if absent)."""
    for e, c in a.terms:
        if e == exp:
            return c
    return 0


def omega_split(a: Ordinal) -> tuple[Ordinal, int]:
    """Write a as w*lam + m with m finite; return (lam, m).

    Termwise: w^g*c with g >= 1 becomes w^d*c where 1+d = g, i.e. d = g-1
    for finite g and d = g for infinite g.
    """
    m = 0
    lam_terms = []
    for exp, c in a.terms:
        if exp.is_zero:
            m = c
        elif exp.is_finite:
            lam_terms.append((Ordinal.from_int(exp.to_int() - 1), c))
        else:
            lam_terms.append((exp, c))
    return Ordinal(tuple(lam_terms)), m


def omega_unsplit(lam: Ordinal, m: int) -> Ordinal:
    """Inverse of omega_split: the ordinal w*lam + m."""
    if m < 0:
        raise ValueError("finite part must be nonnegative")
    terms = []
    for exp, c in lam.terms:
        if exp.is_finite:
            terms.append((Ordinal.from_int(exp.to_int() + 1), c))
        else:
            terms.append((exp, c))
    if m:
        terms.append((ZERO, m))
    return Ordinal(tuple(terms))


class OrdinalParseError(ValueError):
    """Raised on malformed ordinal text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> OrdinalParseError:
        return OrdinalParseError(message, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def parse_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        return int(self.text[start:self.pos])

    def parse_exp(self) -> Ordinal:
        ch = self.peek()
        if ch.isdigit():
            return Ordinal.from_int(self.parse_nat())
        if self.take("("):
            inner = self.parse_sum()
            if not self.take(")"):
                raise self.error("expected ')'")
            return inner
        raise self.error("expected a number or '(' after '^'")

    def parse_term(self) -> tuple[Ordinal, int, int]:
        ch = self.peek()
        start = self.pos
        if ch == "w":
            self.pos += 1
            exp = ONE
            if self.take("^"):
                exp = self.parse_exp()
            coeff = 1
            if self.take("*"):
                coeff = self.parse_nat()
            return exp, coeff, start
        if ch.isdigit():
            return ZERO, self.parse_nat(), start
        raise self.error("expected a term ('w' or a number)")

    def parse_sum(self) -> Ordinal:
        raw = [self.parse_term()]
        while self.take("+"):
            raw.append(self.parse_term())
        if len(raw) == 1 and raw[0][0].is_zero and raw[0][1] == 0:
            return ZERO
        terms = []
        prev_exp: Ordinal | None = None
        for exp, coeff, pos in raw:
            if coeff == 0:
                raise self.error("zero coefficient", pos)
            if prev_exp is not None and cmp(prev_exp, exp) <= 0:
                raise self.error("non-canonical term order (exponents must strictly decrease)", pos)
            terms.append((exp, coeff))
            prev_exp = exp
        return Ordinal(tuple(terms))


def parse_ordinal(text: str) -> Ordinal:
    """Parse the ASCII grammar ("w^2*3+9") into a canonical Ordinal."""
    p = _Parser(text)
    value = p.parse_sum()
    p.skip_ws()
    if p.pos != len(text):
        raise p.error("unexpected trailing input")
    return value


def format_ordinal(a: Ordinal) -> str:
    """Render a in the text grammar; omits '^1' and '*1'; 0 for zero."""
    if not a.terms:
        return "0"
    parts = []
    for exp, coeff in a.terms:
        if exp.is_zero:
            parts.append(str(coeff))
            continue
        s = "w"
        if exp != ONE:
            if exp.is_finite:
                s += f"^{exp.to_int()}"
            else:
                s += f"^({format_ordinal(exp)})"
        if coeff != 1:
            s += f"*{coeff}"
        parts.append(s)
    return "+".join(parts)


def ordinal_to_json(a: Ordinal) -> dict:
    """JSON encoding: {"terms": [{"exp": ..., "coeff": n}, ...]}."""
    return {"terms": [{"exp": ordinal_to_json(e), "coeff": c} for e, c in a.terms]}


def ordinal_from_json(obj: dict) -> Ordinal:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise ValueError("expected an object with a 'terms' list")
    terms = []
    for entry in obj["terms"]:
        if not isinstance(entry, dict) or "exp" not in entry or "coeff" not in entry:
            raise ValueError("each term needs 'exp' and 'coeff'")
        terms.append((ordinal_from_json(entry["exp"]), entry["coeff"]))
    return Ordinal(tuple(terms))


def _exponents_below(exp: Ordinal, rng: random.Random, budget: int) -> list[Ordinal]:
    """A small deterministic selection of exponents strictly below exp."""
    out = [ZERO]
    if exp.is_finite:
        k = exp.to_int()
        for j in sorted({1, k // 2, k - 1}):
            if 0 < j < k:
                out.append(Ordinal.from_int(j))
    else:
        out.append(ONE)
        for _ in range(2):
            out.append(sample_below(exp, rng.getrandbits(32), max(2, budget // 4)))
    seen: set[Ordinal] = set()
    uniq = []
    for e in out:
        if e not in seen and cmp(e, exp) < 0:
            seen.add(e)
            uniq.append(e)
    return uniq


def _candidates_below(a: Ordinal, rng: random.Random, budget: int) -> list[Ordinal]:
    cap = budget * 4
    seen: set[Ordinal] = set()
    out: list[Ordinal] = []

    def add(x: Ordinal) -> None:
        if x not in seen:
            seen.add(x)
            out.append(x)

    for i, (exp, coeff) in enumerate(a.terms):
        prefix = a.terms[:i]
        for c in range(min(coeff, budget)):
            base = prefix + ((exp, c),) if c else prefix
            add(Ordinal(base))
            if not exp.is_zero:
                for tail_exp in _exponents_below(exp, rng, budget):
                    for tc in range(1, budget):
                        add(Ordinal(base + ((tail_exp, tc),)))
                        if len(out) >= cap:
                            return out
            if len(out) >= cap:
                return out
    return out


def sample_below(a: Ordinal, seed: int, budget: int) -> Ordinal:
    """A seed-deterministic ordinal strictly below a.

    The pick is uniform over a finite candidate set of size <= budget whose
    coefficients are capped by budget; raises ValueError for a = 0 since no
    smaller ordinal exists.
    """
    if a.is_zero:
        raise ValueError("no ordinal below 0")
    if budget < 1:
        raise ValueError("budget must be positive")
    rng = random.Random(seed)
    cands = _candidates_below(a, rng, budget)
    if len(cands) > budget:
        cands.sort()
        step = len(cands) / budget
        cands = [cands[int(i * step)] for i in range(budget)]
    return rng.choice(cands)
