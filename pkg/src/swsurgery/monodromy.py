"""Genus-one mapping class group word calculus in SL(2,Z).

Words in the two Dehn twist generators are evaluated through the symplectic
representation a -> [[1,1],[0,1]], b -> [[1,0],[-1,1]] (uppercase letters are
inverses).  With this convention ab has trace 1 and order 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class IntegerMatrix2:
    """2x2 integer matrix with determinant +1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant must be +1")

    @classmethod
    def identity(cls) -> "IntegerMatrix2":
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: "IntegerMatrix2") -> "IntegerMatrix2":
        return IntegerMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, n: int) -> "IntegerMatrix2":
        if n < 0:
            return self.inverse() ** (-n)
        result = IntegerMatrix2.identity()
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def inverse(self) -> "IntegerMatrix2":
        return IntegerMatrix2(self.d, -self.b, -self.c, self.a)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


TWIST_A = IntegerMatrix2(1, 1, 0, 1)
TWIST_B = IntegerMatrix2(1, 0, -1, 1)
GENERATORS = {"a": TWIST_A, "b": TWIST_B, "A": TWIST_A.inverse(), "B": TWIST_B.inverse()}
_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}


@dataclass(frozen=True)
class Factor:
    """One top-level factor of a parsed word, boundaries as written."""

    text: str
    base_letters: tuple[str, ...]
    power: int

    @property
    def letters(self) -> tuple[str, ...]:
        return _expand(self.base_letters, self.power)


@dataclass(frozen=True)
class MCGWord:
    letters: tuple[str, ...]
    factors: tuple[Factor, ...] = ()

    def __str__(self) -> str:
        return "".join(self.letters)


def _expand(letters: tuple[str, ...], power: int) -> tuple[str, ...]:
    if power >= 0:
        return letters * power
    inv = tuple(_INVERSE[x] for x in reversed(letters))
    return inv * (-power)


def parse_word(text: str) -> MCGWord:
    """Parse a twist word.

    Grammar: word := atom+ with atom one of a, b, A, B (optionally ^int) or a
    parenthesized word with ^int; whitespace is ignored; negative and zero
    powers are allowed.  Raises WordSyntaxError with the offending position.
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_power() -> int:
        nonlocal pos
        skip_ws()
        if pos < n and text[pos] == "^":
            pos += 1
            skip_ws()
            start = pos
            if pos < n and text[pos] in "+-":
                pos += 1
            digits = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if pos == digits:
                raise WordSyntaxError("expected integer exponent after '^'", start)
            return int(text[start:pos])
        return 1

    def parse_sequence(depth: int) -> list[Factor]:
        nonlocal pos
        items: list[Factor] = []
        while True:
            skip_ws()
            if pos >= n:
                return items  # caller reports a missing ')' at the opening paren
            ch = text[pos]
            if ch == ")":
                if not depth:
                    raise WordSyntaxError("unbalanced ')'", pos)
                return items
            start = pos
            if ch in GENERATORS:
                pos += 1
                power = parse_power()
                items.append(Factor(text[start:pos], (ch,), power))
            elif ch == "(":
                pos += 1
                inner = parse_sequence(depth + 1)
                if pos >= n or text[pos] != ")":
                    raise WordSyntaxError("unbalanced '('", start)
                pos += 1
                power = parse_power()
                base = tuple(x for f in inner for x in f.letters)
                items.append(Factor(text[start:pos], base, power))
            else:
                raise WordSyntaxError(f"unexpected character {ch!r}", pos)

    factors = tuple(parse_sequence(0))
    letters = tuple(x for f in factors for x in f.letters)
    return MCGWord(letters, factors)


def evaluate(word: MCGWord | str) -> IntegerMatrix2:
    """Product of the generator matrices; the empty word is the identity."""
    if isinstance(word, str):
        word = parse_word(word)
    m = IntegerMatrix2.identity()
    for letter in word.letters:
        m = m @ GENERATORS[letter]
    return m


def parabolic_width(m: IntegerMatrix2) -> int | None:
    """For trace-2 non-identity matrices, the invariant gcd of m - id.

    This is 1 for a single Dehn twist (and any conjugate) and 6 for the
    monodromy of a fiber made of a cycle of six spheres.
    """
    if m.trace != 2 or m.is_identity():
        return None
    return gcd(gcd(abs(m.a - 1), abs(m.b)), gcd(abs(m.c), abs(m.d - 1)))


@dataclass(frozen=True)
class FactorDiagnostic:
    text: str
    power: int
    base_trace: int
    factor_trace: int
    parabolic: bool  # base is trace 2 and not the identity
    width: int | None  # gcd invariant of (factor - id) when the factor is parabolic


@dataclass(frozen=True)
class FactorizationReport:
    word: MCGWord
    expected: MCGWord | None
    lhs: IntegerMatrix2
    rhs: IntegerMatrix2
    equal: bool
    factors: tuple[FactorDiagnostic, ...]


def verify_factorization(word: MCGWord | str, expected: MCGWord | str | None = None) -> FactorizationReport:
    """Evaluate a factorized word against a target (identity when omitted).

    Inequality is reported, never raised.  Each top-level factor gets trace
    and parabolicity diagnostics; trace 2 marks a nodal-type (Dehn twist)
    conjugacy class.
    """
    if isinstance(word, str):
        word = parse_word(word)
    target = None
    if expected is not None:
        target = parse_word(expected) if isinstance(expected, str) else expected
    lhs = evaluate(word)
    rhs = evaluate(target) if target is not None else IntegerMatrix2.identity()
    diags = []
    for f in word.factors:
        base = evaluate(MCGWord(f.base_letters))
        factor_matrix = base ** f.power
        diags.append(
            FactorDiagnostic(
                text=f.text,
                power=f.power,
                base_trace=base.trace,
                factor_trace=factor_matrix.trace,
                parabolic=base.trace == 2 and not base.is_identity(),
                width=parabolic_width(factor_matrix),
            )
        )
    return FactorizationReport(word, target, lhs, rhs, lhs == rhs, tuple(diags))
