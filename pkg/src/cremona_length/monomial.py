"""Monomial Cremona transformations as 2x2 integer matrices.

A matrix ``[[a, b], [c, d]]`` stands for ``[x^a y^b : x^c y^d : 1]``.  The
non-negative part of SL2(Z) is the free monoid on ``L = [[1,0],[1,1]]`` and
``R = [[1,1],[0,1]]``; words are stored as exponent tuples ``(s1, ..., sn)``
meaning ``... L^s2 R^s1`` (the rightmost block is always an R-block).

All arithmetic is on Python ints; nothing here touches floating point.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

__all__ = [
    "DEGREE_MATRIX_A",
    "DEGREE_MATRIX_B",
    "IDENTITY",
    "NU",
    "TAU",
    "IntMatrix2",
    "InvalidMatrix",
    "L",
    "NormalizationWitness",
    "P",
    "R",
    "cf_to_word",
    "cf_value",
    "conjugate_to_ordered",
    "cyclic_rotations",
    "degree_matrix_power",
    "degree_sequence",
    "dynamical_length",
    "ell",
    "factor_word",
    "gl2_length",
    "is_ordered",
    "letters",
    "monomial_degree",
    "ordered_to_cf",
    "parse_matrix",
    "parse_word",
    "sym3",
    "word_matrix",
]


class InvalidMatrix(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix2:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, rows) -> IntMatrix2:
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, o: IntMatrix2) -> IntMatrix2:
        return IntMatrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __neg__(self) -> IntMatrix2:
        return IntMatrix2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, k: int) -> IntMatrix2:
        return IntMatrix2(k * self.a, k * self.b, k * self.c, k * self.d)

    def __pow__(self, n: int) -> IntMatrix2:
        base = self if n >= 0 else self.inverse()
        out, n = IDENTITY, abs(n)
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def inverse(self) -> IntMatrix2:
        det = self.det
        if det not in (1, -1):
            raise InvalidMatrix(f"{self} is not invertible over Z (det {det})")
        return IntMatrix2(det * self.d, -det * self.b, -det * self.c, det * self.a)

    def is_nonnegative(self) -> bool:
        return min(self.a, self.b, self.c, self.d) >= 0

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENTITY = IntMatrix2(1, 0, 0, 1)
L = IntMatrix2(1, 0, 1, 1)
R = IntMatrix2(1, 1, 0, 1)
TAU = IntMatrix2(0, 1, 1, 0)
NU = IntMatrix2(1, -1, 0, -1)
# rotation used to swap the sign pattern of the off-diagonal entries
P = IntMatrix2(0, 1, -1, 0)


def sym3() -> list[IntMatrix2]:
    """The six-element subgroup generated by ``TAU`` and ``NU``, in BFS order."""
    found = [IDENTITY]
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for m in frontier:
            for g in (TAU, NU):
                p = m @ g
                if p not in found:
                    found.append(p)
                    nxt.append(p)
        frontier = nxt
    return found


_SYM3 = tuple(sym3())


# ------------------------------------------------------------------ syntax

_MATRIX_RE = re.compile(r"^\[\[(-?\d+),(-?\d+)\],\[(-?\d+),(-?\d+)\]\]$")


def parse_matrix(text: str) -> IntMatrix2:
    """Parse ``[[a,b],[c,d]]`` (whitespace ignored)."""
    m = _MATRIX_RE.match(re.sub(r"\s+", "", text))
    if not m:
        raise SyntaxError(f"cannot parse matrix {text!r}")
    return IntMatrix2(*(int(g) for g in m.groups()))


def parse_word(text: str) -> tuple[int, ...]:
    """Parse comma-separated positive exponents; the empty string is the empty word."""
    body = re.sub(r"\s+", "", text)
    if body in ("", "()"):
        return ()
    try:
        word = tuple(int(x) for x in body.strip("()").split(","))
    except ValueError:
        raise SyntaxError(f"cannot parse word {text!r}") from None
    if any(s < 1 for s in word):
        raise SyntaxError(f"word exponents must be positive: {text!r}")
    return word


# ------------------------------------------------------------------- words

def word_matrix(word) -> IntMatrix2:
    """``M(s1, ..., sn) = ... L^s2 R^s1``."""
    m = IDENTITY
    for i, s in enumerate(word):
        m = (R if i % 2 == 0 else L) ** s @ m
    return m


def letters(word) -> str:
    """Left-to-right letter string of ``M(word)``, e.g. ``(5, 1) -> 'LRRRRR'``."""
    blocks = [("R" if i % 2 == 0 else "L") * s for i, s in enumerate(word)]
    return "".join(reversed(blocks))


def _peel(m: IntMatrix2) -> list[tuple[str, int]]:
    """Blocks of a non-negative SL2 matrix, rightmost block first."""
    if not m.is_nonnegative():
        raise InvalidMatrix(f"{m} has a negative entry")
    if m.det != 1:
        raise InvalidMatrix(f"{m} does not have determinant 1")
    a, b, c, d = m.a, m.b, m.c, m.d
    blocks: list[tuple[str, int]] = []
    while (a, b, c, d) != (1, 0, 0, 1):
        if a <= b and c <= d:
            # M = M' R^k; the largest k keeping M' non-negative
            k = b // a if c == 0 else min(b // a, d // c)
            b, d = b - k * a, d - k * c
            blocks.append(("R", k))
        else:
            k = c // d if b == 0 else min(a // b, c // d)
            a, c = a - k * b, c - k * d
            blocks.append(("L", k))
    return blocks


def factor_word(m: IntMatrix2) -> tuple[tuple[int, ...], bool]:
    """Factor ``m`` in the free monoid ``<L, R>``.

    Returns ``(word, flipped)``.  When ``m`` ends in ``L`` the factorization of
    ``TAU m TAU`` (which swaps the letters) is returned and ``flipped`` is set,
    so that ``word_matrix(word)`` equals ``m`` or ``TAU m TAU`` respectively.
    """
    blocks = _peel(m)
    flipped = bool(blocks) and blocks[0][0] == "L"
    return tuple(k for _, k in blocks), flipped


def ell(word) -> int:
    """Length in the Cremona group of ``M(word)``."""
    s = list(word)
    total = 0
    while True:
        n = len(s)
        if n == 0:
            return total
        if n == 1:
            return total + 1
        if n == 2:
            return total + (1 if s[1] == 1 else 2)
        if s[1] >= 2:
            s = [s[1] - 1] + s[2:]
        else:
            s = s[2:]
        total += 1


# ----------------------------------------------------------- GL2 reduction

@dataclass(frozen=True)
class NormalizationWitness:
    """``sign * A @ M @ B == word_matrix(word)`` with ``A, B`` in Sym3."""

    A: IntMatrix2
    B: IntMatrix2
    sign: int
    word: tuple[int, ...]

    def check(self, m: IntMatrix2) -> bool:
        return (self.A @ m @ self.B).scale(self.sign) == word_matrix(self.word)


def gl2_length(m: IntMatrix2) -> tuple[int, NormalizationWitness]:
    """Length of the monomial map of ``m`` together with a checkable witness.

    ``m`` in Sym3 gives 0 and ``m`` in ``-Sym3`` gives 1 (these six maps are
    quadratic).  Otherwise some ``sign * A m B`` is a non-identity element of
    the monoid ending in ``R`` and the length is ``ell`` of its word.
    """
    if m.det not in (1, -1):
        raise InvalidMatrix(f"|det| of {m} is {abs(m.det)}, expected 1")
    fallback = None
    for sign in (1, -1):
        for A in _SYM3:
            for B in _SYM3:
                n = (A @ m @ B).scale(sign)
                if n == IDENTITY:
                    return (0 if sign == 1 else 1), NormalizationWitness(A, B, sign, ())
                if fallback is None and n.det == 1 and n.is_nonnegative() and n.a <= n.b and n.c <= n.d:
                    fallback = (A, B, sign, n)
    if fallback is None:
        raise AssertionError(f"no non-negative normal form found for {m}")
    A, B, sign, n = fallback
    word, flipped = factor_word(n)
    assert not flipped
    return ell(word), NormalizationWitness(A, B, sign, word)


# -------------------------------------------------- continued fractions

def is_ordered(m: IntMatrix2) -> bool:
    return m.det == 1 and 0 <= m.a <= m.b <= m.d and m.a <= m.c <= m.d


def cf_value(terms) -> Fraction:
    """Value of ``[t0; t1, ..., tk]``."""
    terms = list(terms)
    return reduce(lambda acc, t: t + 1 / acc, reversed(terms[:-1]), Fraction(terms[-1]))


def ordered_to_cf(m: IntMatrix2) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For ordered ``m = M(s1..sn)``, return the expansions
    ``b/a = [s1; ..., s(n-1)]`` and ``d/c = [s1; ..., sn]``."""
    if not is_ordered(m):
        raise InvalidMatrix(f"{m} is not ordered")
    if m == IDENTITY:
        raise InvalidMatrix("the identity has no continued fraction")
    word, flipped = factor_word(m)
    assert not flipped and len(word) % 2 == 0
    return word[:-1], word


def cf_to_word(word) -> IntMatrix2:
    """Inverse of :func:`ordered_to_cf`: the ordered matrix of an even word."""
    word = tuple(word)
    if len(word) < 2 or len(word) % 2:
        raise ValueError(f"expected an even number of exponents, got {len(word)}")
    if any(s < 1 for s in word):
        raise ValueError("exponents must be positive")
    return word_matrix(word)


# ------------------------------------------------- conjugation / dynamics

def _between_roots(m: IntMatrix2, num: int, den: int) -> bool:
    """True when ``num/den`` lies strictly between the two eigen-slopes.

    The slopes are the roots of ``b x^2 + (a - d) x - c``; ``den > 0``.
    """
    f = m.b * num * num + (m.a - m.d) * num * den - m.c * den * den
    return m.b * f < 0


def _vertex(m: IntMatrix2) -> Fraction:
    return Fraction(m.d - m.a, 2 * m.b)


def conjugate_to_ordered(m: IntMatrix2) -> tuple[tuple[int, ...], IntMatrix2]:
    """Find ``C`` in GL2(Z) with ``C m C^-1`` ordered.

    Requires ``det m = 1`` and ``trace m >= 3``.  Returns the even word of
    the ordered conjugate and ``C``.
    """
    if m.det != 1 or m.trace < 3:
        raise InvalidMatrix(f"{m}: need det 1 and trace >= 3")
    conj = IDENTITY
    cur = m

    def by(x: IntMatrix2) -> None:
        nonlocal conj, cur
        conj = x @ conj
        cur = x @ cur @ x.inverse()

    # b, c != 0 since the trace excludes unipotent matrices
    for _ in range(10_000):
        if cur.b * cur.c > 0:
            if cur.b < 0:
                by(P)
            break
        v = _vertex(cur)
        lo = v.numerator // v.denominator
        t = next((t for t in (lo, lo + 1) if _between_roots(cur, t, 1)), None)
        if t is not None:
            by(L ** (-t))
            continue
        # both slopes in (lo, lo + 1)
        by(L ** (-lo))
        if not _between_roots(cur, 1, 2) and _vertex(cur) > Fraction(1, 2):
            by(L ** -1)
        by(P)
    else:  # pragma: no cover
        raise AssertionError(f"conjugation loop did not terminate for {m}")

    blocks = [(x, k) for x, k in reversed(_peel(cur))]  # left to right
    while blocks[-1][0] == "L" or blocks[0][0] == "R":
        if blocks[-1][0] == "L":
            _, k = blocks.pop()
            by(L ** k)
            if blocks and blocks[0][0] == "L":
                blocks[0] = ("L", blocks[0][1] + k)
            else:
                blocks.insert(0, ("L", k))
        else:
            _, k = blocks.pop(0)
            by(R ** (-k))
            if blocks and blocks[-1][0] == "R":
                blocks[-1] = ("R", blocks[-1][1] + k)
            else:
                blocks.append(("R", k))
    word = tuple(k for _, k in reversed(blocks))
    if word_matrix(word) != cur or not is_ordered(cur):
        raise AssertionError(f"conjugation witness failed for {m}")
    return word, conj


def cyclic_rotations(word) -> list[tuple[int, ...]]:
    w = tuple(word)
    return [w[i:] + w[:i] for i in range(len(w))]


def dynamical_length(m: IntMatrix2) -> Fraction:
    """Asymptotic length per iterate, as an exact fraction."""
    if m.det == -1:
        return dynamical_length(m @ m) / 2
    if m.det != 1:
        raise InvalidMatrix(f"|det| of {m} is {abs(m.det)}, expected 1")
    if abs(m.trace) <= 2:
        return Fraction(0)
    word, _ = conjugate_to_ordered(m if m.trace > 0 else -m)
    for rot in cyclic_rotations(word):
        if rot[0] >= 2:
            return Fraction(ell(rot))
    return Fraction(len(word) // 2)


def monomial_degree(m: IntMatrix2) -> int:
    """Degree of the map of a non-negative determinant-one matrix."""
    if not m.is_nonnegative():
        raise InvalidMatrix(f"{m} has a negative entry")
    if m.det != 1:
        raise InvalidMatrix(f"{m} does not have determinant 1")
    return max(m.a + m.b, m.c + m.d)


# ------------------------------------------------------ 4x4 degree matrices

Matrix4 = tuple[tuple[int, ...], ...]

DEGREE_MATRIX_A: Matrix4 = (
    (3, 2, 1, 1),
    (0, 0, 0, 0),
    (-1, -1, 0, 0),
    (0, 0, 0, 0),
)
DEGREE_MATRIX_B: Matrix4 = (
    (3, 1, 1, 2),
    (-1, 0, -1, -1),
    (-1, 0, 0, -1),
    (0, 0, 0, 0),
)


def _mul4(x: Matrix4, y: Matrix4) -> Matrix4:
    return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(4)) for j in range(4)) for i in range(4))


def degree_matrix_power(which: str, n: int) -> Matrix4:
    """Exact ``n``-th power of the fixed 4x4 matrix ``"A"`` or ``"B"``."""
    base = {"A": DEGREE_MATRIX_A, "B": DEGREE_MATRIX_B}[which]
    if n < 0:
        raise ValueError("n must be non-negative")
    out: Matrix4 = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
    while n:
        if n & 1:
            out = _mul4(out, base)
        base = _mul4(base, base)
        n >>= 1
    return out


def degree_sequence(n: int) -> list[int]:
    """``[d_-1, d_0, ..., d_n]`` with ``d_-1 = 0``, ``d_0 = 1``, ``d_k = 3 d_(k-1) - d_(k-2)``."""
    seq = [0, 1]
    for _ in range(n):
        seq.append(3 * seq[-1] - seq[-2])
    return seq
