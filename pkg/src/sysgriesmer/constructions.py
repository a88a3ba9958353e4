"""Explicit codes: a binary cyclic code from its defining set, systematic forms,
the (19, 16, 10) shift code and the (34, 2^4, 18) systematic code built from it.

The two explicit codes are rebuilt from their recipes and compared word for
word against the embedded listings on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .bounds import griesmer, max_reduced_dimension
from .code_core import Code, CodeError, SystematicCode, pack
from .gf2x import GF2Poly, generator_from_defining_set, poly_mul
from .transforms import concat_paired

DEFINING_SET_15 = frozenset({0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12})

SIMPLEX_GENERATOR_ROWS = (
    "100011101001011",
    "010011011010101",
    "001010111100110",
    "000101111111000",
)

SHIFT_BASE_WORD = "1100111101010000110"

SHIFT_CODE_LISTING = (
    "0000000000000000000",
    "1100111101010000110",
    "1001111010100001101",
    "0011110101000011011",
    "0111101010000110110",
    "1111010100001101100",
    "1110101000011011001",
    "1101010000110110011",
    "1010100001101100111",
    "0101000011011001111",
    "1010000110110011110",
    "0100001101100111101",
    "1000011011001111010",
    "0000110110011110101",
    "0001101100111101010",
    "0011011001111010100",
)

COUNTEREXAMPLE_34_LISTING = (
    "000000000000000" "0000000000000000000",
    "100011101001011" "1100111101010000110",
    "110000110011110" "1001111010100001101",
    "010011011010101" "0011110101000011011",
    "011001100110011" "0111101010000110110",
    "111010001111000" "1111010100001101100",
    "101001010101101" "1110101000011011001",
    "001010111100110" "1101010000110110011",
    "001111000011110" "1010100001101100111",
    "101100101010101" "0101000011011001111",
    "111111110000000" "1010000110110011110",
    "011100011001011" "0100001101100111101",
    "010110100101101" "1000011011001111010",
    "110101001100110" "0000110110011110101",
    "100110010110011" "0001101100111101010",
    "000101111111000" "0011011001111010100",
)


@dataclass(frozen=True)
class GeneratorMatrix:
    """k x n binary matrix with linearly independent rows."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise CodeError("generator matrix needs at least one row")
        n = len(self.rows[0])
        if any(len(r) != n for r in self.rows):
            raise CodeError("ragged generator matrix")
        if any(s not in (0, 1) for r in self.rows for s in r):
            raise CodeError("generator matrix entries must be bits")
        if _rank([pack(r) for r in self.rows]) != len(self.rows):
            raise CodeError("generator matrix rows are linearly dependent")

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "GeneratorMatrix":
        return cls(tuple(tuple(int(ch) for ch in r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def encode(self, message: Sequence[int]) -> int:
        w = 0
        for bit, row in zip(message, self.rows):
            if bit:
                w ^= pack(row)
        return w

    def code(self) -> Code:
        """All 2^k codewords, messages in lexicographic order."""
        return Code(2, self.n, [self.encode(m) for m in product((0, 1), repeat=self.k)])


def _rank(vectors: Iterable[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def _basis(words: Iterable[int]) -> list[int]:
    basis: list[int] = []
    for w in words:
        v = w
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(w)
    return basis


def _poly_to_word(p: GF2Poly, n: int) -> int:
    # coefficient of x^j goes to coordinate j+1
    return sum(1 << (n - 1 - j) for j, c in enumerate(p.coefficients) if c)


def cyclic_code(n: int, defset: Iterable[int]) -> Code:
    """All multiples m(x) g(x) with deg m < n - deg g, as length-n words."""
    g = generator_from_defining_set(n, defset)
    k = n - g.degree
    return Code(2, n, [_poly_to_word(poly_mul(GF2Poly(m), g), n) for m in range(1 << k)])


def is_linear(code: Code) -> bool:
    if code.q != 2:
        return False
    words = code._wordset
    return 0 in words and all((a ^ b) in words for a in code.words for b in code.words)


def systematic_form(source: GeneratorMatrix | Code) -> tuple[SystematicCode, tuple[int, ...]]:
    """Equivalent systematic code via elimination with leftmost-pivot column swaps.

    Returns the code (messages in lexicographic order) and the permutation:
    new coordinate j (0-based) is old coordinate ``perm[j]``.
    """
    if isinstance(source, GeneratorMatrix):
        n = source.n
        rows = [list(r) for r in source.rows]
    else:
        if not is_linear(source):
            raise CodeError("systematic_form needs a binary linear code")
        n = source.n
        rows = [list(Code(2, n, [w]).rows()[0]) for w in _basis(source.words)]
        if not rows:
            raise CodeError("the zero code has no information set")
    k = len(rows)
    perm = list(range(n))
    for r in range(k):
        pivot = next(
            (c for c in range(r, n) if any(rows[i][c] for i in range(r, k))),
            None,
        )
        if pivot is None:
            raise CodeError("rank-deficient generator")
        if pivot != r:
            for row in rows:
                row[r], row[pivot] = row[pivot], row[r]
            perm[r], perm[pivot] = perm[pivot], perm[r]
        src = next(i for i in range(r, k) if rows[i][r])
        rows[r], rows[src] = rows[src], rows[r]
        for i in range(k):
            if i != r and rows[i][r]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
    gm = GeneratorMatrix(tuple(tuple(r) for r in rows))
    return SystematicCode.from_code(gm.code(), k), tuple(perm)


def _gray_messages(k: int) -> list[tuple[int, ...]]:
    """Binary reflected Gray order, first message bit least significant."""
    out = []
    for j in range(1 << k):
        g = j ^ (j >> 1)
        out.append(tuple((g >> i) & 1 for i in range(k)))
    return out


def simplex_15_4_8() -> SystematicCode:
    """The systematic [15, 4, 8] code of the explicit generator matrix, messages in Gray order."""
    gm = GeneratorMatrix.from_strings(SIMPLEX_GENERATOR_ROWS)
    return SystematicCode(2, 15, [gm.encode(m) for m in _gray_messages(4)], 4)


def _rotate_left(word: str, j: int) -> str:
    return word[j:] + word[:j]


def levenshtein_19_16_10() -> Code:
    """Zero word plus the 15 left rotations of the base word."""
    words = ["0" * 19] + [_rotate_left(SHIFT_BASE_WORD, j) for j in range(15)]
    if tuple(words) != SHIFT_CODE_LISTING:
        raise AssertionError("rebuilt shift code differs from the embedded listing")
    return Code(2, 19, words)


def systematic_counterexample_34() -> SystematicCode:
    """Gray-ordered [15, 4, 8] words paired, in order, with the shift code words."""
    code = concat_paired(simplex_15_4_8(), levenshtein_19_16_10(), pairing=range(16))
    if tuple(code.strings()) != COUNTEREXAMPLE_34_LISTING:
        raise AssertionError("rebuilt (34, 16, 18) code differs from the embedded listing")
    return code


@dataclass(frozen=True)
class ConjectureTarget:
    q: int
    k: int
    d: int
    griesmer: int

    @property
    def length_to_beat(self) -> int:
        """A systematic code of this length or shorter would refute the bound."""
        return self.griesmer - 1


def conjecture_targets(r: int) -> list[ConjectureTarget]:
    """Binary systematic search targets with d = 2^r + 2 and every reduced dimension k."""
    if r < 3:
        raise ValueError("the conjectured family starts at r = 3")
    d = 2**r + 2
    return [ConjectureTarget(2, k, d, griesmer(2, k, d)) for k in range(1, max_reduced_dimension(2, d) + 1)]
