"""Code surgeries: puncturing, shortening, distance reduction, parity, repetition, concatenation.

Coordinates are 1-based throughout this module.  Every function returns a new
code; inputs are never modified.
"""

from __future__ import annotations

import logging
from typing import Sequence

from .code_core import Code, CodeError, SystematicCode, Word

log = logging.getLogger(__name__)


def _delete_coordinate(code: Code, i: int) -> list[Word]:
    """Words with coordinate i removed (duplicates kept, order kept)."""
    n = code.n
    if code.q == 2:
        shift = n - i  # bit position of coordinate i
        low_mask = (1 << shift) - 1
        return [((w >> (shift + 1)) << shift) | (w & low_mask) for w in code.words]
    return [w[: i - 1] + w[i:] for w in code.words]


def puncture(code: Code, i: int) -> Code:
    """Delete coordinate i from every word; merged duplicates are logged."""
    if not 1 <= i <= code.n:
        raise IndexError(f"coordinate {i} outside 1..{code.n}")
    words = list(dict.fromkeys(_delete_coordinate(code, i)))
    if len(words) < code.M:
        log.info("puncturing coordinate %d merged %d words", i, code.M - len(words))
    if isinstance(code, SystematicCode) and i > code.k and len(words) == code.M:
        return SystematicCode(code.q, code.n - 1, words, code.k)
    return Code(code.q, code.n - 1, words)


def _symbol(code: Code, w: Word, i: int) -> int:
    if code.q == 2:
        return (w >> (code.n - i)) & 1
    return w[i - 1]


def shorten_systematic(code: SystematicCode, i: int) -> SystematicCode:
    """Keep the words with 0 at systematic coordinate i, then delete coordinate i."""
    if not 1 <= i <= code.k:
        raise IndexError(f"coordinate {i} is not systematic (k={code.k})")
    sub = Code(code.q, code.n, [w for w in code.words if _symbol(code, w, i) == 0])
    return SystematicCode(code.q, code.n - 1, _delete_coordinate(sub, i), code.k - 1)


def reduce_distance(code: SystematicCode, target_d: int) -> SystematicCode:
    """Puncture non-systematic coordinates, rightmost first, until the distance is ``target_d``."""
    d = code.d
    if not 1 <= target_d <= d:
        raise ValueError(f"target distance {target_d} outside 1..{d}")
    cur = code
    while cur.d > target_d:
        if cur.n <= cur.k:
            raise CodeError("ran out of non-systematic coordinates before reaching the target")
        prev = cur.d
        cur = SystematicCode(cur.q, cur.n - 1, _delete_coordinate(cur, cur.n), cur.k)
        if cur.d < target_d or cur.d < prev - 1:
            raise CodeError(f"distance fell from {prev} to {cur.d}, below target {target_d}")
    return cur


def extend_parity(code: Code) -> Code:
    """Append an overall parity bit to every binary word."""
    if code.q != 2:
        raise CodeError("parity extension is defined for binary codes only")
    words = [(w << 1) | (w.bit_count() & 1) for w in code.words]
    if isinstance(code, SystematicCode):
        return SystematicCode(2, code.n + 1, words, code.k)
    return Code(2, code.n + 1, words)


def repeat(code: Code, t: int) -> Code:
    """Concatenate every word with itself t times."""
    if t < 1:
        raise ValueError("repetition factor must be at least 1")
    if code.q == 2:
        words: list[Word] = []
        for w in code.words:
            acc = 0
            for _ in range(t):
                acc = (acc << code.n) | w
            words.append(acc)
    else:
        words = [w * t for w in code.words]
    if isinstance(code, SystematicCode):
        return SystematicCode(code.q, code.n * t, words, code.k)
    return Code(code.q, code.n * t, words)


def concat_paired(a: Code, b: Code, pairing: Sequence[int] | None = None) -> Code:
    """Words u || b[pairing[j]] for the j-th word u of ``a``.

    ``pairing`` lists, for each word of ``a`` in stored order, the index of its
    partner in ``b``.  Without it, words are paired in sorted order on both
    sides.  A systematic ``a`` gives a systematic result of the same dimension.
    """
    if a.q != b.q:
        raise CodeError(f"alphabet mismatch: q={a.q} vs q={b.q}")
    if a.M != b.M:
        raise CodeError(f"size mismatch: {a.M} vs {b.M} words")
    if pairing is None:
        order_a = sorted(range(a.M), key=lambda j: a.words[j])
        order_b = sorted(range(b.M), key=lambda j: b.words[j])
        pairing = [0] * a.M
        for ja, jb in zip(order_a, order_b):
            pairing[ja] = jb
    if sorted(pairing) != list(range(b.M)):
        raise CodeError("pairing is not a bijection")
    if a.q == 2:
        words: list[Word] = [(u << b.n) | b.words[j] for u, j in zip(a.words, pairing)]
    else:
        words = [u + b.words[j] for u, j in zip(a.words, pairing)]
    if isinstance(a, SystematicCode):
        return SystematicCode(a.q, a.n + b.n, words, a.k)
    return Code(a.q, a.n + b.n, words)
