"""Explicit block codes: storage, distances, and the systematic property.

Binary words are packed into Python ints with coordinate 1 in the most
significant position, so integer order coincides with lexicographic order of
the words.  Words over larger alphabets are kept as ``bytes``, one symbol per
byte.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

Word = Union[int, bytes]
RowLike = Union[Sequence[int], str, int, bytes]

# Above this many words the pairwise scan is vectorised with numpy.
_NUMPY_THRESHOLD = 256


class CodeError(ValueError):
    """Invalid code contents (wrong lengths, duplicates, bad symbols)."""


class CodeFormatError(CodeError):
    """Parse error in a code file; ``lineno`` is 1-based when known."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


def pack(row: Sequence[int]) -> int:
    """Pack a binary row into an int, first coordinate most significant."""
    value = 0
    for s in row:
        value = (value << 1) | s
    return value


def unpack(value: int, n: int) -> tuple[int, ...]:
    return tuple((value >> (n - 1 - i)) & 1 for i in range(n))


def hamming_distance(u: Sequence, v: Sequence) -> int:
    """Number of coordinates where ``u`` and ``v`` differ."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    return sum(a != b for a, b in zip(u, v))


def packed_distance(a: int, b: int) -> int:
    """Hamming distance of two packed binary words (population count of the XOR)."""
    return (a ^ b).bit_count()


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q**0.5) + 1))


@dataclass(frozen=True)
class CodeParams:
    q: int
    n: int
    M: int
    d: int | None
    k: int | None = None

    def __str__(self) -> str:
        size = f"{self.q}^{self.k}" if self.k is not None else str(self.M)
        return f"({self.n}, {size}, {self.d})_{self.q}"


class Code:
    """A finite set of length-n words over {0..q-1}; word order is kept as given."""

    def __init__(self, q: int, n: int, words: Iterable[RowLike]):
        if q < 2:
            raise CodeError(f"alphabet size q={q} must be at least 2")
        if n < 0:
            raise CodeError(f"length n={n} must be non-negative")
        self.q = q
        self.n = n
        packed = tuple(self._coerce(w) for w in words)
        if not packed:
            raise CodeError("a code needs at least one word")
        if len(set(packed)) != len(packed):
            dup = next(w for w, c in Counter(packed).items() if c > 1)
            raise CodeError(f"duplicate word {self._fmt(dup)}")
        self._words = packed

    def _coerce(self, w: RowLike) -> Word:
        if isinstance(w, int):
            if self.q != 2:
                raise CodeError("packed int words are only valid for q=2")
            if w < 0 or w >> self.n:
                raise CodeError(f"packed word {w} does not fit in {self.n} bits")
            return w
        if isinstance(w, str):
            try:
                w = [int(ch, 36) for ch in w]
            except ValueError:
                raise CodeError(f"non-digit symbol in word {w!r}") from None
        row = tuple(w)
        if len(row) != self.n:
            raise CodeError(f"word of length {len(row)} in a code of length {self.n}")
        for s in row:
            if not 0 <= s < self.q:
                raise CodeError(f"symbol {s} outside alphabet 0..{self.q - 1}")
        return pack(row) if self.q == 2 else bytes(row)

    def _fmt(self, w: Word) -> str:
        if self.q == 2:
            return format(w, f"0{self.n}b") if self.n else ""
        return "".join(str(s) for s in w)

    # -- views -------------------------------------------------------------
    @property
    def words(self) -> tuple[Word, ...]:
        """Stored words: packed ints for q=2, bytes otherwise."""
        return self._words

    @property
    def M(self) -> int:
        return len(self._words)

    def __len__(self) -> int:
        return len(self._words)

    def rows(self) -> list[tuple[int, ...]]:
        if self.q == 2:
            return [unpack(w, self.n) for w in self._words]
        return [tuple(w) for w in self._words]

    def strings(self) -> list[str]:
        return [self._fmt(w) for w in self._words]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.rows())

    def __contains__(self, w: RowLike) -> bool:
        try:
            return self._coerce(w) in self._wordset
        except CodeError:
            return False

    @cached_property
    def _wordset(self) -> frozenset:
        return frozenset(self._words)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return (self.q, self.n) == (other.q, other.n) and self._wordset == other._wordset

    def __hash__(self) -> int:
        return hash((self.q, self.n, self._wordset))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(q={self.q}, n={self.n}, M={self.M})"

    # -- parameters ----------------------------------------------------------
    @cached_property
    def d(self) -> int:
        return minimum_distance(self)

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.q, self.n, self.M, self.d if self.M >= 2 else None)

    def sorted(self) -> "Code":
        return Code(self.q, self.n, sorted(self._words))

    def with_words(self, words: Iterable[RowLike], n: int | None = None) -> "Code":
        return Code(self.q, self.n if n is None else n, words)


def _pairwise_min_numpy(code: Code) -> int:
    if code.q == 2:
        chunks = max(1, -(-code.n // 64))
        arr = np.zeros((code.M, chunks), dtype=np.uint64)
        mask = (1 << 64) - 1
        for i, w in enumerate(code.words):
            for c in range(chunks):
                arr[i, c] = (w >> (64 * c)) & mask
        best = code.n
        for i in range(code.M - 1):
            dist = np.bitwise_count(arr[i + 1 :] ^ arr[i]).sum(axis=1, dtype=np.int64)
            best = min(best, int(dist.min()))
            if best <= 1:
                break
        return best
    arr = np.frombuffer(b"".join(code.words), dtype=np.uint8).reshape(code.M, code.n)
    best = code.n
    for i in range(code.M - 1):
        best = min(best, int((arr[i + 1 :] != arr[i]).sum(axis=1).min()))
        if best <= 1:
            break
    return best


def minimum_distance(code: Code) -> int:
    """Exact minimum distance over all unordered pairs of words."""
    if code.M < 2:
        raise CodeError("minimum distance needs at least two words")
    if code.M > _NUMPY_THRESHOLD:
        return _pairwise_min_numpy(code)
    words = code.words
    if code.q == 2:
        return min(
            (words[i] ^ words[j]).bit_count()
            for i in range(len(words))
            for j in range(i + 1, len(words))
        )
    return min(hamming_distance(u, v) for u, v in combinations(words, 2))


def weight_distribution(code: Code) -> dict[int, int]:
    """Histogram ``weight -> count`` over all words, keys ascending."""
    if code.q == 2:
        counts = Counter(w.bit_count() for w in code.words)
    else:
        counts = Counter(sum(1 for s in w if s) for w in code.words)
    return dict(sorted(counts.items()))


@dataclass(frozen=True)
class SystematicCheck:
    """Outcome of :func:`check_systematic`; truthy iff the code is systematic."""

    ok: bool
    reason: str = ""
    message: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _prefix(code: Code, w: Word, coords: Sequence[int]) -> tuple[int, ...]:
    if code.q == 2:
        return tuple((w >> (code.n - 1 - c)) & 1 for c in coords)
    return tuple(w[c] for c in coords)


def check_systematic(code: Code, k: int, coords: Sequence[int] | None = None) -> SystematicCheck:
    """Check that the k-prefix (or the given 0-based ``coords``) hits every message once.

    On failure the certificate names a duplicated or missing message.
    """
    if coords is None:
        if not 0 <= k <= code.n:
            return SystematicCheck(False, f"k={k} is outside 0..{code.n}")
        coords = range(k)
    if code.M != code.q**k:
        return SystematicCheck(False, f"M={code.M} is not q^k={code.q**k}")
    seen: set[tuple[int, ...]] = set()
    for w in code.words:
        msg = _prefix(code, w, coords)
        if msg in seen:
            return SystematicCheck(False, "duplicated message", msg)
        seen.add(msg)
    # M = q^k distinct prefixes means every message occurs; kept for the certificate
    if len(seen) != code.q**k:
        for i in range(code.q**k):
            msg = tuple(int(c) for c in np.base_repr(i, code.q).zfill(k))
            if msg not in seen:
                return SystematicCheck(False, "missing message", msg)
    return SystematicCheck(True)


def find_information_set(code: Code, k: int) -> tuple[int, ...] | None:
    """First k-subset of coordinates (0-based, lexicographic) on which the code is systematic."""
    if code.M != code.q**k:
        return None
    for coords in combinations(range(code.n), k):
        if check_systematic(code, k, coords):
            return coords
    return None


class SystematicCode(Code):
    """A code whose first k coordinates enumerate all q^k messages exactly once."""

    def __init__(self, q: int, n: int, words: Iterable[RowLike], k: int):
        super().__init__(q, n, words)
        check = check_systematic(self, k)
        if not check:
            detail = f" {check.message}" if check.message is not None else ""
            raise CodeError(f"not systematic in the first {k} coordinates: {check.reason}{detail}")
        self.k = k

    @classmethod
    def from_code(cls, code: Code, k: int) -> "SystematicCode":
        return cls(code.q, code.n, code.words, k)

    @property
    def base(self) -> Code:
        return Code(self.q, self.n, self.words)

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.q, self.n, self.M, self.d if self.M >= 2 else None, self.k)

    @cached_property
    def _encoder(self) -> dict[tuple[int, ...], Word]:
        return {_prefix(self, w, range(self.k)): w for w in self.words}

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        """F(message): the unique codeword with this systematic part."""
        w = self._encoder[tuple(message)]
        return unpack(w, self.n) if self.q == 2 else tuple(w)

    def f(self, i: int, message: Sequence[int]) -> int:
        """Coordinate i (1-based) of F(message)."""
        return self.encode(message)[i - 1]

    def __repr__(self) -> str:
        return f"SystematicCode(q={self.q}, n={self.n}, k={self.k})"


def translate_to_zero(code: Code, w: RowLike) -> Code:
    """The translate {u - w : u in code}; requires prime q."""
    if not _is_prime(code.q):
        raise CodeError(f"translation needs a prime alphabet size, got q={code.q}")
    if w not in code:
        raise CodeError("translation word is not a codeword")
    tw = code._coerce(w)
    if code.q == 2:
        words: list[Word] = [u ^ tw for u in code.words]
    else:
        words = [bytes((a - b) % code.q for a, b in zip(u, tw)) for u in code.words]
    return Code(code.q, code.n, words)


# -- file formats ----------------------------------------------------------


def format_code(code: Code, comment: str | None = None) -> str:
    """Render in the text format: header ``q n`` then one word per line."""
    if code.q > 10:
        raise CodeError("the text format only supports q <= 10")
    lines = [f"{code.q} {code.n}"]
    if comment:
        lines += [f"# {line}" for line in comment.splitlines()]
    lines += code.strings()
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> Code:
    """Parse the text format (or its JSON mirror when the text starts with ``{``)."""
    if text.lstrip().startswith("{"):
        return code_from_json(text)
    header: tuple[int, int] | None = None
    words: list[str] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise CodeFormatError(f"expected header 'q n', got {line!r}", lineno)
            q, n = int(parts[0]), int(parts[1])
            if not 2 <= q <= 10:
                raise CodeFormatError(f"q={q} must be in 2..10", lineno)
            header = (q, n)
            continue
        q, n = header
        if len(line) != n:
            raise CodeFormatError(f"word has length {len(line)}, expected {n}", lineno)
        if any(not ch.isdigit() or int(ch) >= q for ch in line):
            raise CodeFormatError(f"word {line!r} has a symbol outside 0..{q - 1}", lineno)
        if line in seen:
            raise CodeFormatError(f"duplicate word {line!r} (first on line {seen[line]})", lineno)
        seen[line] = lineno
        words.append(line)
    if header is None:
        raise CodeFormatError("missing header line 'q n'")
    if not words:
        raise CodeFormatError("code file contains no words")
    return Code(header[0], header[1], words)


def code_to_json(code: Code) -> str:
    return json.dumps({"q": code.q, "n": code.n, "words": code.strings()})


def code_from_json(text: str) -> Code:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict) or not {"q", "n", "words"} <= obj.keys():
        raise CodeFormatError("JSON code must be an object with keys q, n, words")
    q, n, words = obj["q"], obj["n"], obj["words"]
    if not (isinstance(q, int) and isinstance(n, int) and isinstance(words, list)):
        raise CodeFormatError("JSON code fields have the wrong types")
    if not 2 <= q <= 10:
        raise CodeFormatError(f"q={q} must be in 2..10")
    for i, w in enumerate(words):
        if not isinstance(w, str) or len(w) != n or any(not ch.isdigit() or int(ch) >= q for ch in w):
            raise CodeFormatError(f"word #{i + 1} {w!r} is not {n} digits in 0..{q - 1}")
    if len(set(words)) != len(words):
        raise CodeFormatError("duplicate word in JSON code")
    if not words:
        raise CodeFormatError("code file contains no words")
    return Code(q, n, words)


def read_code(path: str | Path) -> Code:
    return parse_code(Path(path).read_text())


def write_code(code: Code, path: str | Path, fmt: str = "text") -> None:
    text = code_to_json(code) + "\n" if fmt == "json" else format_code(code)
    Path(path).write_text(text)
