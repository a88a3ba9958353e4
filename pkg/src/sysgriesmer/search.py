"""Exhaustive search for the shortest systematic code with given dimension and distance.

The search is row-wise: messages are visited in lexicographic order and each
gets the lexicographically smallest admissible tuple of check symbols.  Two
symmetries are factored out:

* translation: the all-zero message maps to the all-zero word;
* for q = 2, permuting check columns: only assignments whose check columns are
  lexicographically non-decreasing (read top to bottom) are explored.

Both keep at least one member of every equivalence class, so exhausting the
tree proves nonexistence.  With a fixed exploration order the first witness
found is the same on every run.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from itertools import product

from .bounds import SYSTEMATIC, best_lower_bound, griesmer, max_reduced_dimension
from .code_core import Code, SystematicCode, check_systematic, minimum_distance

FOUND = "found"
NONE = "none"
TIMEOUT = "timeout"

EXACT = "exact"
LOWER_ONLY = "lower-bound-only"

_CLOCK_EVERY = 2048


class _Timeout(Exception):
    pass


@dataclass
class Existence:
    status: str
    witness: Code | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.status == FOUND


@dataclass
class SearchOutcome:
    q: int
    k: int
    d: int
    status: str
    value: int | None
    lower: int
    upper: int | None
    witness: SystematicCode | None = None
    nodes_explored: int = 0
    budget_used: float = 0.0
    lower_source: str = ""

    def to_dict(self) -> dict:
        """JSON-ready dict; the wall-clock time is left out so output is reproducible."""
        return {
            "q": self.q,
            "k": self.k,
            "d": self.d,
            "status": self.status,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "lower_source": self.lower_source,
            "nodes_explored": self.nodes_explored,
            "witness": self.witness.strings() if self.witness is not None else None,
        }


class _BinaryDFS:
    def __init__(self, k: int, d: int, n: int, deadline: float | None, symmetry: bool = True):
        self.k, self.d, self.n = k, d, n
        self.r = n - k
        self.deadline = deadline
        self.symmetry = symmetry
        self.nodes = 0
        self.M = 1 << k
        # need[t][u]: distance the check parts of messages t and u must supply
        self.need = [[d - (t ^ u).bit_count() for u in range(t)] for t in range(self.M)]
        self.tie_mask = (1 << max(self.r - 1, 0)) - 1
        self.suffix = [0] * self.M

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CLOCK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise _Timeout

    def _admissible(self, t: int, s: int, ties: int) -> int | None:
        """New tie mask if suffix s fits message t, else None."""
        if self.symmetry:
            hi = s >> 1
            if hi & ~s & ties:
                return None
            ties = ties & ~(hi ^ s)
        need = self.need[t]
        suffix = self.suffix
        for u in range(t):
            nu = need[u]
            if nu > 0 and (s ^ suffix[u]).bit_count() < nu:
                return None
        return ties

    def run(self, t: int, ties: int) -> bool:
        if t == self.M:
            return True
        for s in range(1 << self.r):
            self._tick()
            nt = self._admissible(t, s, ties)
            if nt is None:
                continue
            self.suffix[t] = s
            if self.run(t + 1, nt):
                return True
        return False

    def first_choices(self) -> list[tuple[int, int]]:
        """Admissible (suffix, ties) for message 1 given message 0 -> 0."""
        out = []
        for s in range(1 << self.r):
            nt = self._admissible(1, s, self.tie_mask)
            if nt is not None:
                out.append((s, nt))
        return out

    def witness(self) -> SystematicCode:
        words = [(m << self.r) | self.suffix[m] for m in range(self.M)]
        return SystematicCode(2, self.n, words, self.k)


def _generic_search(q: int, k: int, d: int, n: int, deadline: float | None) -> Existence:
    r = n - k
    messages = list(product(range(q), repeat=k))
    suffixes = list(product(range(q), repeat=r))
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def rec(t: int) -> bool:
        nonlocal nodes
        if t == len(messages):
            return True
        cands = [suffixes[0]] if t == 0 else suffixes
        for s in cands:
            nodes += 1
            if deadline is not None and nodes % _CLOCK_EVERY == 0 and time.monotonic() > deadline:
                raise _Timeout
            word = messages[t] + s
            if all(sum(a != b for a, b in zip(word, w)) >= d for w in chosen):
                chosen.append(word)
                if rec(t + 1):
                    return True
                chosen.pop()
        return False

    try:
        found = rec(0)
    except _Timeout:
        return Existence(TIMEOUT, nodes=nodes)
    if found:
        return Existence(FOUND, SystematicCode(q, n, chosen, k), nodes)
    return Existence(NONE, nodes=nodes)


def _subtree(args: tuple[int, int, int, int, int, float | None]) -> tuple[str, list[int] | None, int]:
    k, d, n, s1, ties, deadline = args
    dfs = _BinaryDFS(k, d, n, deadline)
    dfs.suffix[1] = s1
    try:
        ok = dfs.run(2, ties)
    except _Timeout:
        return TIMEOUT, None, dfs.nodes
    return (FOUND, list(dfs.suffix), dfs.nodes) if ok else (NONE, None, dfs.nodes)


def _parallel_binary(dfs: _BinaryDFS, deadline: float | None, workers: int) -> Existence:
    choices = dfs.first_choices()
    results: dict[int, tuple[str, list[int] | None, int]] = {}
    best = len(choices)  # index of least successful subtree so far
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = {
            pool.submit(_subtree, (dfs.k, dfs.d, dfs.n, s, ties, deadline)): i
            for i, (s, ties) in enumerate(choices)
        }
        pending = set(futures)
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                i = futures[fut]
                results[i] = fut.result()
                if results[i][0] == FOUND:
                    best = min(best, i)
            # subtrees after the best success cannot change the answer
            for fut in list(pending):
                if futures[fut] > best and fut.cancel():
                    pending.discard(fut)
    nodes = len(choices) + sum(r[2] for r in results.values())
    for i in range(len(choices)):
        status, suffix, _ = results[i]
        if status == FOUND:
            dfs.suffix = suffix
            return Existence(FOUND, dfs.witness(), nodes)
        if status == TIMEOUT:
            return Existence(TIMEOUT, nodes=nodes)
    return Existence(NONE, nodes=nodes)


def exists_systematic(
    q: int,
    k: int,
    d: int,
    n: int,
    budget: float | None = None,
    *,
    symmetry: bool = True,
    workers: int = 1,
) -> Existence:
    """Decide whether an (n, q^k, d)_q systematic code exists.

    ``budget`` is wall time in seconds (None: unlimited).  ``workers > 1``
    splits the tree on the second message's check symbols; the witness is the
    same as in a single-process run.
    """
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    if n < k:
        raise ValueError(f"length n={n} is smaller than the dimension k={k}")
    if q != 2 and k >= 3:
        raise ValueError("q > 2 is only supported for k <= 2")
    if n == k and d >= 2:
        return Existence(NONE)
    deadline = None if budget is None else time.monotonic() + budget
    if q != 2:
        return _generic_search(q, k, d, n, deadline)
    dfs = _BinaryDFS(k, d, n, deadline, symmetry)
    if workers > 1 and k >= 2 and symmetry:
        return _parallel_binary(dfs, deadline, workers)
    try:
        ok = dfs.run(1, dfs.tie_mask)
    except _Timeout:
        return Existence(TIMEOUT, nodes=dfs.nodes)
    return Existence(FOUND, dfs.witness(), dfs.nodes) if ok else Existence(NONE, nodes=dfs.nodes)


def default_budget() -> float | None:
    """Seconds from ``SYSGRIESMER_BUDGET``; unset or empty means unlimited."""
    raw = os.environ.get("SYSGRIESMER_BUDGET", "").strip()
    return float(raw) if raw else None


def compute_S(
    q: int,
    k: int,
    d: int,
    budget: float | None = None,
    *,
    max_n: int | None = None,
    use_bounds: bool = True,
    workers: int = 1,
) -> SearchOutcome:
    """Smallest n admitting an (n, q^k, d)_q systematic code, by ascending scan.

    With ``use_bounds`` the scan starts at the best proven lower bound;
    otherwise it starts at n = k and every shorter length is refuted by
    exhaustion, so the result does not depend on any bound.
    """
    t0 = time.monotonic()
    if use_bounds:
        start = best_lower_bound(q, d, k=k, setting=SYSTEMATIC)[0].value
        source = "bound"
    else:
        start = k
        source = "search"
    # repeating the message d times always works
    limit = k * d if max_n is None else max_n
    nodes = 0
    for n in range(start, limit + 1):
        # lengths below n are refuted by the bound (n == start) or by exhaustion
        lower_source = source if n == start else "search"
        remaining = None if budget is None else budget - (time.monotonic() - t0)
        if remaining is not None and remaining <= 0:
            return SearchOutcome(q, k, d, TIMEOUT, n, n, None, None, nodes, time.monotonic() - t0, lower_source)
        res = exists_systematic(q, k, d, n, remaining, workers=workers)
        nodes += res.nodes
        if res.status == FOUND:
            return SearchOutcome(q, k, d, EXACT, n, n, n, res.witness, nodes, time.monotonic() - t0, lower_source)
        if res.status == TIMEOUT:
            return SearchOutcome(q, k, d, TIMEOUT, n, n, None, None, nodes, time.monotonic() - t0, lower_source)
    lower = max(start, limit + 1)
    return SearchOutcome(q, k, d, LOWER_ONLY, lower, lower, None, None, nodes, time.monotonic() - t0, "search")


def validate_witness(outcome: SearchOutcome) -> bool:
    """Recheck an exact outcome's witness independently of the search bookkeeping."""
    w = outcome.witness
    if outcome.status != EXACT or w is None:
        return False
    plain = Code(w.q, w.n, w.words)
    return (
        plain.n == outcome.value
        and bool(check_systematic(plain, outcome.k))
        and minimum_distance(plain) >= outcome.d
    )


@dataclass
class FamilyCheckRow:
    k: int
    outcome: SearchOutcome
    griesmer: int

    @property
    def confirmed(self) -> bool | None:
        if self.outcome.status != EXACT:
            return None
        return self.outcome.value >= self.griesmer


@dataclass
class FamilyCheck:
    q: int
    d: int
    rows: list[FamilyCheckRow] = field(default_factory=list)

    @property
    def all_confirmed(self) -> bool:
        return all(r.confirmed for r in self.rows)


def verify_family_theorem(q: int, d: int, k_max: int, budget: float | None = None) -> FamilyCheck:
    """Check S_q(k,d) >= g_q(k,d) by search for every k in the reduced range.

    For fixed (q, d) the dimensions with q^(k-1) < d decide the question for
    all k; d = 1 is checked at k = 1.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    top = max(1, min(k_max, max_reduced_dimension(q, d)))
    report = FamilyCheck(q, d)
    t0 = time.monotonic()
    for k in range(1, top + 1):
        remaining = None if budget is None else max(budget - (time.monotonic() - t0), 0.0)
        outcome = compute_S(q, k, d, remaining, use_bounds=False)
        report.rows.append(FamilyCheckRow(k, outcome, griesmer(q, k, d)))
    return report


def exists_code(M: int, d: int, n: int, budget: float | None = None) -> Existence:
    """Decide whether an unrestricted binary (n, M, d) code exists (tiny M only).

    Words are chosen in increasing order starting from the zero word.
    """
    if M < 1 or d < 1 or n < 0:
        raise ValueError("need M >= 1, d >= 1, n >= 0")
    deadline = None if budget is None else time.monotonic() + budget
    chosen = [0]
    nodes = 0

    def rec() -> bool:
        nonlocal nodes
        if len(chosen) == M:
            return True
        for w in range(chosen[-1] + 1, 1 << n):
            nodes += 1
            if deadline is not None and nodes % _CLOCK_EVERY == 0 and time.monotonic() > deadline:
                raise _Timeout
            if all((w ^ u).bit_count() >= d for u in chosen):
                chosen.append(w)
                if rec():
                    return True
                chosen.pop()
        return False

    try:
        ok = rec()
    except _Timeout:
        return Existence(TIMEOUT, nodes=nodes)
    if not ok:
        return Existence(NONE, nodes=nodes)
    return Existence(FOUND, Code(2, n, chosen), nodes)


def compute_N(M: int, d: int, budget: float | None = None) -> int | None:
    """Smallest n admitting a binary (n, M, d) code, or None on timeout."""
    t0 = time.monotonic()
    n = 0 if M == 1 else d
    while True:
        remaining = None if budget is None else budget - (time.monotonic() - t0)
        res = exists_code(M, d, n, remaining)
        if res.status == FOUND:
            return n
        if res.status == TIMEOUT:
            return None
        n += 1
