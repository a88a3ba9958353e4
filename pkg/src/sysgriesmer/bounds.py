"""Length lower bounds for linear, systematic and unrestricted codes.

Everything is exact: integer ceilings and ``fractions.Fraction``.  Discrete
logarithms are computed by repeated multiplication, never with floats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

SYSTEMATIC = "systematic"
NONLINEAR = "nonlinear"
LINEAR = "linear"
SETTINGS = (SYSTEMATIC, NONLINEAR, LINEAR)


class Source(enum.Enum):
    GRIESMER = "Griesmer"
    SINGLETON = "Singleton"
    SINGLETON_IMPROVED = "SingletonImprovedSystematic"
    PLOTKIN = "Plotkin"
    BOUND_A = "BoundA"
    BOUND_B = "BoundB"
    BOUND_C = "BoundC"
    WEAK_GRIESMER = "WeakGriesmer"

    @property
    def letter(self) -> str:
        return _LETTERS[self]


_LETTERS = {
    Source.GRIESMER: "G",
    Source.SINGLETON: "S",
    Source.SINGLETON_IMPROVED: "I",
    Source.PLOTKIN: "P",
    Source.BOUND_A: "A",
    Source.BOUND_B: "B",
    Source.BOUND_C: "C",
    Source.WEAK_GRIESMER: "W",
}


class Verdict(enum.Enum):
    PROVEN = "proven"
    UNKNOWN = "unknown"
    DISPROVEN = "disproven-by-example"


class PlotkinHypothesisError(ValueError):
    """Raised when n >= qd/(q-1), where the Plotkin bound says nothing."""


@dataclass(frozen=True)
class BoundReport:
    value: int
    source: Source
    applicable: bool
    condition: str

    def __post_init__(self):
        if self.applicable and self.value < 1:
            raise ValueError("an applicable bound must be at least 1")


@dataclass(frozen=True)
class FamilyVerdict:
    setting: str
    holds: Verdict
    theorem: str | None
    q: int
    k: int
    d: int
    derived: dict[str, int] = field(default_factory=dict)
    condition: str = ""

    @property
    def proven(self) -> bool:
        return self.holds is Verdict.PROVEN


def _check(q: int, k: int, d: int) -> None:
    if q < 2 or k < 1 or d < 1:
        raise ValueError(f"need q >= 2, k >= 1, d >= 1; got q={q}, k={k}, d={d}")


def ilog(q: int, x: int) -> int:
    """floor(log_q x) for x >= 1, by repeated multiplication."""
    if q < 2 or x < 1:
        raise ValueError(f"ilog needs q >= 2 and x >= 1; got q={q}, x={x}")
    e, p = 0, q
    while p <= x:
        p *= q
        e += 1
    return e


def valuation(q: int, d: int) -> int:
    """Largest l with q^l | d."""
    if d < 1:
        raise ValueError("valuation needs d >= 1")
    l = 0
    while d % q == 0:
        d //= q
        l += 1
    return l


def _cdiv(a: int, b: int) -> int:
    return -(-a // b)


def griesmer(q: int, k: int, d: int) -> int:
    """g_q(k,d) = sum_{i<k} ceil(d / q^i)."""
    _check(q, k, d)
    return sum(_cdiv(d, q**i) for i in range(k))


def singleton(k: int, d: int) -> int:
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    return d + k - 1


def singleton_improved_systematic(k: int, d: int) -> int:
    """k + ceil(3d/2) - 2 for binary systematic codes, k >= 2.

    For k = 1 the plain bound d is returned.
    """
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    if k == 1:
        return d
    return k + _cdiv(3 * d, 2) - 2


def plotkin_max_M(q: int, n: int, d: int) -> int:
    """floor(d / (d - (1 - 1/q) n)), valid only when n < qd/(q-1)."""
    if q < 2 or n < 1 or d < 1:
        raise ValueError("need q >= 2, n >= 1, d >= 1")
    if n * (q - 1) >= q * d:
        raise PlotkinHypothesisError(f"n={n} >= qd/(q-1)={Fraction(q * d, q - 1)}")
    return floor(Fraction(d) / (d - (1 - Fraction(1, q)) * n))


def plotkin_min_n(q: int, M: int, d: int) -> int:
    """ceil(d (1 - 1/M) / (1 - 1/q)): the length any (n, M, d)_q code needs."""
    if q < 2 or M < 2 or d < 1:
        raise ValueError("need q >= 2, M >= 2, d >= 1")
    return ceil(d * (1 - Fraction(1, M)) / (1 - Fraction(1, q)))


def level_and_leading_digit(q: int, d: int) -> tuple[int, int]:
    """(l, r) with l = floor(log_q d), r = floor(d / q^l), so q^l r <= d < q^l (r+1)."""
    l = ilog(q, d)
    return l, d // q**l


def bound_A(q: int, k: int, d: int) -> int:
    """d + sum_{i=1}^{k-1} ceil(q^l r / q^i); valid for systematic codes."""
    _check(q, k, d)
    l, r = level_and_leading_digit(q, d)
    base = q**l * r
    return d + sum(_cdiv(base, q**i) for i in range(1, k))


def bound_B(q: int, M: int, d: int) -> int:
    """sum_{i=0}^{h} ceil(d / q^i) with h = min(k-1, v_q(d)), k = floor(log_q M)."""
    if q < 2 or M < 2 or d < 1:
        raise ValueError("need q >= 2, M >= 2, d >= 1")
    k = ilog(q, M)
    h = min(k - 1, valuation(q, d))
    return sum(_cdiv(d, q**i) for i in range(h + 1))


def bound_C(q: int, M: int, d: int) -> int:
    """ceil(d (1 - q^-k) / (1 - q^-1)) with k = floor(log_q M)."""
    if q < 2 or M < 2 or d < 1:
        raise ValueError("need q >= 2, M >= 2, d >= 1")
    k = ilog(q, M)
    return ceil(d * (1 - Fraction(1, q**k)) / (1 - Fraction(1, q)))


def weak_griesmer(q: int, k: int, d: int) -> int:
    """ceil(sum_{i<k} d / q^i), the rational-sum form of bound C at M = q^k."""
    _check(q, k, d)
    return ceil(sum(Fraction(d, q**i) for i in range(k)))


def g2_increment(k: int, d: int) -> int:
    """g_2(k, d+1) - g_2(k, d) = min(k, l+1) where 2^l || d."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    return min(k, valuation(2, d) + 1)


def max_reduced_dimension(q: int, d: int) -> int:
    """Largest k with q^(k-1) < d, i.e. k < 1 + log_q d (0 when d = 1)."""
    k = 0
    while q**k < d:
        k += 1
    return k


# -- family classifier -----------------------------------------------------

# The two parameter sets refuted by explicit codes.  The (34, 2^4, 18) code is
# also an unrestricted code, so it refutes the nonlinear (2, 4, 18) case too.
_DISPROVEN = {
    (2, 4, 10, NONLINEAR): "(19, 16, 10)_2 shift code: 19 < g_2(4,10) = 20",
    (2, 4, 18, SYSTEMATIC): "(34, 2^4, 18)_2 systematic code: 34 < g_2(4,18) = 35",
    (2, 4, 18, NONLINEAR): "(34, 2^4, 18)_2 systematic code: 34 < g_2(4,18) = 35",
}


def _power_difference(d: int) -> tuple[int, int] | None:
    """(r, s) with d = 2^r - 2^s and r > s >= 1, if any."""
    s = valuation(2, d)
    if s < 1:
        return None
    top = d + 2**s
    if top & (top - 1):
        return None
    return top.bit_length() - 1, s


def _family_matches(q: int, k: int, d: int, setting: str) -> list[tuple[str, dict[str, int], str]]:
    """All family theorems whose hypothesis holds, in precedence order."""
    out: list[tuple[str, dict[str, int], str]] = []
    systematic = setting in (SYSTEMATIC, LINEAR)
    l, r = level_and_leading_digit(q, d)
    exact_digit = d == q**l * r
    if systematic:
        if d <= 2 * q:
            out.append(("Theorem d<=2q", {}, f"d={d} <= 2q={2 * q}"))
        if exact_digit and l >= 1 and 1 <= r < q:
            name = "Corollary d=2^l" if q == 2 else "Theorem d=q^l*r"
            out.append((name, {"l": l, "r": r}, f"d = {q}^{l}*{r} with 1 <= r < q"))
        if q == 2:
            rs = _power_difference(d)
            if rs is not None:
                rr, ss = rs
                note = " (r = s+1: power of two)" if rr == ss + 1 else ""
                out.append(("Theorem d=2^r-2^s", {"r": rr, "s": ss}, f"d = 2^{rr} - 2^{ss}{note}"))
            if d % 2 == 1:
                odd = None
                if d >= 3 and (d + 1) & d == 0:
                    odd = ({"r": (d + 1).bit_length() - 1}, f"d = 2^{(d + 1).bit_length() - 1} - 1")
                else:
                    rs = _power_difference(d + 1)
                    if rs is not None:
                        odd = ({"r": rs[0], "s": rs[1]}, f"d = 2^{rs[0]} - 2^{rs[1]} - 1")
                if odd is not None:
                    out.append(("Corollary odd distances", odd[0], odd[1]))
    # Results for unrestricted codes with q^k words also bind systematic codes.
    if d % q ** (k - 1) == 0:
        out.append(("Proposition q^(k-1)|d", {}, f"q^(k-1)={q ** (k - 1)} divides d={d}"))
    if exact_digit and 1 <= r < q and q ** (k - 1) <= d:
        out.append(("Lemma small r", {"l": l, "r": r}, f"q^(k-1)={q ** (k - 1)} <= d = {q}^{l}*{r}"))
    return out


def classify_family(q: int, k: int, d: int, setting: str = SYSTEMATIC) -> FamilyVerdict:
    """Decide whether a family theorem proves length >= g_q(k,d) for these parameters.

    For unrestricted codes ``k`` stands for M = q^k.  Precedence is fixed: the
    first matching theorem is named, the condition text lists every match.
    """
    _check(q, k, d)
    if setting not in SETTINGS:
        raise ValueError(f"unknown setting {setting!r}")
    reduced = max_reduced_dimension(q, d)
    reduction_note = (
        f"for fixed (q,d) it suffices to check k <= {reduced} (q^(k-1) < d)"
        if setting != NONLINEAR
        else ""
    )
    if setting == LINEAR:
        return FamilyVerdict(
            setting, Verdict.PROVEN, "Griesmer bound (linear)", q, k, d, {}, "holds for all linear codes"
        )
    key = (q, k, d, setting)
    if key in _DISPROVEN:
        return FamilyVerdict(setting, Verdict.DISPROVEN, "explicit counterexample", q, k, d, {}, _DISPROVEN[key])
    matches = _family_matches(q, k, d, setting)
    if matches:
        name, derived, _ = matches[0]
        cond = "; ".join(f"{m[0]}: {m[2]}" for m in matches)
        if reduction_note:
            cond += f"; {reduction_note}"
        return FamilyVerdict(setting, Verdict.PROVEN, name, q, k, d, dict(derived), cond)
    notes = []
    if setting == SYSTEMATIC and k > reduced and reduced >= 1:
        notes.append(f"holds for all k iff it holds for k <= {reduced}")
    elif reduction_note:
        notes.append(reduction_note)
    if q == 2 and d > 2 and ((d - 2) & (d - 3)) == 0 and d - 2 >= 8:
        notes.append(f"d = 2^{(d - 2).bit_length() - 1} + 2: conjectured to admit counterexamples")
    return FamilyVerdict(setting, Verdict.UNKNOWN, None, q, k, d, {}, "; ".join(notes) or "no family theorem applies")


# -- aggregation -------------------------------------------------------------


def all_bounds(
    q: int, d: int, *, k: int | None = None, M: int | None = None, setting: str = SYSTEMATIC
) -> list[BoundReport]:
    """Every bound with its applicability for the setting, in a fixed order.

    Give ``k`` (M = q^k) or, for unrestricted codes, ``M``.
    """
    if setting not in SETTINGS:
        raise ValueError(f"unknown setting {setting!r}")
    if (k is None) == (M is None):
        raise ValueError("give exactly one of k and M")
    if k is None:
        if setting != NONLINEAR:
            raise ValueError("M may only be given for nonlinear codes")
        if M < 2:
            raise ValueError("need M >= 2")
        k = ilog(q, M)
        exact_power = q**k == M
    else:
        _check(q, k, d)
        M = q**k
        exact_power = True
    if k < 1 or d < 1:
        raise ValueError(f"need M >= q and d >= 1; got M={M}, d={d}")

    reports = []
    verdict = classify_family(q, k, d, setting)
    g = griesmer(q, k, d)
    if setting == LINEAR:
        reports.append(BoundReport(g, Source.GRIESMER, True, "linear codes"))
    elif verdict.proven and exact_power:
        reports.append(BoundReport(g, Source.GRIESMER, True, f"proven via {verdict.theorem}"))
    elif verdict.proven:
        # M > q^k words: the q^k-word subcode obeys the bound
        reports.append(BoundReport(g, Source.GRIESMER, True, f"proven via {verdict.theorem} for a q^k-subcode"))
    else:
        why = "disproven by example" if verdict.holds is Verdict.DISPROVEN else "family unknown"
        reports.append(BoundReport(g, Source.GRIESMER, False, why))

    reports.append(BoundReport(singleton(k, d), Source.SINGLETON, True, "all codes"))
    if q == 2 and setting != NONLINEAR and k >= 2:
        reports.append(
            BoundReport(singleton_improved_systematic(k, d), Source.SINGLETON_IMPROVED, True, "binary systematic, k >= 2")
        )
    else:
        why = "binary systematic codes with k >= 2 only"
        value = singleton_improved_systematic(k, d)
        reports.append(BoundReport(value, Source.SINGLETON_IMPROVED, False, why))
    reports.append(BoundReport(plotkin_min_n(q, M, d), Source.PLOTKIN, True, "all codes"))
    reports.append(
        BoundReport(bound_A(q, k, d), Source.BOUND_A, setting != NONLINEAR, "systematic codes")
    )
    reports.append(BoundReport(bound_B(q, M, d), Source.BOUND_B, True, "all codes"))
    reports.append(BoundReport(bound_C(q, M, d), Source.BOUND_C, True, "all codes"))
    reports.append(
        BoundReport(weak_griesmer(q, k, d), Source.WEAK_GRIESMER, exact_power, "M = q^k")
    )
    return reports


def best_lower_bound(
    q: int, d: int, *, k: int | None = None, M: int | None = None, setting: str = SYSTEMATIC
) -> list[BoundReport]:
    """Applicable bounds, largest first; Griesmer wins ties."""
    applicable = [b for b in all_bounds(q, d, k=k, M=M, setting=setting) if b.applicable]
    order = list(Source)
    return sorted(applicable, key=lambda b: (-b.value, order.index(b.source)))
