"""Acceptance criteria; conftest prints one PASS/FAIL line per criterion."""

import random
import time

from hypothesis import given, settings, strategies as st

from oracles import brute_distance, griesmer_oracle, random_systematic
from sysgriesmer.bounds import (
    LINEAR,
    NONLINEAR,
    SYSTEMATIC,
    Verdict,
    best_lower_bound,
    bound_A,
    bound_B,
    bound_C,
    classify_family,
    g2_increment,
    griesmer,
    singleton,
)
from sysgriesmer.cli import main
from sysgriesmer.code_core import check_systematic, minimum_distance, weight_distribution, write_code
from sysgriesmer.constructions import (
    COUNTEREXAMPLE_34_LISTING,
    DEFINING_SET_15,
    SHIFT_CODE_LISTING,
    cyclic_code,
    levenshtein_19_16_10,
    systematic_counterexample_34,
    systematic_form,
)
from sysgriesmer.search import EXACT, compute_S, validate_witness
from sysgriesmer.transforms import concat_paired, extend_parity, reduce_distance, shorten_systematic


class Clock:
    def __init__(self, limit: float):
        self.limit = limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f}s, limit {self.limit}s"


def test_criterion_01_griesmer_values():
    with Clock(1.0):
        assert griesmer(2, 4, 10) == 20
        assert griesmer(2, 4, 18) == 35
        assert griesmer(2, 4, 8) == 15
        for q, k, d in [(2, 4, 10), (2, 4, 18), (2, 4, 8)]:
            assert griesmer(q, k, d) == griesmer_oracle(q, k, d)


def test_criterion_02_shift_code_counterexample(tmp_path, capsys):
    with Clock(1.0):
        code = levenshtein_19_16_10()
        assert tuple(code.strings()) == SHIFT_CODE_LISTING
        assert minimum_distance(code) == 10 == brute_distance(code.rows())
        assert weight_distribution(code) == {0: 1, 10: 15}
        assert (code.n, code.M) == (19, 16)
        assert code.n < griesmer(2, 4, 10) == 20
        assert classify_family(2, 4, 10, NONLINEAR).holds is Verdict.DISPROVEN
        path = tmp_path / "lev.txt"
        write_code(code, path)
        assert main(["verify", str(path), "--k", "4", "--expect-violation"]) == 0
        assert "n=19 < g=20: VIOLATES Griesmer" in capsys.readouterr().out


def test_criterion_03_systematic_counterexample(tmp_path, capsys):
    with Clock(1.0):
        code = systematic_counterexample_34()
        assert tuple(code.strings()) == COUNTEREXAMPLE_34_LISTING
        assert check_systematic(code, 4)
        assert minimum_distance(code) == 18 == brute_distance(code.rows())
        assert code.n == 34 < griesmer(2, 4, 18) == 35
        assert classify_family(2, 4, 18, SYSTEMATIC).holds is Verdict.DISPROVEN
        path = tmp_path / "c34.txt"
        write_code(code, path)
        assert main(["verify", str(path), "--k", "4", "--expect-systematic", "--expect-violation"]) == 0
        assert "systematic (k=4), d=18, n=34 < g=35: VIOLATES Griesmer" in capsys.readouterr().out


def test_criterion_04_cyclic_construction():
    with Clock(1.0):
        code = cyclic_code(15, DEFINING_SET_15)
        assert (code.n, code.M, minimum_distance(code)) == (15, 16, 8)
        sys_code, _ = systematic_form(code)
        assert check_systematic(sys_code, 4)
        assert minimum_distance(sys_code) == 8
        assert sys_code.n == griesmer(2, 4, 8) == 15


def test_criterion_05_weak_bound_attained():
    with Clock(1.0):
        assert bound_C(2, 16, 10) == 19
        assert levenshtein_19_16_10().n == 19


def test_criterion_06_identity_suites():
    violations = []
    with Clock(10.0):
        for k in range(1, 11):
            for d in range(1, 513):
                if griesmer(2, k, d + 1) - griesmer(2, k, d) != g2_increment(k, d):
                    violations.append(("increase", k, d))
        for r in range(0, 16):
            for k in range(1, r + 2):
                if griesmer(2, k, 2 ** (r + 1)) != 2 * griesmer(2, k, 2**r):
                    violations.append(("doubling", k, r))
        for r in range(1, 13):
            for s in range(r):
                for k in range(s + 2, r + 1):
                    if griesmer(2, k, 2**r) - griesmer(2, k, 2**r - 2**s) != 2 ** (s + 1) - 1:
                        violations.append(("difference", k, r, s))
        for q in (2, 3, 4):
            for k in range(1, 9):
                for d in range(1, 65):
                    g = griesmer(q, k, d)
                    if g != griesmer_oracle(q, k, d):
                        violations.append(("oracle", q, k, d))
                    if k >= 2 and g != d + griesmer(q, k - 1, -(-d // q)):
                        violations.append(("recurrence", q, k, d))
                    if not (
                        bound_A(q, k, d) <= g
                        and bound_B(q, q**k, d) <= g
                        and bound_C(q, q**k, d) <= g
                        and singleton(k, d) <= g
                    ):
                        violations.append(("ordering", q, k, d))
    assert violations == []


def test_criterion_07_transform_suite():
    rng = random.Random(7)
    violations = []
    with Clock(30.0):
        for _ in range(200):
            k = rng.randint(1, 4)
            n = rng.randint(k + 1, 12)
            c = random_systematic(rng, k, n)
            d = brute_distance(c.rows())

            s = shorten_systematic(c, rng.randint(1, k))
            if (s.n, s.M) != (n - 1, 2 ** (k - 1)) or (s.M >= 2 and brute_distance(s.rows()) < d):
                violations.append(("shorten", c.strings()))

            for target in range(1, d + 1):
                r = reduce_distance(c, target)
                if brute_distance(r.rows()) != target or not check_systematic(r, k):
                    violations.append(("reduce", c.strings(), target))

            if d % 2:
                e = extend_parity(c)
                if brute_distance(e.rows()) != d + 1:
                    violations.append(("parity", c.strings()))

            b = random_systematic(rng, k, rng.randint(k + 1, 8))
            pairing = list(range(b.M))
            rng.shuffle(pairing)
            out = concat_paired(c, b, pairing)
            if brute_distance(out.rows()) < d + brute_distance(b.rows()):
                violations.append(("concat", c.strings(), b.strings()))
    assert violations == []


ORACLE_GRID = [(1, d) for d in range(1, 9)] + [(2, d) for d in range(1, 7)] + [(3, d) for d in range(1, 5)]


def test_criterion_08_oracle_agreement():
    values = {}
    with Clock(300.0):
        for k, d in ORACLE_GRID:
            out = compute_S(2, k, d, use_bounds=False)
            assert out.status == EXACT, (k, d, out.status)
            assert validate_witness(out)
            S = out.value
            values[k, d] = S
            for rep in best_lower_bound(2, d, k=k, setting=SYSTEMATIC):
                assert S >= rep.value, (k, d, rep)
            verdict = classify_family(2, k, d, SYSTEMATIC)
            assert verdict.holds is Verdict.PROVEN, (k, d)
            assert S >= griesmer(2, k, d)
    assert values[2, 3] == 5
    assert values[3, 4] == 7


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 20), st.integers(0, 19), st.integers(1, 25))
def test_criterion_09_classifier_large_families(r, s, k):
    if s >= r:
        return
    d = 2**r - 2**s
    v = classify_family(2, k, d, SYSTEMATIC)
    assert v.holds is Verdict.PROVEN
    # the power-of-two family at large d
    v = classify_family(2, k, 2**r, SYSTEMATIC)
    assert v.holds is Verdict.PROVEN
    # the two refuted cases must never be reported as proven
    for triple, setting in [((2, 4, 18), SYSTEMATIC), ((2, 4, 10), NONLINEAR)]:
        assert classify_family(*triple, setting).holds is not Verdict.PROVEN
    assert classify_family(2, k, d, LINEAR).holds is Verdict.PROVEN
    if k <= r:
        assert griesmer(2, k, 2**r) < 2 ** (r + 1)
