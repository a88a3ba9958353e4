import pytest

from oracles import brute_distance
from sysgriesmer.bounds import griesmer
from sysgriesmer.code_core import Code, CodeError, check_systematic
from sysgriesmer.constructions import (
    COUNTEREXAMPLE_34_LISTING,
    DEFINING_SET_15,
    SHIFT_BASE_WORD,
    SHIFT_CODE_LISTING,
    SIMPLEX_GENERATOR_ROWS,
    GeneratorMatrix,
    conjecture_targets,
    cyclic_code,
    is_linear,
    levenshtein_19_16_10,
    simplex_15_4_8,
    systematic_counterexample_34,
    systematic_form,
)


def _shift(word: int, n: int) -> int:
    return ((word >> 1) | ((word & 1) << (n - 1)))


def test_shift_code_listing_is_bit_exact():
    code = levenshtein_19_16_10()
    assert tuple(code.strings()) == SHIFT_CODE_LISTING
    assert code.strings()[1] == SHIFT_BASE_WORD
    assert (code.n, code.M, brute_distance(code.rows())) == (19, 16, 10)


def test_counterexample_listing_is_bit_exact():
    code = systematic_counterexample_34()
    assert tuple(code.strings()) == COUNTEREXAMPLE_34_LISTING
    assert (code.n, code.M, code.d, code.k) == (34, 16, 18, 4)
    assert griesmer(2, 4, 18) == 35 > code.n


def test_counterexample_row_is_concatenation():
    c34 = systematic_counterexample_34().strings()
    simplex = simplex_15_4_8().strings()
    lev = levenshtein_19_16_10().strings()
    for j in range(16):
        assert c34[j] == simplex[j] + lev[j]
    # the second word carries the first generator row
    assert simplex[1] == SIMPLEX_GENERATOR_ROWS[0]


def test_simplex_is_linear_and_systematic():
    code = simplex_15_4_8()
    assert is_linear(code)
    assert check_systematic(code, 4)
    assert code.d == 8 == brute_distance(code.rows())
    assert code.n == griesmer(2, 4, 8)


def test_generator_matrix_rejects_dependent_rows():
    with pytest.raises(CodeError):
        GeneratorMatrix.from_strings(["110", "011", "101"])
    with pytest.raises(CodeError):
        GeneratorMatrix.from_strings(["11", "011"])


def test_cyclic_from_full_defining_set():
    code = cyclic_code(15, DEFINING_SET_15)
    assert (code.n, code.M, code.d) == (15, 16, 8)
    sys_code, perm = systematic_form(code)
    assert check_systematic(sys_code, 4)
    assert sys_code.n == griesmer(2, 4, 8)
    assert sys_code.d == 8
    assert sorted(perm) == list(range(15))


def test_cyclic_edge_cases():
    full = cyclic_code(7, set())
    assert (full.M, full.d) == (128, 1)
    ham = cyclic_code(7, {1, 2, 4})
    assert (ham.n, ham.M, ham.d) == (7, 16, 3)
    with pytest.raises(ValueError):
        cyclic_code(15, {1})


@pytest.mark.parametrize("n,defset", [(7, {1, 2, 4}), (7, {0, 3, 5, 6}), (15, DEFINING_SET_15), (9, {0, 1, 2, 4, 8, 7, 5})])
def test_cyclic_codes_are_closed(n, defset):
    code = cyclic_code(n, defset)
    words = set(code.words)
    assert all(_shift(w, n) in words for w in words)
    assert is_linear(code)


def test_systematic_form_preserves_parameters():
    for n, defset in [(7, {1, 2, 4}), (15, DEFINING_SET_15), (15, {1, 2, 4, 8}), (9, {1, 2, 4, 8, 7, 5})]:
        code = cyclic_code(n, defset)
        sys_code, perm = systematic_form(code)
        assert (sys_code.n, sys_code.M, sys_code.d) == (code.n, code.M, code.d)
        assert is_linear(sys_code)
        # undoing the column permutation gives back the original word set
        back = {tuple(row[perm.index(j)] for j in range(n)) for row in sys_code.rows()}
        assert back == set(code.rows())


def test_systematic_form_identity_and_moved_pivots():
    gm = GeneratorMatrix.from_strings(["100", "010", "001"])
    code, perm = systematic_form(gm)
    assert perm == (0, 1, 2) and code.M == 8
    gm = GeneratorMatrix.from_strings(["0110", "0011"])
    code, perm = systematic_form(gm)
    assert check_systematic(code, 2)
    assert perm[:2] == (1, 2)


def test_systematic_form_rejects_nonlinear():
    with pytest.raises(CodeError):
        systematic_form(levenshtein_19_16_10())
    with pytest.raises(CodeError):
        systematic_form(Code(2, 3, ["000"]))


def test_conjecture_targets():
    t3 = conjecture_targets(3)
    assert [t.k for t in t3] == [1, 2, 3, 4]
    assert all(t.d == 10 for t in t3)
    assert t3[-1].griesmer == 20 == griesmer(2, 4, 10)
    assert t3[-1].length_to_beat == 19
    t4 = conjecture_targets(4)
    assert [t.k for t in t4] == [1, 2, 3, 4, 5]
    assert t4[3].griesmer == griesmer(2, 4, 18) == 35
    with pytest.raises(ValueError):
        conjecture_targets(2)
