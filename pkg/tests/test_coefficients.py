from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, reject, settings
from hypothesis import strategies as st

from g2clasp.coefficients import (
    DET_FORMULA,
    F1,
    F2,
    K_FORMULAS,
    R_FORMULAS,
    AmbiguousMatrixIndex,
    CoeffKey,
    CoefficientTable,
    DegenerateWeight,
    MissingMatrixIndex,
    ProbeBackend,
    SymbolicBackend,
    UnknownDisplacement,
    all_keys,
    coeff,
    degenerate_atoms,
    denominator_atoms,
    det_explicit,
    r00,
    specialize_coeff,
    support,
)
from g2clasp.qint import qint_const

import oracles

# Printed explicit coefficients, frozen verbatim (brackets only).
PRINTED_K = {
    (1, 0): "1",
    (-1, 1): "-[a+1]/[a]",
    (2, -1): "[3b+3][a+3b+4]/([3b][a+3b+3])",
    (0, 0): "-[a+2][a+3b+5][2a+3b+6]/([2][a][a+3b+3][2a+3b+4])",
    (-2, 1): "[a+1][2a+3b+5][3a+3b+6]/([a-1][2a+3b+4][3a+3b+3])",
    (1, -1): "-[3b+3][a+3b+4][2a+3b+5][3a+6b+9]/([3b][a+3b+2][2a+3b+4][3a+6b+6])",
    (-1, 0): "[a+1][a+3b+4][2a+3b+5][3a+3b+6][3a+6b+9]/([a][a+3b+3][2a+3b+3][3a+3b+3][3a+6b+6])",
}
PRINTED_R = {
    (0, 1): "1",
    (3, -1): "-[3b+3]/[3b]",
    (1, 0): "[a+3][a+3b+6]/([3][a][a+3b+3])",
    (-1, 1): "-[a+1][a+2][2a+3b+7]/([3][a-1][a][2a+3b+4])",
    (2, -1): "[3b+3][a+3b+4][a+3b+5][2a+3b+7]/([3][3b][a+3b+2][a+3b+3][2a+3b+4])",
    (-3, 2): "[a+1][3a+3b+6]/([a-2][3a+3b+3])",
    (3, -2): "[3b+3][a+3b+4][3a+6b+9]/([3b-3][a+3b+1][3a+6b+6])",
    (-2, 1): "[a+1][a+3b+6][2a+3b+5][2a+3b+6][3a+3b+6]/([3][a-1][a+3b+3][2a+3b+3][2a+3b+4][3a+3b+3])",
    (1, -1): "-[a+3][3b+3][a+3b+4][2a+3b+5][2a+3b+6][3a+6b+9]/([3][a][3b][a+3b+2][2a+3b+3][2a+3b+4][3a+6b+6])",
    (-1, 0): "[a+1][a+2][a+3b+4][a+3b+5][2a+3b+5][3a+3b+6][3a+6b+9]"
    "/([3][a-1][a][a+3b+2][a+3b+3][2a+3b+3][3a+3b+3][3a+6b+6])",
    (-3, 1): "-[a+1][2a+3b+5][3a+3b+6][3a+6b+9]/([a-2][2a+3b+2][3a+3b][3a+6b+6])",
    (0, -1): "[3b+3][a+3b+4][2a+3b+5][3a+3b+6][3a+6b+9]/([3b][a+3b+1][2a+3b+2][3a+3b+3][3a+6b+3])",
}
PRINTED_DET = (
    "[4][6][a+2][3b+6][a+3b+5][2a+3b+6][3a+3b+9][3a+6b+12]"
    "/([2][3][12][a][3b][a+3b+3][2a+3b+4][3a+3b+3][3a+6b+6])"
)

probe_point = st.tuples(
    st.sampled_from([Fraction(3, 2), Fraction(5, 3), Fraction(7, 4), Fraction(2, 5)]),
    st.sampled_from([Fraction(2, 7), Fraction(5, 2), Fraction(9, 4)]),
    st.sampled_from([Fraction(11, 3), Fraction(3, 8), Fraction(6, 5)]),
)


def _same_formula(pf, printed):
    sign, nums, dens = oracles.parse_product(printed)
    assert pf.sign == sign
    assert Counter(map(tuple, pf.num)) == Counter(nums)
    assert Counter(map(tuple, pf.den)) == Counter(dens)


@pytest.mark.parametrize("mu", list(PRINTED_K))
def test_k_formulas_match_printed(mu):
    _same_formula(K_FORMULAS[mu], PRINTED_K[mu])


@pytest.mark.parametrize("mu", list(PRINTED_R))
def test_r_formulas_match_printed(mu):
    _same_formula(R_FORMULAS[mu], PRINTED_R[mu])


def test_determinant_matches_printed():
    _same_formula(DET_FORMULA, PRINTED_DET)


def test_support_sizes():
    assert len(support(F1)) == 7
    assert len(support(F2)) == 14
    assert Counter(support(F2))[(0, 0)] == 2
    keys = all_keys()
    assert len(keys) == 7 + 12 + 4
    assert len({k.label() for k in keys}) == len(keys)


def test_anchor_values():
    b = qint_const
    assert coeff(CoeffKey(F1, (1, 0))) == b(1)
    assert coeff(CoeffKey(F2, (0, 1))) == b(1)


def test_golden_specialisation():
    # worked example: R^{(3,-2)} at (2, 3) is [12][15][33]/([6][12][30])
    b = qint_const
    got = specialize_coeff(CoeffKey(F2, (3, -2)), 2, 3)
    assert got == b(12) * b(15) * b(33) / (b(6) * b(12) * b(30))


def test_key_validation():
    with pytest.raises(UnknownDisplacement):
        CoeffKey(F1, (5, 5)).validate()
    with pytest.raises(MissingMatrixIndex):
        CoeffKey(F2, (0, 0)).validate()
    with pytest.raises(AmbiguousMatrixIndex):
        CoeffKey(F1, (1, 0), (1, 1)).validate()
    with pytest.raises(MissingMatrixIndex):
        CoeffKey(F2, (0, 0), (1, 3)).validate()
    assert CoeffKey(F2, (0, 0), (2, 1)).label() == "2,1R(0,0)"


def test_degenerate_weight_names_every_atom():
    key = CoeffKey(F1, (-2, 1))
    assert [str(f) for f in degenerate_atoms(key, 1, 1)] == ["[a-1]"]
    with pytest.raises(DegenerateWeight) as info:
        specialize_coeff(key, 1, 1)
    assert "[a-1] = 0" in str(info.value)
    with pytest.raises(DegenerateWeight) as info:
        specialize_coeff(CoeffKey(F2, (3, -2)), 4, 1)
    assert "[3b-3]" in str(info.value)


def test_denominator_atoms_fold_the_shift():
    key = CoeffKey(F2, (3, -1))
    assert denominator_atoms(key) == [(0, 3, 0)]
    assert denominator_atoms(key, (0, -1)) == [(0, 3, -3)]


def test_matrix_block_symbolic_identities():
    rec = r00()
    assert rec.r12 == rec.r21
    assert rec.r11 * rec.r22 - rec.r12 * rec.r21 == det_explicit()
    assert rec.det == det_explicit()


@settings(max_examples=25, deadline=None)
@given(probe_point, st.integers(-3, 3), st.integers(-3, 3))
def test_matrix_block_numeric_determinant(pt, da, db):
    t = CoefficientTable(ProbeBackend(*pt))
    try:
        rec = t.r00((da, db))
    except ZeroDivisionError:
        reject()
    assert rec.r11 * rec.r22 - rec.r12 ** 2 == rec.det


@settings(max_examples=25, deadline=None)
@given(probe_point, st.sampled_from(all_keys()), st.integers(-2, 2), st.integers(-2, 2))
def test_probe_backend_agrees_with_symbolic(pt, key, da, db):
    sym = CoefficientTable(SymbolicBackend()).get(key, (da, db))
    try:
        num = CoefficientTable(ProbeBackend(*pt)).get(key, (da, db))
    except ZeroDivisionError:
        reject()
    assert sym.evaluate(*pt) == num


@settings(max_examples=25, deadline=None)
@given(probe_point, st.sampled_from(sorted(K_FORMULAS)))
def test_product_formulas_against_exact_oracle(pt, mu):
    sign, nums, dens = oracles.parse_product(PRINTED_K[mu])
    got = CoefficientTable(ProbeBackend(*pt)).K(mu)
    assert got == oracles.exact_product(sign, nums, dens, pt)


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_base_shift_composes_with_lookup_shift(ba, bb, da, db):
    pt = (Fraction(3, 2), Fraction(5, 7), Fraction(11, 3))
    shifted = CoefficientTable(ProbeBackend(*pt), base=(ba, bb)).K((0, 0), (da, db))
    direct = CoefficientTable(ProbeBackend(*pt)).K((0, 0), (ba + da, bb + db))
    assert shifted == direct


def test_r_at_zero_needs_index():
    t = CoefficientTable()
    with pytest.raises(MissingMatrixIndex):
        t.R((0, 0))
