from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from g2clasp.coefficients import (
    DET_FORMULA,
    K_FORMULAS,
    R_FORMULAS,
    CoefficientTable,
    ProbeBackend,
    ProductFormula,
)
from g2clasp.qint import LinearWeightForm
from g2clasp.recursions import (
    RECURSIONS,
    rec6_literal,
    residual,
    safe_weight_corners,
    verify,
    verify_all,
    verify_matrix,
)
from g2clasp.report import FAIL, NUMERIC, PASS, PROBE_POOL, SYMBOLIC, probe_points, run_probes

import oracles

FAST_SYMBOLIC = [1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 13, 14]


def _rec2_mutated(t):
    # -[2] replaced by -[3]
    K, b = t.K, t.br
    return K((-1, 1)), -b(3) - 1 / K((-1, 1), (-1, 0))


def _bump(pf: ProductFormula, delta: int) -> ProductFormula:
    """Perturb the constant of the first bracket of a formula."""
    if pf.num:
        f = pf.num[0]
        return pf._replace(num=(LinearWeightForm(f.c_a, f.c_b, f.c + delta),) + tuple(pf.num[1:]))
    return pf._replace(sign=pf.sign * 2)


def test_there_are_22_recursions():
    assert sorted(RECURSIONS) == list(range(1, 23))


@pytest.mark.parametrize("rid", FAST_SYMBOLIC)
def test_symbolic_residual_vanishes(rid):
    assert residual(rid).is_zero()


def test_recursion_two_by_hand():
    # [DERIVED] -[2] + [a-1]/[a] = -[a+1]/[a] because [2][a] = [a+1] + [a-1]
    a = (1, 0, 0)
    br = oracles.sym_bracket
    lhs = -br((1, 0, 1)) / br(a)
    rhs = -br((0, 0, 2)) - 1 / (-br((1, 0, 0)) / br((1, 0, -1)))
    assert sympy.simplify(lhs - rhs) == 0


def test_residual_is_lhs_minus_rhs():
    lhs, rhs = RECURSIONS[9](CoefficientTable())
    assert residual(9) == lhs - rhs


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2**64 - 1))
def test_numeric_mode_passes_for_any_seed(seed):
    reports = verify_all(NUMERIC, points=2, seed=seed)
    assert [r.status for r in reports] == [PASS] * 22


@settings(max_examples=8, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4))
def test_global_shift_invariance_numeric(da, db):
    reports = verify_all(NUMERIC, points=2, seed=11, base=(da, db))
    assert all(r.passed for r in reports)


@pytest.mark.parametrize("base", [(1, -1), (-2, 3)])
def test_global_shift_invariance_symbolic(base):
    for rid in (2, 10, 13):
        assert verify(rid, SYMBOLIC, base=base).passed


def test_mutated_recursion_fails_in_both_modes():
    for mode in (SYMBOLIC, NUMERIC):
        rep = verify(2, mode, points=5, seed=1, recursion=_rec2_mutated)
        assert rep.status == FAIL
        assert rep.witness
    sym = verify(2, SYMBOLIC, recursion=_rec2_mutated)
    assert "q" in sym.witness or "A" in sym.witness


MUTATIONS = [(1, mu) for mu in sorted(K_FORMULAS)] + [(2, mu) for mu in sorted(R_FORMULAS)]


@pytest.mark.parametrize("fund,mu", MUTATIONS)
@pytest.mark.parametrize("delta", [1, -1])
def test_each_formula_mutation_is_caught(fund, mu, delta):
    table = K_FORMULAS if fund == 1 else R_FORMULAS
    overrides = {(fund, mu): _bump(table[mu], delta)}
    reports = verify_all(NUMERIC, points=2, seed=3, overrides=overrides)
    assert any(r.status == FAIL for r in reports)


def test_recursion_six_literal_reading_fails():
    pt = (Fraction(3, 2), Fraction(5, 7), Fraction(11, 3))
    lhs, rhs = rec6_literal(CoefficientTable(ProbeBackend(*pt)))
    assert lhs != rhs
    assert verify(6, NUMERIC, recursion=rec6_literal).status == FAIL
    assert verify(6, NUMERIC).passed


def test_report_shape():
    rep = verify(2, NUMERIC, points=5, seed=1)
    assert rep.passed and rep.witness is None
    assert len(rep.probes) == 5
    assert rep.to_dict()["elapsed_ms"] is None
    assert rep.to_dict(timing=True)["elapsed_ms"] is not None
    sym = verify(1, SYMBOLIC)
    assert sym.probes == () and "probes" not in sym.to_dict()


def test_numeric_reports_are_deterministic():
    one = [r.to_dict() for r in verify_all(NUMERIC, 5, 7)]
    two = [r.to_dict() for r in verify_all(NUMERIC, 5, 7)]
    assert one == two
    other = [r.to_dict() for r in verify_all(NUMERIC, 5, 8)]
    assert one != other


def test_parallel_matches_sequential():
    seq = [r.to_dict() for r in verify_all(NUMERIC, 3, 5, ids=[3, 1, 20, 22])]
    par = [r.to_dict() for r in verify_all(NUMERIC, 3, 5, ids=[3, 1, 20, 22], parallelism=3)]
    assert seq == par
    assert [r["id"] for r in par] == [1, 3, 20, 22]


def test_bad_arguments():
    with pytest.raises(ValueError):
        verify(23)
    with pytest.raises(ValueError):
        verify_all(NUMERIC, ids=[0])
    with pytest.raises(ValueError):
        verify(1, NUMERIC, points=0)
    with pytest.raises(ValueError):
        verify_all(NUMERIC, parallelism=0)


def test_matrix_block_both_modes_and_mutation():
    assert verify_matrix(SYMBOLIC).passed
    assert verify_matrix(NUMERIC, 5, 2).passed
    bumped = {(0, "det"): _bump(DET_FORMULA, 1)}
    sym = verify_matrix(SYMBOLIC, overrides=bumped)
    assert sym.status == FAIL and sym.witness.startswith("r11*r22")
    assert verify_matrix(NUMERIC, overrides=bumped).status == FAIL


def test_probe_pool_and_resampling():
    assert all(x not in (0, 1, -1) for x in PROBE_POOL)
    assert len(set(PROBE_POOL)) == len(PROBE_POOL)
    assert probe_points(4, 3) == probe_points(4, 3)
    first = probe_points(4, 1)[0]

    def vanishes(p):
        if p == first:
            raise ZeroDivisionError("pole")
        return True

    ok, witness, used = run_probes(vanishes, 3, 4)
    assert ok and witness is None
    assert len(used) == 3 and tuple(map(str, first)) not in used


def test_probe_gives_up_when_every_point_is_a_pole():
    def always_pole(p):
        raise ZeroDivisionError

    ok, witness, used = run_probes(always_pole, 1, 0)
    assert not ok and "no pole-free" in witness and used == ()


def test_safe_default_weight_is_computed():
    assert safe_weight_corners() == [(6, 4)]
