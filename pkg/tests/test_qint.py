from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from g2clasp.exactalg import RationalFn
from g2clasp.qint import (
    LinearWeightForm,
    WeightShift,
    bracket_text,
    fold,
    qint_const,
    qint_cubed,
    qlin,
    vanishes_at,
)

from oracles import exact_bracket, q, sym_bracket

small = st.integers(-6, 6)
forms = st.builds(LinearWeightForm, small, small, st.integers(-20, 20))


@pytest.mark.parametrize("n", range(1, 21))
def test_negation(n):
    assert qint_const(-n) == -qint_const(n)


@pytest.mark.parametrize("n", range(1, 21))
def test_two_term_recurrence(n):
    assert qint_const(2) * qint_const(n) == qint_const(n + 1) + qint_const(n - 1)


@pytest.mark.parametrize("n", range(1, 21))
def test_cubed_bracket_is_ratio(n):
    assert qint_cubed(n) == qint_const(3 * n) / qint_const(3)


def test_small_values():
    assert qint_const(0).is_zero()
    assert qint_const(1) == RationalFn(1)
    # [DERIVED] [3] = q^2 + 1 + q^-2
    assert qint_const(3).evaluate(2) == Fraction(4) + 1 + Fraction(1, 4)


def test_matches_sympy_definition():
    for n in (2, 5, 12):
        expected = sympy.simplify(sym_bracket((0, 0, n)).subs(q, sympy.Rational(3, 2)))
        assert qint_const(n).evaluate(Fraction(3, 2)) == Fraction(str(expected))


@given(forms, st.fractions(min_value=2, max_value=6, max_denominator=5), st.fractions(min_value=2, max_value=6, max_denominator=5))
def test_qlin_evaluates_like_the_definition(f, A0, B0):
    q0 = Fraction(3, 2)
    assert qlin(f).evaluate(q0, A0, B0) == exact_bracket(f, q0, A0, B0)


@given(forms, small, small)
def test_fold_shifts_the_constant(f, da, db):
    g = fold(f, (da, db))
    assert g.at(0, 0) == f.at(da, db)
    assert (g.c_a, g.c_b) == (f.c_a, f.c_b)


@given(forms, small, small)
def test_vanishing_agrees_with_specialisation(f, a, b):
    assert vanishes_at(f, a, b) == qlin(f).fold(a, b).is_zero()


def test_weight_shift_adds_componentwise():
    assert WeightShift(1, -2) + (3, 4) == WeightShift(4, 2)


def test_bracket_text():
    assert bracket_text((1, 3, 4)) == "[a+3b+4]"
    assert bracket_text((0, 3, 0)) == "[3b]"
    assert bracket_text((0, 0, 7)) == "[7]"
    assert bracket_text((1, 0, -2)) == "[a-2]"
    assert bracket_text((-1, 0, 0)) == "[-a]"
    assert str(LinearWeightForm(2, 3, 5)) == "[2a+3b+5]"


def test_scaled_form():
    assert LinearWeightForm(1, 2, 3).scaled(3) == (3, 6, 9)
