from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2clasp.qint import qint_const
from g2clasp.rootsys import (
    FUNDAMENTAL,
    POSITIVE_COROOTS,
    POSITIVE_ROOTS,
    RHO,
    NotDominant,
    NotReduced,
    apply_word,
    apply_word_root,
    classical_dim,
    coroot_of,
    extremal_lookup,
    extremal_table,
    inversion_set,
    inversion_set_bruteforce,
    is_dominant,
    is_long,
    pairing,
    pairing_form,
    qdim,
    reflect_weight,
    root_as_weight,
    root_length_class,
    root_text,
    shortest_dominating_word,
)

import oracles

weights = st.tuples(st.integers(-8, 8), st.integers(-8, 8))
dominant = st.tuples(st.integers(0, 8), st.integers(0, 8))


def all_words(max_len):
    for n in range(max_len + 1):
        for w in product("st", repeat=n):
            yield "".join(w)


def is_reduced(word):
    # alternating words of length <= 6 are exactly the reduced ones in G2
    return all(x != y for x, y in zip(word, word[1:])) and len(word) <= 6


def test_positive_roots_match_gram_oracle():
    assert set(POSITIVE_ROOTS) == oracles.positive_roots()
    assert sum(is_long(r) for r in POSITIVE_ROOTS) == 3


def test_coroots_listed_in_root_order():
    for r, c in zip(POSITIVE_ROOTS, POSITIVE_COROOTS):
        assert coroot_of(r) == c


@given(weights)
def test_pairing_matches_invariant_form(w):
    lam = oracles.weight_to_root_basis(w)
    for r, c in zip(POSITIVE_ROOTS, POSITIVE_COROOTS):
        expected = Fraction(2 * oracles.form(lam, r), oracles.form(r, r))
        assert pairing(c, w) == expected


@given(weights)
def test_reflections_match_oracle(w):
    lam = oracles.weight_to_root_basis(w)
    for g, alpha in (("s", (1, 0)), ("t", (0, 1))):
        got = oracles.weight_to_root_basis(reflect_weight(g, w))
        assert got == oracles.reflect(alpha, lam)
        assert reflect_weight(g, reflect_weight(g, w)) == w


def test_simple_roots_as_weights():
    assert root_as_weight((1, 0)) == (2, -1)
    assert root_as_weight((0, 1)) == (-3, 2)


def test_root_length_class():
    assert root_length_class((1, 0)) == 1
    assert root_length_class((0, 1)) == 3
    assert root_length_class((3, 2)) == 3
    with pytest.raises(ValueError):
        root_length_class((1, 2))


@pytest.mark.parametrize("word", [w for w in all_words(6) if is_reduced(w)])
def test_inversion_set_matches_bruteforce(word):
    inv = inversion_set(word)
    assert len(inv) == len(word)
    assert set(inv) == inversion_set_bruteforce(word)


@pytest.mark.parametrize("word", ["ss", "tt", "stss", "ststst" + "s"])
def test_non_reduced_words_are_rejected(word):
    with pytest.raises(NotReduced):
        inversion_set(word)


def test_word_action_order():
    # "st" applies t first
    assert apply_word("st", (1, 0)) == reflect_weight("s", reflect_weight("t", (1, 0)))
    assert apply_word_root("s", (1, 0)) == (-1, 0)


def test_extremal_table_rows_reach_the_fundamental_weight():
    rows = extremal_table()
    assert len(rows) == 12
    for rec in rows:
        assert apply_word(rec.word, rec.mu) == FUNDAMENTAL[rec.fund]
        assert len(rec.word) == len(shortest_dominating_word(rec.mu))
        assert extremal_lookup(rec.mu) == rec
    with pytest.raises(KeyError):
        extremal_lookup((0, 0))


def test_extremal_weights_are_the_weyl_orbits():
    for fund in (1, 2):
        orbit = {FUNDAMENTAL[fund]}
        while True:
            new = {reflect_weight(g, w) for w in orbit for g in "st"} | orbit
            if new == orbit:
                break
            orbit = new
        assert orbit == {rec.mu for rec in extremal_table() if rec.fund == fund}


@given(dominant)
def test_classical_dimension_matches_weyl_formula(lam):
    assert classical_dim(lam) == oracles.weyl_dimension(lam)


def test_fundamental_dimensions():
    assert classical_dim((1, 0)) == 7
    assert classical_dim((0, 1)) == 14
    assert classical_dim((0, 0)) == 1


def test_qdim_loop_values():
    b = qint_const
    assert qdim((1, 0)) == b(2) * b(7) * b(12) / (b(4) * b(6))
    assert qdim((0, 1)) == b(7) * b(8) * b(15) / (b(3) * b(4) * b(5))
    assert qdim((0, 0)) == b(1)


@given(dominant)
def test_qdim_is_bar_invariant(lam):
    d = qdim(lam)
    assert d.evaluate(Fraction(2)) == d.evaluate(Fraction(1, 2))


def test_qdim_needs_dominant_weight():
    with pytest.raises(NotDominant):
        qdim((-1, 2))
    with pytest.raises(NotDominant):
        classical_dim((1, -1))


def test_pairing_form_and_text():
    f = pairing_form((1, 3), RHO)
    assert f == (1, 3, 4)
    assert root_text((3, 2)) == "3*as+2*at"
    assert is_dominant((0, 0)) and not is_dominant((0, -1))
