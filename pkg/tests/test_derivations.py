from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nichols_forge.derivations import (WITNESS_WORDS, ChainLengthError, TermBudgetExceeded, coproduct,
                                       coproduct_component, delta, derivation_chain,
                                       find_nonzero_certificate, parse_letters, word_element)
from nichols_forge.fixtures import builtin
from nichols_forge.ncalg import complete, relations_as_polys
from nichols_forge.quadratic import quadratic_basis


def _all_words(size, degree):
    return itertools.product(range(size), repeat=degree)


@pytest.mark.parametrize("name", ["O2_3_minus", "O2_4_chi", "O2_4_minus", "O4_4_minus"])
def test_delta_matches_coproduct_up_to_degree_four(name):
    q = builtin(name)
    n = q.rack.size
    for d in range(1, 5):
        for w in _all_words(n, d):
            e = {w: 1}
            for j in range(n):
                assert delta(q, j, e) == coproduct_component(q, j, e), (w, j)


def test_coproduct_is_counital():
    q = builtin("O2_4_chi")
    w = (0, 3, 1)
    cop = coproduct(q, w)
    assert cop[(w, ())] == 1 and cop[((), w)] == 1


@pytest.mark.parametrize("name", ["O2_3_minus", "O2_4_chi", "O4_4_minus", "O2_5_chi"])
def test_derivations_kill_quadratic_relations(name):
    q = builtin(name)
    for rel in quadratic_basis(q):
        e = rel.as_dict()
        for j in range(q.rack.size):
            assert delta(q, j, e) == {}


def test_chain_on_a_letter_is_one():
    q = builtin("O2_4_chi")
    for i in range(q.rack.size):
        assert derivation_chain(q, [i], word_element([i])) == 1


def test_chain_length_mismatch_raises():
    q = builtin("O2_4_chi")
    b = quadratic_basis(q)[0].as_dict()
    with pytest.raises(ChainLengthError):
        derivation_chain(q, [0, 1, 2], b)


def test_delta_rejects_degree_zero():
    with pytest.raises(ValueError):
        delta(builtin("O2_3_minus"), 0, {(): 1})


def test_four_letter_witness_is_nonzero():
    q = builtin("O2_4_chi")
    word, chain = WITNESS_WORDS[4]
    assert derivation_chain(q, parse_letters(chain, q), word_element(parse_letters(word, q))) != 0


def test_search_finds_a_certificate():
    q = builtin("O2_4_chi")
    e = word_element(parse_letters(WITNESS_WORDS[4][0], q))
    res = find_nonzero_certificate(q, e)
    assert res.found and not res.exhausted
    assert derivation_chain(q, res.chain, e) == res.scalar != 0


def test_search_on_a_letter():
    q = builtin("O2_3_minus")
    res = find_nonzero_certificate(q, word_element([2]))
    assert res.chain == (2,) and res.scalar == 1


def test_search_on_zero_element_is_inconclusive_not_zero():
    q = builtin("O2_4_chi")
    res = find_nonzero_certificate(q, word_element([0, 0]))
    assert not res.found and res.exhausted


def test_budget_is_enforced():
    q = builtin("O2_4_chi")
    word, chain = WITNESS_WORDS[4]
    e = word_element(parse_letters(word, q))
    with pytest.raises(TermBudgetExceeded):
        derivation_chain(q, parse_letters(chain, q), e, budget=1)
    assert not find_nonzero_certificate(q, e, budget=5).found


def test_unknown_letter():
    with pytest.raises(KeyError):
        parse_letters("az", builtin("O2_4_chi"))


_gb = complete(relations_as_polys(builtin("O2_4_chi")), 6, 6)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=6), st.integers(0, 5))
def test_delta_is_well_defined_on_the_quotient(w, j):
    # delta(w) and delta(nf(w)) agree modulo the ideal
    q = builtin("O2_4_chi")
    nf = _gb.normal_form(w)
    lhs = delta(q, j, {tuple(w): 1})
    rhs = delta(q, j, nf.terms) if nf else {}
    diff = dict(lhs)
    for k, v in rhs.items():
        diff[k] = diff.get(k, 0) - v
    from nichols_forge.ncalg import NCPoly
    assert not _gb.normal_form(NCPoly(diff))


def test_printed_five_letter_witness_has_a_vanishing_subword():
    # "abada" only uses the transpositions of S_3, whose Nichols algebra stops in degree 4
    q = builtin("O2_5_chi")
    word = WITNESS_WORDS[5][0]
    assert word.startswith("abada")
    gb = complete(relations_as_polys(q), 5, q.rack.size)
    assert not gb.normal_form(parse_letters("abada", q))
