from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dzpackets.weilparams import (FieldContext, InducedParameter, NotIrreducible, SimilitudeCharacter,
                                  TameCharacter, TooLarge, classify_trd, count_self_dual_twists,
                                  dual_twist, enumerate_trd, frob_conjugate, hom_dim, is_irreducible,
                                  is_prime_power, is_symplectic, single, symplectic_characters, twist)

from oracles import has_alternating_similitude_form, symplectic_orbits_by_search


def test_prime_powers():
    assert [n for n in range(1, 30) if is_prime_power(n)] == [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]


def test_context_validation():
    with pytest.raises(ValueError):
        FieldContext(3, 1, 3)
    with pytest.raises(ValueError):
        FieldContext(3, 0, 4)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 2), st.integers(0, 10 ** 5), st.integers(0, 7))
def test_frobenius_conjugation_is_an_isomorphism(q, d, a, i):
    ctx = FieldContext(q, d, 4)
    eta = TameCharacter(ctx, a, 1)
    assert frob_conjugate(eta, i).key() == eta.key()
    assert frob_conjugate(eta, 2 * d).inertia_exp == eta.inertia_exp


def test_reducible_induction_is_rejected():
    lam = SimilitudeCharacter(3, 0, 0, 4)
    with pytest.raises(NotIrreducible):
        is_symplectic(TameCharacter(FieldContext(3, 1, 4), 0, 0), lam)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(1, 2), st.sampled_from([2, 4, 6]), st.data())
def test_symplectic_agrees_with_form_search(q, d, N, data):
    M = q ** (2 * d) - 1
    a = data.draw(st.integers(0, M - 1))
    ctx = FieldContext(q, d, N)
    eta = TameCharacter(ctx, a, data.draw(st.integers(0, N - 1)))
    lam = SimilitudeCharacter(q, data.draw(st.integers(0, q - 2)), data.draw(st.integers(0, N - 1)), N)
    if not is_irreducible(eta):
        return
    assert is_symplectic(eta, lam) == has_alternating_similitude_form(
        q, d, N, eta.inertia_exp, eta.frob_exp, lam.inertia_exp, lam.frob_exp)


@pytest.mark.parametrize("q, d", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_symplectic_representatives_match_search(q, d):
    N = 4
    for li in range(q - 1):
        for lf in range(N):
            lam = SimilitudeCharacter(q, li, lf, N)
            ours = {(frozenset(c.orbit()), c.frob_exp) for c in symplectic_characters(q, d, lam)}
            assert ours == symplectic_orbits_by_search(q, d, N, li, lf)


@pytest.mark.parametrize("q, li, lf", [(3, 0, 0), (3, 1, 1), (3, 1, 2), (2, 0, 3)])
def test_family_sizes_by_partition(q, li, lf):
    lam = SimilitudeCharacter(q, li, lf, 4)
    s1 = len(symplectic_characters(q, 1, lam))
    s2 = len(symplectic_characters(q, 2, lam))
    assert len(enumerate_trd(q, 1, lam)) == s1
    assert len(enumerate_trd(q, 2, lam)) == s2 + s1 * (s1 - 1) // 2


def test_enumerated_parameters_are_valid():
    lam = SimilitudeCharacter(3, 1, 2, 4)
    for phi in enumerate_trd(3, 2, lam):
        assert classify_trd(phi, 2).valid


def test_guard():
    with pytest.raises(TooLarge):
        enumerate_trd(3, 9, SimilitudeCharacter(3, 0, 0, 4))


def test_classify_lists_every_failure():
    lam = SimilitudeCharacter(3, 0, 0, 4)
    ctx = FieldContext(3, 1, 4)
    eta = TameCharacter(ctx, 1, 1)
    bad = InducedParameter((eta, frob_conjugate(eta, 1)), lam)
    clauses = {v.clause for v in classify_trd(bad, 3).violations}
    assert clauses >= {"degree-sum", "distinct"}
    assert not classify_trd(InducedParameter((TameCharacter(ctx, 0, 0),), lam), 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 79), st.integers(0, 7), st.integers(0, 1), st.integers(0, 7))
def test_dual_twist_is_an_involution(a, f, li, lf):
    lam = SimilitudeCharacter(3, li, lf, 8)
    eta = TameCharacter(FieldContext(3, 2, 8), a, f)
    assert dual_twist(dual_twist(eta, lam), lam) == eta
    assert twist(twist(eta, 1), 7).key() == eta.key()


def test_self_dual_twists_at_most_two():
    lam = SimilitudeCharacter(3, 1, 0, 8)
    for eta in symplectic_characters(3, 1, lam):
        assert 1 <= count_self_dual_twists(eta, lam, 1) <= 2
    with pytest.raises(ValueError):
        count_self_dual_twists(TameCharacter(FieldContext(3, 1, 6), 1, 0),
                               SimilitudeCharacter(3, 1, 0, 6), 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 7), st.integers(0, 3), st.integers(0, 7), st.integers(0, 3))
def test_hom_is_symmetric(a1, f1, a2, f2):
    lam = SimilitudeCharacter(3, 0, 0, 4)
    ctx = FieldContext(3, 1, 4)
    e1, e2 = TameCharacter(ctx, a1, f1), TameCharacter(ctx, a2, f2)
    p1, p2 = single(e1, lam), single(e2, lam)
    assert hom_dim(p1, p2) == hom_dim(p2, p1)
    assert hom_dim(p1, p1) == 1
