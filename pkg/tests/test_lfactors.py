from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dzpackets.lfactors import (MonomialRep, PreconditionViolation, alt2, character_rep, direct_sum,
                                dual_rep, hom_via_poles, induce_to_monomial, inertia_invariants,
                                l_factor, mu_zero_criterion, packets_agree_check, parameter_rep,
                                pole_order_at_zero, sym2, tensor, trivial_rep)
from dzpackets.weilparams import (FieldContext, InducedParameter, NotIrreducible, SimilitudeCharacter,
                                  TameCharacter, enumerate_trd, hom_dim, is_irreducible, single,
                                  symplectic_characters)

from oracles import block_sum, induced_block, intertwiner_dimension

N = 4


def regular(q, d, a, f):
    eta = TameCharacter(FieldContext(q, d, N), a, f)
    return eta if is_irreducible(eta) else None


def test_trivial_l_factor_has_simple_pole():
    L = l_factor(trivial_rep(3, N))
    assert str(L) == "1/[(1 - T)]" and pole_order_at_zero(L) == 1


def test_monomial_validation():
    with pytest.raises(ValueError):
        MonomialRep(3, 2, N, (1, 1), (1, 0), (0, 0))
    with pytest.raises(NotIrreducible):
        induce_to_monomial(TameCharacter(FieldContext(3, 1, N), 0, 0))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 79), st.integers(0, 3), st.integers(0, 7), st.integers(0, 3))
def test_dimensions(a, f, b, g):
    e1, e2 = regular(3, 2, a, f), regular(3, 1, b, g)
    if e1 is None or e2 is None:
        return
    v, w = induce_to_monomial(e1), induce_to_monomial(e2)
    assert tensor(v, w).dim == 8
    assert direct_sum(v, w).dim == 6
    assert sym2(v).dim == 10 and alt2(v).dim == 6
    assert dual_rep(dual_rep(v)) == v
    assert inertia_invariants(tensor(dual_rep(v), v)).dim == 4


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 2), st.integers(1, 2), st.data())
def test_pole_order_matches_intertwiner_search(q, d1, d2, data):
    M1, M2 = q ** (2 * d1) - 1, q ** (2 * d2) - 1
    e1 = regular(q, d1, data.draw(st.integers(0, M1 - 1)), data.draw(st.integers(0, N - 1)))
    e2 = regular(q, d2, data.draw(st.integers(0, M2 - 1)), data.draw(st.integers(0, N - 1)))
    if e1 is None or e2 is None:
        return
    lam = SimilitudeCharacter(q, 0, 0, N)
    K = 4
    r1 = block_sum([induced_block(q, K, N, d1, e1.inertia_exp, e1.frob_exp)])
    r2 = block_sum([induced_block(q, K, N, d2, e2.inertia_exp, e2.frob_exp)])
    expected = intertwiner_dimension(r1, r2, q ** K - 1, N)
    assert hom_via_poles(single(e1, lam), single(e2, lam)) == expected
    assert hom_dim(single(e1, lam), single(e2, lam)) == expected


def test_character_rep_restricts_norm():
    lam = SimilitudeCharacter(3, 1, 1, N)
    rep = character_rep(lam, K=2)
    assert rep.inertia_exps == (4,)
    assert pole_order_at_zero(l_factor(rep)) == 0
    assert l_factor(rep).restricted


def test_mu_zero_on_symplectic_pieces():
    lam = SimilitudeCharacter(3, 1, 2, N)
    (eta,) = symplectic_characters(3, 1, lam)[:1]
    phi = single(eta, lam)
    report = mu_zero_criterion(phi, phi)
    assert report.hom == 1 and report.hom_nonzero
    assert report.pole_orders[:2] == (1, 1)
    assert report.sym2_invariants == (0, 0)


def test_mu_zero_preconditions():
    lam = SimilitudeCharacter(3, 1, 2, N)
    eta = TameCharacter(FieldContext(3, 1, N), 1, 1)
    phi = single(eta, lam)
    with pytest.raises(PreconditionViolation):
        mu_zero_criterion(phi, phi)


def test_packets_agree_on_a_family():
    lam = SimilitudeCharacter(3, 1, 2, N)
    fam = enumerate_trd(3, 2, lam)
    for phi in fam:
        report = packets_agree_check(phi, fam)
        assert report.unique and report.family_size == len(fam)


def test_parameter_rep_is_sum_of_components():
    lam = SimilitudeCharacter(3, 1, 2, N)
    chars = symplectic_characters(3, 1, lam)
    phi = InducedParameter(tuple(chars[:2]), lam)
    assert parameter_rep(phi).dim == 4
