from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dzpackets.affweyl import (AffineWeylElement, UnsupportedTheta, act, act_on_root, affine_base,
                               fixed_point, longest_element, longest_element_bfs, nu_element,
                               omega_group, permutation_of, point, s_theta, subsystem_at,
                               weyl_group_size, word_element)

BASES = [("+", 1), ("+", 2), ("-", 1), ("dagger", 2), ("ddagger", 1), ("SO5", 1)]
fracs = st.fractions(min_value=-3, max_value=3, max_denominator=6)


@pytest.mark.parametrize("name, m", BASES)
def test_simple_reflections_are_involutions_fixing_their_wall(name, m):
    base = affine_base(name, m)
    for lab in base.labels:
        s = base.root(lab).reflection()
        assert (s * s).is_identity()
        assert act_on_root(s, base.root(lab)).key() == base.root(lab).negate().key()


@pytest.mark.parametrize("name, m", BASES)
def test_interior_point_lies_in_alcove(name, m):
    base = affine_base(name, m)
    assert base.contains(base.interior_point())


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(BASES), st.data())
def test_action_is_compatible_with_products(bm, data):
    base = affine_base(*bm)
    word = data.draw(st.lists(st.sampled_from(base.labels), min_size=1, max_size=5))
    x = point(*data.draw(st.lists(fracs, min_size=base.dim, max_size=base.dim)))
    g = word_element(base, word)
    h = word_element(base, word[:1])
    assert act(g * h, x) == act(g, act(h, x))
    assert act(g.inverse(), act(g, x)) == x


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(BASES), st.data())
def test_roots_transform_contragrediently(bm, data):
    base = affine_base(*bm)
    g = word_element(base, data.draw(st.lists(st.sampled_from(base.labels), max_size=4)))
    alpha = base.root(data.draw(st.sampled_from(base.labels)))
    x = point(*data.draw(st.lists(fracs, min_size=base.dim, max_size=base.dim)))
    assert act_on_root(g, alpha)(act(g, x)) == alpha(x)


def test_finite_weyl_group_orders():
    assert weyl_group_size(affine_base("SO5").finite_simple()) == 8
    assert weyl_group_size(affine_base("+", 1).finite_simple()) == 384


def test_longest_element_routes_agree():
    base = affine_base("SO5")
    J = base.finite_simple()
    assert longest_element(J) == longest_element_bfs(J)


@pytest.mark.parametrize("name, m", [("+", 1), ("+", 2), ("-", 1), ("dagger", 2), ("ddagger", 1)])
def test_theta_generators(name, m):
    base = affine_base(name, m)
    gens = s_theta(base)
    vs = [g for g in gens if g.name.startswith("v[")]
    assert [g.name for g in vs] == [f"v[{lab}, Θ]" for lab in base.theta_removed]
    for g in gens:
        assert g.preserves_theta
    for g in vs:
        assert g.involution


def test_theta_must_match_catalog():
    with pytest.raises(UnsupportedTheta):
        s_theta(affine_base("SO5"))
    base = affine_base("+", 1)
    with pytest.raises(UnsupportedTheta):
        s_theta(base, theta=base.labels[:1])


@pytest.mark.parametrize("name", ["+", "-"])
def test_nu_squares_to_central_translation_and_swaps(name):
    base = affine_base(name, 1)
    nu = nu_element(base)
    assert nu * nu == AffineWeylElement.translation_by((1,) + (0,) * (base.dim - 1))
    perm = permutation_of(nu, base)
    a0, a1 = f"α0{name}", f"α1{name}"
    assert perm[a0] == a1 and perm[a1] == a0
    assert len(omega_group(base).elements) == 2


def test_fixed_point_and_subsystem():
    base = affine_base("SO5")
    g = word_element(base, ["α1", "α2"])
    x = fixed_point(g)
    assert act(g, x) == x
    roots = [r.gradient for r in base.finite_simple()]
    assert subsystem_at(point(0, 0), roots) == [tuple(r) for r in roots]
    assert subsystem_at(point(Fraction(1, 3), Fraction(1, 5)), [(1, 0)]) == []
