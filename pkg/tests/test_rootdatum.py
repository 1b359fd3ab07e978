from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dzpackets.rootdatum import (GroupLabel, UnknownLabel, build_preset, cartan_type, center, dual,
                                 dual_label, identify_based_datum, pair, parse_combination)

PRESETS = ["GSpin_5", "GSpin_4", "GSp_4", "GSO_4", "GL_2", "SO_5", "GSpin_9", "GSp_8",
           "GSO_8", "GSpin_8", "GL_3", "GSpin_13"]


@pytest.mark.parametrize("label", PRESETS)
def test_roots_pair_to_two_and_dual_is_involutive(label):
    rd = build_preset(label)
    for a, c in rd.root_pairs():
        assert pair(a, c) == 2
    assert dual(dual(rd)).same_as(rd)
    assert len(rd.positive_root_pairs()) * 2 == len(rd.roots())


@pytest.mark.parametrize("label, kind, nroots, connected", [
    ("GSpin_5", "B2", 8, True),
    ("GSpin_4", "A1^2", 4, False),
    ("GSp_4", "B2", 8, True),
    ("GSO_4", "A1^2", 4, True),
    ("GL_2", "A1", 2, True),
    ("SO_5", "B2", 8, True),
    ("GSpin_9", "B4", 32, True),
    ("GSp_8", "C4", 32, True),
])
def test_preset_types_and_centers(label, kind, nroots, connected):
    rd = build_preset(label)
    assert cartan_type(rd.simple_roots, rd.simple_coroots) == kind
    assert len(rd.roots()) == nroots
    assert center(rd).is_connected is connected


@pytest.mark.parametrize("label, expected", [
    ("GSpin_5", "GSp_4"), ("GSpin_4", "GSO_4"), ("GSp_4", "GSpin_5"), ("GL_2", "GL_2"),
    ("SO_5", "Sp_4"),
])
def test_dual_labels(label, expected):
    assert dual_label(GroupLabel.parse(label)) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dual_of_odd_spin_similitude_is_symplectic_similitude(n):
    assert dual(build_preset(f"GSpin_{2 * n + 1}")).same_as(build_preset(f"GSp_{2 * n}"))


def test_unknown_label():
    with pytest.raises(UnknownLabel):
        build_preset("GSpin_2n")


def test_parse_combination():
    labels = ["e0*", "e1*", "e2*"]
    assert parse_combination("e1* + e2* - e0*", labels) == (-1, 1, 1)
    assert parse_combination("2e2* - e0*", labels) == (-1, 0, 2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(PRESETS), st.data())
def test_reflections_permute_roots(label, data):
    rd = build_preset(label)
    roots = set(rd.roots())
    a, c = data.draw(st.sampled_from(rd.root_pairs()))
    assert {rd.reflect(a, c, r) for r in roots} == roots
    assert rd.reflect(a, c, rd.reflect(a, c, a)) == a


def test_identification_of_the_short_root_subsystem():
    own = build_preset("GSpin_3")
    found = identify_based_datum(own.simple_roots, own.simple_coroots, own)
    assert found.label == GroupLabel("GSpinOdd", (1,))
    # inside GSpin_5 the same subsystem carries an extra central GL_1
    ambient = build_preset("GSpin_5")
    found = identify_based_datum([(0, 0, 1)], [(-1, 0, 2)], ambient)
    assert found.label == GroupLabel("SpinQuotient", (1, 1))
