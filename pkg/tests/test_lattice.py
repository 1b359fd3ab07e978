from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dzpackets.lattice import (FreeLattice, NoSolution, determinant, diagonal, format_combination,
                               in_integer_span, integer_inverse, inverse, matmul, quotient_torsion,
                               rank, rational_solve, smith_normal_form)

from oracles import invariant_factors_by_minors

small = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=3, max_cols=3):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_smith_form_factorises_and_divides(m):
    u, d, v = smith_normal_form(m)
    assert matmul(matmul(u, m), v) == d
    assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1
    diag = [x for x in diagonal(d) if x]
    assert all(x > 0 for x in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_smith_invariants_match_determinantal_divisors(m):
    _, d, _ = smith_normal_form(m)
    assert [x for x in diagonal(d) if x] == invariant_factors_by_minors(m)


def test_torsion_of_small_quotients():
    assert quotient_torsion(2, [[2, 0], [0, 3]]).invariant_factors == (6,)
    assert quotient_torsion(3, [[2, 0], [0, 4], [0, 0]]).invariant_factors == (2, 4)
    assert quotient_torsion(2, [[1, 0], [0, 1]]).invariant_factors == ()


@settings(max_examples=80, deadline=None)
@given(matrices(3, 3))
def test_torsion_order_is_product_of_nonunit_invariants(m):
    n = len(m)
    g = quotient_torsion(n, m)
    expected = 1
    for x in invariant_factors_by_minors(m):
        expected *= x
    assert g.order == expected == len(g.codes())
    for code in g.codes():
        assert g.reduce(g.representative(code)) == code


def test_class_labels_name_coinciding_units():
    lat = FreeLattice.standard(["e1*", "e2*"])
    g = quotient_torsion(lat, [[1, 1], [-1, 1]])
    labels = sorted(g.class_label(c) for c in g.codes())
    assert labels == ["0̄", "ē1* = ē2*"]


def test_format_combination():
    assert format_combination((1, -1, 0), ["e1", "e2", "e3"]) == "e1 - e2"
    assert format_combination((0, 0), ["a", "b"]) == "0"
    assert format_combination((Fraction(1, 2), 2), ["x", "y"]) == "1/2x + 2y"


def test_inverses_and_solving():
    a = [[2, 1], [1, 1]]
    assert matmul(a, integer_inverse(a)) == [[1, 0], [0, 1]]
    assert matmul(a, inverse(a)) == [[1, 0], [0, 1]]
    assert rational_solve([[2, 0], [0, 4]], (1, 1)) == (Fraction(1, 2), Fraction(1, 4))
    with pytest.raises(NoSolution):
        rational_solve([[1, 1], [1, 1]], (1, 0))
    assert in_integer_span([(2, 0), (0, 2)], (4, -2))
    assert not in_integer_span([(2, 0), (0, 2)], (1, 0))
    assert rank([[1, 2], [2, 4]]) == 1
