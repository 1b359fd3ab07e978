from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dzpackets.drpackets import (ConstraintViolation, Shape, TRDShape, component_group,
                                 dual_torus_element, kottwitz_class, ordered_classes, packet_table,
                                 render_markdown, table_records, u_lambda_via_omega)

SHAPES = [Shape.IRREDUCIBLE, Shape.SPLIT]


def in_subfield(a: int, q: int, degree: int) -> bool:
    """``g^a`` lies in ``F_{q^degree}`` iff it is fixed by ``Frob^degree``."""
    return a * (q ** degree - 1) % (q ** 4 - 1) == 0


@pytest.mark.parametrize("shape, rows", [(Shape.IRREDUCIBLE, 2), (Shape.SPLIT, 4)])
def test_packet_sizes_match_component_groups(shape, rows):
    table = packet_table(shape)
    assert len(table) == rows == component_group(TRDShape.of(shape)).order


@pytest.mark.parametrize("shape", SHAPES)
def test_rows_follow_class_order_and_kottwitz(shape):
    table = packet_table(shape)
    g = component_group(TRDShape.of(shape))
    assert [r.code for r in table] == [c for c, _ in ordered_classes(g)]
    for row in table:
        assert row.u_class == row.kottwitz == kottwitz_class(row.rho_lambda)
        assert u_lambda_via_omega(row.shape, row.rho_lambda) == row.u_class


@pytest.mark.parametrize("shape", SHAPES)
def test_trivial_class_gives_split_group(shape):
    row = packet_table(shape)[0]
    assert row.rho_label == "0̄" and row.u_class == 1
    assert str(row.quotient_label) == "GSpin_5"


@pytest.mark.parametrize("shape", SHAPES)
def test_three_tables_rendered(shape):
    records = table_records(shape)
    assert list(records) == ["table1", "table2", "table3"]
    text = render_markdown(records)
    assert sum(line.startswith("|---") for line in text.splitlines()) == 3


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(0, 10 ** 4))
def test_irreducible_element_constraint(q, a):
    try:
        el = dual_torus_element("irreducible", q, (a,))
    except ConstraintViolation:
        assert in_subfield(a, q, 2)
        return
    assert not in_subfield(a, q, 2)
    mod = q ** 4 - 1
    assert sorted(el.exponents) == sorted(a * q ** i % mod for i in range(4))


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(0, 700), st.integers(0, 700))
def test_split_element_constraints(q, a1, a2):
    mod = q ** 4 - 1
    a1, a2 = a1 % mod, a2 % mod
    ok = (all(in_subfield(a, q, 2) and not in_subfield(a, q, 1) for a in (a1, a2))
          and a1 * (q + 1) % mod == a2 * (q + 1) % mod
          and a1 != a2 and a1 != a2 * q % mod)
    if ok:
        el = dual_torus_element("split", q, (a1, a2))
        assert el.exponents == (a1, a2, a2 * q % mod, a1 * q % mod)
    else:
        with pytest.raises(ConstraintViolation):
            dual_torus_element("split", q, (a1, a2))
