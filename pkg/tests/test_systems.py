from fractions import Fraction

import pytest

from nncpoly.errors import DimensionError, InvalidVector
from nncpoly.systems import (
    ConKind,
    Constraint,
    GenKind,
    Generator,
    check_same_dim,
    con_contains,
    extract_skeleton,
    full_gen_contains,
    gen_contains,
)


def test_constraint_normalizes_on_build():
    assert Constraint((2, -4, 6), ConKind.NONSTRICT).row == (1, -2, 3)


def test_equality_rows_get_canonical_sign():
    a = Constraint((0, -2, 4), ConKind.EQUALITY)
    b = Constraint((0, 2, -4), ConKind.EQUALITY)
    assert a.row == b.row == (0, 1, -2)
    # inequalities keep their orientation
    assert Constraint((0, -2, 4), ConKind.NONSTRICT).row == (0, -1, 2)


def test_generator_slot0_rules():
    assert Generator((0, -2, 4), GenKind.LINE).row == (0, 1, -2)
    assert Generator((2, 4, 6), GenKind.POINT).row == (1, 2, 3)
    with pytest.raises(InvalidVector):
        Generator((1, 1), GenKind.RAY)
    with pytest.raises(InvalidVector):
        Generator((1, 0, 0), GenKind.LINE)
    with pytest.raises(InvalidVector):
        Generator((0, 1), GenKind.POINT)
    with pytest.raises(InvalidVector):
        Generator((0, 2), GenKind.CLOSURE_POINT)


def test_all_zero_rows_rejected():
    with pytest.raises(InvalidVector):
        Constraint((0, 0), ConKind.NONSTRICT)


def test_dim_property_and_check_same_dim():
    c = Constraint((1, 2), ConKind.NONSTRICT)
    g = Generator((1, 2, 3), GenKind.POINT)
    assert c.dim == 1 and g.dim == 2
    with pytest.raises(DimensionError):
        check_same_dim([c, g])
    assert check_same_dim([g, Generator((0, 0, 1), GenKind.RAY)]) == 2


def test_con_contains_respects_strictness():
    cs = [
        Constraint((-1, 1), ConKind.NONSTRICT),  # x >= 1
        Constraint((3, -1), ConKind.STRICT),  # x < 3
    ]
    assert con_contains(cs, [1])
    assert con_contains(cs, [Fraction(5, 2)])
    assert not con_contains(cs, [3])
    assert not con_contains(cs, [0])


def test_con_contains_equality():
    cs = [Constraint((0, 1, -1), ConKind.EQUALITY)]  # x = y
    assert con_contains(cs, [2, 2])
    assert not con_contains(cs, [2, 1])


def test_full_gen_contains_is_the_closure_test():
    gens = [
        Generator((1, 1), GenKind.POINT),
        Generator((1, 3), GenKind.CLOSURE_POINT),
    ]
    assert full_gen_contains(gens, [3])
    assert gen_contains(gens, [1])
    assert gen_contains(gens, [2])
    assert not gen_contains(gens, [3])
    assert not gen_contains(gens, [Fraction(7, 2)])


def test_gen_contains_with_rays():
    gens = [
        Generator((1, 0, 0), GenKind.POINT),
        Generator((0, 1, 1), GenKind.RAY),
    ]
    assert gen_contains(gens, [5, 5])
    assert not gen_contains(gens, [5, 4])


def test_extract_skeleton_drops_interior_point():
    square = [
        Generator((1, 0, 0), GenKind.POINT),
        Generator((1, 2, 0), GenKind.POINT),
        Generator((1, 2, 2), GenKind.POINT),
        Generator((1, 0, 2), GenKind.POINT),
        Generator((1, 1, 1), GenKind.POINT),
    ]
    skel, residual = extract_skeleton(square)
    assert {g.row for g in skel} == {(1, 0, 0), (1, 2, 0), (1, 2, 2), (1, 0, 2)}
    assert [g.row for g in residual] == [(1, 1, 1)]


def test_extract_skeleton_prefers_closure_point_on_ties():
    gens = [
        Generator((1, 0), GenKind.POINT),
        Generator((1, 0), GenKind.CLOSURE_POINT),
        Generator((1, 2), GenKind.POINT),
    ]
    skel, residual = extract_skeleton(gens)
    kinds = {g.row: g.kind for g in skel}
    assert kinds[(1, 0)] is GenKind.CLOSURE_POINT
    assert [g.row for g in residual] == [(1, 0)]
