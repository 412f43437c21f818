from fractions import Fraction

import pytest

from nncpoly import ConKind, Constraint, GenKind, Generator, NncPolyhedron
from nncpoly.errors import DimensionError, EmptySystem


def interval(lo_strict: bool, hi_strict: bool) -> NncPolyhedron:
    return NncPolyhedron.from_constraints(
        [
            Constraint((-1, 1), ConKind.STRICT if lo_strict else ConKind.NONSTRICT),
            Constraint((3, -1), ConKind.STRICT if hi_strict else ConKind.NONSTRICT),
        ]
    )


OPEN_SQUARE_CS = [
    Constraint((0, 1, 0), ConKind.STRICT),
    Constraint((0, 0, 1), ConKind.STRICT),
    Constraint((2, -1, 0), ConKind.STRICT),
    Constraint((2, 0, -1), ConKind.STRICT),
]


def test_needs_positive_dimension():
    with pytest.raises(DimensionError):
        NncPolyhedron.universe(0)


def test_from_constraints_needs_rows_or_dim():
    with pytest.raises(EmptySystem):
        NncPolyhedron.from_constraints([])
    assert NncPolyhedron.from_constraints([], dim=2).equals(NncPolyhedron.universe(2))


def test_from_generators_needs_rows():
    with pytest.raises(EmptySystem):
        NncPolyhedron.from_generators([])


def test_closure_points_alone_give_the_empty_set():
    p = NncPolyhedron.from_generators([Generator((1, 0), GenKind.CLOSURE_POINT)])
    assert p.is_empty()


def test_mixed_dimensions_rejected():
    with pytest.raises(DimensionError):
        NncPolyhedron.from_constraints(
            [Constraint((1, 1), ConKind.NONSTRICT), Constraint((1, 1, 0), ConKind.NONSTRICT)]
        )


def test_contains_point():
    p = interval(False, True)  # [1, 3)
    assert p.contains_point([1])
    assert p.contains_point([Fraction(5, 2)])
    assert not p.contains_point([3])
    with pytest.raises(DimensionError):
        p.contains_point([1, 1])


def test_empty_polyhedron_contract():
    e = NncPolyhedron.empty(2)
    assert e.is_empty()
    assert e.generators() == []
    assert [(c.row, c.kind) for c in e.constraints()] == [((-1, 0, 0), ConKind.NONSTRICT)]
    assert not e.contains_point([0, 0])


def test_infeasible_constraints_become_empty():
    p = NncPolyhedron.from_constraints(
        [Constraint((0, 1), ConKind.STRICT), Constraint((0, -1), ConKind.STRICT)]
    )
    assert p.is_empty()
    assert p.equals(NncPolyhedron.empty(1))


def test_includes_is_strictness_aware():
    half, closed, inner = interval(False, True), interval(False, False), interval(True, True)
    assert closed.includes(half) and not half.includes(closed)
    assert half.includes(inner) and not inner.includes(half)
    assert half.includes(half)


def test_includes_on_boundary_points():
    open_sq = NncPolyhedron.from_constraints(OPEN_SQUARE_CS)
    closed_sq = open_sq.closure()
    interior = NncPolyhedron.from_generators([Generator((1, 1, 1), GenKind.POINT)])
    edge = NncPolyhedron.from_generators([Generator((1, 1, 0), GenKind.POINT)])
    assert open_sq.includes(interior)
    assert not open_sq.includes(edge)
    assert closed_sq.includes(edge)
    assert closed_sq.includes(open_sq)
    assert not open_sq.includes(closed_sq)


def test_equals_ignores_representation():
    closed = interval(False, False)
    padded = NncPolyhedron.from_generators(
        [
            Generator((1, 1), GenKind.POINT),
            Generator((1, 3), GenKind.POINT),
            Generator((1, 2), GenKind.POINT),
        ]
    )
    assert padded.equals(closed)
    assert not padded.equals(interval(False, True))


def test_closure():
    half = interval(False, True)
    closed = half.closure()
    assert closed.equals(interval(False, False))
    assert closed.closure().equals(closed)


def test_intersect():
    p = interval(False, True)  # [1, 3)
    q = NncPolyhedron.from_constraints(
        [Constraint((-2, 1), ConKind.STRICT), Constraint((5, -1), ConKind.NONSTRICT)]
    )  # (2, 5]
    r = p.intersect(q)
    assert r.contains_point([Fraction(5, 2)])
    assert not r.contains_point([2])
    assert not r.contains_point([3])
    assert sorted((c.row, c.kind.name) for c in r.constraints()) == [
        ((-2, 1), "STRICT"),
        ((3, -1), "STRICT"),
    ]


def test_poly_hull_can_close_a_gap():
    a = NncPolyhedron.from_constraints(
        [Constraint((0, 1), ConKind.NONSTRICT), Constraint((1, -1), ConKind.STRICT)]
    )  # [0, 1)
    b = NncPolyhedron.from_generators([Generator((1, 2), GenKind.POINT)])  # {2}
    h = a.poly_hull(b)
    assert sorted((c.row, c.kind.name) for c in h.constraints()) == [
        ((0, 1), "NONSTRICT"),
        ((2, -1), "NONSTRICT"),
    ]


def test_hull_keeps_openness_when_no_point_closes_it():
    a = interval(True, True)  # (1, 3)
    b = NncPolyhedron.from_constraints(
        [Constraint((-5, 1), ConKind.STRICT), Constraint((7, -1), ConKind.STRICT)]
    )  # (5, 7)
    h = a.poly_hull(b)
    assert h.equals(
        NncPolyhedron.from_constraints(
            [Constraint((-1, 1), ConKind.STRICT), Constraint((7, -1), ConKind.STRICT)]
        )
    )


def test_empty_absorbs_and_neutralizes():
    e = NncPolyhedron.empty(2)
    p = NncPolyhedron.from_constraints(OPEN_SQUARE_CS)
    assert e.intersect(p).is_empty()
    assert p.intersect(e).is_empty()
    assert e.poly_hull(p).equals(p)
    assert p.poly_hull(e).equals(p)
    assert p.includes(e)
    assert not e.includes(p)
    assert e.includes(e)


def test_universe_includes_everything():
    u = NncPolyhedron.universe(2)
    assert u.includes(NncPolyhedron.from_constraints(OPEN_SQUARE_CS))
    assert u.includes(u)
    assert u.contains_point([Fraction(-100), Fraction(100)])


def test_add_constraints_matches_one_shot():
    rows = [
        Constraint((0, 1, 0), ConKind.NONSTRICT),
        Constraint((0, 0, 1), ConKind.STRICT),
        Constraint((3, -1, -1), ConKind.NONSTRICT),
    ]
    staged = NncPolyhedron.from_constraints(rows[:1]).add_constraints(rows[1:])
    assert staged.equals(NncPolyhedron.from_constraints(rows))


def test_add_generators_matches_one_shot():
    gens = [
        Generator((1, 0, 0), GenKind.POINT),
        Generator((1, 2, 0), GenKind.CLOSURE_POINT),
        Generator((0, 0, 1), GenKind.RAY),
    ]
    staged = NncPolyhedron.from_generators(gens[:1]).add_generators(gens[1:])
    assert staged.equals(NncPolyhedron.from_generators(gens))


def test_add_generators_to_empty():
    e = NncPolyhedron.empty(1)
    p = e.add_generators([Generator((1, 4), GenKind.POINT)])
    assert p.equals(NncPolyhedron.from_generators([Generator((1, 4), GenKind.POINT)]))


def test_operations_leave_operands_alone():
    p = interval(False, True)
    q = interval(True, False)
    before_p = sorted((c.row, c.kind) for c in p.constraints())
    before_q = sorted((c.row, c.kind) for c in q.constraints())
    p.intersect(q)
    p.poly_hull(q)
    p.add_constraints([Constraint((2, -1), ConKind.STRICT)])
    assert sorted((c.row, c.kind) for c in p.constraints()) == before_p
    assert sorted((c.row, c.kind) for c in q.constraints()) == before_q


def test_repr_mentions_dim():
    assert "2" in repr(NncPolyhedron.universe(2))
