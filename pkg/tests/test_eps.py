"""The closed-cone engine and the slack-variable route around it.

This route is deliberately separate code from the main engine: strictness
is pushed into an extra coordinate, the closed problem is solved, and the
result is decoded.  The tests pin the encoding rules and check both routes
land on the same sets.
"""

import pytest

from nncpoly import eps
from nncpoly.errors import EmptySystem, KindError
from nncpoly.systems import ConKind, Constraint, GenKind, Generator


def test_closed_square_both_directions():
    square = [
        Constraint((1, 1, 0), ConKind.NONSTRICT),
        Constraint((1, -1, 0), ConKind.NONSTRICT),
        Constraint((1, 0, 1), ConKind.NONSTRICT),
        Constraint((1, 0, -1), ConKind.NONSTRICT),
    ]
    cone = eps.closed_c2g(square)
    gens = sorted((g.row, g.kind.name) for g in eps.closed_generators(cone))
    assert gens == [
        ((1, -1, -1), "POINT"),
        ((1, -1, 1), "POINT"),
        ((1, 1, -1), "POINT"),
        ((1, 1, 1), "POINT"),
    ]
    back = eps.closed_g2c([Generator(r, GenKind.POINT) for r, _ in gens])
    cons = sorted((c.row, c.kind.name) for c in eps.closed_constraints(back))
    assert cons == sorted((c.row, c.kind.name) for c in square)


def test_closed_engine_handles_lines_and_equalities():
    cone = eps.closed_c2g([Constraint((0, 0, 1), ConKind.EQUALITY)])
    gens = sorted((g.row, g.kind.name) for g in eps.closed_generators(cone))
    assert gens == [((0, 1, 0), "LINE"), ((1, 0, 0), "POINT")]


def test_closed_engine_rejects_nnc_rows():
    with pytest.raises(KindError):
        eps.closed_c2g([Constraint((1, -1), ConKind.STRICT)])
    with pytest.raises(KindError):
        eps.closed_g2c([Generator((1, 1), GenKind.CLOSURE_POINT)])
    with pytest.raises(EmptySystem):
        eps.closed_g2c([Generator((0, 1), GenKind.RAY)])


def test_minimal_cone_rows_drops_redundant_ray():
    lines, rays = eps.minimal_cone_rows([], [(1, 1, 0), (1, 3, 0), (1, 2, 0)], 3)
    assert lines == []
    assert sorted(rays) == [(1, 1, 0), (1, 3, 0)]


def test_encode_constraints_appends_slack_column():
    enc = eps.eps_encode_constraints(
        [
            Constraint((-1, 1), ConKind.NONSTRICT),
            Constraint((3, -1), ConKind.STRICT),
        ]
    )
    assert [(c.row, c.kind.name) for c in enc] == [
        ((-1, 1, 0), "NONSTRICT"),
        ((3, -1, -1), "NONSTRICT"),
        ((0, 0, 1), "NONSTRICT"),
        ((1, 0, -1), "NONSTRICT"),
    ]


def test_decode_constraints_recovers_strictness():
    dec = eps.eps_decode_constraints(
        [
            Constraint((3, -1, -1), ConKind.NONSTRICT),
            Constraint((0, 1, 0), ConKind.NONSTRICT),
            Constraint((0, 0, 1), ConKind.NONSTRICT),
            Constraint((1, 0, -1), ConKind.NONSTRICT),
        ]
    )
    assert [(c.row, c.kind.name) for c in dec] == [
        ((3, -1), "STRICT"),
        ((0, 1), "NONSTRICT"),
    ]


def test_decode_rejects_rows_that_lean_on_the_slack():
    with pytest.raises(KindError):
        eps.eps_decode_constraints([Constraint((1, -1, 1), ConKind.NONSTRICT)])
    with pytest.raises(KindError):
        eps.eps_decode_constraints([Constraint((0, 1, -1), ConKind.EQUALITY)])
    with pytest.raises(KindError):
        eps.eps_decode_generators([Generator((0, 1, 1), GenKind.RAY)])


def test_encode_generators_points_carry_a_shadow():
    enc = eps.eps_encode_generators(
        [
            Generator((1, 5), GenKind.POINT),
            Generator((1, 3), GenKind.CLOSURE_POINT),
            Generator((0, 1), GenKind.RAY),
        ]
    )
    assert [(g.row, g.kind.name) for g in enc] == [
        ((1, 5, 1), "POINT"),
        ((1, 5, 0), "POINT"),
        ((1, 3, 0), "POINT"),
        ((0, 1, 0), "RAY"),
    ]


def test_decode_generators_shadow_is_not_a_closure_point():
    dec = eps.eps_decode_generators(
        [
            Generator((1, 5, 1), GenKind.POINT),
            Generator((1, 5, 0), GenKind.POINT),
            Generator((1, 3, 0), GenKind.POINT),
            Generator((0, 1, 0), GenKind.RAY),
        ]
    )
    assert [(g.row, g.kind.name) for g in dec] == [
        ((1, 5), "POINT"),
        ((1, 3), "CLOSURE_POINT"),
        ((0, 1), "RAY"),
    ]


def test_both_routes_agree_on_an_nnc_triangle():
    cs = [
        Constraint((0, 1, 0), ConKind.STRICT),
        Constraint((0, 0, 1), ConKind.NONSTRICT),
        Constraint((2, -1, -1), ConKind.STRICT),
    ]
    gens, _ = eps.eps_c2g(cs)
    from nncpoly.conversion import conversion_c2g, emit_generators

    direct = emit_generators(conversion_c2g(cs))
    assert sorted((g.row, g.kind.name) for g in gens) == sorted(
        (g.row, g.kind.name) for g in direct
    )


def test_roundtrip_through_the_slack_route():
    gens = [
        Generator((1, 1), GenKind.POINT),
        Generator((1, 3), GenKind.CLOSURE_POINT),
    ]
    cons, _ = eps.eps_g2c(gens)
    assert sorted((c.row, c.kind.name) for c in cons) == [
        ((-1, 1), "NONSTRICT"),
        ((3, -1), "STRICT"),
    ]


def test_bruteforce_face_enumeration():
    # closure faces named by their saturated row sets
    faces = eps.enumerate_faces_bruteforce(
        [
            Constraint((-1, 1), ConKind.NONSTRICT),
            Constraint((3, -1), ConKind.STRICT),
        ]
    )
    assert faces == {frozenset(), frozenset({0}), frozenset({1})}

    tri = eps.enumerate_faces_bruteforce(
        [
            Constraint((0, 1, 0), ConKind.NONSTRICT),
            Constraint((0, 0, 1), ConKind.NONSTRICT),
            Constraint((2, -1, -1), ConKind.STRICT),
        ]
    )
    assert tri == {
        frozenset(s)
        for s in ([], [0], [1], [2], [0, 1], [0, 2], [1, 2])
    }


def test_counting_matches_the_direct_engine_on_closed_input():
    from nncpoly.conversion import conversion_c2g, conversion_g2c

    square = [
        Constraint((1, 1, 0), ConKind.NONSTRICT),
        Constraint((1, -1, 0), ConKind.NONSTRICT),
        Constraint((1, 0, 1), ConKind.NONSTRICT),
        Constraint((1, 0, -1), ConKind.NONSTRICT),
    ]
    direct = conversion_c2g(square)
    cone = eps.closed_c2g(square)
    assert direct.counters.vec_ops == cone.counters.vec_ops == 18
    assert direct.counters.sizes == cone.counters.sizes

    corners = [
        Generator((1, 1, 1), GenKind.POINT),
        Generator((1, -1, 1), GenKind.POINT),
        Generator((1, 1, -1), GenKind.POINT),
        Generator((1, -1, -1), GenKind.POINT),
    ]
    direct_g = conversion_g2c(corners)
    cone_g = eps.closed_g2c(list(corners))
    assert direct_g.counters.vec_ops == cone_g.counters.vec_ops == 13
