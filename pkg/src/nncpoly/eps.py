"""Closed-polyhedra reference engine and the extra-dimension route.

This module is the standard of comparison: a plain Chernikova-style double
description for topologically closed polyhedra, written without any of the
strictness machinery.  Strict inequalities and closure points are rejected
outright (KindError).  NNC inputs reach it through the encode/decode pair,
which models strictness with one extra coordinate: a slack that strict rows
must leave positive.

The counting discipline matches the direct engine (one vec_op per scalar
product and per linear combination, saturation work through the same bit
row container), so operation counts of the two routes are comparable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import feasibility
from .counting import OpCounters
from .errors import DimensionError, EmptySystem, KindError, ScaleLimitExceeded
from .homvec import Row, combine_with_products, eliminate, normalize, scalar_prod
from .satlat import SatMatrix
from .systems import ConKind, Constraint, GenKind, Generator


@dataclass
class CElem:
    row: Row
    line: bool


@dataclass
class ClosedCone:
    """Double description state for one side of a closed polyhedron."""

    dim: int
    gen_side: bool
    elems: dict[int, CElem] = field(default_factory=dict)
    sat: SatMatrix = field(default_factory=SatMatrix)
    counters: OpCounters = field(default_factory=OpCounters)
    empty: bool = False
    next_id: int = 0

    def __post_init__(self):
        self.sat.counters = self.counters

    def add(self, row: Row, line: bool, satrow: int = 0) -> int:
        eid = self.next_id
        self.next_id += 1
        self.elems[eid] = CElem(row, line)
        self.sat.new_row(eid, satrow)
        return eid

    def drop(self, eid: int) -> None:
        del self.elems[eid]
        self.sat.drop_row(eid)

    def set_empty(self) -> None:
        self.empty = True
        self.elems.clear()
        self.sat.bits.clear()


def closed_universe(dim: int) -> ClosedCone:
    if dim < 1:
        raise DimensionError("dimension must be at least 1")
    cone = ClosedCone(dim=dim, gen_side=True)
    line_ids = []
    for i in range(1, dim + 1):
        axis = [0] * (dim + 1)
        axis[i] = 1
        line_ids.append(cone.add(tuple(axis), True))
    cone.add((1,) + (0,) * dim, False)
    cone.sat.add_col(line_ids)  # homogenization facet, saturated by directions
    return cone


def closed_point_base(point_row: Row) -> ClosedCone:
    dim = len(point_row) - 1
    cone = ClosedCone(dim=dim, gen_side=False)
    for i in range(1, dim + 1):
        eq = [0] * (dim + 1)
        eq[0] = -point_row[i]
        eq[i] = point_row[0]
        cone.add(normalize(tuple(eq), bidirectional=True), True)
    pos_id = cone.add((1,) + (0,) * dim, False)
    cone.counters.iterations += 1
    cone.sat.add_col([eid for eid in cone.elems if eid != pos_id])
    cone.counters.sizes.append(len(cone.elems))
    return cone


def _adjacent(cone: ClosedCone, a: int, b: int, witnesses: list[int]) -> bool:
    common = cone.sat.and_rows((a, b))
    for w in witnesses:
        if w == a or w == b:
            continue
        if cone.sat.covers(w, common):
            return False
    return True


def closed_add_row(cone: ClosedCone, row: Row, line: bool) -> None:
    """One Chernikova step: saturate a line-like violation if there is one,
    otherwise split, combine adjacent opposite pairs and keep the good side."""
    if len(row) != cone.dim + 1:
        raise DimensionError(f"row has {len(row) - 1} coordinates, cone has {cone.dim}")
    cone.counters.iterations += 1
    if cone.empty:
        cone.counters.sizes.append(0)
        return

    sps: dict[int, int] = {}
    for eid, e in cone.elems.items():
        sps[eid] = scalar_prod(row, e.row)
        cone.counters.vec_ops += 1

    vid = next(
        (eid for eid in sorted(cone.elems) if cone.elems[eid].line and sps[eid] != 0),
        None,
    )
    if vid is not None:
        sv = sps[vid]
        half = (
            cone.elems[vid].row
            if sv > 0
            else normalize(tuple(-x for x in cone.elems[vid].row))
        )
        sl = abs(sv)
        cone.elems[vid].row = half
        cone.elems[vid].line = False
        sps[vid] = sl
        for eid, e in cone.elems.items():
            if eid == vid or sps[eid] == 0:
                continue
            se = sps[eid]
            if e.line:
                e.row = eliminate(e.row, half, se, sl)
            else:
                e.row = normalize(tuple(sl * a - se * b for a, b in zip(e.row, half)))
            cone.counters.vec_ops += 1
            sps[eid] = 0
        if line:
            del sps[vid]
            cone.drop(vid)
    else:
        pos = sorted(eid for eid, e in cone.elems.items() if not e.line and sps[eid] > 0)
        neg = sorted(eid for eid, e in cone.elems.items() if not e.line and sps[eid] < 0)
        if pos or neg:
            witnesses = [eid for eid, e in cone.elems.items() if not e.line]
            for p in pos:
                for m in neg:
                    if not _adjacent(cone, p, m, witnesses):
                        continue
                    combined = combine_with_products(
                        cone.elems[p].row, cone.elems[m].row, sps[p], sps[m]
                    )
                    cone.counters.vec_ops += 1
                    satrow = cone.sat.and_rows((p, m))
                    eid = cone.add(combined, False, satrow)
                    sps[eid] = 0
            doomed = set(neg) | (set(pos) if line else set())
            for eid in doomed:
                cone.drop(eid)
            if not any(not e.line for e in cone.elems.values()):
                if not cone.gen_side:
                    raise AssertionError("closed cone lost every inequality row")
                cone.set_empty()
                cone.counters.sizes.append(0)
                return

    cone.sat.add_col([eid for eid in cone.elems if sps.get(eid, 0) == 0])
    cone.counters.sizes.append(len(cone.elems))


def closed_c2g(
    constraints: Sequence[Constraint],
    *,
    dim: int | None = None,
    base: ClosedCone | None = None,
) -> ClosedCone:
    cs = list(constraints)
    for c in cs:
        if c.kind is ConKind.STRICT:
            raise KindError("closed engine cannot take strict inequalities")
    if base is not None:
        cone = base
    else:
        if dim is None:
            if not cs:
                raise EmptySystem("dimension unknown: no constraints and no explicit dim")
            dim = cs[0].dim
        cone = closed_universe(dim)
    for c in cs:
        closed_add_row(cone, c.row, c.kind is ConKind.EQUALITY)
    return cone


def closed_g2c(
    generators: Sequence[Generator], *, base: ClosedCone | None = None
) -> ClosedCone:
    gens = list(generators)
    for g in gens:
        if g.kind is GenKind.CLOSURE_POINT:
            raise KindError("closed engine cannot take closure points")
    if base is not None:
        cone = base
    else:
        idx = next((i for i, g in enumerate(gens) if g.kind is GenKind.POINT), None)
        if idx is None:
            raise EmptySystem("a generator system needs at least one point")
        cone = closed_point_base(gens.pop(idx).row)
    for g in gens:
        closed_add_row(cone, g.row, g.kind is GenKind.LINE)
    return cone


def closed_generators(cone: ClosedCone) -> list[Generator]:
    if not cone.gen_side:
        raise KindError("cone holds constraints, not generators")
    if cone.empty:
        return []
    out = []
    for eid in sorted(cone.elems):
        e = cone.elems[eid]
        if e.line:
            out.append(Generator(e.row, GenKind.LINE))
        elif e.row[0] == 0:
            out.append(Generator(e.row, GenKind.RAY))
        else:
            out.append(Generator(e.row, GenKind.POINT))
    if not any(g.kind is GenKind.POINT for g in out):
        return []
    return out


def closed_constraints(cone: ClosedCone) -> list[Constraint]:
    if cone.gen_side:
        raise KindError("cone holds generators, not constraints")
    out = []
    for eid in sorted(cone.elems):
        e = cone.elems[eid]
        if not e.line and e.row[0] > 0 and all(a == 0 for a in e.row[1:]):
            continue  # positivity is implicit outside the cone view
        out.append(Constraint(e.row, ConKind.EQUALITY if e.line else ConKind.NONSTRICT))
    return out


def minimal_cone_rows(
    lines: Sequence[Row], rays: Sequence[Row], width: int
) -> tuple[list[Row], list[Row]]:
    """Minimal double description of the cone spanned by the given rows:
    convert to the constraint side and back.  Needs at least one position
    row among the rays.  Returns (line rows, ray rows)."""
    pos_idx = next((i for i, r in enumerate(rays) if r[0] > 0), None)
    if pos_idx is None:
        raise EmptySystem("minimal form needs a position row")
    rest = list(rays)
    first = rest.pop(pos_idx)
    cone = closed_point_base(first)
    for l in lines:
        closed_add_row(cone, l, True)
    for r in rest:
        closed_add_row(cone, r, False)
    back = closed_universe(width - 1)
    for eid in sorted(cone.elems):
        e = cone.elems[eid]
        closed_add_row(back, e.row, e.line)
    min_lines = [e.row for e in back.elems.values() if e.line]
    min_rays = [e.row for e in back.elems.values() if not e.line]
    return min_lines, min_rays


# -- strictness via one extra coordinate ---------------------------------


def eps_encode_constraints(cs: Sequence[Constraint]) -> list[Constraint]:
    """Widen rows by a slack coordinate: strict rows must clear it, the rest
    ignore it.  The slack itself is bounded into (the closure of) (0, 1]."""
    if not cs:
        raise EmptySystem("nothing to encode")
    dim = cs[0].dim
    out = []
    for c in cs:
        if c.kind is ConKind.STRICT:
            out.append(Constraint(c.row + (-1,), ConKind.NONSTRICT))
        else:
            out.append(Constraint(c.row + (0,), c.kind))
    out.append(Constraint((0,) * (dim + 1) + (1,), ConKind.NONSTRICT))
    out.append(Constraint((1,) + (0,) * dim + (-1,), ConKind.NONSTRICT))
    return out


def eps_decode_constraints(cs: Sequence[Constraint]) -> list[Constraint]:
    out = []
    for c in cs:
        e = c.row[-1]
        body = c.row[:-1]
        if all(a == 0 for a in body[1:]):
            continue  # slack bound (or tautology): no geometric content
        if e == 0:
            out.append(Constraint(body, c.kind))
        else:
            if c.kind is ConKind.EQUALITY or e > 0:
                raise KindError(f"row {c.row} is not a valid slack-encoded inequality")
            out.append(Constraint(body, ConKind.STRICT))
    return out


def eps_encode_generators(gens: Sequence[Generator]) -> list[Generator]:
    """Points sit at slack 1 with a shadow at 0; closure points become plain
    points at slack 0; directions stay at 0."""
    out = []
    for g in gens:
        if g.kind is GenKind.POINT:
            out.append(Generator(g.row + (g.row[0],), GenKind.POINT))
            out.append(Generator(g.row + (0,), GenKind.POINT))
        elif g.kind is GenKind.CLOSURE_POINT:
            out.append(Generator(g.row + (0,), GenKind.POINT))
        else:
            out.append(Generator(g.row + (0,), g.kind))
    return out


def eps_decode_generators(gens: Sequence[Generator]) -> list[Generator]:
    out = []
    point_rows = set()
    decoded = []
    for g in gens:
        e = g.row[-1]
        body = g.row[:-1]
        if g.kind in (GenKind.LINE, GenKind.RAY):
            if e != 0:
                raise KindError(f"direction {g.row} escapes along the slack axis")
            decoded.append((body, g.kind))
        elif e > 0:
            body = normalize(body)
            point_rows.add(body)
            decoded.append((body, GenKind.POINT))
        else:
            decoded.append((normalize(body), GenKind.CLOSURE_POINT))
    for body, kind in decoded:
        if kind is GenKind.CLOSURE_POINT and body in point_rows:
            continue  # shadow of a kept point
        out.append(Generator(body, kind))
    return out


def eps_c2g(constraints: Sequence[Constraint]) -> tuple[list[Generator], ClosedCone]:
    cone = closed_c2g(eps_encode_constraints(constraints))
    gens = closed_generators(cone)
    return (eps_decode_generators(gens) if gens else []), cone


def eps_g2c(generators: Sequence[Generator]) -> tuple[list[Constraint], ClosedCone]:
    cone = closed_g2c(eps_encode_generators(generators))
    return eps_decode_constraints(closed_constraints(cone)), cone


# -- brute-force face enumeration ----------------------------------------

_MAX_ROWS = 10
_MAX_DIM = 3


def enumerate_faces_bruteforce(constraints: Sequence[Constraint]) -> set[frozenset[int]]:
    """Nonempty faces of the closed polyhedron, each named by the full set of
    row indices it saturates.  Exponential on purpose; desk scale only."""
    cs = list(constraints)
    if not cs:
        raise EmptySystem("no rows")
    if len(cs) > _MAX_ROWS or cs[0].dim > _MAX_DIM:
        raise ScaleLimitExceeded(
            f"brute-force faces are desk-scale only (rows<={_MAX_ROWS}, dim<={_MAX_DIM})"
        )
    nvars = cs[0].dim
    base = []
    for c in cs:
        rel = "eq" if c.kind is ConKind.EQUALITY else "ge"
        base.append(
            (tuple(Fraction(a) for a in c.row[1:]), Fraction(c.row[0]), rel)
        )

    faces: set[frozenset[int]] = set()
    idx = range(len(cs))
    for k in range(len(cs) + 1):
        for combo in combinations(idx, k):
            forced = set(combo)
            rows = [
                (coeffs, const, "eq" if i in forced else rel)
                for i, (coeffs, const, rel) in enumerate(base)
            ]
            if not feasibility.feasible(rows, nvars):
                continue
            # a row is part of the face's name iff it cannot leave zero there
            closure = set(forced)
            for j in idx:
                if j in closure:
                    continue
                coeffs, const, _ = base[j]
                if not feasibility.feasible(rows + [(coeffs, const, "gt")], nvars):
                    closure.add(j)
            faces.add(frozenset(closure))
    return faces
