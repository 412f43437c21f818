"""NNC polyhedra with lazily maintained double descriptions.

A polyhedron keeps up to two conversion contexts: a generator-side one fed
by constraints and a constraint-side one fed by generators.  Whichever side
a query needs is built on demand from the other side's emitted system and
then cached.  Operations never mutate a cached context; incremental work
always goes through a clone, so polyhedra behave as immutable values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .conversion import (
    ConvCtx,
    Side,
    atoms,
    conversion_c2g,
    conversion_g2c,
    emit_constraints,
    emit_generators,
    ghosts,
)
from .errors import DimensionError, EmptySystem
from .homvec import scalar_prod
from .systems import ConKind, Constraint, GenKind, Generator, con_contains


def _check_dims(items: Iterable[Constraint | Generator], dim: int) -> None:
    for it in items:
        if it.dim != dim:
            raise DimensionError(f"row of dimension {it.dim} in a {dim}-dimensional system")


class NncPolyhedron:
    """A not necessarily closed convex polyhedron over the rationals."""

    __slots__ = ("dim", "_gen", "_con")

    def __init__(self, dim: int, gen_ctx: ConvCtx | None = None, con_ctx: ConvCtx | None = None):
        if dim < 1:
            raise DimensionError("dimension must be at least 1")
        self.dim = dim
        self._gen = gen_ctx
        self._con = con_ctx

    # -- construction -----------------------------------------------------

    @classmethod
    def from_constraints(
        cls, constraints: Sequence[Constraint], dim: int | None = None
    ) -> "NncPolyhedron":
        cs = list(constraints)
        if dim is None:
            if not cs:
                raise EmptySystem("dimension unknown: pass dim for an unconstrained space")
            dim = cs[0].dim
        _check_dims(cs, dim)
        return cls(dim, gen_ctx=conversion_c2g(cs, dim=dim))

    @classmethod
    def from_generators(cls, generators: Sequence[Generator]) -> "NncPolyhedron":
        gens = list(generators)
        if not gens:
            raise EmptySystem("no generators; use NncPolyhedron.empty(dim)")
        dim = gens[0].dim
        _check_dims(gens, dim)
        if not any(g.kind is GenKind.POINT for g in gens):
            # closure points alone never reach their own positions
            return cls.empty(dim)
        return cls(dim, con_ctx=conversion_g2c(gens))

    @classmethod
    def universe(cls, dim: int) -> "NncPolyhedron":
        return cls(dim, gen_ctx=conversion_c2g([], dim=dim))

    @classmethod
    def empty(cls, dim: int) -> "NncPolyhedron":
        ctx = ConvCtx(dim=dim, producing=Side.GEN)
        ctx.set_empty()
        return cls(dim, gen_ctx=ctx)

    # -- the two sides -----------------------------------------------------

    def gen_ctx(self) -> ConvCtx:
        if self._gen is None:
            # only reachable for polyhedra built from generators, which are
            # never empty (they held a point)
            self._gen = conversion_c2g(emit_constraints(self._con), dim=self.dim)
        return self._gen

    def con_ctx(self) -> ConvCtx | None:
        """Constraint-side context, or None for the empty polyhedron."""
        if self._con is None:
            gens = emit_generators(self._gen)
            if not gens:
                return None
            self._con = conversion_g2c(gens)
        return self._con

    def generators(self) -> list[Generator]:
        return emit_generators(self.gen_ctx())

    def constraints(self) -> list[Constraint]:
        ctx = self.con_ctx()
        if ctx is None:
            return [Constraint((-1,) + (0,) * self.dim, ConKind.NONSTRICT)]
        return emit_constraints(ctx)

    def is_empty(self) -> bool:
        if self._gen is None:
            return False  # built from generators that included a point
        return not emit_generators(self._gen)

    # -- point queries ------------------------------------------------------

    def contains_point(self, point: Sequence[Fraction | int]) -> bool:
        if len(point) != self.dim:
            raise DimensionError(f"point of dimension {len(point)}, polyhedron has {self.dim}")
        return con_contains(self.constraints(), point)

    # -- comparisons ---------------------------------------------------------

    def includes(self, other: "NncPolyhedron") -> bool:
        """Does this polyhedron contain every point of the other one?

        Two cheap scalar-product passes: closure inclusion of the other's
        skeleton, then a scan that no included piece of the other (a point,
        or a filled face) lands inside a face this one excludes (a strict
        row, or a support cut)."""
        if self.dim != other.dim:
            raise DimensionError("cannot compare polyhedra of different dimensions")
        if other.is_empty():
            return True
        if self.is_empty():
            return False
        rows = self.constraints()
        for g in other.generators():
            for c in rows:
                s = scalar_prod(c.row, g.row)
                if c.kind is ConKind.EQUALITY or g.kind is GenKind.LINE:
                    if s != 0:
                        return False
                elif s < 0:
                    return False
        con = self.con_ctx()
        if con is None:
            return False
        excluded = ghosts(con)
        if not excluded:
            return True
        for piece in atoms(other.gen_ctx()):
            for ghost in excluded:
                if all(scalar_prod(c, a) == 0 for c in ghost for a in piece):
                    return False
        return True

    def equals(self, other: "NncPolyhedron") -> bool:
        return self.includes(other) and other.includes(self)

    # -- lattice operations ---------------------------------------------------

    def add_constraints(self, constraints: Sequence[Constraint]) -> "NncPolyhedron":
        cs = list(constraints)
        _check_dims(cs, self.dim)
        return NncPolyhedron(self.dim, gen_ctx=conversion_c2g(cs, base=self.gen_ctx()))

    def add_generators(self, generators: Sequence[Generator]) -> "NncPolyhedron":
        gens = list(generators)
        _check_dims(gens, self.dim)
        if self.is_empty():
            if not any(g.kind is GenKind.POINT for g in gens):
                return NncPolyhedron.empty(self.dim)
            return NncPolyhedron.from_generators(gens)
        ctx = self.con_ctx()
        assert ctx is not None
        return NncPolyhedron(self.dim, con_ctx=conversion_g2c(gens, base=ctx))

    def intersect(self, other: "NncPolyhedron") -> "NncPolyhedron":
        if self.dim != other.dim:
            raise DimensionError("cannot intersect polyhedra of different dimensions")
        if self.is_empty() or other.is_empty():
            return NncPolyhedron.empty(self.dim)
        return self.add_constraints(other.constraints())

    def poly_hull(self, other: "NncPolyhedron") -> "NncPolyhedron":
        if self.dim != other.dim:
            raise DimensionError("cannot hull polyhedra of different dimensions")
        if self.is_empty():
            return NncPolyhedron(other.dim, gen_ctx=other._gen, con_ctx=other._con)
        if other.is_empty():
            return NncPolyhedron(self.dim, gen_ctx=self._gen, con_ctx=self._con)
        return self.add_generators(other.generators())

    def closure(self) -> "NncPolyhedron":
        """Topological closure: the same skeleton with every position row
        promoted to an actual point."""
        if self.is_empty():
            return NncPolyhedron.empty(self.dim)
        closed = [
            Generator(g.row, GenKind.POINT) if g.kind is GenKind.CLOSURE_POINT else g
            for g in self.generators()
        ]
        return NncPolyhedron.from_generators(closed)

    def __repr__(self) -> str:
        if self.is_empty():
            return f"NncPolyhedron.empty({self.dim})"
        return f"NncPolyhedron(dim={self.dim}, constraints={len(self.constraints())})"
