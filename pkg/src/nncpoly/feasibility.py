"""Exact rational feasibility of small linear systems.

Fourier-Motzkin elimination with explicit strict/non-strict bookkeeping,
over Fractions.  Exponential in the worst case, so every entry point is
desk-scale only and guarded; the library uses it for membership oracles
and test harness work, never on conversion hot paths.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ScaleLimitExceeded

# A row is (coeffs, const, rel) meaning  sum(coeffs * x) + const  REL  0,
# with rel one of "eq", "ge", "gt".
FeasRow = tuple[tuple[Fraction, ...], Fraction, str]

_ROW_LIMIT = 20000


def _norm(coeffs: Sequence[Fraction], const: Fraction, rel: str) -> FeasRow:
    scale = None
    for c in coeffs:
        if c:
            scale = abs(c)
            break
    if scale is None and const:
        scale = abs(const)
    if scale:
        coeffs = tuple(c / scale for c in coeffs)
        const = const / scale
    return (tuple(coeffs), const, rel)


def _subst(rows: list[FeasRow], var: int, expr: tuple[Fraction, ...], const: Fraction) -> list[FeasRow]:
    """Replace x_var by (expr . x + const) in every row (expr[var] must be 0)."""
    out = []
    for coeffs, c0, rel in rows:
        f = coeffs[var]
        if not f:
            out.append((coeffs, c0, rel))
            continue
        new = tuple(a + f * e for a, e in zip(coeffs, expr))
        new = new[:var] + (Fraction(0),) + new[var + 1:]
        out.append(_norm(new, c0 + f * const, rel))
    return out


def feasible(rows: list[FeasRow], nvars: int) -> bool:
    """Decide whether the system has a rational solution."""
    rows = [_norm(*r) for r in rows]

    # Gaussian elimination of the equality rows first.
    while True:
        pivot = None
        for i, (coeffs, c0, rel) in enumerate(rows):
            if rel != "eq":
                continue
            for v in range(nvars):
                if coeffs[v]:
                    pivot = (i, v)
                    break
            if pivot:
                break
            if c0 != 0:
                return False  # 0 = nonzero
        if not pivot:
            break
        i, v = pivot
        coeffs, c0, _ = rows.pop(i)
        f = coeffs[v]
        expr = tuple(-c / f if j != v else Fraction(0) for j, c in enumerate(coeffs))
        rows = _subst(rows, v, expr, -c0 / f)

    rows = [r for r in rows if r[2] != "eq" or r[1] != 0]
    if any(rel == "eq" for _, _, rel in rows):
        return False

    # Fourier-Motzkin on the inequalities.
    live = [v for v in range(nvars) if any(coeffs[v] for coeffs, _, _ in rows)]
    for _ in range(len(live)):
        live = [v for v in range(nvars) if any(coeffs[v] for coeffs, _, _ in rows)]
        if not live:
            break
        # eliminate the variable with the smallest pos*neg fan-out
        def cost(v: int) -> int:
            p = sum(1 for coeffs, _, _ in rows if coeffs[v] > 0)
            n = sum(1 for coeffs, _, _ in rows if coeffs[v] < 0)
            return p * n - p - n

        v = min(live, key=cost)
        pos, neg, rest = [], [], []
        for row in rows:
            c = row[0][v]
            (pos if c > 0 else neg if c < 0 else rest).append(row)
        new = rest
        seen = {(_r[0], _r[1], _r[2]) for _r in rest}
        for pc, p0, prel in pos:
            for nc, n0, nrel in neg:
                f = -nc[v] / pc[v]
                coeffs = tuple(f * a + b for a, b in zip(pc, nc))
                rel = "gt" if "gt" in (prel, nrel) else "ge"
                row = _norm(coeffs, f * p0 + n0, rel)
                if row not in seen:
                    seen.add(row)
                    new.append(row)
        if len(new) > _ROW_LIMIT:
            raise ScaleLimitExceeded(f"Fourier-Motzkin blow-up past {_ROW_LIMIT} rows")
        rows = new

    for _, c0, rel in rows:
        if rel == "ge" and c0 < 0:
            return False
        if rel == "gt" and c0 <= 0:
            return False
    return True


def hom_member(
    lines: list[Sequence[int]],
    nonneg: list[Sequence[int]],
    target: Sequence[int],
    positive_group: set[int] | None = None,
    all_positive: bool = False,
    positive_each: set[int] | None = None,
) -> bool:
    """Is ``target`` a combination of the given homogeneous rows?

    Coefficients on ``lines`` are free, those on ``nonneg`` must be >= 0.
    ``positive_group`` (indices into nonneg) demands the group's coefficient
    sum be strictly positive; ``positive_each`` demands every listed
    coefficient be strictly positive on its own; ``all_positive`` demands
    that of every nonneg coefficient (relative-interior membership).
    """
    width = len(target)
    nvars = len(lines) + len(nonneg)
    if nvars == 0:
        return not any(target)
    strict = set(range(len(nonneg))) if all_positive else set(positive_each or ())
    rows: list[FeasRow] = []
    zero = Fraction(0)
    for k in range(width):
        coeffs = tuple(
            Fraction(vec[k]) for vec in (*lines, *nonneg)
        )
        rows.append((coeffs, Fraction(-target[k]), "eq"))
    for j in range(len(nonneg)):
        coeffs = tuple(
            Fraction(1) if i == len(lines) + j else zero for i in range(nvars)
        )
        rows.append((coeffs, zero, "gt" if j in strict else "ge"))
    if positive_group is not None and not all_positive:
        coeffs = tuple(
            Fraction(1) if i - len(lines) in positive_group and i >= len(lines) else zero
            for i in range(nvars)
        )
        rows.append((coeffs, zero, "gt"))
    return feasible(rows, nvars)
