"""Run statistics serialization."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .counting import OpCounters


@dataclass
class StatsRecord:
    direction: str
    dim: int
    rows_in: int
    rows_out: int
    supports_out: int
    vec_ops: int
    sat_ops: int
    iterations: int
    max_size: int
    sizes: list[int] = field(default_factory=list)
    wall_seconds: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"


def record_from_counters(
    counters: OpCounters,
    *,
    direction: str,
    dim: int,
    rows_in: int,
    rows_out: int,
    supports_out: int = 0,
    wall_seconds: float = 0.0,
) -> StatsRecord:
    return StatsRecord(
        direction=direction,
        dim=dim,
        rows_in=rows_in,
        rows_out=rows_out,
        supports_out=supports_out,
        vec_ops=counters.vec_ops,
        sat_ops=counters.sat_ops,
        iterations=counters.iterations,
        max_size=max(counters.sizes, default=0),
        sizes=list(counters.sizes),
        wall_seconds=wall_seconds,
    )
