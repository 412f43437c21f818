"""Mutable operation counters shared by the conversion engines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class OpCounters:
    """Work counters with the granularity used throughout the library.

    vec_ops counts scalar products and linear combinations of coefficient
    rows; sat_ops counts row-level bitset operations (intersection, union,
    inclusion test, population count), each full-row operation counting 1
    regardless of word width; iterations counts processed input rows; sizes
    records the representation size (skeleton cardinality plus number of
    stored supports) after each iteration.
    """

    vec_ops: int = 0
    sat_ops: int = 0
    iterations: int = 0
    sizes: list[int] = field(default_factory=list)

    def merge(self, other: "OpCounters") -> None:
        self.vec_ops += other.vec_ops
        self.sat_ops += other.sat_ops
        self.iterations += other.iterations
        self.sizes.extend(other.sizes)
