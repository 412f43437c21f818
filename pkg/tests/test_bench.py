import pytest

from nncpoly.bench import bench_dual_hypercube, build_dual_hypercube
from nncpoly.errors import DimensionError
from nncpoly.systems import ConKind


def test_build_row_count_and_patterns():
    poles = build_dual_hypercube(3, offset=1, pattern="poles")
    assert len(poles) == 8
    nonstrict = [c for c in poles if c.kind is ConKind.NONSTRICT]
    assert [c.row for c in nonstrict] == [(1, -1, -1, -1), (1, 1, 1, 1)]

    first = build_dual_hypercube(3, offset=2, pattern="first")
    assert [c.kind is ConKind.NONSTRICT for c in first[:3]] == [True, True, False]
    assert first[0].row[0] == 2


def test_build_rejects_bad_arguments():
    with pytest.raises(DimensionError):
        build_dual_hypercube(0)
    with pytest.raises(ValueError):
        build_dual_hypercube(2, offset=0)
    with pytest.raises(ValueError):
        build_dual_hypercube(2, pattern="spiral")


def test_bench_report_shape():
    rep = bench_dual_hypercube(2)
    assert rep["dim"] == 2
    for route in ("new", "eps"):
        assert rep[route]["max_size"] > 0
        assert rep[route]["vec_ops"] > 0
    # the direct route must not carry larger intermediate systems
    assert rep["new"]["max_size"] <= rep["eps"]["max_size"]
