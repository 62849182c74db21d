import time

import pytest

from models.errors import InvalidSpec, ParseError
from services.sweeps import DEFAULT_SWEEP_GROUPS, theorem2_sweep
from tests.helpers import Q8_TABLE


def test_default_sweep_passes_quickly():
    start = time.perf_counter()
    report = theorem2_sweep(families_per_group=100, seed=0)
    elapsed = time.perf_counter() - start
    assert report.total == len(DEFAULT_SWEEP_GROUPS) * 3 * 100
    assert report.passed == report.total
    assert report.failures == []
    assert elapsed < 60


def test_sweep_over_table_file():
    report = theorem2_sweep([f"table:{Q8_TABLE}"], ns=[2, 3, 4], families_per_group=30, seed=5)
    assert report.groups == [f"table:{Q8_TABLE}"]
    assert report.passed == report.total == 90


def test_sweep_is_deterministic():
    groups = ["cyclic:6", "sym:3"]
    first = theorem2_sweep(groups, ns=[2, 3], families_per_group=10, seed=3)
    second = theorem2_sweep(groups, ns=[2, 3], families_per_group=10, seed=3)
    assert first == second


def test_parallel_sweep_matches_serial():
    groups = ["cyclic:5", "dihedral:4", "q8"]
    serial = theorem2_sweep(groups, ns=[2, 3], families_per_group=10, seed=11)
    parallel = theorem2_sweep(groups, ns=[2, 3], families_per_group=10, seed=11, parallel=True)
    assert parallel == serial


def test_sweep_argument_errors():
    with pytest.raises(InvalidSpec):
        theorem2_sweep(["cyclic:4"], families_per_group=0)
    with pytest.raises(InvalidSpec):
        theorem2_sweep(["cyclic:4"], ns=[0])
    with pytest.raises(ParseError):
        theorem2_sweep(["cyclic"])
