import pytest

from models.errors import InvalidSpec
from models.schemas import ExamplesReport
from services.scenarios import SCENARIOS, SMALL_GROUPS, run_scenarios


@pytest.mark.parametrize("name", list(SCENARIOS))
def test_scenario_holds(name):
    result = SCENARIOS[name]()
    assert result.name == name
    assert result.holds, [line for line in result.details if "FAIL" in line]
    assert result.details
    assert all(line.startswith("[ok] ") for line in result.details)


def test_run_all():
    report = run_scenarios()
    assert [r.name for r in report.results] == list(SCENARIOS)
    assert report.all_hold
    assert ExamplesReport.model_validate_json(report.model_dump_json()) == report


def test_example_one_on_z4():
    (result,) = run_scenarios("ex1").results
    assert "[ok] cyclic:4: {0,2}·{1,3} = {1,3}" in result.details


def test_example_four_reports_small_cardinality_sum():
    (result,) = run_scenarios("ex4").results
    assert "[ok] cyclic:6: |A1| + |A2| = 5 < |G|" in result.details



def test_complement_swap_covers_every_small_group():
    (result,) = run_scenarios("complement-swap").results
    assert len(result.details) == len(SMALL_GROUPS)
    assert "[ok] cyclic:8: A·Ā = Ā·A for all 254 nonempty proper subsets" in result.details
    assert "[ok] q8: A·Ā = Ā·A for all 254 nonempty proper subsets" in result.details

def test_unknown_scenario():
    with pytest.raises(InvalidSpec):
        run_scenarios("ex9")
