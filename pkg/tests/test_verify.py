import pytest

from multifam import ContractError, is_isomorphic, star, verify_theorem
from multifam.verify import (
    STATUS_HYPOTHESIS,
    STATUS_OK,
    THEOREM_IDS,
    MULTIPLE,
    NOT_CHECKED,
    UNIQUE,
)

QUICK_INSTANCES = {
    "T1.1": {"m": 5, "k": 2},
    "T1.4": {"m": 4, "k": 3},
    "T2.3": {"m": 8, "k": 2, "s": 2},
    "T2.4": {"m": 6, "k": 2},
    "T3.3": {"m": 5, "k": 3},
    "T3.4": {"m": 7, "k": 2, "s": 2},
    "T3.5": {"m": 5, "k": 2},
    "T4.1": {"m": 4, "k": 3, "t": 2},
    "T4.8": {"m": 5, "k": 3, "t": 2},
}


@pytest.mark.parametrize("theorem_id", THEOREM_IDS)
def test_every_theorem_verifies_at_a_small_instance(theorem_id):
    report = verify_theorem(theorem_id, QUICK_INSTANCES[theorem_id])
    assert report.status == STATUS_OK, report
    assert report.match
    assert report.analytic_bound == report.search_optimum
    if report.constructed_size is not None:
        assert report.constructed_size == report.analytic_bound


HEAVIER_INSTANCES = [
    # expected value from the closed form, cross-checked by construction+search
    ("T3.3", {"m": 7, "k": 3}, 19),   # C(8,2) - C(5,2) + 1
    ("T3.3", {"m": 6, "k": 4}, 53),   # C(8,3) - C(4,3) + 1
    ("T1.4", {"m": 7, "k": 4}, 84),   # C(9,3)
    ("T4.1", {"m": 6, "k": 4, "t": 2}, 21),  # threshold boundary, C(7,2)
    ("T4.1", {"m": 7, "k": 4, "t": 3}, 7),   # r=0, C(7,1)
]


@pytest.mark.parametrize("theorem_id,params,expected", HEAVIER_INSTANCES)
def test_heavier_reference_instances(theorem_id, params, expected):
    report = verify_theorem(theorem_id, params)
    assert report.status == STATUS_OK
    assert report.analytic_bound == expected
    assert report.constructed_size == expected
    assert report.search_optimum == expected


def test_report_json_schema():
    report = verify_theorem("T1.4", {"m": 4, "k": 3})
    payload = report.to_json_dict()
    for key in (
        "theorem",
        "params",
        "analytic_bound",
        "constructed_size",
        "search_optimum",
        "status",
        "uniqueness_verdict",
        "nodes_explored",
        "elapsed_ms",
    ):
        assert key in payload
    assert payload["theorem"] == "T1.4"
    assert payload["analytic_bound"] == 10


def test_uniqueness_above_the_boundary():
    report = verify_theorem("T1.4", {"m": 5, "k": 3}, uniqueness=True)
    assert report.uniqueness_verdict == UNIQUE
    assert report.optimum_classes is not None and len(report.optimum_classes) == 1
    assert is_isomorphic(report.optimum_classes[0], star(5, 3, 1))


def test_uniqueness_at_the_boundary_reports_multiple_classes():
    report = verify_theorem("T1.4", {"m": 4, "k": 3}, uniqueness=True)
    assert report.uniqueness_verdict == MULTIPLE


def test_uniqueness_not_requested_is_not_checked():
    report = verify_theorem("T1.4", {"m": 4, "k": 3})
    assert report.uniqueness_verdict == NOT_CHECKED


def test_hypothesis_violation_still_runs_the_search():
    report = verify_theorem("T3.4", {"m": 3, "k": 2, "s": 2})
    assert report.status == STATUS_HYPOTHESIS
    assert not report.hypothesis_met
    assert report.search_optimum is not None
    assert any("hypothesis" in note for note in report.notes)


def test_t41_exploration_outside_the_regime():
    # the bound/search agreement at (5,4,2) holds even though m < 2k-t
    report = verify_theorem("T4.1", {"m": 5, "k": 4, "t": 2})
    assert report.status == STATUS_HYPOTHESIS
    assert report.analytic_bound == 17
    assert report.constructed_size == 17
    assert report.search_optimum == 17
    assert report.match


def test_t41_boundary_note():
    report = verify_theorem("T4.1", {"m": 4, "k": 3, "t": 2})
    assert any("boundary" in note for note in report.notes)


def test_t48_records_its_case_split():
    report = verify_theorem("T4.8", {"m": 5, "k": 3, "t": 2})
    assert any("case split" in note for note in report.notes)
    assert any("convention" in note for note in report.notes)


def test_unknown_theorem_and_missing_params():
    with pytest.raises(ContractError):
        verify_theorem("T9.9", {"m": 4, "k": 2})
    with pytest.raises(ContractError):
        verify_theorem("T3.4", {"m": 4, "k": 2})
