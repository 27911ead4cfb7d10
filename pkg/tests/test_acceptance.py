"""Acceptance gate: every criterion runs at its stated parameters and must
pass exactly.  One printed pass/fail line per criterion."""

import pytest

from multifam.acceptance import FULL_PROFILE, QUICK_PROFILE, run_criterion


@pytest.mark.parametrize("cid", FULL_PROFILE)
def test_acceptance_criterion(cid):
    result = run_criterion(cid)
    print(f"{cid}: {'pass' if result.passed else 'FAIL'} - {result.detail}")
    assert result.passed, f"{cid} failed: {result.detail}"


def test_quick_profile_is_a_prefix_of_full():
    assert QUICK_PROFILE == FULL_PROFILE[:6]
