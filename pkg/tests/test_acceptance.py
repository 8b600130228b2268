"""Acceptance gate: one test per criterion, each printing its verdict."""

import pytest

from segre.acceptance import CRITERIA


@pytest.mark.parametrize("check", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(check):
    result = check()
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} criterion {result.number:2d} ({result.name}): {result.detail}")
    assert result.passed, f"criterion {result.number} ({result.name}): {result.detail}"
