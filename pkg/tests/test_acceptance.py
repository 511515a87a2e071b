"""Acceptance gate: each criterion runs at its stated tolerance and prints
one pass/fail line (plus the failing checks, if any)."""

import pytest

from tanglekit.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda fn: fn.__name__)
def test_criterion(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        print()
        print(result.summary())
        for check in result.checks:
            if not check.passed:
                print(check.line())
    failed = [c.name for c in result.checks if not c.passed]
    assert result.passed, f"criterion {result.number} failed: {failed}"
