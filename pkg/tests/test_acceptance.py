"""Acceptance suite: one assertion per criterion.

The PASS/FAIL line for each criterion is printed in pytest's terminal
summary (see conftest.py). Criteria 4 and 9 are expected to fail; see README.
"""

import pytest

from critfilt.verify import run_all

NUMBERS = list(range(1, 12))
SUMMARY: list[str] = []


@pytest.fixture(scope="module")
def results():
    crit = {cr.number: cr for cr in run_all(fast=True)}
    for n in NUMBERS:
        cr = crit[n]
        SUMMARY.append(f"criterion {n:2d}: {'PASS' if cr.passed else 'FAIL'}  {cr.title}")
    return crit


@pytest.mark.parametrize("number", NUMBERS)
def test_criterion(results, number):
    cr = results[number]
    failed = [f"{c.name}: {c.detail}" for c in cr.checks if not c.passed]
    assert cr.passed, "\n".join(failed)
