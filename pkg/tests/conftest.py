import itertools
from fractions import Fraction

import pytest


def walk_oracle(r: int, n: int) -> Fraction:
    """U_r(n) by enumerating all 2^n step sequences: sum |(#up - #down)/2|^r."""
    total = Fraction(0)
    for steps in itertools.product((1, -1), repeat=n):
        total += abs(Fraction(sum(steps), 2)) ** r
    return total


@pytest.fixture
def oracle():
    return walk_oracle


# criterion id -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
