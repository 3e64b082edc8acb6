import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cl2 import Cl2Element, h_map, inverse, mul

small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)
elements = st.builds(Cl2Element, small_rationals, small_rationals,
                     small_rationals, small_rationals)


def rand_coeff(rng: random.Random) -> Fraction:
    if rng.random() < 0.2:
        return Fraction(0)
    return Fraction(rng.randint(-6, 6), rng.choice((1, 1, 1, 2, 3)))


def rand_element(rng: random.Random) -> Cl2Element:
    return Cl2Element(*(rand_coeff(rng) for _ in range(4)))


def rand_zero_divisor(rng: random.Random) -> Cl2Element:
    """Nonzero a with H(a) = 0: z2 = z1 * (unit complex number)."""
    while True:
        x0, x3 = rand_coeff(rng), rand_coeff(rng)
        if x0 or x3:
            break
    p, q = rng.randint(-3, 3), rng.randint(-3, 3)
    if p == q == 0:
        p = 1
    n = p * p + q * q
    c, s = Fraction(p * p - q * q, n), Fraction(2 * p * q, n)
    # z2 = a2 + a1 i = (x0 + x3 i)(c + s i)
    a2 = x0 * c - x3 * s
    a1 = x0 * s + x3 * c
    return Cl2Element(x0, a1, a2, x3)


def rand_invertible(rng: random.Random) -> Cl2Element:
    while True:
        u = rand_element(rng)
        if h_map(u):
            return u


def rand_mixed(rng: random.Random) -> Cl2Element:
    """Zero, zero divisor or generic element, all reasonably frequent."""
    r = rng.random()
    if r < 0.05:
        return Cl2Element()
    if r < 0.4:
        return rand_zero_divisor(rng)
    return rand_element(rng)


def conjugate_by(a: Cl2Element, u: Cl2Element) -> Cl2Element:
    return mul(mul(inverse(u), a), u)


@pytest.fixture
def rng():
    return random.Random(20240601)


# -- acceptance summary: one line per criterion ----------------------------

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    # a failure in any phase sticks; otherwise the call phase decides
    if report.failed:
        _acceptance[name] = "failed"
    elif report.when == "call" and _acceptance.get(name) != "failed":
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        crit, _, label = name.removeprefix("test_").partition("_")
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{crit.upper():<3} {verdict}  {label.replace('_', ' ')}")
