import os
import sys

import pytest
from hypothesis import HealthCheck, settings

from qpbw import AbelianGroup, Character, Cyclotomic, QuantumContext, QuantumVariable, RationalFunctions
from qpbw.pbw import Presentation
from qpbw.superletters import calculus

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def two_variable_context(chi1, chi2, field=None):
    F = field or RationalFunctions()
    G = AbelianGroup(2)
    return QuantumContext(F, G, (
        QuantumVariable("x1", (1, 0), Character(tuple(F(v) for v in chi1))),
        QuantumVariable("x2", (0, 1), Character(tuple(F(v) for v in chi2)))))


@pytest.fixture(scope="session")
def qplane():
    ctx = two_variable_context(("q", "q"), ("q^-1", "q"))
    F = ctx.field
    from qpbw.algebra import Poly
    rel = Poly({(0, 1): F.one(), (1, 0): -F.gen()})
    return ctx, Presentation(ctx, [rel])


@pytest.fixture(scope="session")
def uqsl3():
    ctx = two_variable_context(("q^2", "q^-1"), ("q^-1", "q^2"))
    calc = calculus(ctx)
    return ctx, Presentation(ctx, [calc.expansion((0, 0, 1)), calc.expansion((0, 1, 1))])


def taft(t: int):
    F = Cyclotomic(t)
    G = AbelianGroup(0, (t,))
    ctx = QuantumContext(F, G, (QuantumVariable("x", (1,), Character((F.gen(),))),))
    from qpbw.algebra import Poly
    return ctx, Presentation(ctx, [Poly({(0,) * t: F.one()})])


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
