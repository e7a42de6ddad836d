import random

import pytest
from hypothesis import settings

from seminormal.polyring import GF, QQ, Polynomial

settings.register_profile("default", max_examples=30, deadline=None, derandomize=True)
settings.load_profile("default")


def random_poly(rng: random.Random, field, nvars, terms=3, degree=3, coeff=5):
    out = {}
    for _ in range(terms):
        m = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            m[rng.randrange(nvars)] += 1
        c = rng.randint(-coeff, coeff)
        if c:
            out[tuple(m)] = field(c)
    return Polynomial(field, nvars, out)


@pytest.fixture
def rng():
    return random.Random(20240611)


FIELDS = [QQ, GF(2), GF(5), GF(11), GF(101)]


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
