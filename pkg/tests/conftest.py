import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from weldedcalc.arrows import GeneratorId, generator, surgery
from weldedcalc.corpus import random_gauss, random_word
from weldedcalc.normal_form import parse_word, realize

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def gen(name, *idx, e=1, n=None):
    """Surgery diagram of a single generator."""
    return surgery(generator(GeneratorId(name, tuple(idx), e), n))


def word(text, n):
    return realize(parse_word(text, n))


@st.composite
def gauss_diagrams(draw, n=None, max_chords=6):
    n = draw(st.integers(1, 3)) if n is None else n
    c = draw(st.integers(0, max_chords))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_gauss(random.Random(seed), n, c)


@st.composite
def word_diagrams(draw, n=None, max_factors=4):
    n = draw(st.integers(2, 3)) if n is None else n
    seed = draw(st.integers(0, 2**32 - 1))
    return realize(random_word(random.Random(seed), n, max_factors))


@pytest.fixture
def z12():
    return gen("Z", 1, 2)


# One summary line per acceptance criterion, printed at the end of the run.
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
