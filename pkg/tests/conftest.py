import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from shadowkit import TRIVIAL, parse_gauss  # noqa: E402
from shadowkit.census import enumerate_projections  # noqa: E402
from shadowkit.moves import random_moves  # noqa: E402

TREFOIL = "3; 1 2 3 1 2 3; + - +"
FIGURE_EIGHT = "4; 1 2 3 1 4 3 2 4; + + - +"
CINQUEFOIL = "5; 1 2 3 4 5 1 2 3 4 5; + - + - +"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def census():
    return enumerate_projections(7, prime=True, no_onegon=True)


def scramble_pool(census, count, seed, max_n=14):
    """Projections reached from the census (and O) by random moves of every kind."""
    rng = random.Random(seed)
    kinds = ["1a", "1b", "s2a", "s2b", "w2a", "w2b", "r3"]
    shrink = ["1b", "s2b", "w2b", "r3"]
    bases = [TRIVIAL] + list(census)
    out = []
    while len(out) < count:
        P = rng.choice(bases)
        P = random_moves(P, kinds if P.n < max_n else shrink, rng.randint(1, 4), rng)
        out.append(P)
    return out


@pytest.fixture(scope="session")
def scrambles(census):
    return scramble_pool(census, 1000, seed=20261014)


@pytest.fixture
def trefoil():
    return parse_gauss(TREFOIL)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
