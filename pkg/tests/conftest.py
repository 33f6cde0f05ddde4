import random

import pytest

from pronbias.fixtures import english_lexicon, load_fixtures, mandarin_lexicon
from pronbias.lexicon import ARPABET_EN, load_lexicon


@pytest.fixture(scope="session")
def fixtures():
    return load_fixtures()


@pytest.fixture(scope="session")
def en_lex():
    return english_lexicon()


@pytest.fixture(scope="session")
def zh_lex():
    return mandarin_lexicon()


@pytest.fixture(scope="session")
def example_lex():
    """The three-word lexicon behind the worked examples."""
    return load_lexicon("speech\tS P IY1 CH\nPAC\tP AE1 K\npack\tP AE1 K\n", ARPABET_EN)


@pytest.fixture
def rng():
    return random.Random(1234)


ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def verdict(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    lines = request.config.stash[ACCEPTANCE]

    def record(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        lines.append((number, line))
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
