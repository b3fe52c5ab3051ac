import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from topzeta import principalize
from corpus import corpus


@pytest.fixture(scope="session")
def corpus_results():
    """Principalizations of the whole corpus, computed once per session."""
    return [(name, principalize(gens)) for name, gens in corpus()]


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULT_LINES:
            terminalreporter.write_line(line)
