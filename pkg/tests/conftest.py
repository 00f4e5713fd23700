import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ternary.constructions import EXAMPLES, builtin_example  # noqa: E402
from ternary.enumeration import enumerate_ternary_groups  # noqa: E402


@pytest.fixture(scope="session")
def census_upto4():
    return [e for n in range(1, 5) for e in enumerate_ternary_groups(n)]


@pytest.fixture(scope="session")
def examples():
    return {name: builtin_example(name) for name in EXAMPLES}


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
