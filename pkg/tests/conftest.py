import sys
from pathlib import Path

import pytest

from intervalcolor.multigraph import build, complete, cycle, path, star

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def named():
    return {
        "K2": complete(2),
        "P3": path(3),
        "P4": path(4),
        "C3": cycle(3),
        "C4": cycle(4),
        "C5": cycle(5),
        "C6": cycle(6),
        "C7": cycle(7),
        "K4": complete(4),
        "K5": complete(5),
        "K13": star(3),
        "digon": build(2, [(0, 1), (0, 1)]),
    }


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}: {detail}")
