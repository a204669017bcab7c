import os

import pytest
from hypothesis import settings

from braidlab.braidcore.instances import diagonal, flip, jordan, scalar_flip
from braidlab.exactla import QQ
from braidlab.grouptype import cyclic_action, group_braiding
from braidlab.uqsl2 import build_cf_braiding, build_simple_module

settings.register_profile("default", max_examples=40, deadline=None, derandomize=True)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("BRAIDLAB_HYPOTHESIS_PROFILE", "default"))

SEED = int(os.environ.get("BRAIDLAB_TEST_SEED", "20240521"))


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=SEED, help="seed for the random instance suites (default %(default)s)")


@pytest.fixture(scope="session")
def seed(request):
    return request.config.getoption("--seed")

SAMPLES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "samples")


def small_instances():
    """Named braidings cheap enough for degree-3 truncations."""
    return {
        "flip1": flip(1),
        "flip2": flip(2),
        "qtau": scalar_flip(2),
        "unit1": diagonal([[1]]),
        "two1": diagonal([[2]]),
        "jordan1": jordan(1),
        "jordan2": jordan(2),
        "diag": diagonal([[1, 2], [3, -1]]),
        "z4sign": group_braiding(cyclic_action(4, [-1, -1])),
        "uqL1": build_cf_braiding(build_simple_module(1)),
    }


@pytest.fixture(scope="session")
def instances():
    return small_instances()


@pytest.fixture
def field():
    return QQ


# acceptance lines are collected here and echoed after the run
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture(scope="session")
def record_criterion():
    def record(k: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if detail and not ok:
            line += f"  ({detail})"
        ACCEPTANCE_LINES[k] = line
        print(line)

    return record
