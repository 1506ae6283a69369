from __future__ import annotations

import pytest

from hopf_forge import make_rule
from hopf_forge.instances import INSTANCES


@pytest.fixture(params=INSTANCES)
def any_rule(request):
    return make_rule(request.param)


# size bounds small enough for the property tests to stay fast
SMALL_BOUNDS = {"free": 3, "symmetric": 3, "shuffle": 3, "polynomial": 5, "graph": 2, "forest": 3}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
