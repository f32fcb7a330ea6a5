import os

import pytest
from hypothesis import HealthCheck, settings

from matchkit import families as fam
from matchkit.corpus import matching_covered_graphs

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


NAMED = {
    "K4": fam.complete_graph(4),
    "C6bar": fam.c6bar(),
    "K33": fam.k33(),
    "cube": fam.cube(),
    "K4K33": fam.k4_splice_k33(),
    "Murty": fam.murty_graph(),
    "Petersen": fam.petersen(),
    "W5": fam.odd_wheel(2),
    "W7": fam.odd_wheel(3),
    "W9": fam.odd_wheel(4),
}


@pytest.fixture(scope="session")
def named():
    return dict(NAMED)


@pytest.fixture(scope="session")
def corpus6():
    """Simple connected matching covered graphs of order 4 and 6."""
    return matching_covered_graphs(4) + matching_covered_graphs(6)


@pytest.fixture(scope="session")
def corpus8():
    return matching_covered_graphs(8)


# ------------------------------------------------------- acceptance report

_criteria: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, [title, True, []])
    if rep.failed:
        entry[1] = False
    if rep.when == "call":
        entry[2].extend(str(v) for k, v in item.user_properties if k == "note")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok, notes = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}")
        for note in notes:
            terminalreporter.write_line(f"             {note}")
