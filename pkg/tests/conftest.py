import random
from collections import defaultdict

import pytest

from blockarg.flatrep import flatten
from blockarg.generate import random_framework
from blockarg.io import load_fixture
from blockarg.model import validate

_criteria: dict[int, list[bool]] = defaultdict(list)


def load_flat(name: str):
    return flatten(validate(load_fixture(name)))


def random_flats(count: int, seed: int = 0, **kwargs):
    """Deterministic stream of random flat representations."""
    for i in range(count):
        doc = random_framework(random.Random(seed * 100_003 + i), **kwargs)
        yield i, flatten(validate(doc), 10**6)


@pytest.fixture
def fig():
    return load_flat


def pytest_runtest_logreport(report):
    marker = report.keywords.get("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        item_marker = getattr(report, "_criterion", None)
        _criteria[item_marker if item_marker is not None else -1].append(report.outcome == "passed")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report._criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(k for k in _criteria if k >= 0):
        results = _criteria[n]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {n}: {status} ({sum(results)}/{len(results)} checks passed)"
        )
