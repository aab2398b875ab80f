import itertools

import pytest

import moilfp
from moilfp import _debug, oracle
from moilfp.generator import GenSpec, generate_one

SWEEP_PER_SHAPE = 10
SWEEP_BOX_CAP = 10 ** 6


@pytest.fixture(autouse=True)
def debug_checks():
    """Every test runs with internal invariant checks enabled."""
    previous = _debug.ENABLED
    _debug.set_debug(True)
    yield
    _debug.set_debug(previous)


@pytest.fixture(scope="session")
def example():
    return moilfp.example_instance()


def sweep_instances(per_shape=SWEEP_PER_SHAPE, seed_base=1000):
    """Generated instances over n 3..6, m 2..4, k 2..3 whose integer box holds at most 10^6 points."""
    out = []
    shapes = itertools.product(range(3, 7), range(2, 5), (2, 3))
    for s, (n, m, k) in enumerate(shapes):
        spec = GenSpec(n, m, k, seed_base + s, 1)
        index = 0
        taken = 0
        while taken < per_shape:
            inst = generate_one(spec, index)
            index += 1
            box = oracle.box_bounds(inst)
            if oracle.box_volume(box) <= SWEEP_BOX_CAP:
                out.append((inst, box))
                taken += 1
    return out


@pytest.fixture(scope="session")
def sweep():
    return [(inst, oracle.enumerate(inst, box)) for inst, box in sweep_instances()]


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        marks = getattr(report, "criterion", None)
        if marks is not None:
            _CRITERIA.setdefault(marks, []).append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        results = _CRITERIA[n]
        failed = [nid.split("::")[-1] for nid, out in results if out != "passed"]
        status = "FAIL" if failed else "PASS"
        detail = f" ({', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {n}: {status} {len(results) - len(failed)}/{len(results)} tests{detail}")
