import functools

import pytest

from grouplab.catalog import build, preset
from grouplab.lattice import enumerate_subgroups


@functools.lru_cache(maxsize=None)
def group(name):
    return build(preset(name))


@functools.lru_cache(maxsize=None)
def lattice(name):
    return enumerate_subgroups(group(name))


@pytest.fixture(scope="session")
def get_group():
    return group


@pytest.fixture(scope="session")
def get_lattice():
    def get(name):
        return group(name), lattice(name)
    return get


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=int):
            terminalreporter.write_line(RESULTS[key])
