import pytest

from trellisops import formats

ALL_FIXTURES = formats.fixture_names()
SMALL_FIXTURES = [name for name in ALL_FIXTURES if formats.fixture(name).n <= 5]
PSEUDO_CHAINS = ["PS1", "PS2", "PS3", "PS4", "PS5", "PS6"]


@pytest.fixture(scope="session")
def load():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = formats.fixture(name)
        return cache[name]

    return get


def ids(t, *labels):
    return tuple(t.index(lab) for lab in labels)


def labels(t, id_tuple):
    return tuple(t.labels[i] for i in id_tuple)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
