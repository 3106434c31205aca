import pytest

from kclosure import _backend
from kclosure.catalog import catalog, get
from kclosure.perm import PermGroup, Permutation


def cyc(n, *cycles):
    """Permutation of degree n from 0-based cycles."""
    return Permutation.from_cycles(n, [list(c) for c in cycles])


def group(n, *gens):
    return PermGroup(n, list(gens))


def cyclic(n):
    return PermGroup(n, [Permutation(list(range(1, n)) + [0])])


@pytest.fixture(params=_backend.available(), ids=lambda m: m.BACKEND)
def kernels(request, monkeypatch):
    """Run a test once per importable kernel backend."""
    monkeypatch.setattr("kclosure.engine.kernels", request.param)
    monkeypatch.setattr("kclosure.korbit.kernels", request.param)
    return request.param


def entries(*, max_degree=None, tag=None, without=None):
    out = []
    for e in catalog():
        G = e.group()
        if max_degree is not None and G.degree > max_degree:
            continue
        if tag is not None and tag not in e.tags:
            continue
        if without is not None and without in e.tags:
            continue
        out.append(e)
    return out


def entry_ids(es):
    return [e.name for e in es]


@pytest.fixture
def c6():
    return get("C6-regular").group()


@pytest.fixture
def q8():
    return get("Q8-regular").group()


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
