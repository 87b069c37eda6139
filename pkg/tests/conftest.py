import pytest

from qgraph import HAVE_CORE, use_backend
from qgraph.graph import GraphGenSpec, generate

BACKENDS = ["python", "compiled"] if HAVE_CORE else ["python"]

_acceptance_lines = []


@pytest.fixture(params=BACKENDS)
def backend(request):
    with use_backend(request.param):
        yield request.param


@pytest.fixture
def report():
    """Record one acceptance verdict line: ``report(criterion, ok, detail)``."""

    def record(criterion, ok, detail=""):
        _acceptance_lines.append(f"{'PASS' if ok else 'FAIL'}  criterion {criterion}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def complete(n, seed, symmetric=False):
    return generate(GraphGenSpec("complete", n=n, seed=seed, symmetric=symmetric))


def bipartite(n1, n2, seed):
    return generate(GraphGenSpec("bipartite", n1=n1, n2=n2, seed=seed))
