import contextlib

import numpy as np
import pytest

from gradarg import build_graph, load_fixture

ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


@pytest.fixture()
def acceptance():
    """Records one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def criterion(name: str):
        try:
            yield
        except BaseException:
            ACCEPTANCE_RESULTS.append((name, "FAIL"))
            raise
        ACCEPTANCE_RESULTS.append((name, "PASS"))

    return criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{verdict}  {name}")


@pytest.fixture(scope="session")
def four_args():
    """Four arguments, mixed supports and attacks, self-support on a2."""
    return load_fixture("arggraph").to_graph()


@pytest.fixture(scope="session")
def liverpool():
    return load_fixture("liverpool").to_graph()


@pytest.fixture(scope="session")
def liverpool_split():
    return load_fixture("liverpool2").to_graph()


@pytest.fixture(scope="session")
def liverpool_rival():
    return load_fixture("liverpool3").to_graph()


@pytest.fixture(scope="session")
def school():
    return load_fixture("school").to_graph()


@pytest.fixture(scope="session")
def self_attack():
    return load_fixture("self-attack").to_graph()


def chain(polarities, weights=None):
    """a0 -> a1 -> ... with the given edge polarities."""
    n = len(polarities) + 1
    ids = [f"a{i}" for i in range(n)]
    edges = [(ids[i], ids[i + 1], p) for i, p in enumerate(polarities)]
    w = weights if weights is not None else {a: 1.0 for a in ids}
    return build_graph(ids, edges, w)


def random_signed_graph(rng, n_max=10, density=0.5, weight_scale=5.0):
    n = int(rng.integers(1, n_max + 1))
    incidence = np.where(
        rng.random((n, n)) < density,
        rng.choice(np.array([-1, 1], dtype=np.int8), size=(n, n)),
        np.zeros((n, n), dtype=np.int8),
    ).astype(np.int8)
    weights = rng.uniform(-weight_scale, weight_scale, size=n)
    from gradarg import ArgGraph

    return ArgGraph(tuple(f"a{i}" for i in range(n)), incidence, weights)
