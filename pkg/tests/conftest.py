import pytest

from hskernel import cores_chain, gen_fig1, pseudo_chain


@pytest.fixture(scope="session")
def fig1():
    return gen_fig1()


@pytest.fixture(scope="session")
def fig1_cores_chain(fig1):
    return cores_chain(fig1, 2)


@pytest.fixture(scope="session")
def fig1_pseudo_chain(fig1):
    # computed once; several suites exercise it
    return pseudo_chain(fig1, 2)


def name_ids(h):
    """Map display names to vertex ids for readable test fixtures."""
    return {h.display_name(v): v for v in range(h.vertex_count)}


def edges_by_name(h):
    return {frozenset(h.display_name(v) for v in e) for e in h.edges}
