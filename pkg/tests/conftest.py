import itertools

import pytest
from hypothesis import strategies as st

from permbound.graph import RestrictionGraph

EXAMPLE1_EDGES = {(2, 1), (2, 3), (4, 3), (2, 4)}
STANDARD_EXAMPLE_EDGES = {(1, 4), (2, 5), (3, 6), (1, 5), (2, 6), (3, 4)}


@pytest.fixture
def example1():
    return RestrictionGraph(4, frozenset(EXAMPLE1_EDGES))


@pytest.fixture
def standard_example():
    return RestrictionGraph(6, frozenset(STANDARD_EXAMPLE_EDGES))


@pytest.fixture
def cycle3():
    return RestrictionGraph(3, frozenset({(1, 2), (2, 3), (3, 1)}))


def dfs_reach(g):
    """Per-vertex depth-first search; independent of the bitset closure."""
    succ = {v: [] for v in range(1, g.n + 1)}
    for a, b in g.edges:
        succ[a].append(b)
    out = set()
    for u in range(1, g.n + 1):
        stack = list(succ[u])
        seen = set()
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(succ[v])
        out |= {(u, v) for v in seen}
    return out


@st.composite
def dags(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(list(range(1, n + 1))))
    forward = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(forward), max_size=len(forward)))
    edges = frozenset((order[a], order[b]) for (a, b), k in zip(forward, keep) if k)
    return RestrictionGraph(n, edges)
