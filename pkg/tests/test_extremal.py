import itertools

import pytest
from hypothesis import given, settings

from permbound.errors import CyclicGraph
from permbound.extremal import (
    DiameterReport,
    Realizer2,
    dimension_at_most_two,
    greedy_construct,
    kendall_diameter,
    kendall_extremal_pair,
    kendall_upper_bound,
    linf_diameter,
    linf_diameter_bound,
    linf_extremal_pair,
    realizer_intersection,
    transitive_orientation,
)
from permbound.graph import RestrictionGraph, to_poset, transitive_closure
from permbound.oracle import (
    all_dags,
    brute_diameter,
    brute_dimension_le2,
    count_admissible,
    random_dags,
)
from permbound.permutation import Permutation, kendall_distance, linf_distance, satisfies

from conftest import dags

P = Permutation.parse


def is_transitive(arcs):
    return all((a, d) in arcs for a, b in arcs for c, d in arcs if b == c)


# -- greedy ----------------------------------------------------------------------


def test_greedy_examples(example1):
    assert greedy_construct(example1) == P("3412")
    assert greedy_construct(RestrictionGraph.empty(3)) == P("321")
    assert greedy_construct(RestrictionGraph.chain(3)) == P("321")


def test_greedy_rejects_cycles(cycle3):
    with pytest.raises(CyclicGraph):
        greedy_construct(cycle3)


@pytest.mark.parametrize("n", range(1, 6))
def test_greedy_satisfies_exhaustive(n):
    for g in all_dags(n):
        assert satisfies(greedy_construct(g), g)


def test_greedy_satisfies_random():
    for g in random_dags(1000, (1, 64), seed=2):
        assert satisfies(greedy_construct(g), g)


# -- l-inf -----------------------------------------------------------------------


def test_linf_bound_examples(example1):
    assert linf_diameter_bound(example1) == 2
    for n in (1, 4, 9):
        assert linf_diameter_bound(RestrictionGraph.chain(n)) == 0
        assert linf_diameter_bound(RestrictionGraph.empty(n)) == n - 1


def test_linf_pair_examples(example1):
    sigma, rho = linf_extremal_pair(example1)
    assert linf_distance(sigma, rho) == 2
    assert {sigma, rho} <= {P("1423"), P("2413"), P("3412")}
    assert linf_extremal_pair(RestrictionGraph.chain(3)) == (P("321"), P("321"))
    assert set(linf_extremal_pair(RestrictionGraph.empty(2))) == {P("12"), P("21")}


def test_linf_pair_is_deterministic(example1):
    assert linf_extremal_pair(example1) == (P("1423"), P("3412"))


@settings(max_examples=300)
@given(dags(max_n=12))
def test_linf_pair_attains_bound(g):
    sigma, rho = linf_extremal_pair(g)
    assert satisfies(sigma, g) and satisfies(rho, g)
    assert linf_distance(sigma, rho) == linf_diameter_bound(g)


def test_linf_pair_on_large_random_dags():
    for g in random_dags(300, (20, 64), seed=9):
        sigma, rho = linf_extremal_pair(g)
        assert satisfies(sigma, g) and satisfies(rho, g)
        assert linf_distance(sigma, rho) == linf_diameter_bound(g)


@pytest.mark.parametrize("n", range(1, 6))
def test_linf_bound_equals_oracle_exhaustive(n):
    for g in all_dags(n):
        if count_admissible(g) >= 2:
            assert brute_diameter(g, "linf")[0] == linf_diameter_bound(g)


def test_linf_report(example1):
    report = linf_diameter(example1)
    assert report == DiameterReport("linf", 2, True, (P("1423"), P("3412")), "formula")


# -- orientation and dimension ---------------------------------------------------


def test_orientation_examples():
    q = transitive_orientation(4, [(1, 3), (1, 4)])
    assert q in ({(1, 3), (1, 4)}, {(3, 1), (4, 1)})
    assert transitive_orientation(5, []) == set()


def test_orientation_standard_example_absent(standard_example):
    assert transitive_orientation(6, to_poset(standard_example).incomp) is None


@pytest.mark.parametrize("edges, orientable", [
    ([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)], False),  # C5
    ([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)], True),  # C6 is bipartite
    ([(a, b) for a, b in itertools.combinations(range(1, 6), 2)], True),  # K5
    ([(1, 2), (2, 3), (3, 1), (1, 4), (2, 5), (3, 6)], False),  # net
])
def test_orientation_small_graphs(edges, orientable):
    q = transitive_orientation(6, edges)
    assert (q is not None) == orientable
    if q is not None:
        assert is_transitive(q)
        assert {frozenset(e) for e in q} == {frozenset(e) for e in edges}
        assert len(q) == len(edges)


def _is_comparability_brute(n, edges):
    edges = [tuple(e) for e in edges]
    for bits in range(1 << len(edges)):
        arcs = {(a, b) if bits >> k & 1 else (b, a) for k, (a, b) in enumerate(edges)}
        if is_transitive(arcs):
            return True
    return False


@pytest.mark.parametrize("n", range(1, 6))
def test_orientation_matches_brute_force_on_all_graphs(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if bits >> k & 1]
        q = transitive_orientation(n, edges)
        assert (q is not None) == _is_comparability_brute(n, edges)
        if q is not None:
            assert is_transitive(q)


def test_dimension_examples(example1, standard_example):
    realizer = dimension_at_most_two(example1)
    assert realizer == Realizer2((2, 1, 4, 3), (2, 4, 3, 1))
    assert realizer_intersection(realizer) == transitive_closure(example1).pairs()
    chain = dimension_at_most_two(RestrictionGraph.chain(4))
    assert chain.ext1 == chain.ext2 == (1, 2, 3, 4)
    assert dimension_at_most_two(standard_example) is None


@settings(max_examples=300)
@given(dags(max_n=10))
def test_realizer_intersection_is_the_order(g):
    realizer = dimension_at_most_two(g)
    if realizer is None:
        return
    strict = transitive_closure(g).pairs()
    for ext in (realizer.ext1, realizer.ext2):
        pos = {v: i for i, v in enumerate(ext)}
        assert all(pos[a] < pos[b] for a, b in strict)
    assert realizer_intersection(realizer) == strict


@pytest.mark.parametrize("n", range(1, 6))
def test_dimension_matches_oracle_exhaustive(n):
    for g in all_dags(n):
        assert (dimension_at_most_two(g) is not None) == brute_dimension_le2(g)


def test_dimension_matches_oracle_n6_sample():
    for g in random_dags(400, (6, 6), seed=6):
        assert (dimension_at_most_two(g) is not None) == brute_dimension_le2(g)


# -- Kendall ---------------------------------------------------------------------


def test_kendall_bound_examples(example1, standard_example):
    assert kendall_upper_bound(example1) == 2
    assert kendall_upper_bound(RestrictionGraph.chain(5)) == 0
    assert kendall_upper_bound(standard_example) == 9


def test_kendall_pair_examples(example1, standard_example):
    sigma, rho = kendall_extremal_pair(example1)
    assert kendall_distance(sigma, rho) == 2
    assert {sigma, rho} == {P("3412"), P("1423")}
    sigma, rho = kendall_extremal_pair(RestrictionGraph.chain(3))
    assert sigma == rho
    assert kendall_extremal_pair(standard_example) is None


def test_kendall_diameter_examples(example1, standard_example):
    r = kendall_diameter(example1)
    assert (r.bound, r.attained, r.method) == (2, True, "realizer")
    r = kendall_diameter(standard_example, exhaustive_limit=6)
    assert r.method == "oracle" and r.attained and r.bound < 9
    assert kendall_distance(*r.witness) == r.bound
    assert all(satisfies(p, standard_example) for p in r.witness)
    r = kendall_diameter(standard_example, exhaustive_limit=5)
    assert (r.bound, r.attained, r.witness, r.method) == (9, False, None, "formula")
    r = kendall_diameter(RestrictionGraph.chain(4))
    assert (r.bound, r.attained) == (0, True)


@settings(max_examples=200)
@given(dags(max_n=7))
def test_kendall_report_invariant(g):
    r = kendall_diameter(g, exhaustive_limit=7)
    assert r.attained
    sigma, rho = r.witness
    assert satisfies(sigma, g) and satisfies(rho, g)
    assert kendall_distance(sigma, rho) == r.bound
    if r.method == "oracle":
        assert r.bound < kendall_upper_bound(g)
    else:
        assert r.bound == kendall_upper_bound(g)
