import itertools
import random

import pytest
from hypothesis import given, strategies as st

from permbound.errors import NotABijection, ParseError, SizeMismatch
from permbound.graph import RestrictionGraph, reachable_set, inverse_reachable_set, transitive_closure
from permbound.oracle import all_dags, linear_extensions, naive_family
from permbound.permutation import (
    Permutation,
    from_linear_extension,
    inversion_number,
    kendall_distance,
    kendall_distance_fast,
    linf_distance,
    satisfies,
    to_linear_extension,
)

P = Permutation.parse


def perms(max_n=32):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(lambda v: Permutation(tuple(v)))
    )


def same_size_pair(max_n=32):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(
            st.permutations(list(range(1, n + 1))),
            st.permutations(list(range(1, n + 1))),
        )
    )


def test_validation_and_parsing():
    assert P("2413") == P("2 4 1 3") == P("2,4,1,3") == Permutation((2, 4, 1, 3))
    assert str(P("2413")) == "2 4 1 3"
    assert P("10 9 8 7 6 5 4 3 2 1").n == 10
    with pytest.raises(NotABijection):
        Permutation((1, 1, 2))
    with pytest.raises(NotABijection):
        Permutation((0, 1))
    with pytest.raises(ParseError):
        P("1234567890")
    with pytest.raises(ParseError):
        P("1 2 x")
    with pytest.raises(ParseError):
        P("1 3")


def test_satisfies(example1):
    assert satisfies(P("2413"), example1)
    assert not satisfies(P("1234"), example1)
    assert satisfies(P("4231"), RestrictionGraph.empty(4))
    with pytest.raises(SizeMismatch):
        satisfies(P("123"), example1)


def test_linf_examples():
    assert linf_distance(P("1423"), P("3412")) == 2
    assert linf_distance(P("1423"), P("1423")) == 0
    for n in (1, 2, 7):
        assert linf_distance(Permutation.identity(n), Permutation.reversal(n)) == n - 1
    with pytest.raises(SizeMismatch):
        linf_distance(P("12"), P("123"))


def test_kendall_examples():
    assert kendall_distance(P("312"), P("321")) == 1
    assert kendall_distance(P("2413"), P("2413")) == 0
    assert kendall_distance(P("1423"), P("3412")) == 2
    with pytest.raises(SizeMismatch):
        kendall_distance(P("12"), P("123"))


def test_inversion_number_examples():
    assert inversion_number(Permutation.identity(6)) == 0
    assert inversion_number(Permutation.reversal(6)) == 15
    # pairs (1,3), (2,3), (2,4)
    assert inversion_number(P("2413")) == 3


def test_from_linear_extension_examples():
    assert from_linear_extension([1, 2, 3, 4, 5]) == Permutation.reversal(5)
    assert from_linear_extension([2, 4, 1, 3]) == P("2413")
    assert from_linear_extension([2, 4, 3, 1]) == P("1423")
    with pytest.raises(NotABijection):
        from_linear_extension([1, 1, 2])
    assert to_linear_extension(P("2413")) == [2, 4, 1, 3]


@given(perms(), perms())
def test_metric_axioms_hold(a, b):
    if a.n != b.n:
        return
    for d in (linf_distance, kendall_distance):
        assert d(a, b) == d(b, a) >= 0
        assert d(a, a) == 0
        assert (d(a, b) > 0) == (a != b)


def test_triangle_inequality_random_triples():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(1, 32)
        a, b, c = (Permutation(tuple(rng.sample(range(1, n + 1), n))) for _ in range(3))
        for d in (linf_distance, kendall_distance):
            assert d(a, c) <= d(a, b) + d(b, c)


@pytest.mark.parametrize("n", range(1, 6))
def test_kendall_equals_inversions_of_quotient_exhaustive(n):
    all_perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    for a in all_perms:
        for b in all_perms:
            assert kendall_distance(a, b) == inversion_number(a.compose(b.inverse()))


@given(same_size_pair())
def test_kendall_equals_inversions_of_quotient_random(pair):
    a, b = (Permutation(tuple(v)) for v in pair)
    assert kendall_distance(a, b) == inversion_number(a.compose(b.inverse()))


@pytest.mark.parametrize("n", range(1, 9))
def test_fast_kendall_agrees_with_pair_count(n):
    rng = random.Random(n)
    all_perms = list(itertools.permutations(range(1, n + 1)))
    pairs = itertools.product(all_perms, repeat=2) if n <= 5 else (
        (rng.choice(all_perms), rng.choice(all_perms)) for _ in range(3000)
    )
    for a, b in pairs:
        assert kendall_distance_fast(a, b) == kendall_distance(a, b)


@pytest.mark.parametrize("n", range(1, 6))
def test_linear_extensions_map_into_family(n):
    for g in all_dags(n):
        family = set(naive_family(g))
        images = {from_linear_extension(ext) for ext in linear_extensions(g)}
        assert images == family


@pytest.mark.parametrize("n", range(1, 6))
def test_values_lie_in_tight_interval(n):
    for g in all_dags(n):
        r = transitive_closure(g)
        bounds = [
            (len(reachable_set(r, v)) + 1, n - len(inverse_reachable_set(r, v)))
            for v in range(1, n + 1)
        ]
        for sigma in naive_family(g):
            assert all(lo <= s <= hi for s, (lo, hi) in zip(sigma, bounds))
