"""Brute-force ground truth at small n.

Everything here enumerates: permutation families, linear extensions, all
pairs of family members.  Nothing in this module relies on the closed forms
or constructions in :mod:`permbound.extremal`, so it can be used to check
them.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import LimitExceeded
from .graph import (
    RestrictionGraph,
    find_cycle,
    reach_counts,
    to_poset,
    transitive_closure,
)
from .permutation import Permutation

DEFAULT_LIMIT = 8
METRICS = ("linf", "kendall")


def _check_limit(n: int, limit: int):
    if n > limit:
        raise LimitExceeded(n, limit)


def _family_tuples(g: RestrictionGraph) -> list[tuple[int, ...]]:
    """Backtracking over positions 1..n in order, values ascending.

    Each position's value is confined to ``[|R(p)|+1, n-|R^-1(p)|]`` and must
    sit above every already-placed position it reaches and below every one
    that reaches it.
    """
    if find_cycle(g) is not None:
        return []
    n = g.n
    reach = transitive_closure(g)
    counts = reach_counts(reach)
    lo = [r + 1 for r, _ in counts]
    hi = [n - ri for _, ri in counts]
    # constraints against earlier positions only
    below = [[q for q in range(p) if reach.rows[p] >> q & 1] for p in range(n)]
    above = [[q for q in range(p) if reach.rows[q] >> p & 1] for p in range(n)]

    out = []
    values = [0] * n
    used = [False] * (n + 2)

    def place(p):
        if p == n:
            out.append(tuple(values))
            return
        low = lo[p]
        for q in below[p]:
            if values[q] + 1 > low:
                low = values[q] + 1
        high = hi[p]
        for q in above[p]:
            if values[q] - 1 < high:
                high = values[q] - 1
        for v in range(low, high + 1):
            if not used[v]:
                used[v] = True
                values[p] = v
                place(p + 1)
                used[v] = False
        values[p] = 0

    place(0)
    return out


def enumerate_family(g: RestrictionGraph, limit: int = DEFAULT_LIMIT) -> list[Permutation]:
    """All permutations satisfying ``g`` in lexicographic order (empty if cyclic)."""
    _check_limit(g.n, limit)
    return [Permutation(t) for t in _family_tuples(g)]


def naive_family(g: RestrictionGraph) -> list[Permutation]:
    """Filter all n! permutations; only for cross-checking at tiny n."""
    edges = [(u - 1, v - 1) for u, v in g.edges]
    return [
        Permutation(p)
        for p in itertools.permutations(range(1, g.n + 1))
        if all(p[u] > p[v] for u, v in edges)
    ]


def count_admissible(g: RestrictionGraph, limit: int = DEFAULT_LIMIT) -> int:
    _check_limit(g.n, limit)
    return len(_family_tuples(g))


# -- pairwise distances -------------------------------------------------------


def pair_masks(perms, n: int) -> np.ndarray:
    """Bit-packed relative order of every position pair.

    Row ``k`` holds one bit per pair ``i < j`` (lexicographic pair order),
    set when ``perms[k][i] > perms[k][j]``.  The Kendall distance between two
    rows is the popcount of their XOR.  Shape is ``(len(perms), words)``.
    """
    arr = np.asarray(perms, dtype=np.int64).reshape(len(perms), n)
    npairs = n * (n - 1) // 2
    words = max(1, -(-npairs // 64))
    masks = np.zeros((len(arr), words), dtype=np.uint64)
    for k, (i, j) in enumerate(itertools.combinations(range(n), 2)):
        bit = (arr[:, i] > arr[:, j]).astype(np.uint64) << np.uint64(k % 64)
        masks[:, k // 64] |= bit
    return masks


def max_pairwise_xor_popcount(masks: np.ndarray) -> tuple[int, tuple[int, int] | None]:
    """Largest popcount(a ^ b) over row pairs, with the first maximising pair.

    Stops early once no pair can do better: bits that are constant across all
    rows never contribute.
    """
    count = len(masks)
    if count < 2:
        return 0, None
    varying = np.bitwise_or.reduce(masks, axis=0) & ~np.bitwise_and.reduce(masks, axis=0)
    ceiling = int(np.bitwise_count(varying).sum())
    best, arg = -1, None
    for i in range(count - 1):
        d = np.bitwise_count(masks[i + 1:] ^ masks[i]).sum(axis=1, dtype=np.int64)
        j = int(np.argmax(d))
        if d[j] > best:
            best, arg = int(d[j]), (i, i + 1 + j)
            if best == ceiling:
                break
    return best, arg


def brute_diameter(
    g: RestrictionGraph, metric: str = "kendall", limit: int = DEFAULT_LIMIT
) -> tuple[int, tuple[Permutation, Permutation] | None]:
    """Largest distance between two members of the family, with one witness pair.

    Families with fewer than two members give ``(0, None)``.
    """
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    _check_limit(g.n, limit)
    fam = _family_tuples(g)
    if len(fam) < 2:
        return 0, None
    if metric == "linf":
        # max over pairs of max over positions == max over positions of (column max - column min)
        arr = np.asarray(fam)
        spread = arr.max(axis=0) - arr.min(axis=0)
        pos = int(np.argmax(spread))
        i, j = int(np.argmin(arr[:, pos])), int(np.argmax(arr[:, pos]))
        return int(spread[pos]), (Permutation(fam[i]), Permutation(fam[j]))
    value, (i, j) = max_pairwise_xor_popcount(pair_masks(fam, g.n))
    return value, (Permutation(fam[i]), Permutation(fam[j]))


# -- linear extensions and realizer search ------------------------------------


def linear_extensions(g: RestrictionGraph) -> Iterator[tuple[int, ...]]:
    """All linear extensions of the reachability order, by minimal-element removal.

    An extension lists ``a`` before ``b`` whenever ``a ⇝ b``.  Yields vertex
    sequences in lexicographic order.
    """
    n = g.n
    preds = list(g.in_masks)
    seq: list[int] = []

    def extend(placed: int):
        if len(seq) == n:
            yield tuple(seq)
            return
        for v in range(n):
            bit = 1 << v
            if not placed & bit and preds[v] & ~placed == 0:
                seq.append(v + 1)
                yield from extend(placed | bit)
                seq.pop()

    if find_cycle(g) is None:
        yield from extend(0)


def brute_dimension_le2(g: RestrictionGraph, limit: int = DEFAULT_LIMIT) -> bool:
    """Search all pairs of linear extensions for one whose intersection is the order."""
    _check_limit(g.n, limit)
    n = g.n
    exts = list(linear_extensions(g))
    if not exts:
        return False
    pos = np.zeros((len(exts), n), dtype=np.int64)
    for k, ext in enumerate(exts):
        pos[k, np.asarray(ext) - 1] = np.arange(n)
    # bit set when i comes after j; only incomparable pairs can disagree
    masks = pair_masks(pos, n)
    incomp = to_poset(g).incomp
    target = np.zeros(masks.shape[1], dtype=np.uint64)
    for k, (i, j) in enumerate(itertools.combinations(range(1, n + 1), 2)):
        if (i, j) in incomp:
            target[k // 64] |= np.uint64(1 << (k % 64))
    for row in masks:
        hit = ((masks ^ row) & target) == target
        if hit.all(axis=1).any():
            return True
    return False


def transitive_reduction(g: RestrictionGraph) -> RestrictionGraph:
    """Keep ``u -> v`` only when no other path from u reaches v."""
    reach = transitive_closure(g)
    edges = set()
    for u in range(g.n):
        row = reach.rows[u]
        implied = 0
        w_mask = row
        while w_mask:
            low = w_mask & -w_mask
            implied |= reach.rows[low.bit_length() - 1]
            w_mask ^= low
        direct = row & ~implied
        for v in range(g.n):
            if direct >> v & 1:
                edges.add((u + 1, v + 1))
    return RestrictionGraph(g.n, frozenset(edges))


# -- graph generators --------------------------------------------------------


def random_dag(n: int, p: float, rng: random.Random) -> RestrictionGraph:
    """Random acyclic graph: a random hidden order, each forward pair kept with probability p."""
    order = rng.sample(range(1, n + 1), n)
    edges = frozenset(
        (order[a], order[b])
        for a in range(n)
        for b in range(a + 1, n)
        if rng.random() < p
    )
    return RestrictionGraph(n, edges)


def random_dags(count: int, n_range: tuple[int, int], seed: int = 1,
                densities=(0.1, 0.3, 0.6)) -> Iterator[RestrictionGraph]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(*n_range)
        yield random_dag(n, rng.choice(densities), rng)


@lru_cache(maxsize=8)
def all_dags(n: int) -> tuple[RestrictionGraph, ...]:
    """Every labelled acyclic graph on n vertices (n <= 5 is practical)."""
    forward = list(itertools.combinations(range(n), 2))
    seen = set()
    for labels in itertools.permutations(range(1, n + 1)):
        for bits in range(1 << len(forward)):
            edges = frozenset(
                (labels[a], labels[b])
                for k, (a, b) in enumerate(forward)
                if bits >> k & 1
            )
            seen.add(edges)
    return tuple(RestrictionGraph(n, e) for e in sorted(seen, key=sorted))
