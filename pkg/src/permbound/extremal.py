"""Constructions that attain the diameters.

* ``greedy_construct`` -- smallest-source-first filling with decreasing values.
* ``linf_extremal_pair`` -- two members differing by the full value interval
  at the least constrained vertex.
* ``dimension_at_most_two`` -- a two-element realizer from a transitive
  orientation of the incomparability graph, which yields the Kendall pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CyclicGraph, InternalInconsistency
from .graph import (
    RestrictionGraph,
    induced_subgraph,
    inverse_reachable_set,
    reach_counts,
    reachable_set,
    to_poset,
    topological_order,
    transitive_closure,
)
from .oracle import brute_diameter
from .permutation import (
    Permutation,
    from_linear_extension,
    kendall_distance,
    linf_distance,
)

DEFAULT_EXHAUSTIVE_LIMIT = 8


@dataclass(frozen=True)
class Realizer2:
    """Two linear extensions (vertex sequences) whose intersection is the order."""

    ext1: tuple[int, ...]
    ext2: tuple[int, ...]

    def permutations(self) -> tuple[Permutation, Permutation]:
        return from_linear_extension(self.ext1), from_linear_extension(self.ext2)


@dataclass(frozen=True)
class DiameterReport:
    metric: str
    bound: int
    attained: bool
    witness: tuple[Permutation, Permutation] | None
    method: str

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "bound": self.bound,
            "attained": self.attained,
            "method": self.method,
            "witness": None if self.witness is None else [list(p.values) for p in self.witness],
        }


def _greedy_fill(g: RestrictionGraph, vertices: Iterable[int], values: Iterable[int],
                 out: list[int]):
    """Run the greedy construction on ``g[vertices]`` using ``values`` instead of 1..k."""
    sub, relabel = induced_subgraph(g, vertices)
    back = {new: old for old, new in relabel.items()}
    pool = sorted(values, reverse=True)
    if len(pool) != sub.n:
        raise ValueError(f"{len(pool)} values for {sub.n} vertices")
    for value, v in zip(pool, topological_order(sub.n, sub.edges)):
        out[back[v] - 1] = value


def greedy_construct(g: RestrictionGraph) -> Permutation:
    """Repeatedly give the largest unused value to the smallest-labelled source.

    Removing sources smallest-first is Kahn's algorithm with a min-heap, so
    the result is the topological order mapped to n, n-1, ..., 1.
    """
    return from_linear_extension(topological_order(g.n, g.edges))


def linf_diameter_bound(g: RestrictionGraph) -> int:
    counts = reach_counts(transitive_closure(g))
    return max((g.n - r - ri - 1 for r, ri in counts), default=0)


def linf_extremal_pair(g: RestrictionGraph) -> tuple[Permutation, Permutation]:
    n = g.n
    reach = transitive_closure(g)
    counts = reach_counts(reach)
    # smallest k minimising |R(k)| + |R^-1(k)|
    k = min(range(1, n + 1), key=lambda v: (sum(counts[v - 1]), v))
    down = reachable_set(reach, k)
    up = inverse_reachable_set(reach, k)
    middle = set(range(1, n + 1)) - down - up - {k}
    r, ri = len(down), len(up)

    sigma = [0] * n
    rho = [0] * n
    for perm in (sigma, rho):
        _greedy_fill(g, down, range(1, r + 1), perm)
        _greedy_fill(g, up, range(n - ri + 1, n + 1), perm)
    sigma[k - 1] = r + 1
    rho[k - 1] = n - ri
    _greedy_fill(g, middle, range(r + 2, n - ri + 1), sigma)
    _greedy_fill(g, middle, range(r + 1, n - ri), rho)
    return Permutation(tuple(sigma)), Permutation(tuple(rho))


def linf_diameter(g: RestrictionGraph) -> DiameterReport:
    bound = linf_diameter_bound(g)
    pair = linf_extremal_pair(g)
    if linf_distance(*pair) != bound:
        raise InternalInconsistency(f"l-inf pair {pair} misses bound {bound}")
    return DiameterReport("linf", bound, True, pair, "formula")


def kendall_upper_bound(g: RestrictionGraph) -> int:
    return len(to_poset(g).incomp)


def transitive_orientation(n: int, edges: Iterable[tuple[int, int]]) -> set[tuple[int, int]] | None:
    """Transitively orient an undirected graph on ``1..n``, or None if impossible.

    Implication classes are peeled off one at a time: orient the smallest
    remaining edge, propagate every forced arc within the remaining graph
    (arcs ``a->b`` and ``a->c`` share a tail and ``b, c`` are non-adjacent,
    or share a head with non-adjacent tails), then delete the class.  A class
    containing an arc and its reverse means no transitive orientation exists.
    """
    adj = [set() for _ in range(n + 1)]
    for a, b in edges:
        if a == b:
            raise ValueError(f"loop at {a}")
        adj[a].add(b)
        adj[b].add(a)
    remaining = {(min(a, b), max(a, b)) for a in range(1, n + 1) for b in adj[a]}
    orientation: set[tuple[int, int]] = set()

    while remaining:
        seed = min(remaining)
        cls = {seed}
        stack = [seed]
        while stack:
            x, y = stack.pop()
            forced = [(x, z) for z in adj[x] if z != y and z not in adj[y]]
            forced += [(z, y) for z in adj[y] if z != x and z not in adj[x]]
            for arc in forced:
                if (arc[1], arc[0]) in cls:
                    return None
                if arc not in cls:
                    cls.add(arc)
                    stack.append(arc)
        orientation |= cls
        for a, b in cls:
            adj[a].discard(b)
            adj[b].discard(a)
            remaining.discard((min(a, b), max(a, b)))

    succ = [set() for _ in range(n + 1)]
    for a, b in orientation:
        succ[a].add(b)
    for a, b in orientation:
        if not succ[b] <= succ[a]:
            raise InternalInconsistency(f"orientation not transitive at {a}->{b}")
    return orientation


def dimension_at_most_two(g: RestrictionGraph) -> Realizer2 | None:
    """A two-extension realizer of the reachability order, or None if dimension >= 3."""
    reach = transitive_closure(g)
    poset = to_poset(g)
    conjugate = transitive_orientation(g.n, poset.incomp)
    if conjugate is None:
        return None
    strict = reach.pairs()
    try:
        ext1 = topological_order(g.n, strict | conjugate)
        ext2 = topological_order(g.n, strict | {(b, a) for a, b in conjugate})
    except CyclicGraph as exc:
        raise InternalInconsistency(f"order plus conjugate is cyclic: {exc}") from None
    realizer = Realizer2(tuple(ext1), tuple(ext2))
    if realizer_intersection(realizer) != strict:
        raise InternalInconsistency("realizer intersection differs from the order")
    return realizer


def realizer_intersection(realizer: Realizer2) -> set[tuple[int, int]]:
    """Pairs ``(a, b)``, ``a != b``, with a before b in both extensions."""
    p1 = {v: i for i, v in enumerate(realizer.ext1)}
    p2 = {v: i for i, v in enumerate(realizer.ext2)}
    return {(a, b) for a in p1 for b in p1 if p1[a] < p1[b] and p2[a] < p2[b]}


def kendall_extremal_pair(g: RestrictionGraph) -> tuple[Permutation, Permutation] | None:
    realizer = dimension_at_most_two(g)
    return None if realizer is None else realizer.permutations()


def kendall_diameter(g: RestrictionGraph,
                     exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> DiameterReport:
    """Kendall-Tau diameter.

    Dimension <= 2 gives the incomparable-pair count with a realizer witness.
    Otherwise the exact value comes from enumeration when ``n`` is within
    ``exhaustive_limit``, and only the (unattained) upper bound is reported
    beyond it.
    """
    bound = kendall_upper_bound(g)
    pair = kendall_extremal_pair(g)
    if pair is not None:
        if kendall_distance(*pair) != bound:
            raise InternalInconsistency(f"realizer pair {pair} misses bound {bound}")
        return DiameterReport("kendall", bound, True, pair, "realizer")
    if g.n <= exhaustive_limit:
        value, witness = brute_diameter(g, "kendall", limit=exhaustive_limit)
        return DiameterReport("kendall", value, witness is not None, witness, "oracle")
    return DiameterReport("kendall", bound, False, None, "formula")
