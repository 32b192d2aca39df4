"""Restriction graphs, reachability and the induced poset.

A restriction graph on vertices ``1..n`` carries an edge ``u -> v`` for every
constraint ``sigma[u] > sigma[v]``.  All public functions use 1-based vertex
labels.  Reachability rows are stored as Python ints used as bitsets, bit
``v - 1`` standing for vertex ``v``.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import CyclicGraph, ParseError, VertexOutOfRange

Edge = tuple[int, int]


def _bits(mask: int) -> list[int]:
    """1-based vertices whose bit is set in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


@dataclass(frozen=True)
class RestrictionGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")
        edges = set()
        for edge in self.edges:
            u, v = (int(x) for x in edge)
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise VertexOutOfRange(f"edge {u}->{v} outside [1, {self.n}]")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            edges.add((u, v))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def empty(cls, n: int) -> RestrictionGraph:
        return cls(n, frozenset())

    @classmethod
    def chain(cls, n: int) -> RestrictionGraph:
        """The total order 1 -> 2 -> ... -> n."""
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[v - 1] |= 1 << (u - 1)
        return tuple(masks)

    def successors(self, v: int) -> list[int]:
        return _bits(self.out_masks[v - 1])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __str__(self):
        return format_edge_list(self)


@dataclass(frozen=True)
class Reachability:
    """Transitive closure: bit ``v-1`` of ``rows[u-1]`` is set iff u ⇝ v."""

    n: int
    rows: tuple[int, ...]

    @cached_property
    def inverse_rows(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for u, row in enumerate(self.rows):
            for v in _bits(row):
                cols[v - 1] |= 1 << u
        return tuple(cols)

    def reaches(self, u: int, v: int) -> bool:
        return bool(self.rows[u - 1] >> (v - 1) & 1)

    @property
    def closure(self) -> list[list[bool]]:
        return [[bool(row >> j & 1) for j in range(self.n)] for row in self.rows]

    def pairs(self) -> set[Edge]:
        return {(u + 1, v) for u, row in enumerate(self.rows) for v in _bits(row)}


@dataclass(frozen=True)
class Poset:
    """Reflexive reachability order ``a <= b iff a ⇝ b or a == b``.

    ``leq[a-1][b-1]`` is the relation; ``incomp`` holds pairs ``(i, j)``,
    ``i < j``, comparable in neither direction.
    """

    n: int
    leq: tuple[tuple[bool, ...], ...]
    incomp: frozenset

    def le(self, a: int, b: int) -> bool:
        return self.leq[a - 1][b - 1]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a - 1][b - 1]

    def comparable(self, a: int, b: int) -> bool:
        return self.le(a, b) or self.le(b, a)


def find_cycle(g: RestrictionGraph) -> tuple[int, ...] | None:
    """One oriented cycle as a closed walk starting at its smallest vertex, or None."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = [WHITE] * (g.n + 1)
    for root in range(1, g.n + 1):
        if color[root] != WHITE:
            continue
        path = [root]
        iters = [iter(g.successors(root))]
        color[root] = GREY
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                color[path.pop()] = BLACK
                iters.pop()
            elif color[nxt] == GREY:
                cycle = path[path.index(nxt):]
                k = cycle.index(min(cycle))
                cycle = cycle[k:] + cycle[:k]
                return tuple(cycle + [cycle[0]])
            elif color[nxt] == WHITE:
                color[nxt] = GREY
                path.append(nxt)
                iters.append(iter(g.successors(nxt)))
    return None


def is_acyclic(g: RestrictionGraph) -> bool:
    return find_cycle(g) is None


def topological_order(n: int, edges: Iterable[Edge]) -> list[int]:
    """Kahn's algorithm taking the smallest available label first.

    Raises CyclicGraph when the edges contain a cycle.
    """
    edges = set(edges)
    succ: list[list[int]] = [[] for _ in range(n + 1)]
    indeg = [0] * (n + 1)
    for u, v in edges:
        succ[u].append(v)
        indeg[v] += 1
    heap = [v for v in range(1, n + 1) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) < n:
        cycle = find_cycle(RestrictionGraph(n, frozenset(edges)))
        raise CyclicGraph(cycle or ())
    return order


def transitive_closure(g: RestrictionGraph) -> Reachability:
    order = topological_order(g.n, g.edges)
    rows = [0] * g.n
    for u in reversed(order):
        row = 0
        for v in g.successors(u):
            row |= (1 << (v - 1)) | rows[v - 1]
        rows[u - 1] = row
    return Reachability(g.n, tuple(rows))


def _check_vertex(r: Reachability, v: int):
    if not 1 <= v <= r.n:
        raise VertexOutOfRange(f"vertex {v} outside [1, {r.n}]")


def reachable_set(r: Reachability, v: int) -> frozenset[int]:
    """R(v): vertices other than v reachable from v."""
    _check_vertex(r, v)
    return frozenset(_bits(r.rows[v - 1] & ~(1 << (v - 1))))


def inverse_reachable_set(r: Reachability, v: int) -> frozenset[int]:
    """R^-1(v): vertices other than v from which v is reachable."""
    _check_vertex(r, v)
    return frozenset(_bits(r.inverse_rows[v - 1] & ~(1 << (v - 1))))


def reach_counts(r: Reachability) -> list[tuple[int, int]]:
    """``(|R(v)|, |R^-1(v)|)`` for v = 1..n."""
    return [
        (bin(r.rows[v]).count("1"), bin(r.inverse_rows[v]).count("1"))
        for v in range(r.n)
    ]


def poset_from_reachability(r: Reachability) -> Poset:
    n = r.n
    leq = tuple(
        tuple(a == b or bool(r.rows[a] >> b & 1) for b in range(n)) for a in range(n)
    )
    incomp = frozenset(
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if not leq[i][j] and not leq[j][i]
    )
    return Poset(n, leq, incomp)


def to_poset(g: RestrictionGraph) -> Poset:
    return poset_from_reachability(transitive_closure(g))


def induced_subgraph(g: RestrictionGraph, s: Iterable[int]) -> tuple[RestrictionGraph, dict[int, int]]:
    """Subgraph on ``s`` relabelled ``1..|s|`` in increasing label order.

    Returns the subgraph and the relabelling map ``old -> new``.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 1 <= v <= g.n:
            raise VertexOutOfRange(f"vertex {v} outside [1, {g.n}]")
    relabel = {v: k for k, v in enumerate(verts, start=1)}
    edges = frozenset(
        (relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel
    )
    return RestrictionGraph(len(verts), edges), relabel


# -- text and JSON formats ---------------------------------------------------


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}") from None


def _build(n, edges) -> RestrictionGraph:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"n must be a positive integer, got {n!r}")
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge {u} {v}: vertices must lie in [1, {n}]")
        if u == v:
            raise ParseError(f"edge {u} {v}: self-loops are not allowed")
    return RestrictionGraph(n, frozenset(edges))


def parse_edge_list(text: str) -> RestrictionGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if n is None:
            if len(toks) != 1:
                raise ParseError(f"line {lineno}: first line must hold n alone")
            n = _parse_int(toks[0], lineno)
            continue
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((_parse_int(toks[0], lineno), _parse_int(toks[1], lineno)))
    if n is None:
        raise ParseError("empty input: missing vertex count")
    return _build(n, edges)


def parse_graph_json(text: str) -> RestrictionGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data:
        raise ParseError('JSON graph must be an object with "n" and "edges"')
    edges = []
    for e in data.get("edges", []):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise ParseError(f"bad edge {e!r}: expected [u, v]")
        edges.append((e[0], e[1]))
    return _build(data["n"], edges)


def parse_graph(text: str) -> RestrictionGraph:
    """Parse either the edge-list text format or the JSON object format."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_edge_list(text)


def format_edge_list(g: RestrictionGraph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_to_json(g: RestrictionGraph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.sorted_edges()]})
