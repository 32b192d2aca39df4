"""Permutations in one-line notation and the two metrics on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotABijection, ParseError, SizeMismatch
from .graph import RestrictionGraph


@dataclass(frozen=True, order=True)
class Permutation:
    """One-line notation: ``values[i - 1]`` is sigma_i.

    Ordering compares ``values`` lexicographically.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(x) for x in self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise NotABijection(f"{values} is not a permutation of 1..{len(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reversal(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Space/comma separated integers, or compact digits like ``2413`` for n <= 9."""
        text = text.strip()
        toks = text.replace(",", " ").split()
        try:
            if len(toks) == 1 and len(toks[0]) > 1:
                if len(toks[0]) > 9:
                    raise ParseError(f"compact form {text!r} is ambiguous beyond n = 9")
                values = tuple(int(c) for c in toks[0])
            else:
                values = tuple(int(t) for t in toks)
        except ValueError:
            raise ParseError(f"cannot parse permutation {text!r}") from None
        try:
            return cls(values)
        except NotABijection as exc:
            raise ParseError(str(exc)) from None

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return " ".join(map(str, self.values))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.values, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """``(self ∘ other)_k = self[other_k]``."""
        _same_size(self, other)
        return Permutation(tuple(self.values[v - 1] for v in other.values))


def as_permutation(p) -> Permutation:
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        return Permutation.parse(p)
    return Permutation(tuple(p))


def _same_size(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise SizeMismatch(f"sizes differ: {len(a)} vs {len(b)}")


def satisfies(sigma, g: RestrictionGraph) -> bool:
    sigma = as_permutation(sigma)
    if sigma.n != g.n:
        raise SizeMismatch(f"permutation has size {sigma.n}, graph has n={g.n}")
    v = sigma.values
    return all(v[a - 1] > v[b - 1] for a, b in g.edges)


def linf_distance(sigma, rho) -> int:
    a, b = as_permutation(sigma), as_permutation(rho)
    _same_size(a, b)
    return max((abs(x - y) for x, y in zip(a.values, b.values)), default=0)


def kendall_distance(sigma, rho) -> int:
    """Number of position pairs ``i < j`` ordered differently by the two permutations."""
    a, b = as_permutation(sigma).values, as_permutation(rho).values
    _same_size(a, b)
    n = len(a)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if (a[i] - a[j]) * (b[i] - b[j]) < 0
    )


def _merge_count(seq: list[int]) -> tuple[list[int], int]:
    if len(seq) <= 1:
        return seq, 0
    mid = len(seq) // 2
    left, x = _merge_count(seq[:mid])
    right, y = _merge_count(seq[mid:])
    merged, count = [], x + y
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            count += len(left) - i
            j += 1
    merged += left[i:]
    merged += right[j:]
    return merged, count


def kendall_distance_fast(sigma, rho) -> int:
    """O(n log n) Kendall distance by merge-sort inversion counting."""
    a, b = as_permutation(sigma), as_permutation(rho)
    _same_size(a, b)
    # order positions by rho's values, then count inversions of sigma along that order
    by_rho = sorted(range(a.n), key=b.values.__getitem__)
    return _merge_count([a.values[p] for p in by_rho])[1]


def inversion_number(sigma) -> int:
    v = as_permutation(sigma).values
    n = len(v)
    return sum(1 for i in range(n) for j in range(i + 1, n) if v[i] > v[j])


def inversion_set(sigma) -> frozenset[tuple[int, int]]:
    v = as_permutation(sigma).values
    n = len(v)
    return frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if v[i] > v[j])


def from_linear_extension(order: Iterable[int]) -> Permutation:
    """Map a vertex listing ``v_1 .. v_n`` to sigma with ``sigma[v_k] = n + 1 - k``.

    Vertices listed earlier receive larger values, so a linear extension of
    the reachability order becomes a permutation satisfying the graph.
    """
    order = list(order)
    n = len(order)
    if sorted(order) != list(range(1, n + 1)):
        raise NotABijection(f"{order} does not list 1..{n} exactly once")
    values = [0] * n
    for k, v in enumerate(order, start=1):
        values[v - 1] = n + 1 - k
    return Permutation(tuple(values))


def to_linear_extension(sigma) -> list[int]:
    """Inverse of :func:`from_linear_extension`: vertices by decreasing value."""
    v = as_permutation(sigma).values
    return sorted(range(1, len(v) + 1), key=lambda p: -v[p - 1])
