"""Descent-set and Hessenberg h-inversion families.

Both are restriction-graph families: a descent set orients the path
``1 - 2 - ... - n`` and an h-inversion set orients every pair ``i < j <= h_i``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    LimitExceeded,
    NonUniqueExtremes,
    NotAdmissible,
    ParseError,
    SizeMismatch,
)
from .graph import RestrictionGraph
from .oracle import DEFAULT_LIMIT
from .permutation import Permutation, as_permutation, inversion_number


@dataclass(frozen=True)
class DescentSet:
    n: int
    positions: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        positions = frozenset(int(i) for i in self.positions)
        bad = [i for i in positions if not 1 <= i <= self.n - 1]
        if bad:
            raise ValueError(f"descent positions {sorted(bad)} outside [1, {self.n - 1}]")
        object.__setattr__(self, "positions", positions)

    @classmethod
    def parse(cls, text: str) -> DescentSet:
        """Accepts ``n=5; D={1,3}`` or ``{"n": 5, "descents": [1, 3]}``."""
        text = text.strip()
        try:
            if text.startswith("{"):
                data = json.loads(text)
                return cls(int(data["n"]), frozenset(data.get("descents", [])))
            m = re.fullmatch(r"n\s*=\s*(\d+)\s*;\s*D\s*=\s*\{([\d,\s]*)\}", text)
            if m is None:
                raise ParseError(f"cannot parse descent set {text!r}")
            items = [s for s in m.group(2).replace(" ", "").split(",") if s]
            return cls(int(m.group(1)), frozenset(int(s) for s in items))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad descent set {text!r}: {exc}") from None

    @classmethod
    def all(cls, n: int) -> Iterator[DescentSet]:
        for r in range(n):
            for combo in itertools.combinations(range(1, n), r):
                yield cls(n, frozenset(combo))

    def indicator(self) -> list[bool]:
        return [i in self.positions for i in range(1, self.n)]

    def __str__(self):
        return f"n={self.n}; D={{{','.join(map(str, sorted(self.positions)))}}}"

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "descents": sorted(self.positions)})


@dataclass(frozen=True)
class Division:
    """Lengths of the maximal blocks of the descent indicator over positions 1..n-1."""

    runs: tuple[int, ...]


@dataclass(frozen=True)
class HessenbergFunction:
    h: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(x) for x in self.h)
        n = len(h)
        for i, hi in enumerate(h, start=1):
            if not i <= hi <= n:
                raise ValueError(f"h_{i} = {hi} must lie in [{i}, {n}]")
            if i < n and h[i] < hi:
                raise ValueError(f"h must be nondecreasing: h_{i} = {hi} > h_{i + 1} = {h[i]}")
        object.__setattr__(self, "h", h)

    @property
    def n(self) -> int:
        return len(self.h)

    @classmethod
    def descent_shaped(cls, n: int) -> HessenbergFunction:
        """``h_i = min(i + 1, n)``: the h-inversion set becomes the descent set."""
        return cls(tuple(min(i + 1, n) for i in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> HessenbergFunction:
        """Accepts ``h=2,3,4,5,5``, ``2,3,4,5,5`` or ``{"h": [2, 3, 4, 5, 5]}``."""
        text = text.strip()
        try:
            if text.startswith("{"):
                return cls(tuple(json.loads(text)["h"]))
            text = re.sub(r"^h\s*=", "", text)
            return cls(tuple(int(s) for s in text.replace(" ", "").split(",") if s))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad Hessenberg function {text!r}: {exc}") from None

    @classmethod
    def all(cls, n: int) -> Iterator[HessenbergFunction]:
        def rec(prefix):
            i = len(prefix) + 1
            if i > n:
                yield cls(tuple(prefix))
                return
            start = max(i, prefix[-1] if prefix else 1)
            for hi in range(start, n + 1):
                yield from rec(prefix + [hi])

        yield from rec([])

    def allowed_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.h[i - 1] + 1)]

    def __str__(self):
        return "h=" + ",".join(map(str, self.h))


@dataclass(frozen=True)
class HInversionSet:
    n: int
    pairs: frozenset = frozenset()

    def __post_init__(self):
        pairs = frozenset((int(i), int(j)) for i, j in self.pairs)
        for i, j in pairs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"pair ({i}, {j}) must satisfy 1 <= i < j <= {self.n}")
        object.__setattr__(self, "pairs", pairs)

    def check_against(self, h: HessenbergFunction):
        if h.n != self.n:
            raise SizeMismatch(f"h has length {h.n}, set is over n={self.n}")
        for i, j in self.pairs:
            if j > h.h[i - 1]:
                raise ValueError(f"pair ({i}, {j}) violates j <= h_{i} = {h.h[i - 1]}")


# -- descent sets ------------------------------------------------------------


def descent_to_graph(d: DescentSet) -> RestrictionGraph:
    edges = frozenset((i, i + 1) if i in d.positions else (i + 1, i) for i in range(1, d.n))
    return RestrictionGraph(d.n, edges)


def descent_set_of(sigma) -> DescentSet:
    v = as_permutation(sigma).values
    return DescentSet(len(v), frozenset(i for i in range(1, len(v)) if v[i - 1] > v[i]))


def division_of(d: DescentSet) -> Division:
    """Run lengths of the descent indicator; they sum to n - 1 (empty for n = 1)."""
    return Division(tuple(len(list(block)) for _, block in itertools.groupby(d.indicator())))


def descent_linf_closed_form(d: DescentSet) -> int:
    """n - 1 - min over: end runs, runs of length >= 2, sums of adjacent runs.

    With runs taken over indicator positions, the end runs give |R|+|R^-1|
    at vertices 1 and n, a run of length >= 2 gives it at its interior
    vertices, and two adjacent runs give it at the turning vertex between
    them.
    """
    runs = division_of(d).runs
    if not runs:
        return 0
    candidates = {runs[0], runs[-1]}
    candidates.update(r for r in runs if r >= 2)
    candidates.update(a + b for a, b in zip(runs, runs[1:]))
    return d.n - 1 - min(candidates)


def turning_points(d: DescentSet) -> list[int]:
    """0, the positions where the indicator switches between descent and ascent, then n.

    A switch between positions i and i+1 is recorded at i+1, the element at
    which the direction turns.
    """
    ind = d.indicator()
    inner = [i + 1 for i in range(1, len(ind)) if ind[i - 1] != ind[i]]
    return [0] + inner + [d.n]


def descent_kendall_closed_form(d: DescentSet) -> int:
    """Sum of (a_{i+1} - a_i)(n - a_{i+1} + 1) over consecutive turning points.

    Does not agree with the enumerated diameter; see ``scripts/audit.py``.
    """
    a = turning_points(d)
    return sum((a[i + 1] - a[i]) * (d.n - a[i + 1] + 1) for i in range(len(a) - 1))


# -- Hessenberg families -----------------------------------------------------


def h_inversion_set(sigma, h: HessenbergFunction) -> HInversionSet:
    v = as_permutation(sigma).values
    if len(v) != h.n:
        raise SizeMismatch(f"permutation has size {len(v)}, h has length {h.n}")
    return HInversionSet(h.n, frozenset((i, j) for i, j in h.allowed_pairs() if v[i - 1] > v[j - 1]))


def hessenberg_graph(h: HessenbergFunction, s: HInversionSet) -> RestrictionGraph:
    """Restriction graph whose family is exactly the permutations with Inv_h = s."""
    s.check_against(h)
    edges = frozenset((i, j) if (i, j) in s.pairs else (j, i) for i, j in h.allowed_pairs())
    return RestrictionGraph(h.n, edges)


def hessenberg_family(h: HessenbergFunction, s: HInversionSet,
                      limit: int = DEFAULT_LIMIT) -> list[Permutation]:
    """Every permutation whose h-inversion set is ``s``, lexicographically."""
    if h.n > limit:
        raise LimitExceeded(h.n, limit)
    s.check_against(h)
    allowed = [(i - 1, j - 1) for i, j in h.allowed_pairs()]
    target = s.pairs
    return [
        Permutation(p)
        for p in itertools.permutations(range(1, h.n + 1))
        if {(i + 1, j + 1) for i, j in allowed if p[i] > p[j]} == target
    ]


def hessenberg_families(h: HessenbergFunction, limit: int = DEFAULT_LIMIT) -> dict[frozenset, list[tuple[int, ...]]]:
    """Partition of S_n by h-inversion set (keys are pair sets, members lexicographic)."""
    if h.n > limit:
        raise LimitExceeded(h.n, limit)
    allowed = [(i - 1, j - 1) for i, j in h.allowed_pairs()]
    groups: dict[frozenset, list[tuple[int, ...]]] = {}
    for p in itertools.permutations(range(1, h.n + 1)):
        key = frozenset((i + 1, j + 1) for i, j in allowed if p[i] > p[j])
        groups.setdefault(key, []).append(p)
    return groups


def inversion_extremes(family) -> tuple[Permutation, Permutation]:
    """Unique members of maximal and minimal inversion number, as ``(x, omega)``."""
    lengths = [inversion_number(p) for p in family]
    hi, lo = max(lengths), min(lengths)
    maxima = [p for p, ell in zip(family, lengths) if ell == hi]
    minima = [p for p, ell in zip(family, lengths) if ell == lo]
    if len(maxima) > 1 or len(minima) > 1:
        raise NonUniqueExtremes(maxima, minima)
    return as_permutation(maxima[0]), as_permutation(minima[0])


def hessenberg_kendall_diameter(h: HessenbergFunction, s: HInversionSet,
                                limit: int = DEFAULT_LIMIT) -> int:
    """ell(x) - ell(omega) for the inversion-number extremes x, omega of the family.

    Raises NotAdmissible for an empty family and NonUniqueExtremes when an
    extreme is shared; a single-member family has diameter 0.
    """
    family = hessenberg_family(h, s, limit)
    if not family:
        raise NotAdmissible(f"no permutation has {str(h)}-inversion set {sorted(s.pairs)}")
    if len(family) == 1:
        return 0
    x, omega = inversion_extremes(family)
    return inversion_number(x) - inversion_number(omega)
