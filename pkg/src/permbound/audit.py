"""Exhaustive comparisons of the family closed forms against enumeration.

Each audit returns plain dicts so the results can be dumped as JSON
findings reports (see ``scripts/audit.py``).
"""

from __future__ import annotations

from .errors import NonUniqueExtremes
from .extremal import dimension_at_most_two, kendall_upper_bound, linf_diameter_bound
from .families import (
    DescentSet,
    HessenbergFunction,
    HInversionSet,
    descent_kendall_closed_form,
    descent_linf_closed_form,
    descent_to_graph,
    division_of,
    hessenberg_families,
    hessenberg_graph,
    inversion_extremes,
    turning_points,
)
from .oracle import brute_diameter, max_pairwise_xor_popcount, pair_masks
from .permutation import inversion_number


def descent_linf_rows(n_max: int, oracle_max: int = 7) -> list[dict]:
    rows = []
    for n in range(1, n_max + 1):
        for d in DescentSet.all(n):
            g = descent_to_graph(d)
            row = {
                "n": n,
                "descents": sorted(d.positions),
                "runs": list(division_of(d).runs),
                "closed_form": descent_linf_closed_form(d),
                "generic": linf_diameter_bound(g),
            }
            if n <= oracle_max:
                row["oracle"], _ = brute_diameter(g, "linf", limit=oracle_max)
            rows.append(row)
    return rows


def descent_kendall_rows(n_max: int) -> list[dict]:
    rows = []
    for n in range(1, n_max + 1):
        for d in DescentSet.all(n):
            g = descent_to_graph(d)
            oracle, _ = brute_diameter(g, "kendall", limit=n_max)
            rows.append({
                "n": n,
                "descents": sorted(d.positions),
                "turning_points": turning_points(d),
                "closed_form": descent_kendall_closed_form(d),
                "oracle": oracle,
                "incomparable_pairs": kendall_upper_bound(g),
                "dim_le_2": dimension_at_most_two(g) is not None,
            })
    return rows


def hessenberg_rows(n_max: int) -> list[dict]:
    """One row per (h, S) family with at least two members."""
    rows = []
    for n in range(1, n_max + 1):
        for h in HessenbergFunction.all(n):
            for pairs, family in hessenberg_families(h, limit=n_max).items():
                if len(family) < 2:
                    continue
                oracle, _ = max_pairwise_xor_popcount(pair_masks(family, n))
                row = {
                    "n": n,
                    "h": list(h.h),
                    "S": sorted(pairs),
                    "size": len(family),
                    "oracle": oracle,
                    "dim_le_2": dimension_at_most_two(hessenberg_graph(h, HInversionSet(n, pairs)))
                    is not None,
                }
                try:
                    x, omega = inversion_extremes(family)
                except NonUniqueExtremes as exc:
                    row.update(unique=False, n_max_members=len(exc.maxima),
                               n_min_members=len(exc.minima))
                else:
                    row.update(unique=True, x=list(x.values), omega=list(omega.values),
                               length_gap=inversion_number(x) - inversion_number(omega))
                row["matches"] = row["unique"] and row["length_gap"] == oracle
                rows.append(row)
    return rows
