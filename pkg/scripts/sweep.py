"""Compare the constructions against brute force on seeded random graphs.

    python3 scripts/sweep.py --count 2000 --n-min 2 --n-max 7 --seed 1
"""

import argparse
import time
from collections import Counter

from permbound.extremal import (
    dimension_at_most_two,
    kendall_extremal_pair,
    kendall_upper_bound,
    linf_diameter_bound,
    linf_extremal_pair,
)
from permbound.oracle import brute_diameter, brute_dimension_le2, count_admissible, random_dags
from permbound.permutation import kendall_distance, linf_distance


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    tally = Counter()
    start = time.perf_counter()
    for g in random_dags(args.count, (args.n_min, args.n_max), seed=args.seed):
        if count_admissible(g) < 2:
            tally["trivial"] += 1
            continue
        linf_ok = linf_distance(*linf_extremal_pair(g)) == linf_diameter_bound(g) \
            == brute_diameter(g, "linf")[0]
        tally["linf ok" if linf_ok else "linf MISMATCH"] += 1
        realizer = dimension_at_most_two(g)
        if (realizer is not None) != brute_dimension_le2(g):
            tally["dimension MISMATCH"] += 1
        oracle = brute_diameter(g, "kendall")[0]
        if realizer is None:
            tally["dim>=3, kendall gap %d" % (kendall_upper_bound(g) - oracle)] += 1
        elif kendall_distance(*kendall_extremal_pair(g)) == oracle == kendall_upper_bound(g):
            tally["kendall ok"] += 1
        else:
            tally["kendall MISMATCH"] += 1
    for key, value in sorted(tally.items()):
        print(f"{key}: {value}")
    print(f"done in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
