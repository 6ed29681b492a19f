#!/usr/bin/env python3
"""Near-median average-case experiment: sampling scheme vs exact selection.

With i = j = n/2 - n^(3/4), the Las Vegas sampling scheme needs about n
comparisons on average while selecting the exact median of the i+j+1 subset
(what the prefix scheme would have to do) averages about 1.5x the subset
size.  This script measures both sides over seeded trials and prints the
ratios.
"""

import argparse
import statistics

from mediocre.approx import a2_las_vegas
from mediocre.core import CountingComparator, Rng, generate_instance
from mediocre.exact import select_floyd_rivest


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=20_000)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--seed-base", type=int, default=0)
    args = parser.parse_args()

    n = args.n
    i = j = round(n / 2 - n**0.75)
    subset_size = i + j + 1
    print(f"n={n}, i=j={i}, subset={subset_size}, trials={args.trials}")

    lv = []
    fr = []
    for t in range(args.trials):
        seed = args.seed_base + t
        inst = generate_instance(n, i, j, seed)
        cmp = CountingComparator()
        out = a2_las_vegas(inst, None, cmp, Rng(seed ^ (1 << 63)))
        lv.append(out.comparisons)

        subset = inst.elements[:subset_size]
        cmp = CountingComparator()
        select_floyd_rivest(subset, (subset_size + 1) // 2, cmp, Rng(seed ^ (1 << 62)))
        fr.append(cmp.comparisons)

    lv_mean = statistics.mean(lv)
    fr_mean = statistics.mean(fr)
    print(f"sampling (las vegas): mean {lv_mean:10.1f} = {lv_mean / n:.4f} n   max {max(lv)}")
    print(f"exact median of subset: mean {fr_mean:8.1f} = {fr_mean / n:.4f} n   max {max(fr)}")
    print(f"savings: {(fr_mean - lv_mean) / fr_mean:.1%} fewer comparisons on average")


if __name__ == "__main__":
    main()
