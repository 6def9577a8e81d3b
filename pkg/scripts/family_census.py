#!/usr/bin/env python3
"""Census of factor classifications over a whole alphabet.

Walks every factor of length <= max-len over {0..q-1}, tallies families
and strategies, and for each factor whose natural listing is not Gray
reports the smallest word length at which an adjacent pair actually
breaks the 3-Gray bound (found by brute force).

Usage:
    python3 scripts/family_census.py --q 4
    python3 scripts/family_census.py --q 3 --max-len 5 --show-members
"""

from __future__ import annotations

import argparse
import itertools
from collections import Counter
from dataclasses import dataclass

from factorgray import classify, smallest_counterexample_n
from factorgray.words import format_word


@dataclass
class CensusConfig:
    q: int = 4
    max_len: int = 4
    show_members: bool = False
    n_cap: int = 12


def census(config: CensusConfig) -> None:
    q = config.q
    families: Counter[str] = Counter()
    strategies: Counter[str] = Counter()
    rescued = []
    for ell in range(1, config.max_len + 1):
        for factor in itertools.product(range(q), repeat=ell):
            rec = classify(factor, q)
            families[rec.family.value] += 1
            strategies[rec.verdict.strategy.value] += 1
            if rec.verdict.natural_is_gray is False:
                rescued.append((factor, rec))

    total = sum(families.values())
    print(f"q={q}, factors of length 1..{config.max_len}: {total}")
    print("\nfamilies:")
    for name, count in families.most_common():
        print(f"  {name:18s} {count:6d}  ({count / total:.1%})")
    print("\nstrategies:")
    for name, count in strategies.most_common():
        print(f"  {name:18s} {count:6d}  ({count / total:.1%})")

    print(f"\nnatural listing not Gray for {len(rescued)} factors:")
    for factor, rec in rescued:
        broken_at = smallest_counterexample_n(q, factor, n_cap=config.n_cap)
        period = ",".join(format_word(p, q) for p in rec.nonzero_periods) or "-"
        print(
            f"  {format_word(factor, q):12s} family={rec.family.value:16s} "
            f"period={period:8s} first-break n={broken_at}"
        )
        if config.show_members:
            image = rec.verdict
            print(f"    rescue: {image.strategy.value} -> d={image.d} e={image.e}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--q", type=int, default=4)
    parser.add_argument("--max-len", type=int, default=4)
    parser.add_argument("--n-cap", type=int, default=12,
                        help="largest word length tried in the break search")
    parser.add_argument("--show-members", action="store_true",
                        help="also print the rescue plan per factor")
    args = parser.parse_args()
    census(CensusConfig(q=args.q, max_len=args.max_len,
                        show_members=args.show_members, n_cap=args.n_cap))


if __name__ == "__main__":
    main()
