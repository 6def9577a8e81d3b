#!/usr/bin/env python3
"""Measure tree work per emitted word across word lengths.

For each factor in a sample this prints nodes-visited per emitted word
(analytic, from the prefix-count recurrence) over an n-grid, plus an
optional wall-clock measurement of the actual traversal.  A flat ratio
as n grows is the constant-amortized-time signature; the chain factor
01 at q=2 is included as the canonical counterexample where the direct
walk does quadratic work until the staircase rescue kicks in.

Usage:
    python3 scripts/bench_tree_work.py
    python3 scripts/bench_tree_work.py --n-grid 6:24:6 --measure
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from factorgray import (
    GenerationRequest,
    Strategy,
    count_avoiding,
    generate_array_with_stats,
    node_count,
    plan,
)
from factorgray.words import parse_word

DEFAULT_SAMPLE = [
    (2, "11", None),
    (2, "011", None),
    (2, "01", "direct"),
    (2, "01", "revcomp"),
    (2, "001", "direct"),
    (2, "001", "revcomp"),
    (3, "00", None),
    (3, "102", None),
    (4, "130", None),
    (4, "2300", None),
]


@dataclass
class BenchConfig:
    n_grid: tuple[int, ...] = (6, 12, 18)
    measure: bool = False
    max_words: int = 10**7
    sample: list[tuple[int, str, str | None]] = field(default_factory=lambda: DEFAULT_SAMPLE)


def parse_grid(text: str) -> tuple[int, ...]:
    start, stop, step = (int(p) for p in text.split(":"))
    return tuple(range(start, stop + 1, step))


def bench_one(config: BenchConfig, q: int, factor_text: str, strategy_text: str | None) -> None:
    factor = parse_word(factor_text, q)
    strategy = Strategy(strategy_text) if strategy_text else None
    label = f"q={q} factor={factor_text} strategy={strategy_text or 'auto'}"
    cells = []
    for n in config.n_grid:
        p = plan(GenerationRequest(q, n, factor, strategy=strategy))
        words = count_avoiding(q, n, p.effective_factor)
        nodes = node_count(p)
        cell = f"n={n} ratio={nodes / words:.3f}"
        if config.measure and words <= config.max_words:
            t0 = time.perf_counter()
            _, measured = generate_array_with_stats(p, budget=config.max_words)
            dt = time.perf_counter() - t0
            assert measured == nodes
            cell += f" ({words / max(dt, 1e-9):,.0f} words/s)"
        cells.append(cell)
    print(f"{label:42s} " + "  ".join(cells))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-grid", type=parse_grid, default=(6, 12, 18),
                        help="start:stop:step, stop inclusive (default 6:18:6)")
    parser.add_argument("--measure", action="store_true",
                        help="also time the actual traversal per instance")
    parser.add_argument("--max-words", type=int, default=10**7)
    args = parser.parse_args()
    config = BenchConfig(n_grid=args.n_grid, measure=args.measure, max_words=args.max_words)
    for q, factor_text, strategy_text in config.sample:
        bench_one(config, q, factor_text, strategy_text)


if __name__ == "__main__":
    main()
