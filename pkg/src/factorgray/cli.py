"""Command-line front end.

Subcommands
-----------
generate   stream the Gray-ordered avoiding words, one per line
classify   report family / zero-tail / Gray verdict for a factor
count      transfer-matrix cardinality (no enumeration)
verify     run a stream through the brute-force checkers
bench      nodes-per-word table across a grid of lengths

Exit codes: 0 success, 1 a verification found violations, 2 invalid
input, 3 the word budget was exceeded.  The default budget (10**7
words) can be overridden with --max-words or the FACTORGRAY_MAX_WORDS
environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import oracle
from .classification import Strategy, classify
from .generation import (
    GenerationRequest,
    count_avoiding,
    generate_array_with_stats,
    iter_words,
    node_count,
    plan,
)
from .words import (
    DEFAULT_WORD_BUDGET,
    BudgetExceeded,
    Order,
    format_word,
    parse_word,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

ENV_BUDGET = "FACTORGRAY_MAX_WORDS"


def _budget_default() -> int:
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return DEFAULT_WORD_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_BUDGET}={raw!r} is not an integer") from None


def _order_arg(text: str) -> Order | None:
    return None if text == "auto" else Order(text)


def _strategy_arg(text: str) -> Strategy | None:
    return None if text == "auto" else Strategy(text)


def _tri(flag: bool | None) -> str:
    return "unknown" if flag is None else ("yes" if flag else "no")


def _num(v: int | None) -> str:
    return "-" if v is None else str(v)


def _fmt_factor(factor, q: int) -> str:
    if factor is None:
        return "-"
    return format_word(factor, q, "packed" if q <= 10 else "separated")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorgray",
        description="Gray-code enumeration of q-ary words avoiding one forbidden factor",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, factor_required=False, with_n=True):
        p.add_argument("--q", type=int, required=True, help="alphabet size")
        if with_n:
            p.add_argument("--n", type=int, required=True, help="word length")
        p.add_argument("--factor", type=str, required=factor_required,
                       default=None, help="forbidden factor (packed digits or comma-separated)")

    g = sub.add_parser("generate", help="emit the avoiding words in Gray order")
    common(g)
    g.add_argument("--order", choices=["auto", "rgc", "dual"], default="auto")
    g.add_argument("--strategy", choices=["auto", "direct", "phi", "revcomp"], default="auto")
    g.add_argument("--format", dest="fmt", choices=["auto", "packed", "separated"], default="auto")
    g.add_argument("--max-words", type=int, default=None)
    g.add_argument("--no-header", action="store_true")

    c = sub.add_parser("classify", help="structural report for a factor")
    common(c, factor_required=True, with_n=False)
    c.add_argument("--dump-automaton", action="store_true")

    n = sub.add_parser("count", help="number of avoiding words")
    common(n)
    n.add_argument("--max-words", type=int, default=None)

    v = sub.add_parser("verify", help="check the emitted stream against the oracle")
    common(v)
    v.add_argument("--order", choices=["auto", "rgc", "dual"], default="auto")
    v.add_argument("--strategy", choices=["auto", "direct", "phi", "revcomp"], default="auto")
    v.add_argument("--expect-d", type=int, default=None,
                   help="override the claimed adjacent-pair hamming bound")
    v.add_argument("--expect-e", type=int, default=None,
                   help="override the claimed adjacent-pair span bound")
    v.add_argument("--deep", action="store_true",
                   help="also compare against the full brute-force list")
    v.add_argument("--max-words", type=int, default=None)

    b = sub.add_parser("bench", help="nodes-per-word across a length grid")
    common(b, factor_required=True, with_n=False)
    b.add_argument("--n-grid", type=str, default="6:18:3",
                   help="start:stop:step, stop inclusive")
    b.add_argument("--strategy", choices=["auto", "direct", "phi", "revcomp"], default="auto")
    b.add_argument("--measure", action="store_true",
                   help="run the traversal instead of the transfer-matrix count")
    b.add_argument("--max-words", type=int, default=None)
    return parser


def _plan_from_args(args, n: int):
    factor = parse_word(args.factor, args.q) if args.factor is not None else None
    return plan(GenerationRequest(
        q=args.q, n=n, factor=factor,
        order=_order_arg(getattr(args, "order", "auto")),
        strategy=_strategy_arg(getattr(args, "strategy", "auto")),
    ))


def _header(p) -> str:
    return (
        f"# factorgray q={p.q} n={p.n} factor={_fmt_factor(p.factor, p.q)}"
        f" order={p.order.value} strategy={p.strategy.value}"
        f" gray={_tri(p.is_gray)} d={_num(p.d)} e={_num(p.e)}"
        f" count={count_avoiding(p.q, p.n, p.effective_factor)}"
    )


def _cmd_generate(args) -> int:
    budget = args.max_words if args.max_words is not None else _budget_default()
    p = _plan_from_args(args, args.n)
    total = count_avoiding(p.q, p.n, p.effective_factor)
    if total > budget:
        print(f"budget exceeded: {total} words > {budget}", file=sys.stderr)
        return EXIT_BUDGET
    style = args.fmt
    if style == "packed" and args.q > 10:
        print("packed format needs q <= 10", file=sys.stderr)
        return EXIT_INVALID
    out = sys.stdout
    if not args.no_header:
        out.write(_header(p) + "\n")
    for w in iter_words(p):
        out.write(format_word(w, p.q, style) + "\n")
    return EXIT_OK


def _cmd_classify(args) -> int:
    factor = parse_word(args.factor, args.q)
    info = classify(factor, args.q)
    v = info.verdict
    lines = [
        f"factor: {_fmt_factor(factor, args.q)}",
        f"q: {args.q}",
        f"family: {info.family.value}",
        f"family-param: {_num(info.family_param)}",
        f"zero-suffix-len: {info.zero_suffix_len}",
        f"induces-zero-tails: {_tri(info.induces_zero_tails)}",
        "nonzero-periods: "
        + (";".join(_fmt_factor(p, args.q) for p in info.nonzero_periods) or "-"),
        f"order: {v.order.value}",
        f"parity-rule: {v.parity_rule.value}",
        f"natural-gray: {_tri(v.natural_is_gray)}",
        f"natural-d: {_num(v.natural_d)}",
        f"natural-e: {_num(v.natural_e)}",
        f"strategy: {v.strategy.value}",
        f"emitted-d: {_num(v.d)}",
        f"emitted-e: {_num(v.e)}",
    ]
    print("\n".join(lines))
    if args.dump_automaton:
        from .automaton import FactorAutomaton

        auto = FactorAutomaton.build(factor, args.q)
        print("border: " + " ".join(str(x) for x in auto.border))
        for i, row in enumerate(auto.table):
            print(f"state {i}: " + " ".join(str(x) for x in row))
    return EXIT_OK


def _cmd_count(args) -> int:
    factor = parse_word(args.factor, args.q) if args.factor is not None else None
    total = count_avoiding(args.q, args.n, factor)
    print(total)
    # Cross-check the closed count against an actual enumeration when it
    # fits the budget; a mismatch would be a genuine bug, so fail loudly.
    budget = args.max_words if args.max_words is not None else _budget_default()
    if total <= budget:
        arr, _ = generate_array_with_stats(
            plan(GenerationRequest(q=args.q, n=args.n, factor=factor)), budget=budget
        )
        streamed = len(arr)
        print(f"stream length: {streamed}", file=sys.stderr)
        if streamed != total:
            print("violation: stream length disagrees with counted value", file=sys.stderr)
            return EXIT_VIOLATION
    return EXIT_OK


def _cmd_verify(args) -> int:
    budget = args.max_words if args.max_words is not None else _budget_default()
    p = _plan_from_args(args, args.n)
    arr, _ = generate_array_with_stats(p, budget=budget)
    claimed_d = args.expect_d if args.expect_d is not None else p.d
    claimed_e = args.expect_e if args.expect_e is not None else p.e
    check_pm1 = (
        p.strategy is Strategy.DIRECT
        and p.is_gray is True
        and (p.factor is None or p.factor[-1] in (0, p.q - 1))
    )
    if args.deep and p.q**p.n > budget:
        print(f"budget exceeded: --deep needs q^n = {p.q**p.n} <= {budget}", file=sys.stderr)
        return EXIT_BUDGET
    report = oracle.verify(
        map(tuple, arr.tolist()), p.q, p.n,
        factor=p.factor, order=p.order,
        claimed_d=claimed_d, claimed_e=claimed_e,
        check_sorted=p.strategy is Strategy.DIRECT,
        check_complete=args.deep,
        check_pm1=check_pm1,
        budget=budget,
    )
    print(_header(p))
    print(f"count: {report.count}")
    print(f"avoids-factor: {_tri(report.avoids_factor)}")
    print(f"all-distinct: {_tri(report.all_distinct)}")
    print(f"sorted: {_tri(report.sorted_ok)}")
    print(f"complete: {_tri(report.complete)}")
    print(f"max-hamming: {report.max_hamming} (claimed {_num(claimed_d)})")
    print(f"max-span: {report.max_span} (claimed {_num(claimed_e)})")
    print(f"leftmost-steps-pm1: {_tri(report.leftmost_steps_pm1)}")
    if report.problems:
        for problem in report.problems:
            print(f"violation: {problem}")
        return EXIT_VIOLATION
    print("ok")
    return EXIT_OK


def _cmd_bench(args) -> int:
    budget = args.max_words if args.max_words is not None else _budget_default()
    parts = args.n_grid.split(":")
    if len(parts) != 3:
        raise ValueError("--n-grid must be start:stop:step")
    start, stop, step = (int(x) for x in parts)
    if step <= 0 or start < 0 or stop < start:
        raise ValueError(f"bad --n-grid {args.n_grid!r}")
    first = _plan_from_args(args, start)
    print(
        f"# factorgray bench q={args.q} factor={_fmt_factor(first.factor, args.q)}"
        f" strategy={first.strategy.value} order={first.order.value}"
        f" mode={'measure' if args.measure else 'analytic'}"
    )
    for n in range(start, stop + 1, step):
        p = _plan_from_args(args, n)
        words = count_avoiding(p.q, n, p.effective_factor)
        if args.measure:
            if words > budget:
                print(f"budget exceeded at n={n}: {words} words > {budget}", file=sys.stderr)
                return EXIT_BUDGET
            _, nodes = generate_array_with_stats(p)
        else:
            nodes = node_count(p)
        ratio = nodes / words if words else float("inf")
        print(f"n={n} words={words} nodes={nodes} ratio={ratio:.3f}")
    return EXIT_OK


_COMMANDS = {
    "generate": _cmd_generate,
    "classify": _cmd_classify,
    "count": _cmd_count,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:  # downstream closed the stream (head, etc.)
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
