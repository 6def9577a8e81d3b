"""Gray-ordered enumeration of factor-avoiding words.

The enumeration tree extends a prefix one symbol at a time.  A prefix of
even parity scans its children 0, 1, ..., q-1; one of odd parity scans
them q-1, ..., 0 (parity = digit sum, plus the nonzero count under the
dual rule).  Children that would complete the forbidden factor — spotted
in O(1) through the match automaton — are skipped.  Reading the leaves
left to right yields exactly the avoiding words sorted by the matching
reflected order, and for well-behaved factors adjacent leaves differ
only in a small window (see :mod:`factorgray.classification`).

For factors whose sorted list is *not* Gray, :func:`plan` swaps in a
rescue pipeline: enumerate a relabelled / reversed companion factor
whose list is Gray, then map each word back (a bijection that preserves
positions of change, hence the bounds).  The binary factors 01 and 10
get a closed-form staircase list instead of a tree at all.

The planner also exposes enough bookkeeping for honest benchmarking:
:func:`count_avoiding` and :func:`node_count` are transfer-matrix
computations that agree exactly with stream lengths and visited-node
counters of the real traversal.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._kernel import fill_tree
from .automaton import transition_table
from .classification import GrayVerdict, Strategy, gray_verdict, phi_pair, swap_symbols
from .words import (
    DEFAULT_WORD_BUDGET,
    BudgetExceeded,
    Order,
    ParityRule,
    Word,
    check_alphabet,
    check_factor,
    natural_order,
    parity,
    parity_rule_for,
)


class MapKind(str, Enum):
    IDENTITY = "identity"
    SWAP = "swap"
    REVERSE = "reverse"
    REVERSE_COMPLEMENT = "reverse-complement"


@dataclass(frozen=True)
class WordMap:
    """A per-word transformation applied after base enumeration."""

    kind: MapKind
    q: int
    pair: tuple[int, int] | None = None

    def apply(self, word: Word) -> Word:
        if self.kind is MapKind.IDENTITY:
            return word
        if self.kind is MapKind.SWAP:
            assert self.pair is not None
            return swap_symbols(word, self.pair)
        if self.kind is MapKind.REVERSE:
            return tuple(reversed(word))
        return tuple(self.q - 1 - a for a in reversed(word))

    def apply_array(self, arr: np.ndarray) -> np.ndarray:
        if self.kind is MapKind.IDENTITY:
            return arr
        if self.kind is MapKind.SWAP:
            assert self.pair is not None
            a, b = self.pair
            perm = np.arange(self.q, dtype=arr.dtype)
            perm[a], perm[b] = b, a
            return perm[arr]
        if self.kind is MapKind.REVERSE:
            return arr[:, ::-1]
        return (self.q - 1 - arr)[:, ::-1]


def apply_word_map(words: Iterable[Word], word_map: WordMap) -> Iterator[Word]:
    """Map a stream of words through a :class:`WordMap`."""
    return (word_map.apply(w) for w in words)


@dataclass(frozen=True)
class GenerationRequest:
    """What the caller asked for (None fields mean "choose for me")."""

    q: int
    n: int
    factor: Word | None = None
    order: Order | None = None
    strategy: Strategy | None = None


@dataclass(frozen=True)
class GenerationPlan:
    """Fully resolved recipe for one enumeration run.

    ``effective_factor`` is what the tree actually avoids; ``post_map``
    turns base words into emitted words.  ``is_gray`` / ``d`` / ``e``
    are the claims for the *emitted* stream (None = no claim), while
    ``verdict`` retains the natural-order analysis of the requested
    factor for reporting.
    """

    q: int
    n: int
    factor: Word | None
    order: Order
    parity_rule: ParityRule
    strategy: Strategy
    effective_factor: Word | None
    post_map: WordMap
    is_gray: bool | None
    d: int | None
    e: int | None
    verdict: GrayVerdict | None


_CHAIN_BINARY = {"zeros-then-one", "ones-then-zero"}


def _binary_chain(f: Word) -> str | None:
    ell = len(f)
    if ell >= 2 and f == (0,) * (ell - 1) + (1,):
        return "zeros-then-one"
    if ell >= 2 and f == (1,) * (ell - 1) + (0,):
        return "ones-then-zero"
    return None


def plan(request: GenerationRequest) -> GenerationPlan:
    """Resolve order, strategy, effective factor and claims for a run."""
    q = check_alphabet(request.q)
    n = request.n
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"word length must be a non-negative int, got {n!r}")

    if request.factor is None:
        if request.strategy not in (None, Strategy.DIRECT):
            raise ValueError("strategies other than direct need a factor")
        order = request.order or natural_order(q)
        if order is Order.RGC:
            is_gray, d, e = True, 1, 1
        elif q % 2 == 1:
            is_gray, d, e = True, 2, 1
        else:
            is_gray, d, e = None, None, None
        return GenerationPlan(
            q=q, n=n, factor=None, order=order,
            parity_rule=parity_rule_for(order), strategy=Strategy.DIRECT,
            effective_factor=None, post_map=WordMap(MapKind.IDENTITY, q),
            is_gray=is_gray, d=d, e=e, verdict=None,
        )

    f = check_factor(request.factor, q)
    verdict = gray_verdict(f, q)
    strategy = request.strategy or verdict.strategy
    identity = WordMap(MapKind.IDENTITY, q)

    if strategy is Strategy.REVCOMP and q == 2 and f in ((0, 1), (1, 0)):
        strategy = Strategy.STAIRCASE  # the detour degenerates to the closed form

    if strategy is Strategy.DIRECT:
        order = request.order or verdict.order
        claims = order is verdict.order
        return GenerationPlan(
            q=q, n=n, factor=f, order=order,
            parity_rule=parity_rule_for(order), strategy=strategy,
            effective_factor=f, post_map=identity,
            is_gray=verdict.natural_is_gray if claims else None,
            d=verdict.natural_d if claims else None,
            e=verdict.natural_e if claims else None,
            verdict=verdict,
        )

    if strategy is Strategy.STAIRCASE:
        if q != 2 or f not in ((0, 1), (1, 0)):
            raise ValueError("the staircase emitter only handles the binary factors 01 and 10")
        return GenerationPlan(
            q=q, n=n, factor=f, order=request.order or Order.RGC,
            parity_rule=ParityRule.DIGIT_SUM, strategy=strategy,
            effective_factor=f, post_map=identity,
            is_gray=True, d=1, e=1, verdict=verdict,
        )

    if strategy is Strategy.PHI:
        pair = phi_pair(f, q)  # rejects factors ending in a middle symbol
        effective = swap_symbols(f, pair)
        post = WordMap(MapKind.SWAP, q, pair)
    elif strategy is Strategy.REVCOMP:
        chain = _binary_chain(f) if q == 2 else None
        if chain == "ones-then-zero":
            effective = tuple(reversed(f))
            post = WordMap(MapKind.REVERSE, q)
        else:
            effective = tuple(q - 1 - a for a in reversed(f))
            post = WordMap(MapKind.REVERSE_COMPLEMENT, q)
    else:  # pragma: no cover - enum is exhaustive
        raise ValueError(f"unknown strategy {strategy!r}")

    base = gray_verdict(effective, q)
    order = request.order or base.order
    claims = order is base.order
    return GenerationPlan(
        q=q, n=n, factor=f, order=order,
        parity_rule=parity_rule_for(order), strategy=strategy,
        effective_factor=effective, post_map=post,
        is_gray=base.natural_is_gray if claims else None,
        d=base.natural_d if claims else None,
        e=base.natural_e if claims else None,
        verdict=verdict,
    )


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _automaton_for(plan_: GenerationPlan) -> tuple[list[list[int]], int]:
    """Transition table and dead state for the plan's base tree."""
    if plan_.effective_factor is None:
        return [[0] * plan_.q], -1
    table = transition_table(plan_.effective_factor, plan_.q)
    return table, len(plan_.effective_factor)


def _staircase(plan_: GenerationPlan) -> Iterator[Word]:
    n = plan_.n
    if plan_.factor == (1, 0):
        for i in range(n + 1):
            yield (0,) * (n - i) + (1,) * i
    else:  # factor 01
        for i in range(n + 1):
            yield (1,) * i + (0,) * (n - i)


def _iter_tree(q: int, n: int, table: Sequence[Sequence[int]], dead: int,
               dual_flip: bool) -> Iterator[Word]:
    """Resumable explicit-stack walk; visit order matches the recursion."""
    if n == 0:
        yield ()
        return
    word = [0] * n
    cursor = [0] * n
    dirs = [0] * n
    states = [0] * n
    depth = 0
    while depth >= 0:
        idx = cursor[depth]
        if idx >= q:
            depth -= 1
            continue
        cursor[depth] = idx + 1
        j = idx if dirs[depth] == 0 else q - 1 - idx
        h = table[states[depth]][j]
        if h == dead:
            continue
        word[depth] = j
        m = (dirs[depth] + j) & 1
        if dual_flip and j != 0:
            m ^= 1
        if depth + 1 == n:
            yield tuple(word)
        else:
            depth += 1
            cursor[depth] = 0
            dirs[depth] = m
            states[depth] = h


def iter_words(plan_: GenerationPlan) -> Iterator[Word]:
    """Lazily yield the plan's emitted words."""
    if plan_.strategy is Strategy.STAIRCASE:
        yield from _staircase(plan_)
        return
    table, dead = _automaton_for(plan_)
    base = _iter_tree(plan_.q, plan_.n, table, dead,
                      plan_.parity_rule is ParityRule.DIGIT_SUM_NONZERO)
    if plan_.post_map.kind is MapKind.IDENTITY:
        yield from base
    else:
        yield from apply_word_map(base, plan_.post_map)


def generate(q: int, n: int, factor: Sequence[int] | None = None, *,
             order: Order | None = None,
             strategy: Strategy | None = None) -> Iterator[Word]:
    """Convenience wrapper: plan and stream in one call."""
    f = tuple(factor) if factor is not None else None
    return iter_words(plan(GenerationRequest(q=q, n=n, factor=f, order=order,
                                             strategy=strategy)))


def generate_list(q: int, n: int, factor: Sequence[int] | None = None, *,
                  order: Order | None = None,
                  strategy: Strategy | None = None) -> list[Word]:
    return list(generate(q, n, factor, order=order, strategy=strategy))


def _word_dtype(q: int) -> type:
    return np.uint8 if q <= 256 else np.uint32


def generate_array_with_stats(plan_: GenerationPlan, *,
                              budget: int | None = None) -> tuple[np.ndarray, int]:
    """Emit the whole stream as a (count, n) array; also return the
    number of base-tree nodes visited (= emitted count for the
    staircase, which does no tree work)."""
    total = count_avoiding(plan_.q, plan_.n, plan_.effective_factor)
    limit = DEFAULT_WORD_BUDGET if budget is None else budget
    if total > limit:
        raise BudgetExceeded(f"{total} words exceed budget {limit}")
    n = plan_.n
    if plan_.strategy is Strategy.STAIRCASE:
        i = np.arange(n + 1)[:, None]
        k = np.arange(n)[None, :]
        if plan_.factor == (1, 0):
            arr = (k >= n - i).astype(_word_dtype(plan_.q))
        else:
            arr = (k < i).astype(_word_dtype(plan_.q))
        return arr, total
    out = np.empty((total, n), dtype=_word_dtype(plan_.q))
    if n == 0:
        return out, 1
    table, dead = _automaton_for(plan_)
    count, nodes = fill_tree(
        np.asarray(table, dtype=np.int64), dead, plan_.q, n,
        1 if plan_.parity_rule is ParityRule.DIGIT_SUM_NONZERO else 0, out,
    )
    assert count == total, "transfer-matrix count disagrees with traversal"
    return plan_.post_map.apply_array(out), nodes


def generate_array(plan_: GenerationPlan, *, budget: int | None = None) -> np.ndarray:
    return generate_array_with_stats(plan_, budget=budget)[0]


# ---------------------------------------------------------------------------
# Counting without enumerating
# ---------------------------------------------------------------------------


def _prefix_counts(q: int, n: int, factor: Word | None) -> list[int]:
    """c_k = number of factor-free words of length k, for k = 0..n
    (exact big-int transfer-matrix iteration)."""
    if factor is None:
        return [q**k for k in range(n + 1)]
    table = transition_table(factor, q)
    dead = len(factor)
    vec = [0] * len(table)
    vec[0] = 1
    counts = [1]
    for _ in range(n):
        nxt = [0] * len(table)
        for state, weight in enumerate(vec):
            if weight:
                row = table[state]
                for j in range(q):
                    h = row[j]
                    if h != dead:
                        nxt[h] += weight
        vec = nxt
        counts.append(sum(vec))
    return counts


def count_avoiding(q: int, n: int, factor: Sequence[int] | None = None) -> int:
    """|length-n words avoiding the factor| (big-int exact)."""
    check_alphabet(q)
    if n < 0:
        raise ValueError("n must be >= 0")
    f = check_factor(factor, q) if factor is not None else None
    return _prefix_counts(q, n, f)[n]


def node_count(plan_: GenerationPlan) -> int:
    """Nodes the plan's traversal visits (root + all factor-free
    prefixes of the effective factor); the staircase emitter is charged
    one node per word."""
    if plan_.strategy is Strategy.STAIRCASE:
        return plan_.n + 1
    return sum(_prefix_counts(plan_.q, plan_.n, plan_.effective_factor))


# ---------------------------------------------------------------------------
# Extreme words
# ---------------------------------------------------------------------------


def extreme_word(q: int, n: int, factor: Sequence[int] | None = None, *,
                 prefix: Sequence[int] = (), which: str = "first",
                 order: Order | None = None) -> Word:
    """First or last length-n continuation of ``prefix`` in the sorted
    avoiding list (natural/forced order unless overridden).

    Greedy descent: at each position take the first (or last) symbol in
    scan order whose automaton step stays alive — sound because every
    live state keeps at least q-1 live outgoing edges.
    """
    check_alphabet(q)
    if which not in ("first", "last"):
        raise ValueError("which must be 'first' or 'last'")
    f = check_factor(factor, q) if factor is not None else None
    if order is None:
        order = gray_verdict(f, q).order if f is not None else natural_order(q)
    rule = parity_rule_for(order)
    p = tuple(prefix)
    if len(p) > n:
        raise ValueError("prefix longer than the requested word")
    if f is not None:
        table, dead = transition_table(f, q), len(f)
    else:
        table, dead = [[0] * q], -1
    state = 0
    for a in p:
        if not 0 <= a < q:
            raise ValueError(f"prefix symbol {a!r} outside 0..{q - 1}")
        state = table[state][a]
        if state == dead:
            raise ValueError("prefix already contains the factor")
    d = parity(p, rule)
    out = list(p)
    for _ in range(n - len(p)):
        scan = range(q) if d == 0 else range(q - 1, -1, -1)
        if which == "last":
            scan = reversed(list(scan))
        for j in scan:
            h = table[state][j]
            if h != dead:
                break
        else:  # pragma: no cover - unreachable, see docstring
            raise RuntimeError("live state with no live continuation")
        out.append(j)
        state = h
        d = (d + j) & 1
        if rule is ParityRule.DIGIT_SUM_NONZERO and j != 0:
            d ^= 1
    return tuple(out)
