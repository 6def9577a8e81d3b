"""Brute-force reference implementations and stream checkers.

Everything in this module is deliberately independent of the generation
machinery: factor containment is a naive window scan (no automaton), and
the two orders are realised through a closed-form ranking function
rather than the comparator or the generation recursion.  Agreement
between these routes and the real implementations is what the test
suite leans on.

The ranking view: a word is mapped to an integer by reading it left to
right while tracking the prefix parity p (digit sum for rgc, digit sum +
#nonzeros for dual).  Each symbol a contributes the digit ``a`` when the
parity so far is even and ``q-1-a`` when odd, Horner-accumulated in base
q.  This is a bijection onto 0..q^n-1 whose numeric order coincides with
the corresponding word order, so decoding 0, 1, 2, ... enumerates the
full sorted cube directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Iterable, Sequence

import numpy as np

from .words import (
    DEFAULT_WORD_BUDGET,
    BudgetExceeded,
    Order,
    Word,
    check_alphabet,
    check_factor,
    check_word,
    compare,
    natural_order,
)


def contains_factor(word: Sequence[int], factor: Sequence[int]) -> bool:
    """Naive containment scan (compares every window to the factor)."""
    w = tuple(word)
    f = tuple(factor)
    ell = len(f)
    if ell == 0:
        return True
    return any(w[i : i + ell] == f for i in range(len(w) - ell + 1))


def rank_key(word: Sequence[int], q: int, order: Order) -> int:
    """Position of the word in the sorted cube of its length (0-based)."""
    dual = order is Order.DUAL
    p = 0
    r = 0
    for a in word:
        digit = a if p & 1 == 0 else q - 1 - a
        r = r * q + digit
        p += a + (1 if dual and a != 0 else 0)
    return r


def unrank(r: int, q: int, n: int, order: Order) -> Word:
    """Inverse of :func:`rank_key` for words of length n."""
    if not 0 <= r < q**n:
        raise ValueError(f"rank {r} out of range for q={q}, n={n}")
    dual = order is Order.DUAL
    digits = []
    for _ in range(n):
        r, d = divmod(r, q)
        digits.append(d)
    digits.reverse()
    p = 0
    out = []
    for d in digits:
        a = d if p & 1 == 0 else q - 1 - d
        out.append(a)
        p += a + (1 if dual and a != 0 else 0)
    return tuple(out)


def brute_force_list(
    q: int,
    n: int,
    factor: Sequence[int] | None = None,
    order: Order | None = None,
    *,
    budget: int = DEFAULT_WORD_BUDGET,
) -> list[Word]:
    """All length-n words avoiding the factor, sorted by the comparator.

    Materialises the full cube, so it refuses to run past ``budget``
    words.  The sort uses the word-level comparison functions; see
    :func:`brute_force_array` for the independent closed-form route.
    """
    check_alphabet(q)
    if n < 0:
        raise ValueError("n must be >= 0")
    if order is None:
        order = natural_order(q)
    if q**n > budget:
        raise BudgetExceeded(f"q^n = {q**n} exceeds budget {budget}")
    f = check_factor(factor, q) if factor is not None else None
    words: Iterable[Word] = itertools.product(range(q), repeat=n)
    if f is not None:
        words = (w for w in words if not contains_factor(w, f))
    return sorted(words, key=cmp_to_key(lambda s, t: compare(s, t, order)))


# ---------------------------------------------------------------------------
# Vectorised route (used for the large equivalence sweeps)
# ---------------------------------------------------------------------------


def decode_ranks(ranks: np.ndarray, q: int, n: int, order: Order) -> np.ndarray:
    """Vectorised :func:`unrank` over an int64 rank array; returns a
    (len(ranks), n) symbol matrix."""
    dual = order is Order.DUAL
    dtype = np.uint8 if q <= 256 else np.uint32
    out = np.empty((len(ranks), n), dtype=dtype)
    p = np.zeros(len(ranks), dtype=np.int64)
    for k in range(n):
        scale = q ** (n - 1 - k)
        digit = (ranks // scale) % q
        sym = np.where(p & 1 == 0, digit, q - 1 - digit)
        out[:, k] = sym
        p += sym
        if dual:
            p += sym != 0
    return out


def containment_mask(words2d: np.ndarray, factor: Word, q: int) -> np.ndarray:
    """Boolean mask of rows that contain the factor (rolling window codes)."""
    rows, n = words2d.shape
    ell = len(factor)
    if ell > n:
        return np.zeros(rows, dtype=bool)
    code = 0
    for a in factor:
        code = code * q + int(a)
    drop = q**ell
    acc = np.zeros(rows, dtype=np.int64)
    hit = np.zeros(rows, dtype=bool)
    for k in range(n):
        acc *= q
        acc += words2d[:, k]
        if k >= ell:
            acc -= words2d[:, k - ell].astype(np.int64) * drop
        if k >= ell - 1:
            hit |= acc == code
    return hit


def brute_force_array(
    q: int,
    n: int,
    factor: Sequence[int] | None = None,
    order: Order | None = None,
    *,
    budget: int = DEFAULT_WORD_BUDGET,
) -> np.ndarray:
    """Same contents as :func:`brute_force_list`, via rank decoding."""
    check_alphabet(q)
    if order is None:
        order = natural_order(q)
    total = q**n
    if total > budget:
        raise BudgetExceeded(f"q^n = {total} exceeds budget {budget}")
    cube = decode_ranks(np.arange(total, dtype=np.int64), q, n, order)
    if factor is None:
        return cube
    f = check_factor(factor, q)
    return cube[~containment_mask(cube, f, q)]


def adjacent_stats(words2d: np.ndarray) -> tuple[int, int, int]:
    """(max hamming, max span, argmax-hamming index) over adjacent rows."""
    if len(words2d) < 2:
        return 0, 0, -1
    neq = words2d[1:] != words2d[:-1]
    ham = neq.sum(axis=1)
    idx = int(ham.argmax())
    n = words2d.shape[1]
    first = np.where(neq.any(axis=1), neq.argmax(axis=1), 0)
    last = np.where(neq.any(axis=1), n - 1 - neq[:, ::-1].argmax(axis=1), 0)
    span = last - first
    return int(ham.max()), int(span.max()), idx


# ---------------------------------------------------------------------------
# Stream verification
# ---------------------------------------------------------------------------


@dataclass
class GrayReport:
    """Outcome of checking an emitted word list."""

    q: int
    n: int
    count: int
    factor: Word | None = None
    avoids_factor: bool = True
    all_distinct: bool = True
    sorted_ok: bool | None = None
    complete: bool | None = None
    max_hamming: int = 0
    max_span: int = 0
    worst_pair_index: int | None = None
    claimed_d: int | None = None
    claimed_e: int | None = None
    leftmost_steps_pm1: bool | None = None
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def verify(
    stream: Iterable[Sequence[int]],
    q: int,
    n: int,
    *,
    factor: Sequence[int] | None = None,
    order: Order | None = None,
    claimed_d: int | None = None,
    claimed_e: int | None = None,
    check_sorted: bool = False,
    check_complete: bool = False,
    check_pm1: bool = False,
    budget: int = DEFAULT_WORD_BUDGET,
) -> GrayReport:
    """Check an emitted list of words against the brute-force picture.

    Always checks factor avoidance, distinctness and adjacent-pair
    distance/span against the claimed bounds (when given).  Sortedness,
    completeness (set equality with the brute-force list) and the
    "leftmost changed symbol moves by +-1" law are opt-in because they
    only apply to particular generation modes.
    """
    check_alphabet(q)
    f = check_factor(factor, q) if factor is not None else None
    if order is None:
        order = natural_order(q)
    words = [check_word(w, q) for w in stream]
    report = GrayReport(q=q, n=n, count=len(words), factor=f,
                        claimed_d=claimed_d, claimed_e=claimed_e)

    if f is not None:
        bad = [w for w in words if contains_factor(w, f)]
        report.avoids_factor = not bad
        if bad:
            report.problems.append(f"{len(bad)} words contain the factor")

    if len(set(words)) != len(words):
        report.all_distinct = False
        report.problems.append("duplicate words in stream")

    if check_sorted:
        keys = [rank_key(w, q, order) for w in words]
        report.sorted_ok = all(a < b for a, b in zip(keys, keys[1:]))
        if not report.sorted_ok:
            report.problems.append(f"stream is not sorted in {order.value} order")

    if check_complete:
        expected = brute_force_list(q, n, f, order, budget=budget)
        report.complete = sorted(words) == sorted(expected)
        if not report.complete:
            report.problems.append("stream is not exactly the avoiding set")

    pm1_ok: bool | None = None
    for i, (s, t) in enumerate(zip(words, words[1:])):
        first = -1
        last = -1
        ham = 0
        for k, (a, b) in enumerate(zip(s, t)):
            if a != b:
                ham += 1
                if first < 0:
                    first = k
                last = k
        span = 0 if first < 0 else last - first
        if ham > report.max_hamming:
            report.max_hamming = ham
            report.worst_pair_index = i
        report.max_span = max(report.max_span, span)
        if check_pm1 and first >= 0:
            step_ok = abs(s[first] - t[first]) == 1
            pm1_ok = step_ok if pm1_ok is None else (pm1_ok and step_ok)
            if not step_ok and f"leftmost change not +-1 at pair {i}" not in report.problems:
                report.problems.append(f"leftmost change not +-1 at pair {i}")
    if check_pm1:
        report.leftmost_steps_pm1 = pm1_ok if pm1_ok is not None else True

    if claimed_d is not None and report.max_hamming > claimed_d:
        report.problems.append(
            f"adjacent hamming {report.max_hamming} exceeds claimed d={claimed_d}"
        )
    if claimed_e is not None and report.max_span > claimed_e:
        report.problems.append(
            f"adjacent span {report.max_span} exceeds claimed e={claimed_e}"
        )
    return report


def smallest_counterexample_n(
    q: int,
    factor: Sequence[int],
    *,
    order: Order | None = None,
    d: int = 3,
    n_cap: int = 12,
    budget: int = DEFAULT_WORD_BUDGET,
) -> int | None:
    """Smallest n <= n_cap where the order-sorted avoiding list has an
    adjacent pair at hamming distance > d, or None.

    The sorted lists are produced by the generator in natural-order mode
    (whose agreement with :func:`brute_force_array` is itself under
    test elsewhere); the distance scan here is independent.
    """
    from .generation import GenerationRequest, Strategy, generate_array, plan

    f = check_factor(factor, q)
    from .generation import count_avoiding

    for n in range(len(f), n_cap + 1):
        if count_avoiding(q, n, f) > budget:
            break
        p = plan(GenerationRequest(q=q, n=n, factor=f, order=order, strategy=Strategy.DIRECT))
        arr = generate_array(p)
        max_ham, _, _ = adjacent_stats(arr)
        if max_ham > d:
            return n
    return None
