"""Unit tests for plans, the tree walk, counting, and extreme words."""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import factorgray as fg
from factorgray.automaton import transition_table
from factorgray.classification import Strategy
from factorgray.generation import (
    GenerationRequest,
    MapKind,
    WordMap,
    count_avoiding,
    extreme_word,
    generate_array,
    generate_array_with_stats,
    generate_list,
    iter_words,
    node_count,
    plan,
)
from factorgray.oracle import brute_force_list, containment_mask, decode_ranks
from factorgray.words import (
    BudgetExceeded,
    Order,
    ParityRule,
    parity,
    parity_rule_for,
)


def recursive_reference(q, n, factor, order):
    """Direct recursive statement of the reflected enumeration: at each
    position scan symbols upward when the prefix parity is even, downward
    when odd, and prune prefixes that complete the factor."""
    if factor is None:
        table, dead = [[0] * q], -1
    else:
        table, dead = transition_table(factor, q), len(factor)
    rule = parity_rule_for(order)
    out = []

    def rec(prefix, state):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        symbols = range(q) if parity(prefix, rule) == 0 else range(q - 1, -1, -1)
        for j in symbols:
            nxt = table[state][j]
            if nxt == dead:
                continue
            prefix.append(j)
            rec(prefix, nxt)
            prefix.pop()

    rec([], 0)
    return out


SAMPLE_INSTANCES = [
    (2, 6, None),
    (2, 6, (0, 1, 1)),
    (2, 5, (1, 1)),
    (3, 5, None),
    (3, 5, (0, 0)),
    (3, 4, (2, 1, 0)),
    (4, 4, (1, 3, 0)),
    (4, 4, (2, 3)),
    (5, 3, (4,)),
]


@pytest.mark.parametrize("q,n,factor", SAMPLE_INSTANCES)
def test_iterator_matches_recursive_reference(q, n, factor):
    for order in Order:
        p = plan(GenerationRequest(q, n, factor, order=order, strategy=Strategy.DIRECT))
        assert list(iter_words(p)) == recursive_reference(q, n, factor, order)


@pytest.mark.parametrize("q,n,factor", SAMPLE_INSTANCES)
def test_array_matches_iterator(q, n, factor):
    p = plan(GenerationRequest(q, n, factor))
    arr, nodes = generate_array_with_stats(p)
    words = list(iter_words(p))
    assert arr.shape == (len(words), n)
    assert [tuple(int(a) for a in row) for row in arr] == words
    assert nodes == node_count(p)


def test_kernel_fallback_agrees():
    from factorgray._kernel import fill_tree, fill_tree_fallback

    p = plan(GenerationRequest(3, 5, (1, 0, 0), strategy=Strategy.DIRECT))
    table = np.asarray(transition_table(p.effective_factor, 3), dtype=np.int64)
    total = count_avoiding(3, 5, p.effective_factor)
    a = np.empty((total, 5), dtype=np.uint8)
    b = np.empty((total, 5), dtype=np.uint8)
    dual = 1 if p.parity_rule is ParityRule.DIGIT_SUM_NONZERO else 0
    ca = fill_tree(table, 3, 3, 5, dual, a)
    cb = fill_tree_fallback(table, 3, 3, 5, dual, b)
    assert ca == cb
    assert np.array_equal(a, b)


# ---------------------------------------------------------------------------
# plan routing


def test_plan_auto_strategies():
    assert plan(GenerationRequest(4, 5, (1, 2, 0))).strategy is Strategy.DIRECT
    assert plan(GenerationRequest(4, 5, (1, 3, 0))).strategy is Strategy.PHI
    assert plan(GenerationRequest(2, 5, (1, 1, 0))).strategy is Strategy.REVCOMP
    assert plan(GenerationRequest(2, 5, (0, 1))).strategy is Strategy.STAIRCASE


def test_plan_claims_follow_the_verdict():
    p = plan(GenerationRequest(4, 5, (2, 3, 0, 0)))
    assert (p.is_gray, p.d, p.e) == (True, 3, 4)
    p = plan(GenerationRequest(4, 5, (1, 3, 0)))
    assert (p.is_gray, p.d, p.e) == (True, 2, 1)
    assert p.post_map.kind is MapKind.SWAP


def test_plan_zero_run_forces_reflected_order():
    p = plan(GenerationRequest(3, 5, (0, 0)))
    assert p.order is Order.RGC
    assert (p.is_gray, p.d, p.e) == (True, 1, 1)
    # Requesting the dual order anyway is allowed but claims nothing.
    p = plan(GenerationRequest(3, 5, (0, 0), order=Order.DUAL))
    assert p.order is Order.DUAL
    assert (p.is_gray, p.d, p.e) == (None, None, None)


def test_plan_full_cube_claims():
    assert plan(GenerationRequest(2, 4)).d == 1
    assert plan(GenerationRequest(3, 4)).order is Order.DUAL
    assert plan(GenerationRequest(3, 4)).d == 2
    assert plan(GenerationRequest(3, 4, order=Order.RGC)).d == 1
    # The dual order over an even alphabet carries no adjacency claim.
    p = plan(GenerationRequest(2, 4, order=Order.DUAL))
    assert (p.is_gray, p.d, p.e) == (None, None, None)


def test_plan_rejects_bad_requests():
    with pytest.raises(ValueError):
        plan(GenerationRequest(2, 4, (1, 1), strategy=Strategy.STAIRCASE))
    with pytest.raises(ValueError):
        plan(GenerationRequest(2, 4, strategy=Strategy.PHI))
    with pytest.raises(ValueError):
        plan(GenerationRequest(2, 4, (1, 0, 2)))  # symbol out of range


def test_forced_revcomp_on_generic_factor_is_a_bijection():
    factor = (0, 2, 0, 1)
    p = plan(GenerationRequest(4, 4, factor, strategy=Strategy.REVCOMP))
    assert p.post_map.kind is MapKind.REVERSE_COMPLEMENT
    arr = generate_array(p)
    cube = decode_ranks(np.arange(4**4), 4, 4, p.order)
    expected = cube[~containment_mask(cube, factor, 4)]
    weights = 4 ** np.arange(3, -1, -1)
    assert np.array_equal(np.sort(arr @ weights), np.sort(expected @ weights))


# ---------------------------------------------------------------------------
# counting


def test_count_frozen_values():
    assert count_avoiding(2, 4, (0, 1, 1)) == 12
    assert count_avoiding(2, 4, (1, 1)) == 8
    assert count_avoiding(3, 4, None) == 81


@pytest.mark.parametrize("q,n,factor", SAMPLE_INSTANCES)
def test_count_matches_stream_length(q, n, factor):
    assert count_avoiding(q, n, factor) == len(generate_list(q, n, factor))


def test_count_big_instances_stay_exact():
    # Fibonacci-style recurrence at q=2, factor 11: c(n) = c(n-1) + c(n-2).
    c = [count_avoiding(2, n, (1, 1)) for n in range(2, 30)]
    assert all(c[i] == c[i - 1] + c[i - 2] for i in range(2, len(c)))
    # Big-int path: way past any word budget, still cheap and exact.
    assert count_avoiding(3, 1000, (0, 0)) > 10**300


@pytest.mark.parametrize("q,n,factor", SAMPLE_INSTANCES)
def test_node_count_matches_traversal(q, n, factor):
    p = plan(GenerationRequest(q, n, factor, strategy=Strategy.DIRECT))
    _, nodes = generate_array_with_stats(p)
    assert node_count(p) == nodes


# ---------------------------------------------------------------------------
# staircase emitters


def test_staircase_closed_forms():
    p = plan(GenerationRequest(2, 4, (1, 0)))
    assert generate_list(2, 4, (1, 0)) == [
        (0, 0, 0, 0),
        (0, 0, 0, 1),
        (0, 0, 1, 1),
        (0, 1, 1, 1),
        (1, 1, 1, 1),
    ]
    assert p.strategy is Strategy.STAIRCASE
    assert generate_list(2, 4, (0, 1)) == [
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (1, 1, 0, 0),
        (1, 1, 1, 0),
        (1, 1, 1, 1),
    ]


def test_staircase_10_equals_natural_listing():
    # Avoiding 10 leaves an antichain that the reflected order already lists
    # as a staircase, so the shortcut must agree with the direct walk.
    direct = list(iter_words(plan(GenerationRequest(2, 6, (1, 0), strategy=Strategy.DIRECT))))
    assert generate_list(2, 6, (1, 0)) == direct


def test_staircase_01_is_a_permutation_of_the_avoid_set():
    got = generate_list(2, 6, (0, 1))
    brute = brute_force_list(2, 6, factor=(0, 1))
    assert sorted(got) == sorted(brute)
    assert all(sum(a != b for a, b in zip(s, t)) == 1 for s, t in zip(got, got[1:]))


# ---------------------------------------------------------------------------
# word maps


@settings(max_examples=50)
@given(
    st.integers(2, 5).flatmap(
        lambda q: st.tuples(
            st.just(q),
            st.lists(
                st.lists(st.integers(0, q - 1), min_size=4, max_size=4).map(tuple),
                min_size=1,
                max_size=8,
            ),
        )
    )
)
def test_word_map_array_agrees_with_scalar(qws):
    q, words = qws
    arr = np.asarray(words, dtype=np.uint8)
    maps = [
        WordMap(MapKind.IDENTITY, q),
        WordMap(MapKind.SWAP, q, (0, 1)),
        WordMap(MapKind.SWAP, q, (q - 2, q - 1)),
        WordMap(MapKind.REVERSE, q),
        WordMap(MapKind.REVERSE_COMPLEMENT, q),
    ]
    for m in maps:
        mapped = m.apply_array(arr)
        assert [tuple(int(a) for a in row) for row in mapped] == [m.apply(w) for w in words]


# ---------------------------------------------------------------------------
# structural properties


@pytest.mark.parametrize("q,n,factor", [(2, 6, (0, 1, 1)), (3, 5, (1, 0)), (4, 4, (2, 3))])
def test_lists_nest_by_prefix(q, n, factor):
    """The length-(n-1) listing is the ordered deduplication of the
    length-n listing's prefixes: subtrees are visited contiguously."""
    longer = generate_list(q, n, factor, strategy=Strategy.DIRECT)
    prefixes = [w[:-1] for w in longer]
    dedup = [p for i, p in enumerate(prefixes) if i == 0 or p != prefixes[i - 1]]
    assert dedup == generate_list(q, n - 1, factor, strategy=Strategy.DIRECT)


def test_edge_cases():
    assert generate_list(2, 0, (0, 1)) == [()]
    assert generate_list(2, 1, (0, 1, 1)) == [(0,), (1,)]  # factor longer than n
    assert count_avoiding(2, 0, (0, 1)) == 1


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        generate_array(plan(GenerationRequest(2, 40)))
    with pytest.raises(BudgetExceeded):
        generate_array(plan(GenerationRequest(2, 10)), budget=100)
    assert generate_array(plan(GenerationRequest(2, 10)), budget=1024).shape == (1024, 10)


# ---------------------------------------------------------------------------
# extreme words


def test_extreme_word_examples():
    assert extreme_word(4, 7, (1, 2, 0), prefix=(1, 2), which="first") == (1, 2, 3, 0, 0, 0, 0)
    assert extreme_word(4, 7, (1, 2, 0), prefix=(1, 2), which="last") == (1, 2, 1, 3, 0, 0, 0)
    assert extreme_word(4, 7, (1, 3, 0), prefix=(0,), which="last") == (0, 3, 0, 0, 0, 0, 0)
    assert extreme_word(4, 7, (1, 3, 0), prefix=(1,), which="first") == (1, 3, 1, 3, 1, 3, 1)
    assert extreme_word(3, 5, which="first") == (0, 0, 0, 0, 0)
    assert extreme_word(3, 5, which="last") == (2, 0, 0, 0, 0)


def test_extreme_word_rejects_dead_prefix():
    with pytest.raises(ValueError):
        extreme_word(4, 7, (1, 2, 0), prefix=(1, 2, 0))


@pytest.mark.parametrize("q,n,factor", [(2, 6, (0, 1, 1)), (3, 5, (1, 0, 0)), (4, 4, (1, 3, 0))])
def test_extreme_word_matches_stream_filter(q, n, factor):
    for order in Order:
        words = list(iter_words(plan(GenerationRequest(q, n, factor, order=order, strategy=Strategy.DIRECT))))
        for prefix in [(), (0,)] + [(a, b) for a in range(q) for b in range(q)]:
            below = [w for w in words if w[: len(prefix)] == prefix]
            if not below:
                continue
            assert extreme_word(q, n, factor, prefix=prefix, which="first", order=order) == below[0]
            assert extreme_word(q, n, factor, prefix=prefix, which="last", order=order) == below[-1]
