"""Unit tests for the factor-matching automaton."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factorgray.automaton import FactorAutomaton, border_array, transition_table
from factorgray.oracle import contains_factor


def factors_st(max_q: int = 5, max_len: int = 7):
    return st.integers(2, max_q).flatmap(
        lambda q: st.tuples(
            st.just(q),
            st.lists(st.integers(0, q - 1), min_size=1, max_size=max_len).map(tuple),
        )
    )


def naive_border(factor):
    """Longest proper border of each prefix, by direct comparison."""
    out = [-1]
    for i in range(1, len(factor) + 1):
        prefix = factor[:i]
        out.append(
            max(
                (k for k in range(i) if prefix[i - k :] == prefix[:k]),
                default=0,
            )
        )
    return out


def naive_transition(factor, q, state, symbol):
    """Longest suffix of factor[:state] + symbol that is a prefix of factor."""
    word = factor[:state] + (symbol,)
    for k in range(min(len(word), len(factor)), -1, -1):
        if word[len(word) - k :] == factor[:k]:
            return k
    return 0


def test_border_array_golden():
    factor = (0, 1, 0, 0, 1, 0, 1, 0)
    assert list(border_array(factor)) == [-1, 0, 0, 1, 1, 2, 3, 2, 3]


def test_transition_table_golden():
    table = transition_table((0, 1, 2, 0, 1, 1), 4)
    assert [list(row) for row in table] == [
        [1, 0, 0, 0],
        [1, 2, 0, 0],
        [1, 0, 3, 0],
        [4, 0, 0, 0],
        [1, 5, 0, 0],
        [1, 6, 3, 0],
    ]


@settings(max_examples=50)
@given(factors_st())
def test_border_matches_naive(qf):
    q, factor = qf
    assert list(border_array(factor)) == naive_border(factor)


@settings(max_examples=50)
@given(factors_st(max_q=4, max_len=6))
def test_transitions_match_naive(qf):
    q, factor = qf
    table = transition_table(factor, q)
    for state in range(len(factor)):
        for symbol in range(q):
            assert table[state][symbol] == naive_transition(factor, q, state, symbol)


@settings(max_examples=50)
@given(factors_st())
def test_exactly_one_dead_edge(qf):
    """Only completing the factor leads to the dead state."""
    q, factor = qf
    table = transition_table(factor, q)
    hits = [
        (i, j)
        for i in range(len(factor))
        for j in range(q)
        if table[i][j] == len(factor)
    ]
    assert hits == [(len(factor) - 1, factor[-1])]


def test_automaton_dataclass_roundtrip():
    auto = FactorAutomaton.build((0, 1, 1), 2)
    assert auto.factor == (0, 1, 1)
    assert auto.q == 2
    assert auto.dead == 3
    state = 0
    for symbol in (0, 1, 0, 1):
        state = auto.step(state, symbol)
    assert state == 2  # suffix "01" is the longest live prefix match


@settings(max_examples=50)
@given(factors_st(max_q=3, max_len=4), st.lists(st.integers(0, 2), max_size=10))
def test_scan_agrees_with_window_search(qf, raw):
    q, factor = qf
    word = tuple(a % q for a in raw)
    assert FactorAutomaton.build(factor, q).scan(word) == contains_factor(word, factor)


def test_rejects_bad_factor():
    with pytest.raises(ValueError):
        transition_table((), 2)
    with pytest.raises(ValueError):
        transition_table((2,), 2)


def test_scan_exhaustive_small():
    factor = (1, 0, 1)
    auto = FactorAutomaton.build(factor, 2)
    for n in range(7):
        for word in itertools.product(range(2), repeat=n):
            assert auto.scan(word) == contains_factor(word, factor)
