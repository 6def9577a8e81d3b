"""Failure-function machinery for recognising one forbidden factor.

Everything here is driven by the *border array* of the factor f (length
l): ``b[j]`` is the length of the longest proper border of the prefix
``f[:j]`` — the longest string that is simultaneously a proper prefix and
a proper suffix of ``f[:j]``.  By convention ``b[0] = -1``, and the array
carries ``l + 1`` entries so that ``b[l]`` (the border of the whole
factor) is available to callers interested in the factor's periods.

From the border array we tabulate the match automaton ``M`` with states
0..l-1 ("the last i symbols read form the longest suffix that is a
prefix of f") and one transition per symbol:

    M[i][j] = length of the longest suffix of f[:i] + j that is a
              prefix of f.

``M[i][j] == l`` means reading j in state i completes an occurrence of
the factor; a generator that must avoid f simply refuses those edges.
Note only one edge in the whole table can be dead: state l-1 on symbol
f[l-1] (every other entry is at most l-1), so every state always has at
least q-1 live continuations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, check_alphabet, check_factor


def border_array(factor: Word) -> list[int]:
    """Border lengths of all prefixes of the factor; ``len(factor) + 1``
    entries with ``b[0] = -1``.

    Classic failure-function construction: extend the previous border by
    one symbol when possible, otherwise chase shorter borders through the
    array itself.  Runs in O(len(factor)) amortised.
    """
    ell = len(factor)
    b = [0] * (ell + 1)
    b[0] = -1
    i = 0
    for j in range(1, ell):
        b[j] = i
        while i >= 0 and factor[j] != factor[i]:
            i = b[i]
        i += 1
    b[ell] = i
    return b


def transition_table(factor: Word, q: int) -> list[list[int]]:
    """The l x q match automaton described in the module docstring.

    Built row by row: in state i, symbol f[i] advances the match to
    i + 1; any other symbol falls back to the transition of the longest
    proper border of f[:i] (or to 0 from the empty state).
    """
    check_alphabet(q)
    f = check_factor(factor, q)
    b = border_array(f)
    table: list[list[int]] = []
    for i in range(len(f)):
        row = [0] * q
        for j in range(q):
            if f[i] == j:
                row[j] = i + 1
            elif i > 0:
                row[j] = table[b[i]][j]
        table.append(row)
    return table


@dataclass(frozen=True)
class FactorAutomaton:
    """A forbidden factor together with its border array and match table."""

    factor: Word
    q: int
    border: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, factor: Word, q: int) -> "FactorAutomaton":
        f = check_factor(factor, q)
        return cls(
            factor=f,
            q=q,
            border=tuple(border_array(f)),
            table=tuple(tuple(row) for row in transition_table(f, q)),
        )

    @property
    def dead(self) -> int:
        """The state value signalling a completed occurrence."""
        return len(self.factor)

    def step(self, state: int, symbol: int) -> int:
        return self.table[state][symbol]

    def scan(self, word: Word) -> bool:
        """True when the word contains the factor."""
        state = 0
        for a in word:
            state = self.table[state][a]
            if state == self.dead:
                return True
        return False
