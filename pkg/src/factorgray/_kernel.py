"""Batch tree walk used by :func:`factorgray.generation.generate_array`.

One iterative depth-first traversal of the generation tree, written so
numba can compile it: explicit per-depth cursors instead of recursion,
flat numpy state, no Python objects.  ``fill_tree.py_func`` (when numba
is present) is the uncompiled twin used to test the fallback path.
"""

from __future__ import annotations

import numpy as np

from ._compat import HAVE_NUMBA, njit


@njit(cache=True)
def fill_tree(table, dead, q, n, dual_flip, out):
    """Emit all length-n words whose automaton never reaches ``dead``.

    ``table`` is the (states x q) transition table, ``out`` a
    preallocated (count, n) array.  Words appear in the reflected order
    driven by the prefix parity: at even parity symbols are scanned
    ascending, at odd parity descending, where a symbol contributes
    itself (plus 1 when nonzero and ``dual_flip`` is set) to the parity.

    Returns (number of words written, number of tree nodes visited);
    nodes count the root plus every factor-free prefix reached.
    """
    word = np.zeros(n, dtype=np.int64)
    cursor = np.zeros(n, dtype=np.int64)
    dirs = np.zeros(n, dtype=np.int64)
    states = np.zeros(n, dtype=np.int64)
    count = 0
    nodes = 1
    depth = 0
    while depth >= 0:
        idx = cursor[depth]
        if idx >= q:
            depth -= 1
            continue
        cursor[depth] = idx + 1
        j = idx if dirs[depth] == 0 else q - 1 - idx
        h = table[states[depth], j]
        if h == dead:
            continue
        nodes += 1
        word[depth] = j
        m = (dirs[depth] + j) & 1
        if dual_flip != 0 and j != 0:
            m = 1 - m
        if depth + 1 == n:
            for k in range(n):
                out[count, k] = word[k]
            count += 1
        else:
            depth += 1
            cursor[depth] = 0
            dirs[depth] = m
            states[depth] = h
    return count, nodes


def fill_tree_fallback(table, dead, q, n, dual_flip, out):
    """The same walk without compilation (used in tests and as a
    safety net when numba is unavailable)."""
    fn = fill_tree.py_func if HAVE_NUMBA else fill_tree
    return fn(table, dead, q, n, dual_flip, out)
