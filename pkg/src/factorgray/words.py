"""Core operations on fixed-length words over the alphabet {0, ..., q-1}.

A *word* is a tuple of ints.  Two total orders on same-length words are
provided, both of which turn out to list words so that consecutive ones
differ in few, nearby positions:

``rgc`` (reflected order)
    Compare at the leftmost differing position ``k``; the shared prefix
    decides the direction.  If the digit sum of the prefix is even the
    smaller symbol comes first, otherwise the larger one.  Sorting all of
    ``{0..q-1}^n`` this way yields the classic q-ary reflected Gray code.

``dual`` (dual reflected order)
    Same scheme, but the direction is decided by the parity of
    (digit sum + number of nonzero symbols) of the shared prefix.  This
    is the order of interest on odd alphabets.

The matching prefix parities are exposed as :class:`ParityRule` so that
generation code can track the scan direction incrementally.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Sequence

Word = tuple[int, ...]

MAX_ALPHABET = 2**16

DEFAULT_WORD_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """An operation would enumerate more words than its budget allows."""


class Order(str, Enum):
    """Which of the two reflected orders is in effect."""

    RGC = "rgc"
    DUAL = "dual"


class ParityRule(str, Enum):
    """How the scan direction of a prefix is computed.

    DIGIT_SUM        -- parity of the sum of the symbols (pairs with RGC)
    DIGIT_SUM_NONZERO -- parity of sum + count of nonzero symbols (pairs
                         with DUAL)
    """

    DIGIT_SUM = "digit-sum"
    DIGIT_SUM_NONZERO = "digit-sum-nonzero"


def natural_order(q: int) -> Order:
    """Order under which {0..q-1}^n is known to be Gray: rgc for even q,
    dual for odd q."""
    return Order.RGC if q % 2 == 0 else Order.DUAL


def parity_rule_for(order: Order) -> ParityRule:
    return ParityRule.DIGIT_SUM if order is Order.RGC else ParityRule.DIGIT_SUM_NONZERO


def check_alphabet(q: int) -> int:
    if not isinstance(q, int) or q < 2 or q > MAX_ALPHABET:
        raise ValueError(f"alphabet size must be an int in [2, {MAX_ALPHABET}], got {q!r}")
    return q


def check_word(word: Iterable[int], q: int, *, what: str = "word") -> Word:
    """Validate symbols and return the word as a tuple."""
    w = tuple(word)
    for a in w:
        if not isinstance(a, int) or not 0 <= a < q:
            raise ValueError(f"{what} {w!r} has symbol {a!r} outside 0..{q - 1}")
    return w


def check_factor(factor: Iterable[int], q: int) -> Word:
    f = check_word(factor, q, what="factor")
    if len(f) == 0:
        raise ValueError("factor must be nonempty")
    return f


def parity(word: Sequence[int], rule: ParityRule = ParityRule.DIGIT_SUM) -> int:
    """Parity (0 or 1) of a word under the given rule.

    Under DIGIT_SUM this is ``sum(word) % 2``; under DIGIT_SUM_NONZERO
    each nonzero symbol additionally contributes 1, i.e.
    ``(sum(word) + #nonzeros) % 2``.
    """
    s = sum(word)
    if rule is ParityRule.DIGIT_SUM_NONZERO:
        s += sum(1 for a in word if a != 0)
    return s & 1


def cmp_rgc(s: Sequence[int], t: Sequence[int]) -> int:
    """Three-way comparison in the reflected (rgc) order.

    Returns -1, 0 or +1.  At the leftmost differing position the symbols
    compare ascending when the common prefix has even digit sum, and
    descending when it is odd.
    """
    if len(s) != len(t):
        raise ValueError("cannot compare words of different lengths")
    u = 0
    for a, b in zip(s, t):
        if a != b:
            lt = a < b if u & 1 == 0 else a > b
            return -1 if lt else 1
        u += a
    return 0


def cmp_dual_rgc(s: Sequence[int], t: Sequence[int]) -> int:
    """Three-way comparison in the dual reflected order.

    Like :func:`cmp_rgc` but the direction at the leftmost differing
    position follows the parity of (digit sum + #nonzeros) of the common
    prefix.
    """
    if len(s) != len(t):
        raise ValueError("cannot compare words of different lengths")
    u = 0
    for a, b in zip(s, t):
        if a != b:
            lt = a < b if u & 1 == 0 else a > b
            return -1 if lt else 1
        u += a + (1 if a != 0 else 0)
    return 0


def compare(s: Sequence[int], t: Sequence[int], order: Order) -> int:
    return cmp_rgc(s, t) if order is Order.RGC else cmp_dual_rgc(s, t)


def hamming(s: Sequence[int], t: Sequence[int]) -> int:
    """Number of positions where the words differ."""
    if len(s) != len(t):
        raise ValueError("hamming distance needs words of equal length")
    return sum(1 for a, b in zip(s, t) if a != b)


def diff_span(s: Sequence[int], t: Sequence[int]) -> int:
    """Distance between the rightmost and leftmost differing positions.

    Equal words (and words differing in a single position) have span 0.
    A list is "e-close" when every adjacent pair has span <= e.
    """
    if len(s) != len(t):
        raise ValueError("diff_span needs words of equal length")
    first = -1
    last = -1
    for i, (a, b) in enumerate(zip(s, t)):
        if a != b:
            if first < 0:
                first = i
            last = i
    return 0 if first < 0 else last - first


def reverse(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


def complement(word: Sequence[int], q: int) -> Word:
    """Map every symbol a to q-1-a."""
    return tuple(q - 1 - a for a in word)


# ---------------------------------------------------------------------------
# Text round-tripping (shared by the CLI and the test fixtures)
# ---------------------------------------------------------------------------


def parse_word(text: str, q: int) -> Word:
    """Parse a word from packed digits ("0212") or separated symbols
    ("0,21,2" / "0 21 2").  Packed form is used for q <= 10; past that a
    bare token is read as a single symbol.
    """
    text = text.strip()
    if text == "":
        return ()
    if any(c in text for c in ", \t"):
        parts = [p for p in text.replace(",", " ").split() if p]
    elif q <= 10:
        parts = list(text)
    else:
        # Packed digits are never legal past q=10, so a bare token can only
        # be a single symbol (e.g. "17" with q=20).
        parts = [text]
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse word from {text!r}") from None
    return check_word(word, q)


def format_word(word: Sequence[int], q: int, style: str = "auto") -> str:
    """Render a word as packed digits (q <= 10) or comma-separated symbols."""
    if style == "auto":
        style = "packed" if q <= 10 else "separated"
    if style == "packed":
        if q > 10:
            raise ValueError("packed format only supports q <= 10")
        return "".join(str(a) for a in word)
    if style == "separated":
        return ",".join(str(a) for a in word)
    raise ValueError(f"unknown word format {style!r}")
