"""Structural classification of a forbidden factor.

Which order to sort the avoiding words in, whether that sorted list is a
Gray code, and how tight its adjacent-pair bounds are all hinge on the
shape of the factor's tail.  The interesting shapes are the *exception
families*, defined through left-infinite periodic words (a left-infinite
word has exactly one suffix of each finite length — its last so-many
symbols):

one-max-zeros (even alphabets)
    f = b0 where b is a suffix of ``... w w w`` with w = 1 (q-1) 0^m for
    some m >= 0.  Example for q = 4, m = 0: 30, 130, 3130, 13130, ...

one-zeros (alphabet independent, relevant on odd alphabets)
    f = b0 where b is a suffix of ``... w w w`` with w = 1 0^m.
    Example: 10, 010, 0100, 10100, ...

submax-run-max (q >= 3)
    f = (q-2)^j (q-1) for some j >= 0, e.g. 3, 23, 223 for q = 4.

A factor *induces zero tails* ("zero periodicity") when, in every
subtree of the generation tree, the first and last avoiding words
eventually read 000...; this is what makes the sorted list a Gray code,
and it holds exactly when the factor lies outside the exception families
applicable to its alphabet.  Members of the exception families are not
hopeless: relabelling two symbols (:func:`phi`) turns them into factors
with a harmless tail, and for the two binary "chain" shapes 0^(l-1) 1 /
1^(l-1) 0 a reverse/complement detour does the job instead.

Everything is wrapped up by :func:`classify` / :func:`gray_verdict`,
which report both the claim about the order-sorted list itself
(``natural_is_gray``; None means no claim either way) and the bounds
``(d, e)`` guaranteed for the stream that generation will actually emit
under the recommended strategy: adjacent emitted words differ in at most
d positions, all within a window of span e.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .words import (
    Order,
    ParityRule,
    Word,
    check_alphabet,
    check_factor,
    natural_order,
    parity_rule_for,
)


class Family(str, Enum):
    """Tail shape of a forbidden factor (one label per factor)."""

    MID_SYMBOL = "mid-symbol"            # ends in a symbol strictly inside 0..q-1
    END_ZERO = "end-zero"                # ends in 0, no exception family
    END_MAX = "end-max"                  # ends in q-1, no exception family (q >= 3)
    END_MAX_BINARY = "end-max-binary"    # ends in 1 on the binary alphabet
    ZERO_RUN = "zero-run"                # f = 0^l
    MAX_THEN_ZEROS = "max-then-zeros"    # f = (q-1) 0^(l-1), even q
    ONE_MAX_ZEROS = "one-max-zeros"      # exception family, even alphabets
    ONE_ZEROS = "one-zeros"              # exception family, odd alphabets
    SUBMAX_RUN = "submax-run-max"        # exception family (q-2)^j (q-1)


class Strategy(str, Enum):
    """How generation produces a Gray (or best-effort) stream."""

    DIRECT = "direct"        # emit the order-sorted avoiding words as-is
    PHI = "phi"              # enumerate the relabelled factor, swap symbols back
    REVCOMP = "revcomp"      # enumerate a reversed(/complemented) factor, map back
    STAIRCASE = "staircase"  # closed-form list for the binary factors 01 / 10


@dataclass(frozen=True)
class GrayVerdict:
    """Order, claims and rescue strategy for one factor.

    ``natural_is_gray`` speaks about the order-sorted avoiding list
    itself (None = no claim); ``natural_d`` / ``natural_e`` are its
    bounds when that claim is positive.  ``d`` / ``e`` always describe
    the stream emitted under ``strategy``.
    """

    order: Order
    parity_rule: ParityRule
    natural_is_gray: bool | None
    natural_d: int | None
    natural_e: int | None
    strategy: Strategy
    d: int | None
    e: int | None


@dataclass(frozen=True)
class Classification:
    factor: Word
    q: int
    family: Family
    family_param: int | None
    zero_suffix_len: int
    induces_zero_tails: bool
    nonzero_periods: tuple[Word, ...]
    verdict: GrayVerdict


# ---------------------------------------------------------------------------
# Family membership
# ---------------------------------------------------------------------------


def _is_suffix_of_periodic(body: Word, block: Word) -> bool:
    """Is ``body`` a suffix of the left-infinite word ``... block block``?

    Equivalently: reversed(body) must be a prefix of the right-infinite
    repetition of reversed(block).
    """
    k = len(block)
    return all(body[len(body) - 1 - i] == block[k - 1 - i % k] for i in range(len(body)))


def zero_suffix_len(factor: Word) -> int:
    """Length of the maximal all-zero suffix."""
    n = 0
    for a in reversed(factor):
        if a != 0:
            break
        n += 1
    return n


def one_max_zeros_param(factor: Word, q: int) -> int | None:
    """Smallest m witnessing membership in the one-max-zeros family.

    Only one candidate needs checking: the block 1 (q-1) 0^m can match
    the factor's tail only when m equals the factor's zero-suffix length
    minus one (the final 0 of the factor is the appended one).
    """
    if factor[-1] != 0:
        return None
    m = zero_suffix_len(factor) - 1
    block = (1, q - 1) + (0,) * m
    return m if _is_suffix_of_periodic(factor[:-1], block) else None


def one_zeros_param(factor: Word) -> int | None:
    """Smallest m witnessing membership in the one-zeros family."""
    if factor[-1] != 0:
        return None
    m = zero_suffix_len(factor) - 1
    block = (1,) + (0,) * m
    return m if _is_suffix_of_periodic(factor[:-1], block) else None


def submax_run_length(factor: Word, q: int) -> int | None:
    """j when the factor is (q-2)^j (q-1); the family is empty for q = 2."""
    if q < 3 or factor[-1] != q - 1:
        return None
    j = len(factor) - 1
    return j if all(a == q - 2 for a in factor[:-1]) else None


def one_max_zeros_members(q: int, n: int) -> list[Word]:
    """All length-n members of the one-max-zeros family, by construction."""
    out = set()
    for m in range(n):
        block = (1, q - 1) + (0,) * m
        body = tuple(block[len(block) - 1 - (n - 2 - i) % len(block)] for i in range(n - 1))
        out.add(body + (0,))
    return sorted(out)


def one_zeros_members(n: int) -> list[Word]:
    """All length-n members of the one-zeros family, by construction."""
    out = set()
    for m in range(n):
        block = (1,) + (0,) * m
        body = tuple(block[len(block) - 1 - (n - 2 - i) % len(block)] for i in range(n - 1))
        out.add(body + (0,))
    return sorted(out)


def submax_run_member(q: int, n: int) -> Word:
    """The unique length-n member (q-2)^(n-1) (q-1); requires q >= 3."""
    if q < 3:
        raise ValueError("the submax-run family is empty for q = 2")
    return (q - 2,) * (n - 1) + (q - 1,)


def induces_zero_tails(factor: Word, q: int) -> bool:
    """True unless the factor lies in an exception family of its alphabet."""
    if q % 2 == 0:
        if one_max_zeros_param(factor, q) is not None:
            return False
    else:
        if one_zeros_param(factor) is not None:
            return False
    return submax_run_length(factor, q) is None


def nonzero_periods(factor: Word, q: int) -> tuple[Word, ...]:
    """Ultimate tail periods other than 000... that extreme avoiding
    words can settle into (nonempty exactly for exception families)."""
    periods: list[Word] = []
    if q % 2 == 0:
        m = one_max_zeros_param(factor, q)
        if m is not None:
            periods.append((1, q - 1) + (0,) * m)
    else:
        m = one_zeros_param(factor)
        if m is not None:
            periods.append((1,) + (0,) * m)
    if submax_run_length(factor, q) is not None:
        periods.append((q - 2,))
    return tuple(periods)


# ---------------------------------------------------------------------------
# Symbol relabelling
# ---------------------------------------------------------------------------


def phi_pair(factor: Word, q: int) -> tuple[int, int]:
    """The two symbols whose swap moves the factor out of its exception
    family: (0, 1) for factors ending in 0, (q-2, q-1) for factors
    ending in q-1."""
    last = factor[-1]
    if last == 0:
        return (0, 1)
    if last == q - 1:
        return (q - 2, q - 1)
    raise ValueError("factors ending in a middle symbol need no relabelling")


def swap_symbols(word: Word, pair: tuple[int, int]) -> Word:
    a, b = pair
    return tuple(b if x == a else a if x == b else x for x in word)


def phi(factor: Word, q: int) -> Word:
    """The relabelled factor (an involution)."""
    return swap_symbols(factor, phi_pair(factor, q))


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------


def gray_verdict(factor: Word, q: int) -> GrayVerdict:
    """Order, Gray claim and strategy for one factor (see module doc)."""
    check_alphabet(q)
    f = check_factor(factor, q)
    ell = len(f)
    last = f[-1]
    nat = natural_order(q)
    nat_rule = parity_rule_for(nat)
    rgc, dsum = Order.RGC, ParityRule.DIGIT_SUM

    if all(a == 0 for a in f):
        # Avoiding a zero run: 1-Gray under rgc for every q (the dual
        # order is forced back to rgc here, digit-sum parity included).
        return GrayVerdict(rgc, dsum, True, 1, 1, Strategy.DIRECT, 1, 1)

    if q % 2 == 0 and ell >= 2 and f == (q - 1,) + (0,) * (ell - 1):
        # (q-1) then zeros: also 1-Gray under rgc.  The binary factor 10
        # additionally admits a closed-form emitter.
        strat = Strategy.STAIRCASE if q == 2 and ell == 2 else Strategy.DIRECT
        return GrayVerdict(rgc, dsum, True, 1, 1, strat, 1, 1)

    if q == 2 and last == 1:
        # Binary, ends in the top symbol: 3-Gray and 2-close under rgc.
        # The chain factors 0^(l-1) 1 admit cheaper emission: 01 via the
        # closed-form staircase (even 1-Gray), longer ones by rev/comp
        # detour through 0 1^(l-1) (bounds unchanged).
        if f == (0,) * (ell - 1) + (1,):
            if ell == 2:
                return GrayVerdict(rgc, dsum, True, 3, 2, Strategy.STAIRCASE, 1, 1)
            if ell >= 3:
                return GrayVerdict(rgc, dsum, True, 3, 2, Strategy.REVCOMP, 3, 2)
        return GrayVerdict(rgc, dsum, True, 3, 2, Strategy.DIRECT, 3, 2)

    if q == 2 and ell >= 3 and f == (1,) * (ell - 1) + (0,):
        # Binary chain 1^(l-1) 0: in the one-max-zeros family, so the
        # sorted list is not Gray; reversing the factor (a chain the
        # other way round) gives a guaranteed 3-Gray, 2-close stream.
        return GrayVerdict(rgc, dsum, False, None, None, Strategy.REVCOMP, 3, 2)

    if 0 < last < q - 1:
        return GrayVerdict(nat, nat_rule, True, 2, 1, Strategy.DIRECT, 2, 1)

    if last == 0:
        if q % 2 == 0:
            if one_max_zeros_param(f, q) is None:
                e = zero_suffix_len(f) + 2
                return GrayVerdict(rgc, dsum, True, 3, e, Strategy.DIRECT, 3, e)
            pd, pe = (3, 2) if q == 2 else (2, 1)
            return GrayVerdict(rgc, dsum, False, None, None, Strategy.PHI, pd, pe)
        if one_zeros_param(f) is None:
            e = zero_suffix_len(f) + 1
            return GrayVerdict(nat, nat_rule, True, 3, e, Strategy.DIRECT, 3, e)
        return GrayVerdict(nat, nat_rule, False, None, None, Strategy.PHI, 2, 1)

    # last == q-1 with q >= 3
    j = submax_run_length(f, q)
    if j is None:
        return GrayVerdict(nat, nat_rule, True, 3, 2, Strategy.DIRECT, 3, 2)
    if ell == 1 and q % 2 == 0:
        # Avoiding the single symbol q-1 on an even alphabet: no claim
        # about the rgc-sorted list is issued; relabelling guarantees a
        # 2-Gray, 1-close stream regardless.
        return GrayVerdict(rgc, dsum, None, None, None, Strategy.PHI, 2, 1)
    return GrayVerdict(nat, nat_rule, False, None, None, Strategy.PHI, 2, 1)


def classify(factor: Word, q: int) -> Classification:
    """Full structural report for one factor."""
    check_alphabet(q)
    f = check_factor(factor, q)
    ell = len(f)
    last = f[-1]

    family = Family.MID_SYMBOL
    param: int | None = None
    if all(a == 0 for a in f):
        family = Family.ZERO_RUN
    elif q % 2 == 0 and ell >= 2 and f == (q - 1,) + (0,) * (ell - 1):
        family = Family.MAX_THEN_ZEROS
    elif q == 2 and last == 1:
        family = Family.END_MAX_BINARY
    elif (j := submax_run_length(f, q)) is not None:
        family, param = Family.SUBMAX_RUN, j
    elif last == 0 and q % 2 == 0 and (m := one_max_zeros_param(f, q)) is not None:
        family, param = Family.ONE_MAX_ZEROS, m
    elif last == 0 and q % 2 == 1 and (m := one_zeros_param(f)) is not None:
        family, param = Family.ONE_ZEROS, m
    elif last == 0:
        family = Family.END_ZERO
    elif last == q - 1:
        family = Family.END_MAX

    return Classification(
        factor=f,
        q=q,
        family=family,
        family_param=param,
        zero_suffix_len=zero_suffix_len(f),
        induces_zero_tails=induces_zero_tails(f, q),
        nonzero_periods=nonzero_periods(f, q),
        verdict=gray_verdict(f, q),
    )
