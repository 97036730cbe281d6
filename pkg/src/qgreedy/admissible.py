"""Lexicographic admissibility checkers.

Four conditions characterize which sequences arise from the generators:

* quasi_alpha      -- every tail of alpha after a digit < M is <= alpha,
                      and alpha is infinite (self-condition for the
                      quasi-greedy expansion of 1);
* quasi_vs_alpha   -- every tail of a after a digit < M is <= alpha, and a
                      is infinite (quasi-greedy expansions of arbitrary x);
* greedy_beta      -- every tail of beta after a digit < M is strictly
                      < beta (self-condition for the greedy expansion of 1,
                      finite sequences allowed);
* greedy_vs_alpha  -- every tail of b after a digit < M is strictly
                      < alpha (greedy expansions of arbitrary x).

With an unbounded alphabet (M=None) the digit guard disappears and the
conditions apply at every index.  An eventually periodic sequence has only
finitely many distinct (digit, tail) pairs -- preperiod positions plus one
period's worth -- so each "for all n" check is a finite enumeration, and
reports name the smallest violating index.

Prefix-only inputs are checked in prefix mode: a violation visible inside
the known digits gives verdict False, otherwise the verdict is None
(undetermined), never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalar import DomainError
from .sequence import (DigitSeq, EQUAL, GREATER, PrefixSeq, UNDETERMINED,
                       lex_compare, shift)

QUASI_ALPHA = "quasi_alpha"
QUASI_VS_ALPHA = "quasi_vs_alpha"
GREEDY_BETA = "greedy_beta"
GREEDY_VS_ALPHA = "greedy_vs_alpha"


@dataclass(frozen=True)
class Violation:
    """Why a sequence failed; index is None for structural failures."""

    index: int | None
    tail: DigitSeq | PrefixSeq | None
    reference: DigitSeq | PrefixSeq | None
    message: str


@dataclass(frozen=True)
class AdmissibilityReport:
    verdict: bool | None
    condition: str
    witness: Violation | None = None

    def __bool__(self):
        return self.verdict is True


def _tail_positions(seq):
    """Indices n (1-based) covering every distinct (digit, tail) pair."""
    if isinstance(seq, PrefixSeq):
        return range(1, len(seq.digits) + 1)
    return range(1, len(seq.preperiod) + max(len(seq.period), 1) + 1)


def _tail(seq, n):
    if isinstance(seq, PrefixSeq):
        return PrefixSeq(seq.digits[n:], seq.bound)
    return shift(seq, n)


def _scan(seq, reference, bound, condition, strict):
    """Common tail loop; reference is the sequence tails compare against."""
    prefix_mode = isinstance(seq, PrefixSeq) or isinstance(reference, PrefixSeq)
    undecided = False
    for n in _tail_positions(seq):
        if bound is not None and seq.digit(n - 1) >= bound:
            continue
        t = _tail(seq, n)
        rel = lex_compare(t, reference)
        if rel == GREATER or (strict and rel == EQUAL):
            op = "<" if strict else "≤"
            return AdmissibilityReport(False, condition, Violation(
                n, t, reference,
                f"tail at n={n} is not {op} the reference sequence"))
        if rel == UNDETERMINED:
            undecided = True
    if prefix_mode or undecided:
        return AdmissibilityReport(None, condition)
    return AdmissibilityReport(True, condition)


def _require_infinite(seq, condition):
    if isinstance(seq, DigitSeq) and not seq.is_infinite:
        return AdmissibilityReport(False, condition, Violation(
            None, None, None, "sequence is finite"))
    return None


def check_alpha_self(alpha, bound) -> AdmissibilityReport:
    """Self-condition for quasi-greedy expansions of 1.

    True iff alpha is infinite and shift(alpha, n) <= alpha for every n
    with alpha_n < M (every n when M is None).
    """
    bad = _require_infinite(alpha, QUASI_ALPHA)
    if bad is not None:
        return bad
    return _scan(alpha, alpha, bound, QUASI_ALPHA, strict=False)


def check_quasi_vs_alpha(a, alpha, bound) -> AdmissibilityReport:
    """Condition for quasi-greedy expansions of arbitrary x against alpha."""
    if not check_alpha_self(alpha, bound):
        raise DomainError("alpha is not self-admissible")
    bad = _require_infinite(a, QUASI_VS_ALPHA)
    if bad is not None:
        return bad
    return _scan(a, alpha, bound, QUASI_VS_ALPHA, strict=False)


def check_beta_self(beta, bound) -> AdmissibilityReport:
    """Self-condition for greedy expansions of 1: strict tail inequality."""
    return _scan(beta, beta, bound, GREEDY_BETA, strict=True)


def check_greedy_vs_alpha(b, alpha, bound) -> AdmissibilityReport:
    """Condition for greedy expansions of arbitrary x against alpha."""
    if not check_alpha_self(alpha, bound):
        raise DomainError("alpha is not self-admissible")
    return _scan(b, alpha, bound, GREEDY_VS_ALPHA, strict=True)
