"""Brute-force reference implementations for small instances.

These realize the defining property of the generators directly -- the
lexicographically largest word of a given length whose value stays below x
-- by descending enumeration over all words instead of the digit
recursion.  They exist so the test suite can cross-check the generators
against an independent route; the guard keeps the search space enumerable.

Pruning is sound because digits are nonnegative: partial sums only grow,
so a branch whose partial value already violates the bound cannot recover.
"""

from __future__ import annotations

from .scalar import BaseSpec, DomainError, sign
from .sequence import PrefixSeq

MAX_LENGTH = 12
MAX_BOUND = 3


def _brute_prefix(base, bound, x, n, strict):
    if bound is None or bound > MAX_BOUND or n > MAX_LENGTH:
        raise DomainError("search space too large")
    if n < 1:
        raise DomainError("prefix length must be >= 1")
    if not hasattr(x, "rep"):
        x = base.from_rational(x)
    inv_q = base.one() / base.q
    powers = []
    p = base.one()
    for _ in range(n):
        p = p * inv_q
        powers.append(p)

    limit = 1 if strict else 0  # partial <(=) x required at every depth

    def extend(word, partial):
        if len(word) == n:
            return word
        for d in range(bound, -1, -1):
            nxt = partial + d * powers[len(word)] if d else partial
            if sign(x - nxt) >= limit:
                found = extend(word + [d], nxt)
                if found is not None:
                    return found
        return None

    word = extend([], base.zero())
    if word is None:
        raise DomainError("x out of range")
    return PrefixSeq(tuple(word), bound)


def brute_greedy_prefix(base: BaseSpec, bound: int, x, n: int) -> PrefixSeq:
    """Lexicographically largest length-n word with value(word 0^inf) <= x."""
    return _brute_prefix(base, bound, x, n, strict=False)


def brute_quasi_prefix(base: BaseSpec, bound: int, x, n: int) -> PrefixSeq:
    """Lexicographically largest length-n word with value(word 0^inf) < x."""
    return _brute_prefix(base, bound, x, n, strict=True)
