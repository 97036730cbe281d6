"""Digit sequences: finite, eventually periodic, or prefix-only.

A DigitSeq is the eventually periodic sequence preperiod followed by the
period repeated forever; an empty period means the sequence continues with
zeros, i.e. a finite sequence.  Construction canonicalizes: the period is
primitive, an all-zero period is dropped, and the preperiod is as short as
possible, so structural equality coincides with equality as sequences.

Digits are arbitrary-precision nonnegative integers; the alphabet bound M
is a positive integer or None for an unbounded alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .scalar import BaseSpec, DomainError, ParseError, QElement, UNIT

LESS = "less"
EQUAL = "equal"
GREATER = "greater"
UNDETERMINED = "undetermined"


def _check_digits(digits, bound):
    for d in digits:
        if not isinstance(d, int) or d < 0:
            raise ParseError(f"digits must be nonnegative integers, got {d!r}")
        if bound is not None and d > bound:
            raise ParseError(f"digit {d} exceeds M={bound}")


def _canonical(pre, per):
    if all(d == 0 for d in per):
        per = ()
    else:
        n = len(per)
        for d in range(1, n + 1):
            if n % d == 0 and per == per[:d] * (n // d):
                per = per[:d]
                break
    if per:
        while pre and pre[-1] == per[-1]:
            per = per[-1:] + per[:-1]
            pre = pre[:-1]
    else:
        while pre and pre[-1] == 0:
            pre = pre[:-1]
    return pre, per


@dataclass(frozen=True)
class DigitSeq:
    """Eventually periodic digit sequence in canonical form."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]
    bound: int | None = field(default=None, compare=False)

    def __post_init__(self):
        pre = tuple(self.preperiod)
        per = tuple(self.period)
        _check_digits(pre, self.bound)
        _check_digits(per, self.bound)
        pre, per = _canonical(pre, per)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @property
    def is_infinite(self) -> bool:
        """True when infinitely many digits are nonzero."""
        return bool(self.period)

    def digit(self, i: int) -> int:
        """The digit at 0-based position i."""
        if i < len(self.preperiod):
            return self.preperiod[i]
        if not self.period:
            return 0
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> tuple[int, ...]:
        return tuple(self.digit(i) for i in range(n))

    def last_nonzero_index(self) -> int | None:
        """1-based index of the last nonzero digit of a finite sequence."""
        if self.is_infinite:
            return None
        return len(self.preperiod) or None

    def __str__(self):
        return format_seq(self)


@dataclass(frozen=True)
class PrefixSeq:
    """A plain finite word of digits: the truncated output of a generator."""

    digits: tuple[int, ...]
    bound: int | None = field(default=None, compare=False)

    def __post_init__(self):
        digits = tuple(self.digits)
        _check_digits(digits, self.bound)
        object.__setattr__(self, "digits", digits)

    def digit(self, i: int) -> int:
        return self.digits[i]

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return _render_digits(self.digits, self.bound)


def _render_digits(digits, bound) -> str:
    if bound is not None and bound <= 9:
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def _parse_digits(text, bound) -> tuple[int, ...]:
    if text == "":
        return ()
    if bound is not None and bound <= 9:
        if not text.isdigit():
            raise ParseError(f"invalid digits: {text!r}")
        return tuple(int(ch) for ch in text)
    try:
        return tuple(int(tok.strip()) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"invalid digits: {text!r}") from None


def parse_seq(text: str, bound: int | None) -> DigitSeq:
    """Parse a sequence literal like "11()", "(10)", "1(10)" or "10,2,0(3,1)"."""
    s = text.strip()
    if "(" in s:
        head, _, rest = s.partition("(")
        if not rest.endswith(")") or "(" in rest or ")" in rest[:-1]:
            raise ParseError(f"malformed sequence literal: {text!r}")
        pre = _parse_digits(head, bound)
        per = _parse_digits(rest[:-1], bound)
    elif ")" in s:
        raise ParseError(f"malformed sequence literal: {text!r}")
    else:
        if s == "":
            raise ParseError("empty sequence literal")
        pre, per = _parse_digits(s, bound), ()
    return DigitSeq(pre, per, bound)


def format_seq(a: DigitSeq) -> str:
    """Canonical literal; the inverse of parse_seq on canonical sequences."""
    if not a.preperiod and not a.period:
        return "0()"
    pre = _render_digits(a.preperiod, a.bound)
    per = _render_digits(a.period, a.bound)
    return f"{pre}({per})"


def _horizon(a: DigitSeq) -> int:
    return len(a.preperiod) + max(len(a.period), 1)


def lex_compare(a, b) -> str:
    """Lexicographic comparison of digit sequences.

    Exact for two DigitSeqs.  A PrefixSeq only pins down finitely many
    digits, so the answer is UNDETERMINED when the known digits agree and a
    prefix runs out (two identical equal-length prefixes compare EQUAL).
    """
    la = len(a.digits) if isinstance(a, PrefixSeq) else None
    lb = len(b.digits) if isinstance(b, PrefixSeq) else None
    if la is None and lb is None:
        span = max(len(a.preperiod), len(b.preperiod)) + 2 * lcm(
            max(len(a.period), 1), max(len(b.period), 1))
    else:
        span = min(x for x in (la, lb) if x is not None)
    for i in range(span):
        da, db = a.digit(i), b.digit(i)
        if da < db:
            return LESS
        if da > db:
            return GREATER
    if la is None and lb is None:
        return EQUAL
    if la == lb:
        return EQUAL
    return UNDETERMINED


def shift(a: DigitSeq, n: int) -> DigitSeq:
    """Drop the first n digits."""
    if n < 0:
        raise DomainError("shift distance must be nonnegative")
    k = len(a.preperiod)
    if n <= k:
        return DigitSeq(a.preperiod[n:], a.period, a.bound)
    if not a.period:
        return DigitSeq((), (), a.bound)
    r = (n - k) % len(a.period)
    return DigitSeq((), a.period[r:] + a.period[:r], a.bound)


def evaluate(a: DigitSeq, base: BaseSpec) -> QElement:
    """Exact value of sum_i digit_i / q**i, computed in closed form in Q(q)."""
    if base.kind == UNIT:
        raise DomainError("q ≤ 1 for non-unit kind")
    q = base.q
    acc = base.zero()
    for d in a.preperiod:
        acc = acc * q + d
    value = acc / q ** len(a.preperiod)
    if a.period:
        tail = base.zero()
        for d in a.period:
            tail = tail * q + d
        value = value + tail / ((q ** len(a.period) - 1) * q ** len(a.preperiod))
    return value
