"""The greedy and quasi-greedy digit generators.

Both follow the same recursion on exact remainders: r0 = x and
r_n = q*r_{n-1} - d_n.  The greedy digit is the largest integer d <= M with
d <= q*r_{n-1} (remainders stay >= 0) and the quasi-greedy digit is the
largest with d < q*r_{n-1} strictly (remainders stay > 0), which makes the
quasi-greedy output the lexicographically largest *infinite* expansion.

Remainders determine all future digits, so an exact remainder repeat proves
the expansion eventually periodic and yields a closed form.  A greedy
remainder hitting zero ends a finite expansion.  Otherwise the generator
returns an honest prefix, never a rounded one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalar import ALGEBRAIC, BaseSpec, DomainError, QElement, UNIT, floor_of, sign
from .sequence import DigitSeq, PrefixSeq

GREEDY = "greedy"
QUASI_GREEDY = "quasi_greedy"


@dataclass
class ExpansionResult:
    """Digits plus the exact remainder trace of one generator run."""

    mode: str
    base: BaseSpec
    bound: int | None
    x: QElement
    digits: PrefixSeq
    remainders: list[QElement]
    closed_form: DigitSeq | None

    @property
    def finished(self) -> bool:
        return self.closed_form is not None


def _validate(base, bound, x, quasi):
    if base.kind == UNIT:
        raise DomainError("q ≤ 1")
    if not isinstance(x, QElement):
        x = base.from_rational(x)
    elif not (x.base is base or x.base == base):
        raise DomainError("mismatched BaseSpec")
    s = sign(x)
    if quasi and s == 0:
        raise DomainError("x = 0 has no infinite expansion")
    if s < 0:
        raise DomainError("x out of range")
    if bound is not None:
        if not isinstance(bound, int) or bound < 1:
            raise DomainError("M must be a positive integer or None")
        q = base.q
        if sign(q - (bound + 1)) > 0:
            raise DomainError("M < q−1")
        if sign(x - base.from_rational(bound) / (q - 1)) > 0:
            raise DomainError("x out of range")
    return x


class _CycleTracker:
    """First-repeat detection on exact remainders.

    A dict on the structural representation gives the fast path.  Over a
    reducible defining polynomial two representations can denote the same
    number, so for algebraic bases a miss falls back to exact semantic
    comparison against the stored remainders.
    """

    def __init__(self, base):
        self.semantic = base.kind == ALGEBRAIC
        self.by_rep = {}
        self.trace = []

    def lookup(self, r) -> int | None:
        idx = self.by_rep.get(r.key())
        if idx is not None:
            return idx
        if self.semantic:
            for i, prev in enumerate(self.trace):
                if prev == r:
                    return i
        return None

    def record(self, r):
        self.by_rep.setdefault(r.key(), len(self.trace))
        self.trace.append(r)


def _expand(base, bound, x, max_digits, detect_cycle, quasi):
    x = _validate(base, bound, x, quasi)
    if max_digits < 1:
        raise DomainError("max_digits must be >= 1")
    q = base.q
    digits: list[int] = []
    remainders: list[QElement] = []
    closed = None
    tracker = _CycleTracker(base) if detect_cycle else None
    if tracker:
        tracker.record(x)
    r = x
    for _ in range(max_digits):
        y = q * r
        f = floor_of(y)
        if quasi and y == f:
            f -= 1
        d = f if bound is None else min(bound, f)
        r = y - d
        digits.append(d)
        remainders.append(r)
        if not quasi and sign(r) == 0:
            closed = DigitSeq(tuple(digits), (), bound)
            break
        if tracker:
            j = tracker.lookup(r)
            if j is not None:
                closed = DigitSeq(tuple(digits[:j]), tuple(digits[j:]), bound)
                break
            tracker.record(r)
    return ExpansionResult(
        mode=QUASI_GREEDY if quasi else GREEDY,
        base=base,
        bound=bound,
        x=x,
        digits=PrefixSeq(tuple(digits), bound),
        remainders=remainders,
        closed_form=closed,
    )


def greedy_expand(base: BaseSpec, bound: int | None, x,
                  max_digits: int = 64, detect_cycle: bool = True) -> ExpansionResult:
    """Greedy expansion of x: digit rule d_n = min(M, floor(q*r_{n-1})).

    Requires q > 1 and, for finite M, M >= q-1 and 0 <= x <= M/(q-1); for
    unbounded digits just x >= 0.  The emitted prefix is the prefix of the
    lexicographically largest sequence with value <= x.
    """
    return _expand(base, bound, x, max_digits, detect_cycle, quasi=False)


def quasi_greedy_expand(base: BaseSpec, bound: int | None, x,
                        max_digits: int = 64, detect_cycle: bool = True) -> ExpansionResult:
    """Quasi-greedy expansion of x: the largest digit keeping the partial
    sum strictly below x.

    Requires q > 1 and, for finite M, M >= q-1 and 0 < x <= M/(q-1); for
    unbounded digits just x > 0.  The emitted prefix is the prefix of the
    lexicographically largest *infinite* sequence with value <= x.
    """
    return _expand(base, bound, x, max_digits, detect_cycle, quasi=True)


def digit_bound_check(result: ExpansionResult) -> bool:
    """For an unbounded-alphabet run: every digit from index 2 on is < q."""
    if result.bound is not None:
        raise DomainError("digit_bound_check applies to M=∞ results only")
    q = result.base.q
    return all(sign(q - d) > 0 for d in result.digits.digits[1:])
