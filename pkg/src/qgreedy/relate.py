"""Structural relations between greedy and quasi-greedy expansions.

If the greedy expansion of x ends with a last nonzero digit b_m, the
quasi-greedy expansion is b_1..b_{m-1}(b_m - 1) followed by the quasi-greedy
expansion alpha of 1; otherwise the two coincide.  Specializing x = 1: when
beta (the greedy expansion of 1) is finite, alpha is purely periodic with
the primitive period beta_1..beta_{m-1}(beta_m - 1).

Between the quasi-greedy and greedy expansions of the same x lies a
decreasing family of further expansions; enumerate_between lists it.  All
transforms here operate on closed-form sequences; prefix-only inputs are
rejected rather than guessed, since "last nonzero digit" is undecidable on
a prefix.
"""

from __future__ import annotations

from .admissible import check_beta_self, check_greedy_vs_alpha
from .expand import greedy_expand, quasi_greedy_expand
from .scalar import BaseSpec, DomainError, sign
from .sequence import DigitSeq, GREATER, evaluate, lex_compare

_ONE_THEN_ZEROS = ((1,), ())


def quasi_from_greedy(b: DigitSeq, alpha: DigitSeq, bound: int | None) -> DigitSeq:
    """Quasi-greedy expansion from the greedy one and alpha."""
    if not check_greedy_vs_alpha(b, alpha, bound):
        raise DomainError("b is not an admissible greedy expansion")
    if b.is_infinite:
        return b
    m = b.last_nonzero_index()
    if m is None:
        raise DomainError("x = 0 has no quasi-greedy expansion")
    head = b.preperiod[:m - 1] + (b.preperiod[m - 1] - 1,)
    return DigitSeq(head + alpha.preperiod, alpha.period, bound)


def alpha_from_beta(beta: DigitSeq, bound: int | None) -> DigitSeq:
    """Quasi-greedy expansion of 1 from the greedy expansion of 1."""
    if not check_beta_self(beta, bound):
        raise DomainError("beta is not an admissible greedy expansion of 1")
    if (beta.preperiod, beta.period) == _ONE_THEN_ZEROS:
        raise DomainError("q = 1 has no quasi-greedy expansion of 1")
    if beta.is_infinite:
        return beta
    m = beta.last_nonzero_index()
    period = beta.preperiod[:m - 1] + (beta.preperiod[m - 1] - 1,)
    alpha = DigitSeq((), period, bound)
    if len(alpha.period) != m or alpha.preperiod:
        raise RuntimeError("derived period is not primitive")
    return alpha


def enumerate_between(base: BaseSpec, bound: int | None, x,
                      count: int = 0) -> list[DigitSeq]:
    """The greedy expansion of x followed by up to `count` further
    expansions of x, in strictly decreasing lexicographic order.

    Finitely many expansions exist between greedy and quasi-greedy only
    when the greedy expansion is finite; when the greedy expansion of 1 is
    finite too the family is b_1..b_{m-1}(b_m-1) (beta_1..(beta_n-1))^N
    beta_1..beta_n 0^inf for N = 0, 1, ...  Every returned sequence is
    re-verified to evaluate exactly to x.
    """
    if count < 0:
        raise DomainError("count must be nonnegative")
    if not hasattr(x, "rep"):
        x = base.from_rational(x)
    if sign(x) == 0:
        return [DigitSeq((), (), bound)]
    g = greedy_expand(base, bound, x)
    if g.closed_form is None:
        raise DomainError("greedy expansion of x has no closed form "
                          "within the digit limit")
    b = g.closed_form
    out = [b]
    if b.is_infinite:
        _verify_values(out, base, x)
        return out
    gb = greedy_expand(base, bound, 1)
    if gb.closed_form is None:
        raise DomainError("greedy expansion of 1 has no closed form "
                          "within the digit limit")
    beta = gb.closed_form
    m = b.last_nonzero_index()
    head = b.preperiod[:m - 1] + (b.preperiod[m - 1] - 1,)
    if beta.is_infinite:
        if count >= 1:
            out.append(DigitSeq(head + beta.preperiod, beta.period, bound))
    else:
        block = beta.preperiod[:-1] + (beta.preperiod[-1] - 1,)
        for n_copies in range(count):
            word = head + block * n_copies + beta.preperiod
            out.append(DigitSeq(word, (), bound))
    _verify_values(out, base, x)
    for first, second in zip(out, out[1:]):
        if lex_compare(first, second) != GREATER:
            raise RuntimeError("enumerated family is not strictly decreasing")
    return out


def _verify_values(seqs, base, x):
    for s in seqs:
        if evaluate(s, base) != x:
            raise RuntimeError(f"enumerated expansion {s} does not evaluate to x")
