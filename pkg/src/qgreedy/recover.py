"""Inverse directions of the characterization theorems.

An admissible expansion of 1 pins down its base uniquely: evaluate(seq, q)
is strictly decreasing in q, so setting it equal to 1 and clearing
denominators gives an integer polynomial with exactly one root in the
admissible range of bases.  That root is isolated by exact bisection with
Sturm-count checks on rational endpoints, so no numerical tolerance enters
the result, and the recovered base is verified by regenerating the input
sequence before it is returned.
"""

from __future__ import annotations

from fractions import Fraction

from . import polys
from .admissible import check_alpha_self, check_beta_self
from .expand import greedy_expand, quasi_greedy_expand
from .scalar import BaseSpec, DomainError, QElement, UNIT
from .sequence import DigitSeq, evaluate

_ONE_THEN_ZEROS = ((1,), ())


def _value_minus_one_poly(seq: DigitSeq) -> polys.Poly:
    """Integer polynomial whose q-roots solve evaluate(seq, q) = 1.

    With preperiod c_1..c_k and period p_1..p_L the value of the sequence
    is (C(q)*(q^L - 1) + P(q)) / (q^k * (q^L - 1)) for the obvious digit
    polynomials C, P (P empty for a finite sequence); clearing denominators
    against 1 gives the polynomial below.
    """
    k = len(seq.preperiod)
    pre_num = polys.make([0])
    for d in seq.preperiod:
        pre_num = polys.add(polys.mul(pre_num, polys.make([0, 1])),
                            polys.make([d]))
    qk = polys.make([0] * k + [1])
    if not seq.period:
        f = polys.sub(pre_num, qk)
    else:
        length = len(seq.period)
        per_num = polys.make([0])
        for d in seq.period:
            per_num = polys.add(polys.mul(per_num, polys.make([0, 1])),
                                polys.make([d]))
        cycle = polys.make([-1] + [0] * (length - 1) + [1])  # q^L - 1
        f = polys.sub(polys.add(polys.mul(pre_num, cycle), per_num),
                      polys.mul(qk, cycle))
    return polys.make(polys.primitive_int(f))


def _isolate_base(f: polys.Poly, bound: int | None) -> BaseSpec:
    """The unique root of f in (1, M+1] (or (1, oo) for unbounded digits)."""
    if polys.degree(f) < 1:
        raise RuntimeError("degenerate polynomial in base recovery")
    if bound is not None:
        top = Fraction(bound + 1)
        if polys.eval_at(f, top) == 0:
            return BaseSpec.rational(top)
    else:
        top = polys.cauchy_root_bound(f)
    if polys.eval_at(f, 1) == 0:
        raise RuntimeError("recovery polynomial vanishes at q = 1")
    count = polys.count_roots_open(f, Fraction(1), top)
    if count != 1:
        raise RuntimeError(f"expected exactly one base in range, found {count}")
    if polys.degree(f) == 1:
        return BaseSpec.rational(-f[0] / f[1])
    return BaseSpec.algebraic(tuple(reversed(f)), Fraction(1), top)


def base_from_alpha(alpha: DigitSeq, bound: int | None) -> BaseSpec:
    """The unique q with quasi-greedy expansion of 1 equal to alpha."""
    report = check_alpha_self(alpha, bound)
    if report.verdict is not True:
        raise DomainError(f"alpha is not admissible: {report.witness.message}")
    base = _isolate_base(_value_minus_one_poly(alpha), bound)
    steps = len(alpha.preperiod) + 2 * len(alpha.period) + 8
    regen = quasi_greedy_expand(base, bound, 1, max_digits=steps)
    if regen.closed_form != alpha:
        raise RuntimeError("recovered base failed the round-trip check")
    return base


def base_from_beta(beta: DigitSeq, bound: int | None) -> BaseSpec:
    """The unique q in [1, M+1] with greedy expansion of 1 equal to beta.

    The sequence 1 0^inf maps to the conventional boundary q = 1, for which
    no generator run exists.
    """
    report = check_beta_self(beta, bound)
    if report.verdict is not True:
        raise DomainError(f"beta is not admissible: {report.witness.message}")
    if (beta.preperiod, beta.period) == _ONE_THEN_ZEROS:
        return BaseSpec.unit()
    base = _isolate_base(_value_minus_one_poly(beta), bound)
    steps = len(beta.preperiod) + 2 * max(len(beta.period), 1) + 8
    regen = greedy_expand(base, bound, 1, max_digits=steps)
    if regen.closed_form != beta:
        raise RuntimeError("recovered base failed the round-trip check")
    return base


def x_from_sequence(seq: DigitSeq, base: BaseSpec) -> QElement:
    """The value a sequence expands: plain exact evaluation."""
    if base.kind == UNIT:
        raise DomainError("q ≤ 1")
    return evaluate(seq, base)
