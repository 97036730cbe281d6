"""Dense univariate polynomials over exact rationals.

Coefficients are stored lowest degree first with no trailing zeros, so ()
is the zero polynomial and (c,) a nonzero constant.  Everything works on
plain tuples of Fraction; this module is shared plumbing for the scalar
kernel (reduction, gcd zero tests, interval refinement) and for the root
isolation used when recovering a base from a digit sequence.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

Poly = tuple[Fraction, ...]


def make(coeffs) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return make((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return make(out)


def scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return ()
    return tuple(a * c for a in p)


def eval_at(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def div_mod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Exact division with remainder; den must be nonzero."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return (), num
    rem = list(num)
    lead = den[-1]
    quo = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = rem[i + len(den) - 1] / lead
        if c:
            quo[i] = c
            for j, d in enumerate(den):
                rem[i + j] -= c * d
    return make(quo), make(rem)


def monic(p: Poly) -> Poly:
    if not p:
        return p
    return scale(p, 1 / p[-1])


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over Q[x]."""
    a, b = p, q
    while b:
        a, b = b, div_mod(a, b)[1]
    return monic(a)


def xgcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns monic g and s, t with s*p + t*q = g."""
    a, b = p, q
    sa, sb = make([1]), ()
    ta, tb = (), make([1])
    while b:
        quo, rem = div_mod(a, b)
        a, b = b, rem
        sa, sb = sb, sub(sa, mul(quo, sb))
        ta, tb = tb, sub(ta, mul(quo, tb))
    if a:
        lead = a[-1]
        a, sa, ta = scale(a, 1 / lead), scale(sa, 1 / lead), scale(ta, 1 / lead)
    return a, sa, ta


def derivative(p: Poly) -> Poly:
    return make(c * i for i, c in enumerate(p) if i > 0)


def squarefree_part(p: Poly) -> Poly:
    if degree(p) < 1:
        return monic(p)
    g = gcd(p, derivative(p))
    if degree(g) < 1:
        return monic(p)
    return monic(div_mod(p, g)[0])


def primitive_int(coeffs) -> tuple[int, ...]:
    """Integer coefficients divided by their content, leading term positive."""
    cs = [int(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return ()
    g = 0
    for c in cs:
        g = int_gcd(g, abs(c))
    if cs[-1] < 0:
        g = -g
    return tuple(c // g for c in cs)


def _sign_variations(values) -> int:
    count = 0
    prev = 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, derivative(p)]
    while chain[-1]:
        rem = div_mod(chain[-2], chain[-1])[1]
        chain.append(neg(rem))
    chain.pop()
    return chain


def count_roots_open(p: Poly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    Roots sitting exactly on an endpoint are divided out first, so they are
    never counted; the Sturm chain is built from the squarefree part.
    """
    if not p:
        raise ValueError("cannot count roots of the zero polynomial")
    if lo >= hi:
        return 0
    q = squarefree_part(p)
    while q and eval_at(q, lo) == 0:
        q = div_mod(q, make([-lo, 1]))[0]
    while q and eval_at(q, hi) == 0:
        q = div_mod(q, make([-hi, 1]))[0]
    if degree(q) < 1:
        return 0
    chain = sturm_chain(q)
    v_lo = _sign_variations(eval_at(f, lo) for f in chain)
    v_hi = _sign_variations(eval_at(f, hi) for f in chain)
    return v_lo - v_hi


def interval_eval(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of {p(x) : x in [lo, hi]} by interval Horner evaluation."""
    vlo = vhi = Fraction(0)
    for c in reversed(p):
        cands = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
        vlo, vhi = min(cands) + c, max(cands) + c
    return vlo, vhi


def cauchy_root_bound(p: Poly) -> Fraction:
    """Upper bound strictly exceeding the absolute value of every root."""
    if degree(p) < 1:
        raise ValueError("constant polynomial has no roots")
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p[:-1]) / lead
