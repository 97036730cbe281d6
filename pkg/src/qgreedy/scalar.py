"""Exact arithmetic in Q(q) for a base q > 1, with decidable comparisons.

The base is an exact rational p/r > 1, a real algebraic number given by an
integer polynomial plus a rational interval isolating exactly one of its
real roots, or the symbolic boundary q = 1 (accepted only by the recovery
conventions, never by arithmetic).  Elements of Q(q) are polynomials in q
with rational coefficients, reduced modulo the squarefree part of the
defining polynomial.

Every comparison is decided exactly.  Whether an element is zero is settled
by a gcd argument: the element vanishes at q iff gcd(rep, modulus) still
has a root inside the isolating interval, which a Sturm count decides.  A
nonzero element gets its sign from interval evaluation after refining the
isolating interval by bisection; termination is guaranteed because the
value is known to be nonzero.  No floating point enters any decision.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from . import polys
from .polys import Poly

RATIONAL = "rational"
ALGEBRAIC = "algebraic"
UNIT = "unit"


class ParseError(ValueError):
    """A literal does not conform to its grammar."""


class DomainError(ValueError):
    """An operation was called outside its stated preconditions."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+|\.\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse an integer, fraction, or exact decimal literal."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"invalid rational literal: {text!r}")
    return Fraction(s)


class BaseSpec:
    """The base q: exact rational, real algebraic, or the symbolic q = 1.

    Immutable as a value; the isolating interval for an algebraic base is a
    private refinement cache that only ever shrinks around the same root,
    so sharing between threads stays safe.
    """

    __slots__ = ("kind", "value", "poly", "_modulus", "_given", "_lo", "_hi",
                 "_sign_lo", "_exact")

    def __init__(self, kind, value=None, poly=None, modulus=None, interval=None):
        self.kind = kind
        self.value = value
        self.poly = poly
        self._modulus = modulus
        self._given = interval
        self._exact = None
        self._sign_lo = None
        if interval is not None:
            self._lo, self._hi = interval
            self._sign_lo = 1 if polys.eval_at(modulus, self._lo) > 0 else -1
        else:
            self._lo = self._hi = None

    @classmethod
    def rational(cls, value) -> "BaseSpec":
        v = Fraction(value)
        if v <= 1:
            raise DomainError("q ≤ 1 for non-unit kind")
        return cls(RATIONAL, value=v, modulus=polys.make([-v, 1]))

    @classmethod
    def unit(cls) -> "BaseSpec":
        return cls(UNIT, value=Fraction(1))

    @classmethod
    def algebraic(cls, coeffs_high_to_low, lo, hi) -> "BaseSpec":
        """Validate and refine an isolating interval for the root q > 1.

        Returns a rational BaseSpec instead when the polynomial has degree
        one or the refinement lands exactly on the root.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        coeffs = polys.primitive_int(reversed(list(coeffs_high_to_low)))
        if not coeffs:
            raise ParseError("zero polynomial cannot define a base")
        if lo >= hi:
            raise DomainError("empty isolating interval")
        p = polys.make(coeffs)
        if polys.degree(p) == 0:
            raise DomainError("no root in interval")
        if polys.degree(p) == 1:
            root = -p[0] / p[1]
            if not lo < root < hi:
                raise DomainError("no root in interval")
            return cls.rational(root)

        sf = polys.squarefree_part(p)
        n = polys.count_roots_open(sf, lo, hi)
        if n == 0:
            raise DomainError("no root in interval")
        if n > 1:
            raise DomainError("multiple roots in interval")
        if hi <= 1:
            raise DomainError("q ≤ 1 for non-unit kind")
        if lo < 1:
            if polys.count_roots_open(sf, Fraction(1), hi) == 0:
                raise DomainError("q ≤ 1 for non-unit kind")
            lo = Fraction(1)

        # Move endpoints off roots of the squarefree part; with both
        # endpoints root-free a simple root forces a sign change, which the
        # bisection in sign() relies on.
        exact = None
        if polys.eval_at(sf, lo) == 0:
            kind, lo = _step_inside(sf, lo, hi, from_left=True)
            if kind == "exact":
                exact = lo
        if exact is None and polys.eval_at(sf, hi) == 0:
            kind, hi = _step_inside(sf, lo, hi, from_left=False)
            if kind == "exact":
                exact = hi
        if exact is not None:
            return cls.rational(exact)
        assert (polys.eval_at(sf, lo) > 0) != (polys.eval_at(sf, hi) > 0)
        return cls(ALGEBRAIC, poly=coeffs, modulus=polys.monic(sf),
                   interval=(lo, hi))

    # -- root interval management (algebraic kind only) --

    def interval(self) -> tuple[Fraction, Fraction]:
        if self._exact is not None:
            return self._exact, self._exact
        return self._lo, self._hi

    def refine(self) -> None:
        """One bisection step; may discover that q is exactly rational."""
        if self._exact is not None:
            return
        cut = (self._lo + self._hi) / 2
        v = polys.eval_at(self._modulus, cut)
        if v == 0:
            self._exact = cut
        elif (v > 0) == (self._sign_lo > 0):
            self._lo = cut
        else:
            self._hi = cut

    # -- element constructors --

    def element(self, coeffs) -> "QElement":
        if self.kind == UNIT:
            raise DomainError("q = 1 supports no field arithmetic")
        return QElement(self, self._reduce(polys.make(coeffs)))

    def from_rational(self, v) -> "QElement":
        return self.element([Fraction(v)])

    @property
    def q(self) -> "QElement":
        return self.element([0, 1])

    def zero(self) -> "QElement":
        return self.element([])

    def one(self) -> "QElement":
        return self.element([1])

    def _reduce(self, rep: Poly) -> Poly:
        if polys.degree(rep) < polys.degree(self._modulus):
            return rep
        return polys.div_mod(rep, self._modulus)[1]

    # -- identity --

    def __eq__(self, other):
        if not isinstance(other, BaseSpec):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind in (RATIONAL, UNIT):
            return self.value == other.value
        if self.poly != other.poly:
            return False
        lo = max(self._given[0], other._given[0])
        hi = min(self._given[1], other._given[1])
        if lo >= hi:
            return False
        return polys.count_roots_open(self._modulus, lo, hi) == 1

    def __hash__(self):
        return hash((self.kind, self.value, self.poly))

    def __str__(self):
        if self.kind == UNIT:
            return "1 (unit)"
        if self.kind == RATIONAL:
            return str(self.value)
        coeffs = ",".join(str(c) for c in reversed(self.poly))
        lo, hi = self._given
        return f"root({coeffs};{lo},{hi})"

    def __repr__(self):
        return f"BaseSpec({self})"


def _step_inside(sf, lo, hi, from_left):
    """Endpoint lying on a root of sf: nudge it just inside the interval.

    The returned point is root-free with no further root between it and the
    old endpoint, unless the probe hits the isolated root itself, in which
    case q is exactly rational and ("exact", root) is returned.
    """
    k = 4
    while True:
        t = lo + (hi - lo) / k if from_left else hi - (hi - lo) / k
        if polys.eval_at(sf, t) == 0:
            return "exact", t
        inner = (polys.count_roots_open(sf, lo, t) if from_left
                 else polys.count_roots_open(sf, t, hi))
        if inner == 0:
            return "ok", t
        k *= 2


class QElement:
    """An exact element of Q(q), reduced modulo the defining polynomial.

    Supports +, -, *, / and exact comparisons; operands must share the same
    BaseSpec (plain ints and Fractions are embedded automatically).
    """

    __slots__ = ("base", "rep")

    def __init__(self, base: BaseSpec, rep: Poly):
        self.base = base
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, QElement):
            if other.base is self.base or other.base == self.base:
                return other
            raise DomainError("mismatched BaseSpec")
        if isinstance(other, (int, Fraction)):
            return self.base.from_rational(other)
        return None

    def key(self):
        """Structural key (use semantic == to compare as field elements)."""
        return self.rep

    # -- ring operations --

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QElement(self.base, polys.add(self.rep, o.rep))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QElement(self.base, polys.sub(self.rep, o.rep))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QElement(self.base, polys.sub(o.rep, self.rep))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QElement(self.base, self.base._reduce(polys.mul(self.rep, o.rep)))

    __rmul__ = __mul__

    def __neg__(self):
        return QElement(self.base, polys.neg(self.rep))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self.base.one()
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if sign(o) == 0:
            raise ZeroDivisionError("division by zero in Q(q)")
        inv = _invert(o.rep, self.base._modulus)
        return QElement(self.base, self.base._reduce(polys.mul(self.rep, inv)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    # -- exact comparisons --

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return sign(self - o) == 0

    def __lt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else sign(self - o) < 0

    def __le__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else sign(self - o) <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else sign(self - o) > 0

    def __ge__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else sign(self - o) >= 0

    __hash__ = None

    def __str__(self):
        if not self.rep:
            return "0"
        parts = []
        for i in range(len(self.rep) - 1, -1, -1):
            c = self.rep[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"QElement({self})"


def _invert(rep: Poly, modulus: Poly) -> Poly:
    """Polynomial w with w(q)*rep(q) = 1, for rep not vanishing at q.

    When the modulus is reducible the gcd with rep may be nonconstant even
    though rep(q) != 0; the offending factor cannot vanish at q, so we drop
    it and invert modulo the cofactor, which still has q as a root.
    """
    h = modulus
    while True:
        g, s, _ = polys.xgcd(rep, h)
        if polys.degree(g) == 0:
            return s
        h = polys.div_mod(h, g)[0]


def make_base(text: str) -> BaseSpec:
    """Parse a base literal: integer, fraction, exact decimal, or root(...)."""
    s = text.strip()
    if s.startswith("root"):
        body = s[4:].strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError(f"malformed root literal: {text!r}")
        parts = body[1:-1].split(";")
        if len(parts) != 2:
            raise ParseError("root literal needs coefficients ; interval")
        try:
            coeffs = [int(tok.strip()) for tok in parts[0].split(",")]
        except ValueError:
            raise ParseError(f"bad coefficient list: {parts[0]!r}") from None
        endpoints = parts[1].split(",")
        if len(endpoints) != 2:
            raise ParseError("interval needs exactly two endpoints")
        lo, hi = (parse_rational(tok) for tok in endpoints)
        return BaseSpec.algebraic(coeffs, lo, hi)
    return BaseSpec.rational(parse_rational(s))


def arith(a: QElement, b: QElement, op: str) -> QElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def sign(a: QElement) -> int:
    """Exact sign of a: -1, 0, or +1."""
    base = a.base
    if not a.rep:
        return 0
    if base.kind == RATIONAL or base._exact is not None:
        x = base.value if base.kind == RATIONAL else base._exact
        v = polys.eval_at(a.rep, x)
        return -1 if v < 0 else (1 if v > 0 else 0)

    lo, hi = base.interval()
    vlo, vhi = polys.interval_eval(a.rep, lo, hi)
    if vlo > 0:
        return 1
    if vhi < 0:
        return -1

    # Zero test: a vanishes at q iff gcd(rep, modulus) keeps a root inside
    # the isolating interval.
    g = polys.gcd(a.rep, base._modulus)
    if polys.degree(g) >= 1 and polys.count_roots_open(g, lo, hi) == 1:
        return 0

    while True:
        base.refine()
        if base._exact is not None:
            v = polys.eval_at(a.rep, base._exact)
            return -1 if v < 0 else (1 if v > 0 else 0)
        vlo, vhi = polys.interval_eval(a.rep, *base.interval())
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1


def floor_of(a: QElement) -> int:
    """Largest integer n with n <= a, for a >= 0."""
    s = sign(a)
    if s < 0:
        raise DomainError("floor_of requires a nonnegative argument")
    if s == 0:
        return 0
    hi = 1
    while sign(a - hi) >= 0:
        hi *= 2
    lo = hi // 2 if hi > 1 else 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if sign(a - mid) >= 0:
            lo = mid
        else:
            hi = mid
    return lo


def exact_value(a: QElement) -> Fraction | None:
    """The value of a as a Fraction when that is already evident, else None."""
    base = a.base
    if base.kind == RATIONAL:
        return polys.eval_at(a.rep, base.value)
    if base._exact is not None:
        return polys.eval_at(a.rep, base._exact)
    if polys.degree(a.rep) <= 0:
        return a.rep[0] if a.rep else Fraction(0)
    return None


def to_decimal(a: QElement, digits: int) -> str:
    """Decimal approximation with error < 10**-digits.

    The string carries a leading "≈" unless it represents the value
    exactly.
    """
    if digits < 1:
        raise DomainError("digits must be >= 1")
    scale = 10 ** digits
    v = exact_value(a)
    if v is not None:
        n = math.floor(v * scale)
        return _render_decimal(n, digits, exact=(n == v * scale))
    base = a.base
    while True:
        lo, hi = base.interval()
        vlo, vhi = polys.interval_eval(a.rep, lo, hi)
        nlo, nhi = math.floor(vlo * scale), math.floor(vhi * scale)
        if nlo == nhi:
            exact = sign(a - Fraction(nlo, scale)) == 0
            return _render_decimal(nlo, digits, exact=exact)
        if nhi - nlo == 1 and sign(a - Fraction(nhi, scale)) == 0:
            return _render_decimal(nhi, digits, exact=True)
        base.refine()


def _render_decimal(n: int, digits: int, exact: bool) -> str:
    sign_str = "-" if n < 0 else ""
    ip, fp = divmod(abs(n), 10 ** digits)
    s = f"{sign_str}{ip}.{str(fp).zfill(digits)}"
    return s if exact else "≈" + s
