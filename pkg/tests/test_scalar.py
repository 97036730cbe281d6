"""Exact arithmetic kernel: construction, arithmetic, signs, floors."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgreedy.scalar import (BaseSpec, DomainError, ParseError, arith, floor_of,
                            make_base, sign, to_decimal)

GOLDEN = "root(1,-1,-1;1.5,1.7)"

rationals = st.fractions(min_value=-50, max_value=50)


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


class TestMakeBase:
    def test_integer_literal(self):
        b = make_base("2")
        assert b.kind == "rational"
        assert b.value == 2

    def test_fraction_and_decimal_literals_are_exact(self):
        assert make_base("3/2").value == Fraction(3, 2)
        assert make_base("1.8").value == Fraction(9, 5)

    def test_golden_ratio_root_literal(self):
        b = make_base(GOLDEN)
        assert b.kind == "algebraic"
        lo, hi = b.interval()
        assert Fraction(3, 2) <= lo < hi <= Fraction(17, 10)

    def test_no_root_in_interval(self):
        with pytest.raises(DomainError, match="no root in interval"):
            make_base("root(1,-1,-1;2.5,3)")

    def test_multiple_roots_rejected(self):
        # x^2 - 3x + 2 has roots 1 and 2
        with pytest.raises(DomainError, match="multiple roots"):
            make_base("root(1,-3,2;1/2,5/2)")

    def test_small_base_rejected(self):
        with pytest.raises(DomainError, match="q ≤ 1"):
            make_base("1")
        with pytest.raises(DomainError, match="q ≤ 1"):
            make_base("root(1,-1,-1;-1,1/2)")  # isolates the negative root

    def test_parse_errors(self):
        for text in ["", "abc", "root(1,-1,-1)", "root(1,-1,-1;1.5)", "1/2/3"]:
            with pytest.raises(ParseError):
                make_base(text)

    def test_degree_one_root_collapses_to_rational(self):
        b = make_base("root(2,-3;1,2)")
        assert b.kind == "rational"
        assert b.value == Fraction(3, 2)

    def test_interval_endpoint_on_other_root(self):
        # x^2 - 3x + 2: interval (1, 2] style literal with endpoint at root 1
        b = make_base("root(1,-3,2;1,3/2)")
        assert b.kind == "rational" and b.value == 2 or b.kind == "algebraic"

    def test_reducible_polynomial_with_rational_root(self):
        # (2x - 3)(x^2 - 5) has 3/2 as its only root in (1.4, 1.6)
        b = make_base("root(2,-3,-10,15;1.4,1.6)")
        q = b.q
        assert q * 2 == 3

    def test_equality_across_literals(self):
        assert make_base(GOLDEN) == make_base("root(1,-1,-1;1.6,1.65)")
        assert make_base(GOLDEN) != make_base("root(1,-1,-1,-1;1.8,1.9)")
        assert make_base("2") == make_base("2")


class TestArith:
    def test_golden_square_reduces(self):
        b = make_base(GOLDEN)
        q = b.q
        assert (arith(q, q, "mul")).rep == (Fraction(1), Fraction(1))  # q + 1

    def test_rational_addition(self):
        b = make_base("2")
        a = b.from_rational(Fraction(3, 2))
        c = b.from_rational(Fraction(1, 2))
        assert arith(a, c, "add") == 2

    def test_subtraction_identity(self):
        b = make_base(GOLDEN)
        assert arith(b.q, b.q, "sub") == 0

    def test_mismatched_bases_rejected(self):
        with pytest.raises(DomainError, match="mismatched"):
            arith(make_base("2").one(), make_base("3").one(), "add")

    def test_division_inverts(self):
        b = make_base(GOLDEN)
        q = b.q
        assert (q * q - 1) / q == 1  # q^2 - 1 = q

    @given(a=rationals, c=rationals)
    @settings(max_examples=60, deadline=None)
    def test_matches_plain_rational_arithmetic(self, a, c):
        b = make_base("root(1,-1,-1;1.5,1.7)")
        ea, ec = b.from_rational(a), b.from_rational(c)
        assert ea + ec == a + c
        assert ea - ec == a - c
        assert ea * ec == a * c


class TestSign:
    def test_defining_relation_is_zero(self):
        b = make_base(GOLDEN)
        q = b.q
        assert sign(q * q - q - 1) == 0

    def test_golden_exceeds_eight_fifths(self):
        b = make_base(GOLDEN)
        assert sign(b.q - Fraction(8, 5)) == 1

    def test_negative_rational(self):
        assert sign(make_base("2").from_rational(Fraction(-3, 7))) == -1

    def test_fibonacci_reduction(self):
        b = make_base(GOLDEN)
        q = b.q
        for n in range(2, 13):
            assert sign(q ** n - fib(n) * q - fib(n - 1)) == 0

    @given(a=rationals, c=rationals)
    @settings(max_examples=40, deadline=None)
    def test_multiplicative(self, a, c):
        b = make_base("root(1,-1,-1;1.5,1.7)")
        q = b.q
        ea = q * a + c       # a*q + c spans nontrivial elements
        ec = q * c - a
        assert sign(ea * ec) == sign(ea) * sign(ec)


class TestFloor:
    def test_examples(self):
        b = make_base(GOLDEN)
        assert floor_of(b.q) == 1
        assert floor_of(b.q ** 2) == 2
        assert floor_of(make_base("2").from_rational(2)) == 2

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            floor_of(make_base("2").from_rational(-1))

    @given(a=st.fractions(min_value=0, max_value=100))
    @settings(max_examples=40, deadline=None)
    def test_floor_bound(self, a):
        b = make_base("root(1,-1,-1;1.5,1.7)")
        e = b.from_rational(a) * b.q / b.q  # exercise the reduction path
        n = floor_of(e)
        assert sign(e - n) >= 0
        assert sign(e - (n + 1)) < 0


class TestToDecimal:
    def test_golden_ten_digits(self):
        b = make_base(GOLDEN)
        assert to_decimal(b.q, 10) == "≈1.6180339887"

    def test_exact_quarter(self):
        b = make_base("2")
        assert to_decimal(b.from_rational(Fraction(1, 4)), 3) == "0.250"

    def test_inexact_third(self):
        b = make_base("2")
        assert to_decimal(b.from_rational(Fraction(1, 3)), 4) == "≈0.3333"

    def test_algebraic_element_landing_on_exact_value(self):
        b = make_base(GOLDEN)
        q = b.q
        assert to_decimal(q * q - q, 6) == "1.000000"

    def test_tribonacci_constant(self):
        b = make_base("root(1,-1,-1,-1;1.8,1.9)")
        assert to_decimal(b.q, 10) == "≈1.8392867552"
