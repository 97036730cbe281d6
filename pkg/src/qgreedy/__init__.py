"""Exact greedy and quasi-greedy digit expansions in non-integer bases.

A base q > 1 (exact rational or real algebraic) and a value x in Q(q)
determine a greedy and a quasi-greedy digit expansion over the alphabet
{0, ..., M} (M may be unbounded).  This package generates them with exact
remainder tracking, checks the lexicographic conditions characterizing
them, recovers the base from an admissible expansion of 1, and relates the
two expansions structurally -- all in exact arithmetic.
"""

from .admissible import (AdmissibilityReport, Violation, check_alpha_self,
                         check_beta_self, check_greedy_vs_alpha,
                         check_quasi_vs_alpha)
from .expand import (ExpansionResult, digit_bound_check, greedy_expand,
                     quasi_greedy_expand)
from .oracle import brute_greedy_prefix, brute_quasi_prefix
from .recover import base_from_alpha, base_from_beta, x_from_sequence
from .relate import alpha_from_beta, enumerate_between, quasi_from_greedy
from .scalar import (BaseSpec, DomainError, ParseError, QElement, arith,
                     floor_of, make_base, sign, to_decimal)
from .sequence import (DigitSeq, PrefixSeq, evaluate, format_seq,
                       lex_compare, parse_seq, shift)

__all__ = [
    "AdmissibilityReport", "BaseSpec", "DigitSeq", "DomainError",
    "ExpansionResult", "ParseError", "PrefixSeq", "QElement", "Violation",
    "alpha_from_beta", "arith", "base_from_alpha", "base_from_beta",
    "brute_greedy_prefix", "brute_quasi_prefix", "check_alpha_self",
    "check_beta_self", "check_greedy_vs_alpha", "check_quasi_vs_alpha",
    "digit_bound_check", "enumerate_between", "evaluate", "floor_of",
    "format_seq", "greedy_expand", "lex_compare", "make_base", "parse_seq",
    "quasi_from_greedy", "quasi_greedy_expand", "shift", "sign",
    "to_decimal", "x_from_sequence",
]
