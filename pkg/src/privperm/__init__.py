"""Exact counting and brute-force enumeration of payphone permutations."""

from privperm.counting import RuleKind, a060973, count_rule, f_weight, g_weight, h_weight
from privperm.intervals import (
    LengthMultiset,
    multiplicity_explicit,
    multiplicity_lemma,
    multiset_union,
    s_multiset,
    s_prime,
)

__all__ = [
    "LengthMultiset",
    "RuleKind",
    "a060973",
    "count_rule",
    "f_weight",
    "g_weight",
    "h_weight",
    "multiplicity_explicit",
    "multiplicity_lemma",
    "multiset_union",
    "s_multiset",
    "s_prime",
]
