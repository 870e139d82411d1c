"""Weight functions on length multisets and the seven payphone counters.

Every count is an exact Python int. Each counter reduces to weighting the
interval-evolution multiset of a run by the number of admissible orderings
in which people can break those intervals:

* ``f_weight``: intervals of equal length are interchangeable (rules P2/C2),
* ``g_weight``: lengths 2k and 2k-1 are interchangeable (rules P1/C1),
* ``h_weight``: as G for k >= 2, but length 2 strictly before length 1 (P5).
"""

from __future__ import annotations

import enum
from math import factorial

from privperm.intervals import LengthMultiset, multiplicity_explicit, s_multiset, s_prime

__all__ = [
    "RuleKind",
    "f_weight",
    "g_weight",
    "h_weight",
    "count_rule",
    "a060973",
]


class RuleKind(enum.Enum):
    P1 = "p1"
    P2 = "p2"
    P3 = "p3"
    P4 = "p4"
    P5 = "p5"
    C1 = "c1"
    C2 = "c2"

    @property
    def circular(self) -> bool:
        return self in (RuleKind.C1, RuleKind.C2)

    @classmethod
    def parse(cls, name: str) -> RuleKind:
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(r.value for r in cls)
            raise ValueError(f"unknown rule {name!r}; expected one of {choices}") from None


OEIS_IDS = {
    RuleKind.P1: "A358056",
    RuleKind.P2: "A095236",
    RuleKind.P3: "A361295",
    RuleKind.P4: "A095912",
    RuleKind.P5: "A363785",
    RuleKind.C1: "A361296",
    RuleKind.C2: "A095239",
}

# P3, P4, P5 at n = 1, 2, 3
_SMALL_BASE = (1, 2, 4)


def _even_mass(m: LengthMultiset, start: int = 2) -> int:
    return sum(mult for k, mult in m.items() if k % 2 == 0 and k >= start)


def _paired_factorials(m: LengthMultiset, first_pair: int) -> int:
    """Product over k >= first_pair of (#_{2k} M + #_{2k-1} M)!."""
    pairs: dict[int, int] = {}
    for length, mult in m.items():
        k = (length + 1) // 2
        if k >= first_pair:
            pairs[k] = pairs.get(k, 0) + mult
    out = 1
    for mult in pairs.values():
        out *= factorial(mult)
    return out


def f_weight(m: LengthMultiset) -> int:
    out = 1
    for mult in m.values():
        out *= factorial(mult)
    return out << _even_mass(m)


def g_weight(m: LengthMultiset) -> int:
    # length-2 intervals do not contribute a factor of two: their middle
    # choice is cancelled by having to precede the length-1 piece they leave
    return _paired_factorials(m, 1) << _even_mass(m, start=4)


def h_weight(m: LengthMultiset) -> int:
    out = _paired_factorials(m, 2) * factorial(m.count(2)) * factorial(m.count(1))
    return out << _even_mass(m)


def _row_sum(weight, n: int, first: int, last: int) -> int:
    return sum(weight(s_prime(i - 1) | s_prime(n - i)) for i in range(first, last + 1))


def count_rule(rule: RuleKind, n: int) -> int:
    """Number of payphone permutations of size ``n`` under ``rule``."""
    if n < 1:
        raise ValueError(f"counts are defined for n >= 1, got {n}")
    rule = RuleKind.parse(rule) if isinstance(rule, str) else rule

    if rule is RuleKind.C2:
        return n * f_weight(s_multiset(n - 1))
    if rule is RuleKind.C1:
        return n * g_weight(s_multiset(n - 1))
    if rule is RuleKind.P2:
        return _row_sum(f_weight, n, 1, n)
    if rule is RuleKind.P1:
        return _row_sum(g_weight, n, 1, n)

    if n <= 3:
        return _SMALL_BASE[n - 1]
    if rule is RuleKind.P3:
        return (
            2 * g_weight(s_prime(n - 1))
            + 2 * g_weight(s_prime(n - 2))
            + _row_sum(g_weight, n, 3, n - 2)
        )
    if rule is RuleKind.P4:
        return (
            2 * f_weight(s_prime(n - 1))
            + 2 * f_weight(s_prime(n - 2))
            + _row_sum(f_weight, n, 3, n - 2)
        )
    if rule is RuleKind.P5:
        return (
            2 * h_weight(s_prime(n - 1))
            + h_weight(LengthMultiset({2: 1}) | s_prime(n - 2))
            + _row_sum(h_weight, n, 3, n - 2)
        )
    raise AssertionError(f"no counting formula for {rule}")


def a060973(n: int) -> int:
    """f(1) = 0, f(2) = 1, f(n) = f(floor(n/2)) + f(ceil(n/2)); evaluated as #_1 S(n-1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 0
    return multiplicity_explicit(n - 1, 1)
