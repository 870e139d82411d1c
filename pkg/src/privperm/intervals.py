"""Multisets of interval lengths and the multiplicities #_k S(n).

S(n) collects the lengths of every nonempty interval that shows up while a
closed interval of length n fills up under max-distance seating. The
multiplicity of k in S(n) is available three ways: by expanding the
recurrence, by the summation formula over powers of two, and by the explicit
piecewise formula. They must agree; the tests hold them to that.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from functools import lru_cache

__all__ = [
    "LengthMultiset",
    "multiset_union",
    "s_multiset",
    "s_prime",
    "multiplicity_lemma",
    "multiplicity_explicit",
]

# multiplicities are treated as unsigned 64-bit counters
MULTIPLICITY_MAX = 2**64 - 1


class LengthMultiset(Mapping[int, int]):
    """Immutable sparse multiset of positive interval lengths.

    Behaves as a read-only mapping ``length -> multiplicity``; lengths that
    are absent have multiplicity 0 (``m[k]`` raises, ``m.count(k)`` does not).
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping[int, int] | None = None) -> None:
        clean: dict[int, int] = {}
        for k, mult in (entries or {}).items():
            if k < 1:
                raise ValueError(f"interval lengths must be >= 1, got {k}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for length {k}")
            if mult > MULTIPLICITY_MAX:
                raise OverflowError(f"multiplicity of {k} exceeds 64 bits")
            if mult:
                clean[k] = mult
        self._entries = dict(sorted(clean.items()))
        self._hash: int | None = None

    @classmethod
    def of(cls, *lengths: int) -> LengthMultiset:
        """Build from a flat list of lengths, e.g. ``of(1, 1, 3)`` is {1^2, 3}."""
        entries: dict[int, int] = {}
        for k in lengths:
            entries[k] = entries.get(k, 0) + 1
        return cls(entries)

    def __getitem__(self, k: int) -> int:
        return self._entries[k]

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def count(self, k: int) -> int:
        return self._entries.get(k, 0)

    def total(self) -> int:
        return sum(self._entries.values())

    def __or__(self, other: LengthMultiset) -> LengthMultiset:
        return multiset_union(self, other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LengthMultiset):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._entries.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._entries:
            return "LengthMultiset()"
        parts = [str(k) if m == 1 else f"{k}^{m}" for k, m in self._entries.items()]
        return "LengthMultiset{" + ", ".join(parts) + "}"


EMPTY = LengthMultiset()


def multiset_union(a: LengthMultiset, b: LengthMultiset) -> LengthMultiset:
    """Multiset sum: multiplicities add. Raises OverflowError past 64 bits."""
    merged = dict(a.items())
    for k, mult in b.items():
        total = merged.get(k, 0) + mult
        if total > MULTIPLICITY_MAX:
            raise OverflowError(f"multiplicity of {k} exceeds 64 bits")
        merged[k] = total
    return LengthMultiset(merged)


@lru_cache(maxsize=None)
def s_multiset(n: int) -> LengthMultiset:
    """Lengths of all intervals that appear while a closed interval of length n fills up."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return EMPTY
    lo = (n - 1) // 2
    hi = n - 1 - lo
    return LengthMultiset({n: 1}) | s_multiset(lo) | s_multiset(hi)


@lru_cache(maxsize=None)
def s_prime(l: int) -> LengthMultiset:
    """Contribution of a semi-closed interval of length ``l``: S(l-1) plus its full length 2l-1."""
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    if l == 0:
        return EMPTY
    return s_multiset(l - 1) | LengthMultiset({2 * l - 1: 1})


def multiplicity_lemma(n: int, k: int) -> int:
    """#_k S(n) as a sum of 2^l - |n+1 - (k+1)2^l| over admissible l.

    The admissible l satisfy (k+2)*2^l >= n+2 and k*2^l <= n; both bounds are
    checked with integer arithmetic.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    total = 0
    l = 0
    while k << l <= n:
        p = 1 << l
        if (k + 2) * p >= n + 2:
            total += p - abs(n + 1 - (k + 1) * p)
        l += 1
    return total


def multiplicity_explicit(n: int, k: int) -> int:
    """#_k S(n) via the closed piecewise formula (no summation)."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    log_n = n.bit_length() - 1

    if k == 1:
        p = 1 << log_n
        # n >= 3 * 2^(l-1) - 1, doubled to stay integral when l = 0
        if 2 * n >= 3 * p - 2:
            return 1 + n % p
        return p >> 1

    value = None
    for l in range(log_n):
        if n >> l == k:
            value = 1 + n % (1 << l)
            break
    # largest l with 3 * 2^l <= n; empty when n < 3
    l = 0
    while 3 << l <= n:
        if (n >> l) - 1 == k:
            assert value is None, f"both branches match for n={n}, k={k}"
            value = (1 << l) - 1 - n % (1 << l)
            break
        l += 1
    return 0 if value is None else value
