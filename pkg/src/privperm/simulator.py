"""Brute-force seating process: the oracle for every counting formula.

People arrive one at a time and pick a payphone allowed by the rule in
force. ``enumerate_permutations`` walks every branch of that process and
returns all reachable position -> person assignments. Nothing here touches
the multiset machinery in :mod:`privperm.intervals`; the two routes must
stay independent.

Positions are 1-based throughout.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from privperm.counting import RuleKind

__all__ = [
    "Layout",
    "Closure",
    "BoothState",
    "Interval",
    "intervals",
    "nearest_distance",
    "allowed_choices",
    "step",
    "enumerate_permutations",
    "count_by_enumeration",
    "sample_run",
    "DEFAULT_LIMIT",
]

DEFAULT_LIMIT = 12


class Layout(enum.Enum):
    ROW = "row"
    CIRCLE = "circle"


class Closure(enum.Enum):
    OPEN = "open"
    SEMI_CLOSED = "semi-closed"
    CLOSED = "closed"


@dataclass(frozen=True)
class BoothState:
    layout: Layout
    occupant: tuple[int, ...]  # 0 marks an available payphone

    @classmethod
    def empty(cls, n: int, layout: Layout = Layout.ROW) -> BoothState:
        if n < 1:
            raise ValueError(f"booth needs at least one payphone, got {n}")
        return cls(layout, (0,) * n)

    @classmethod
    def for_rule(cls, rule: RuleKind, n: int) -> BoothState:
        return cls.empty(n, Layout.CIRCLE if rule.circular else Layout.ROW)

    @classmethod
    def with_occupied(cls, n: int, positions, layout: Layout = Layout.ROW) -> BoothState:
        """State with the given positions taken by persons 1, 2, ... in order."""
        state = cls.empty(n, layout)
        for pos in positions:
            state = step(state, pos)
        return state

    @property
    def n(self) -> int:
        return len(self.occupant)

    @property
    def next_person(self) -> int:
        return sum(1 for p in self.occupant if p) + 1

    def is_free(self, pos: int) -> bool:
        return self.occupant[pos - 1] == 0

    def free_positions(self) -> list[int]:
        return [i + 1 for i, p in enumerate(self.occupant) if p == 0]

    def occupied_positions(self) -> list[int]:
        return [i + 1 for i, p in enumerate(self.occupant) if p]


@dataclass(frozen=True)
class Interval:
    start: int
    length: int
    closure: Closure
    open_end: int | None = None  # the free end of a semi-closed interval
    n: int = 0  # booth size, needed to wrap positions on a circle

    @property
    def full_length(self) -> int:
        if self.closure is Closure.SEMI_CLOSED:
            return 2 * self.length - 1
        return self.length

    def position(self, offset: int) -> int:
        """Booth position of the ``offset``-th (1-based) payphone in the interval."""
        pos = self.start + offset - 1
        return (pos - 1) % self.n + 1 if self.n else pos

    @property
    def positions(self) -> list[int]:
        return [self.position(i) for i in range(1, self.length + 1)]


def intervals(state: BoothState) -> list[Interval]:
    """Maximal runs of free payphones, ordered by starting position."""
    n = state.n
    occ = state.occupant
    if not any(occ):
        return [Interval(1, n, Closure.OPEN, n=n)]

    found = []
    if state.layout is Layout.CIRCLE:
        # start scanning right after an occupied slot so no run wraps the seam
        anchor = next(i for i, p in enumerate(occ) if p)
        order = [(anchor + 1 + j) % n for j in range(n)]
        run: list[int] = []
        for idx in order:
            if occ[idx] == 0:
                run.append(idx)
            elif run:
                found.append(Interval(run[0] + 1, len(run), Closure.CLOSED, n=n))
                run = []
        found.sort(key=lambda iv: iv.start)
        return found

    i = 0
    while i < n:
        if occ[i]:
            i += 1
            continue
        j = i
        while j < n and occ[j] == 0:
            j += 1
        left, right = i > 0, j < n
        if left and right:
            found.append(Interval(i + 1, j - i, Closure.CLOSED))
        else:
            found.append(Interval(i + 1, j - i, Closure.SEMI_CLOSED, open_end=1 if right else n))
        i = j
    return found


def nearest_distance(state: BoothState, pos: int) -> int:
    occupied = state.occupied_positions()
    if not occupied:
        raise ValueError("nearest distance is undefined in an empty booth")
    if not state.is_free(pos):
        raise ValueError(f"position {pos} is occupied")
    if state.layout is Layout.ROW:
        return min(abs(pos - q) for q in occupied)
    n = state.n
    return min(min(abs(pos - q), n - abs(pos - q)) for q in occupied)


def _occupied_neighbours(state: BoothState, pos: int) -> int:
    n = state.n
    if state.layout is Layout.CIRCLE:
        if n == 1:
            return 0
        nbrs = {(pos - 2) % n + 1, pos % n + 1}
    else:
        nbrs = {q for q in (pos - 1, pos + 1) if 1 <= q <= n}
    return sum(1 for q in nbrs if q != pos and not state.is_free(q))


def _within_interval_best(iv: Interval) -> list[int]:
    if iv.closure is Closure.SEMI_CLOSED:
        return [iv.open_end]
    m = iv.length
    if m % 2:
        return [iv.position((m + 1) // 2)]
    return [iv.position(m // 2), iv.position(m // 2 + 1)]


def _max_distance_choices(state: BoothState) -> tuple[int, set[int]]:
    scored = [(nearest_distance(state, p), p) for p in state.free_positions()]
    best = max(d for d, _ in scored)
    return best, {p for d, p in scored if d == best}


def _longest_interval_choices(state: BoothState) -> tuple[int, list[Interval], set[int]]:
    ivs = intervals(state)
    best = max(iv.full_length for iv in ivs)
    winners = [iv for iv in ivs if iv.full_length == best]
    return best, winners, {p for iv in winners for p in _within_interval_best(iv)}


def _short_semi_closed_ends(state: BoothState) -> set[int]:
    return {
        iv.open_end
        for iv in intervals(state)
        if iv.closure is Closure.SEMI_CLOSED and iv.length == 1
    }


def allowed_choices(state: BoothState, rule: RuleKind) -> set[int]:
    """Positions the next person may take under ``rule``."""
    free = state.free_positions()
    if not free:
        raise ValueError("no available payphone")
    if len(free) == state.n:
        return set(free)

    if rule in (RuleKind.P2, RuleKind.C2, RuleKind.P4):
        best, _, choices = _longest_interval_choices(state)
        if rule is RuleKind.P4 and best == 1:
            preferred = choices & _short_semi_closed_ends(state)
            if preferred:
                return preferred
        return choices

    best, choices = _max_distance_choices(state)
    if best == 1 and rule is RuleKind.P3:
        preferred = choices & _short_semi_closed_ends(state)
        if preferred:
            return preferred
    elif best == 1 and rule is RuleKind.P5:
        preferred = {p for p in choices if _occupied_neighbours(state, p) == 1}
        if preferred:
            return preferred
    return choices


def step(state: BoothState, pos: int) -> BoothState:
    if not 1 <= pos <= state.n:
        raise ValueError(f"position {pos} outside booth of size {state.n}")
    if not state.is_free(pos):
        raise ValueError(f"position {pos} is already occupied")
    occ = list(state.occupant)
    occ[pos - 1] = state.next_person
    return BoothState(state.layout, tuple(occ))


def enumerate_permutations(
    rule: RuleKind, n: int, limit: int = DEFAULT_LIMIT
) -> list[tuple[int, ...]]:
    """Every payphone permutation of size ``n`` under ``rule``, sorted lexicographically."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > limit:
        raise ValueError(
            f"refusing exhaustive enumeration for n={n} (limit {limit}); "
            "the search tree grows factorially, raise the limit explicitly if you mean it"
        )
    rule = RuleKind.parse(rule) if isinstance(rule, str) else rule

    found: set[tuple[int, ...]] = set()
    stack = [BoothState.for_rule(rule, n)]
    while stack:
        state = stack.pop()
        if state.next_person > n:
            found.add(state.occupant)
            continue
        for pos in sorted(allowed_choices(state, rule), reverse=True):
            stack.append(step(state, pos))
    return sorted(found)


def count_by_enumeration(rule: RuleKind, n: int, limit: int = DEFAULT_LIMIT) -> int:
    return len(enumerate_permutations(rule, n, limit))


def sample_run(rule: RuleKind, n: int, seed: int | None = None) -> tuple[int, ...]:
    """One seating run, each person choosing uniformly among allowed payphones."""
    rng = random.Random(seed)
    state = BoothState.for_rule(rule, n)
    while state.next_person <= n:
        state = step(state, rng.choice(sorted(allowed_choices(state, rule))))
    return state.occupant
