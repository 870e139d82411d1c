import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from privperm.counting import RuleKind, count_rule
from privperm.simulator import (
    BoothState,
    Closure,
    Layout,
    allowed_choices,
    count_by_enumeration,
    enumerate_permutations,
    intervals,
    nearest_distance,
    sample_run,
    step,
)

ROW = Layout.ROW
CIRCLE = Layout.CIRCLE


def row(n, *occupied):
    return BoothState.with_occupied(n, occupied, ROW)


class TestIntervals:
    def test_after_first_person(self):
        ivs = intervals(row(6, 3))
        assert [(iv.start, iv.length, iv.closure) for iv in ivs] == [
            (1, 2, Closure.SEMI_CLOSED),
            (4, 3, Closure.SEMI_CLOSED),
        ]
        assert [iv.open_end for iv in ivs] == [1, 6]
        assert [iv.full_length for iv in ivs] == [3, 5]

    def test_sandwiched_and_closed_pair(self):
        ivs = intervals(row(6, 1, 3, 6))
        assert [(iv.positions, iv.closure) for iv in ivs] == [
            ([2], Closure.CLOSED),
            ([4, 5], Closure.CLOSED),
        ]

    def test_circle_single_occupant(self):
        (iv,) = intervals(BoothState.with_occupied(5, [2], CIRCLE))
        assert iv.closure is Closure.CLOSED
        assert iv.length == 4
        assert iv.positions == [3, 4, 5, 1]

    def test_empty_is_open(self):
        (iv,) = intervals(BoothState.empty(4))
        assert iv.closure is Closure.OPEN and iv.length == 4

    def test_full_booth_has_none(self):
        assert intervals(row(3, 1, 2, 3)) == []


class TestNearestDistance:
    def test_examples(self):
        assert nearest_distance(row(6, 3), 6) == 3
        assert nearest_distance(row(6, 1, 3, 6), 4) == 1
        assert nearest_distance(BoothState.with_occupied(6, [1], CIRCLE), 4) == 3

    def test_empty_booth(self):
        with pytest.raises(ValueError):
            nearest_distance(BoothState.empty(3), 1)


class TestAllowedChoices:
    def test_p1_allows_all_distance_one(self):
        assert allowed_choices(row(6, 3, 6, 1), RuleKind.P1) == {2, 4, 5}

    def test_p2_skips_sandwiched(self):
        assert allowed_choices(row(6, 3, 6, 1), RuleKind.P2) == {4, 5}

    def test_two_sandwiched(self):
        assert allowed_choices(row(6, 3, 6, 1, 4), RuleKind.P2) == {2, 5}

    @pytest.mark.parametrize("rule", list(RuleKind))
    def test_first_person_free(self, rule):
        assert allowed_choices(BoothState.for_rule(rule, 6), rule) == set(range(1, 7))

    def test_p3_prefers_open_end(self):
        # person at 2 leaves a semi-closed length-1 interval at position 1
        state = step(step(row(7, 2), 7), 4)
        assert allowed_choices(state, RuleKind.P1) == {1, 3, 5, 6}
        assert allowed_choices(state, RuleKind.P3) == {1}

    def test_p5_drops_sandwiched(self):
        state = row(6, 2, 4, 6)
        assert allowed_choices(state, RuleKind.P1) == {1, 3, 5}
        assert allowed_choices(state, RuleKind.P5) == {1}

    def test_p4_prefers_semi_closed_end(self):
        state = row(5, 2, 5, 4)
        assert allowed_choices(state, RuleKind.P2) == {1, 3}
        assert allowed_choices(state, RuleKind.P4) == {1}

    def test_full_booth(self):
        with pytest.raises(ValueError):
            allowed_choices(row(2, 1, 2), RuleKind.P1)


class TestStep:
    def test_worked_example(self):
        s = step(BoothState.empty(6), 3)
        assert s.occupant == (0, 0, 1, 0, 0, 0)
        s2 = step(s, 6)
        assert s2.occupant == (0, 0, 1, 0, 0, 2)
        assert s.occupant == (0, 0, 1, 0, 0, 0)
        assert s2.next_person == 3

    def test_occupied(self):
        with pytest.raises(ValueError):
            step(row(6, 3), 3)


class TestEnumerate:
    def test_worked_example_outcomes(self):
        assert (3, 5, 1, 4, 6, 2) in enumerate_permutations(RuleKind.P1, 6)
        p2 = enumerate_permutations(RuleKind.P2, 6)
        assert (3, 5, 1, 4, 6, 2) in p2
        assert (3, 4, 1, 5, 6, 2) not in p2

    def test_p4_p5_coincide_at_six(self):
        p4 = enumerate_permutations(RuleKind.P4, 6)
        assert p4 == enumerate_permutations(RuleKind.P5, 6)
        assert len(p4) == 28

    def test_trivial(self):
        assert enumerate_permutations(RuleKind.P1, 1) == [(1,)]

    def test_sorted_and_bijective(self):
        perms = enumerate_permutations(RuleKind.C1, 6)
        assert perms == sorted(set(perms))
        assert all(sorted(p) == list(range(1, 7)) for p in perms)

    def test_guard(self):
        with pytest.raises(ValueError, match="limit"):
            enumerate_permutations(RuleKind.P1, 13)
        assert len(enumerate_permutations(RuleKind.P1, 3, limit=2 + 1)) == 4

    @pytest.mark.parametrize("rule, n, expected", [("c1", 5, 60), ("p2", 6, 36), ("p3", 4, 6)])
    def test_counts(self, rule, n, expected):
        assert count_by_enumeration(rule, n) == expected

    @pytest.mark.parametrize("n", range(1, 10))
    def test_inclusions(self, n):
        e = {r: set(enumerate_permutations(r, n)) for r in RuleKind if not r.circular}
        assert e[RuleKind.P2] <= e[RuleKind.P1]
        assert e[RuleKind.P3] <= e[RuleKind.P1]
        assert e[RuleKind.P5] <= e[RuleKind.P1]
        assert e[RuleKind.P4] <= e[RuleKind.P2]

    @pytest.mark.parametrize("rule", [RuleKind.C1, RuleKind.C2])
    @pytest.mark.parametrize("n", range(1, 10))
    def test_circular_rotation_closure(self, rule, n):
        perms = set(enumerate_permutations(rule, n))
        for p in perms:
            assert p[1:] + p[:1] in perms
        assert len(perms) % n == 0

    @pytest.mark.parametrize("rule", list(RuleKind))
    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_formula(self, rule, n):
        assert count_by_enumeration(rule, n) == count_rule(rule, n)


def _reachable_states(rule, n):
    stack = [BoothState.for_rule(rule, n)]
    while stack:
        s = stack.pop()
        yield s
        if s.next_person <= n:
            stack.extend(step(s, p) for p in allowed_choices(s, rule))


@pytest.mark.parametrize("rule", list(RuleKind))
def test_reachable_state_invariants(rule):
    n = 8
    for s in _reachable_states(rule, n):
        seated = s.next_person - 1
        assert sorted(p for p in s.occupant if p) == list(range(1, seated + 1))
        ivs = intervals(s) if seated < n else []
        if rule.circular and seated:
            assert all(iv.closure is Closure.CLOSED for iv in ivs)
        if seated == 0 or seated == n:
            continue
        choices = allowed_choices(s, rule)
        for iv in ivs:
            if iv.closure is Closure.SEMI_CLOSED:
                inside = [p for p in choices if p in iv.positions]
                assert inside in ([], [iv.open_end])
                if iv.length == 1:
                    # only the first person can create a one-payphone open end
                    flank = 2 if iv.open_end == 1 else n - 1
                    assert s.occupant[flank - 1] == 1


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(list(RuleKind)), st.integers(1, 9), st.integers(0, 2**32))
def test_sample_run_is_reachable_and_reproducible(rule, n, seed):
    perm = sample_run(rule, n, seed)
    assert perm == sample_run(rule, n, seed)
    assert perm in set(enumerate_permutations(rule, n))
