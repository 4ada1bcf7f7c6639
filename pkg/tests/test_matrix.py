from fractions import Fraction

import pytest
from hypothesis import given, settings

from tilepot import (
    Pot,
    build_matrix,
    first_usage_vector,
    min_order,
    solve,
    tile,
    unique_solution_order,
    usage_vectors,
    wheel_pot_s12,
    wheel_pot_s3,
)

from helpers import balanced_compositions, brute_min_order, pots


class TestBuildMatrix:
    def test_s12_shape(self):
        m = build_matrix(wheel_pot_s12(7))
        assert m.z == ((-1, 6),)
        aug = m.augmented()
        assert aug == (
            (Fraction(-1), Fraction(6), Fraction(0)),
            (Fraction(1), Fraction(1), Fraction(1)),
        )

    def test_self_closing_tile(self):
        m = build_matrix(Pot((tile("a1", "a1*"),)))
        assert m.z == ((0,),)

    def test_s3_even_first_row(self):
        m = build_matrix(wheel_pot_s3(6))
        assert m.bond_count == 4 and m.tile_count == 5
        assert m.z[0] == (5, -1, -1, -1, -1)

    def test_ordering_is_bond_then_tile(self):
        p = Pot((tile("a1", "a2*"), tile("a2", "a1*")))
        m = build_matrix(p)
        assert m.z == ((1, -1), (-1, 1))


class TestSolve:
    def test_s12_unique_vector(self):
        sol = solve(build_matrix(wheel_pot_s12(7)))
        assert sol.unique
        assert sol.particular == (Fraction(6, 7), Fraction(1, 7))

    def test_s3_even_vector(self):
        sol = solve(build_matrix(wheel_pot_s3(8)))
        assert sol.unique
        assert sol.particular == tuple(
            Fraction(k, 8) for k in (1, 1, 2, 2, 1, 1)
        )

    def test_s3_odd_vector(self):
        sol = solve(build_matrix(wheel_pot_s3(7)))
        assert sol.unique
        assert sol.particular == tuple(Fraction(k, 7) for k in (1, 1, 2, 2, 1))

    def test_inconsistent_pot(self):
        # a bond that only ever appears unhatted can never balance
        sol = solve(build_matrix(Pot((tile("a1"),))))
        assert not sol.consistent

    def test_nullspace(self):
        # two interchangeable self-closing tiles leave one degree of freedom
        p = Pot((tile("a1", "a1*"), tile("a1", "a1", "a1*", "a1*")))
        sol = solve(build_matrix(p))
        assert sol.consistent and not sol.unique
        assert len(sol.nullspace) == 1

    def test_solution_satisfies_system_exactly(self):
        for n in range(4, 13):
            for pot in (wheel_pot_s12(n), wheel_pot_s3(n)):
                m = build_matrix(pot)
                sol = solve(m)
                assert sol.unique
                r = sol.particular
                for row in m.z:
                    assert sum(c * x for c, x in zip(row, r)) == 0
                assert sum(r) == 1


class TestUniqueSolutionOrder:
    def test_wheel_pots(self):
        for n in range(4, 10):
            assert unique_solution_order(solve(build_matrix(wheel_pot_s12(n)))) == n
            assert unique_solution_order(solve(build_matrix(wheel_pot_s3(n)))) == n

    def test_none_when_not_unique(self):
        p = Pot((tile("a1", "a1*"), tile("a1", "a1", "a1*", "a1*")))
        assert unique_solution_order(solve(build_matrix(p))) is None

    def test_none_when_negative(self):
        # both nets positive: balance forces one proportion below zero
        p = Pot((tile("a1"), tile("a1", "a1")))
        sol = solve(build_matrix(p))
        assert sol.unique
        assert any(x < 0 for x in sol.particular)
        assert unique_solution_order(sol) is None
        assert min_order(p).status == "unrealizable"


class TestMinOrder:
    def test_s12_pots(self):
        for n in range(4, 10):
            res = min_order(wheel_pot_s12(n))
            assert res.status == "realizable"
            assert res.order == n
            assert res.witness == (n - 1, 1)

    def test_s3_pots(self):
        for n in range(4, 10):
            res = min_order(wheel_pot_s3(n))
            assert res.status == "realizable" and res.order == n

    def test_self_closing(self):
        res = min_order(Pot((tile("a1", "a1*"),)))
        assert res.order == 1 and res.witness == (1,)

    def test_unrealizable(self):
        assert min_order(Pot((tile("a1"),))).status == "unrealizable"

    def test_unknown_beyond_cap(self):
        # balanced directions exist but only mix positive and negative entries
        p = Pot((tile("a1"), tile("a1", "a1", "a1*"), tile("a1*", "a1*")))
        res = min_order(p, cap=8)
        assert res.status in ("realizable", "unknown")

    def test_matches_lcm_of_unique_solution(self):
        for n in range(4, 11):
            for pot in (wheel_pot_s12(n), wheel_pot_s3(n)):
                sol = solve(build_matrix(pot))
                assert min_order(pot).order == unique_solution_order(sol)

    @given(pots())
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_composition_scan(self, p):
        res = min_order(p, cap=6)
        brute = brute_min_order(p, 6)
        if brute is not None:
            assert res.status == "realizable" and res.order == brute
        else:
            assert res.status != "realizable" or res.order > 6


class TestUsageVectors:
    def test_s12_exact_at_min_order(self):
        assert usage_vectors(wheel_pot_s12(7), 7) == [(6, 1)]

    def test_s12_empty_below(self):
        assert usage_vectors(wheel_pot_s12(7), 6) == []

    def test_self_closing_any_order(self):
        assert usage_vectors(Pot((tile("a1", "a1*"),)), 3) == [(3,)]

    def test_balance_holds_on_every_vector(self):
        p = wheel_pot_s3(9)
        for usage in usage_vectors(p, 18):
            for b in range(1, p.bond_count + 1):
                unhatted = sum(c * t.unhatted_count(b) for c, t in zip(usage, p.tiles))
                hatted = sum(c * t.hatted_count(b) for c, t in zip(usage, p.tiles))
                assert unhatted == hatted

    def test_first_usage_vector_is_least(self):
        p = wheel_pot_s12(7)
        assert first_usage_vector(p, 7) == (6, 1)
        assert first_usage_vector(p, 6) is None

    @given(pots())
    @settings(max_examples=50, deadline=None)
    def test_matches_composition_filter(self, p):
        for n in (1, 3, 5):
            assert usage_vectors(p, n) == balanced_compositions(p, n)

    def test_rejects_nonpositive_order(self):
        with pytest.raises(ValueError):
            usage_vectors(wheel_pot_s12(4), 0)
