import pytest
from hypothesis import given, settings

from tilepot import (
    CohesiveEnd,
    Pot,
    PotFormatError,
    Tile,
    cycle_pot_s3,
    parse_pot,
    render_pot,
    tile,
    wheel_pot_s12,
    wheel_pot_s3,
)

from helpers import pots


class TestEndsAndTiles:
    def test_end_repr(self):
        assert str(CohesiveEnd(1)) == "a1"
        assert str(CohesiveEnd(3, True)) == "a3*"

    def test_bad_bond(self):
        with pytest.raises(ValueError):
            CohesiveEnd(0)

    def test_tile_is_multiset(self):
        a = tile("a1", "a2*", "a1")
        b = tile("a1", "a1", "a2*")
        assert a == b
        assert a.arms == 3

    def test_tile_counts(self):
        t = tile("a1", "a1", "a1*", "a2")
        assert t.unhatted_count(1) == 2
        assert t.hatted_count(1) == 1
        assert t.net(1) == 1
        assert t.net(2) == 1
        assert t.net(3) == 0

    def test_empty_tile_rejected(self):
        with pytest.raises(ValueError):
            Tile(())

    def test_bad_token(self):
        with pytest.raises(ValueError):
            tile("b2")
        with pytest.raises(ValueError):
            tile("a0")


class TestPot:
    def test_duplicate_tiles_rejected(self):
        with pytest.raises(ValueError):
            Pot((tile("a1"), tile("a1")))

    def test_bond_contiguity_enforced(self):
        with pytest.raises(ValueError):
            Pot((tile("a1"), tile("a3")))

    def test_counts(self):
        p = Pot((tile("a1", "a2*"), tile("a2", "a1*")))
        assert p.tile_count == 2
        assert p.bond_count == 2


class TestPotText:
    def test_parse_example(self):
        p = parse_pot("t1: a1*, a1*, a1\nt2: a1, a1, a1, a1, a1, a1\n")
        assert p == wheel_pot_s12(7)

    def test_single_end_tile(self):
        p = parse_pot("t1: a1\n")
        assert p.tiles[0].arms == 1

    def test_duplicate_multiset_rejected(self):
        with pytest.raises(PotFormatError):
            parse_pot("t1: a1\nt1b: a1\n")

    def test_duplicate_name_rejected(self):
        with pytest.raises(PotFormatError):
            parse_pot("t1: a1\nt1: a2\n")

    def test_first_appearance_normalization(self):
        # a7 appears first so it becomes bond 1
        p = parse_pot("x: a7, a2*\ny: a2, a7*\n")
        q = parse_pot("x: a1, a2*\ny: a2, a1*\n")
        assert p == q

    def test_error_location(self):
        with pytest.raises(PotFormatError) as ei:
            parse_pot("t1: a1, zz\n")
        assert ei.value.line == 1
        assert ei.value.column == 9

    def test_missing_colon(self):
        with pytest.raises(PotFormatError):
            parse_pot("just words\n")

    def test_empty_text(self):
        with pytest.raises(PotFormatError):
            parse_pot("# nothing here\n")

    def test_comments_ignored(self):
        p = parse_pot("# pot\nt1: a1, a1*  # self-closing\n")
        assert p.tiles[0] == tile("a1", "a1*")

    def test_round_trip_generated(self):
        for p in (wheel_pot_s12(5), wheel_pot_s3(8), wheel_pot_s3(9), cycle_pot_s3(4)):
            assert parse_pot(render_pot(p)) == p

    @given(pots())
    @settings(max_examples=80, deadline=None)
    def test_round_trip_property(self, p):
        assert parse_pot(render_pot(p)) == p


class TestWheelPotS12:
    def test_structure(self):
        p = wheel_pot_s12(7)
        assert p.tiles[0] == tile("a1", "a1*", "a1*")
        assert p.tiles[1] == tile(*["a1"] * 6)

    def test_single_bond_for_all_n(self):
        for n in range(4, 12):
            assert wheel_pot_s12(n).bond_count == 1
            assert wheel_pot_s12(n).tile_count == 2

    def test_hub_arms(self):
        assert wheel_pot_s12(4).tiles[1].arms == 3

    def test_domain(self):
        with pytest.raises(ValueError):
            wheel_pot_s12(3)


class TestWheelPotS3:
    def test_even_structure(self):
        p = wheel_pot_s3(6)
        assert p.tile_count == 5 and p.bond_count == 4
        assert p.tiles[-1] == tile("a1*", "a3*", "a4*")

    def test_odd_structure(self):
        p = wheel_pot_s3(7)
        assert p.tile_count == 5 and p.bond_count == 4
        assert p.tiles[-1] == tile("a1*", "a4*", "a4*")

    def test_counts_follow_half_formula(self):
        for n in range(4, 11):
            p = wheel_pot_s3(n)
            assert p.tile_count == n // 2 + 2
            assert p.bond_count == n // 2 + 1

    def test_hub_bond_on_every_rim_tile(self):
        for n in range(4, 11):
            p = wheel_pot_s3(n)
            assert all(t.hatted_count(1) == 1 for t in p.tiles[1:])
            assert p.tiles[0].unhatted_count(1) == n - 1

    def test_arm_counts(self):
        for n in range(4, 11):
            p = wheel_pot_s3(n)
            assert p.tiles[0].arms == n - 1
            assert all(t.arms == 3 for t in p.tiles[1:])

    def test_domain(self):
        with pytest.raises(ValueError):
            wheel_pot_s3(3)


class TestCyclePotS3:
    def test_counts(self):
        for n in range(3, 11):
            p = cycle_pot_s3(n)
            assert p.tile_count == (n + 1) // 2 + 1
            assert p.bond_count == (n + 1) // 2

    def test_n3(self):
        p = cycle_pot_s3(3)
        assert p.tile_count == 3 and p.bond_count == 2

    def test_n6(self):
        p = cycle_pot_s3(6)
        assert p.tile_count == 4 and p.bond_count == 3

    def test_all_tiles_two_armed(self):
        for n in range(3, 9):
            assert all(t.arms == 2 for t in cycle_pot_s3(n).tiles)

    def test_matches_wheel_pot_with_hub_removed(self):
        base = wheel_pot_s3(8)
        derived = cycle_pot_s3(7)
        assert derived.tile_count == base.tile_count - 1
        assert derived.bond_count == base.bond_count - 1

    def test_domain(self):
        with pytest.raises(ValueError):
            cycle_pot_s3(2)
