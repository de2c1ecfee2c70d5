"""Staircase sets, the z/x/y word algorithm, both constructions, the lattice
path bijection, and the two counting routes for 321-avoiders."""

from __future__ import annotations

import itertools
import math

import pytest

from threecycle import avoid321, oracle, perm

BIG_T = (1, 2, 3, 6, 11, 14)
BIG_WORD = "zzzxxzxyyxzyyzxxyy"
DYCK_EXAMPLE = "xxyyxyxxyxyy"
NINE_TSETS = {
    (1, 2, 7, 10, 11, 13),
    (1, 2, 7, 9, 11, 13),
    (1, 2, 7, 9, 10, 13),
    (1, 2, 6, 10, 11, 13),
    (1, 2, 6, 9, 11, 13),
    (1, 2, 6, 9, 10, 13),
    (1, 2, 5, 10, 11, 13),
    (1, 2, 5, 9, 11, 13),
    (1, 2, 5, 9, 10, 13),
}
EIGHT_PERMS = {
    "5 6 1 2 3 4 9 7 8 15 17 10 18 11 12 13 14 16",
    "5 6 1 2 3 4 9 7 8 12 14 15 16 17 10 18 11 13",
    "5 6 1 2 3 4 8 9 7 15 17 10 18 11 12 13 14 16",
    "5 6 1 2 3 4 8 9 7 12 14 15 16 17 10 18 11 13",
    "3 4 5 6 1 2 9 7 8 15 17 10 18 11 12 13 14 16",
    "3 4 5 6 1 2 9 7 8 12 14 15 16 17 10 18 11 13",
    "3 4 5 6 1 2 8 9 7 15 17 10 18 11 12 13 14 16",
    "3 4 5 6 1 2 8 9 7 12 14 15 16 17 10 18 11 13",
}


def class_members(n):
    return set(oracle.oracle_enumerate(oracle.query(n, "321")))


class TestStaircaseSets:
    def test_small_cases(self):
        assert list(avoid321.enumerate_tsets(1)) == [(1,)]
        assert list(avoid321.enumerate_tsets(2)) == [(1, 2), (1, 3), (1, 4)]

    def test_n3_count(self):
        sets = list(avoid321.enumerate_tsets(3))
        assert len(sets) == 12 == math.comb(9, 3) // 7

    def test_fuss_catalan_counts(self):
        for n in range(1, 8):
            count = sum(1 for _ in avoid321.enumerate_tsets(n))
            assert count == avoid321.fuss_catalan(n)

    def test_fuss_catalan_values(self):
        assert [avoid321.fuss_catalan(n) for n in (2, 3, 5)] == [3, 12, 273]

    def test_validation(self):
        with pytest.raises(ValueError):
            avoid321.check_tset((1, 5))  # 5 > 3*2-2
        with pytest.raises(ValueError):
            avoid321.check_tset((2, 3))  # 2 > 3*1-2
        with pytest.raises(ValueError):
            avoid321.check_tset((1, 1))


class TestWordAlgorithm:
    def test_worked_examples(self):
        assert avoid321.word_of_tset(BIG_T) == BIG_WORD
        assert avoid321.word_of_tset((1,)) == "zxy"
        assert avoid321.word_of_tset((1, 2, 7, 10, 11, 13)) == "zzxxyyzxyzzxzxyxyy"

    def test_n2_words(self):
        assert avoid321.word_of_tset((1, 2)) == "zzxxyy"
        assert avoid321.word_of_tset((1, 3)) == "zxzyxy"
        assert avoid321.word_of_tset((1, 4)) == "zxyzxy"

    def test_letter_conditions(self):
        # value/position interleaving conditions on every set up to n=5:
        # (a) t_i < i-th x position < i-th y position,
        # (c) the i-th y lies between the j-th and (j+1)-st x exactly when
        #     the i-th z lies between the j-th and (j+1)-st y (value form)
        for n in range(1, 6):
            for t in avoid321.enumerate_tsets(n):
                word = avoid321.word_of_tset(t)
                xpos = [i + 1 for i, ch in enumerate(word) if ch == "x"]
                ypos = [i + 1 for i, ch in enumerate(word) if ch == "y"]
                for i in range(n):
                    assert t[i] < xpos[i] < ypos[i]
                for i in range(n):
                    for j in range(n - 1):
                        y_between_x = xpos[j] < ypos[i] < xpos[j + 1]
                        x_between_z = t[j] < xpos[i] < t[j + 1]
                        if y_between_x or x_between_z:
                            assert y_between_x == x_between_z


class TestAll312Construction:
    def test_worked_example(self):
        assert avoid321.perm_from_tset(BIG_T) == perm.parse_one_line(
            "8 9 12 1 2 13 3 4 5 6 17 7 10 18 11 14 15 16"
        )

    def test_trivial(self):
        assert avoid321.perm_from_tset((1,)) == (3, 1, 2)

    def test_two_cycles(self):
        assert avoid321.perm_from_tset((1, 2)) == (5, 6, 1, 2, 3, 4)

    def test_members_avoid_321_all_forms_312(self):
        for n in range(1, 5):
            for t in avoid321.enumerate_tsets(n):
                p = avoid321.perm_from_tset(t)
                assert perm.avoids(p, (3, 2, 1))
                forms = perm.cycle_decomposition(p).forms
                assert forms is not None and set(forms) == {perm.FORM_312}
                # the cycle minima recover the staircase set uniquely
                assert avoid321.tset_min_partition(p) == t

    def test_matches_oracle_subclass(self):
        for n in (1, 2, 3):
            built = {avoid321.perm_from_tset(t) for t in avoid321.enumerate_tsets(n)}
            want = set(oracle.oracle_enumerate(oracle.query(n, "321", form="312")))
            assert built == want
            # mirror subclass via the inverse map
            mirrored = {perm.inverse(p) for p in built}
            want231 = set(oracle.oracle_enumerate(oracle.query(n, "321", form="231")))
            assert mirrored == want231


class TestLatticePaths:
    def test_examples(self):
        assert avoid321.tset_to_path((1, 2)) == "EEEENN"
        assert avoid321.tset_to_path((1, 4)) == "EENEEN"
        assert avoid321.tset_to_path((1,)) == "EEN"
        assert avoid321.path_to_tset("EENEEN") == (1, 4)

    def test_slack_relation(self):
        # t_i = i + s_i with s the nondecreasing slack vector in [0, 2i-2]
        for n in range(1, 6):
            for t in avoid321.enumerate_tsets(n):
                slacks = [v - (i + 1) for i, v in enumerate(t)]
                assert all(0 <= s <= 2 * i for i, s in enumerate(slacks))
                assert slacks == sorted(slacks)

    def test_round_trip(self):
        for n in range(1, 7):
            for t in avoid321.enumerate_tsets(n):
                path = avoid321.tset_to_path(t)
                assert path.count("E") == 2 * n and path.count("N") == n
                assert avoid321.path_to_tset(path) == t

    def test_paths_are_distinct_and_exhaust(self):
        n = 4
        paths = {avoid321.tset_to_path(t) for t in avoid321.enumerate_tsets(n)}
        assert len(paths) == avoid321.fuss_catalan(n)
        # every valid path decodes; every decode re-encodes
        for path in paths:
            assert avoid321.tset_to_path(avoid321.path_to_tset(path)) == path

    def test_malformed_paths_rejected(self):
        for bad in ("", "ENE", "NEE", "EENXEN", "EENENE", "EEENNE"):
            with pytest.raises(ValueError):
                avoid321.path_to_tset(bad)


class TestBalancedSegments:
    def test_examples(self):
        assert avoid321.h_and_segments("zzxxyyzxyzzxzxyxyy") == (3, (2, 3, 6))
        assert avoid321.h_and_segments("zxy") == (1, (1,))
        assert avoid321.h_and_segments("zzxxyy") == (1, (2,))

    def test_last_milestone_is_n(self):
        for n in range(1, 6):
            for t in avoid321.enumerate_tsets(n):
                h, milestones = avoid321.h_and_segments(avoid321.word_of_tset(t))
                assert h == len(milestones)
                assert milestones[-1] == n


class TestFormChoices:
    def test_mixed_quadruple(self):
        f312, f231 = perm.FORM_312, perm.FORM_231
        assert avoid321.perm_from_choices((1, 3), (f312, f231)) == (4, 1, 5, 2, 6, 3)
        assert avoid321.perm_from_choices((1, 3), (f231, f312)) == (2, 4, 6, 1, 3, 5)
        assert avoid321.perm_from_choices((1, 4), (f312, f231)) == (3, 1, 2, 5, 6, 4)
        assert avoid321.perm_from_choices((1, 4), (f231, f312)) == (2, 3, 1, 6, 4, 5)

    def test_all_same_fillings_of_big_set(self):
        t = (1, 2, 7, 10, 11, 13)
        all312 = avoid321.perm_from_choices(t, (perm.FORM_312,) * 3)
        all231 = avoid321.perm_from_choices(t, (perm.FORM_231,) * 3)
        assert all312 == perm.parse_one_line(
            "5 6 1 2 3 4 9 7 8 15 17 10 18 11 12 13 14 16"
        )
        assert all231 == perm.parse_one_line(
            "3 4 5 6 1 2 8 9 7 12 14 15 16 17 10 18 11 13"
        )

    def test_eight_members_of_big_set(self):
        t = (1, 2, 7, 10, 11, 13)
        got = {
            perm.format_one_line(avoid321.perm_from_choices(t, forms))
            for forms in itertools.product(avoid321.FORM_CHOICES, repeat=3)
        }
        assert got == EIGHT_PERMS

    def test_segment_mismatch_rejected(self):
        with pytest.raises(ValueError, match="segment"):
            avoid321.perm_from_choices((1, 3), (perm.FORM_312,))
        with pytest.raises(ValueError, match="form"):
            avoid321.perm_from_choices((1,), ("213",))

    def test_choices_give_distinct_avoiders(self):
        for n in range(1, 5):
            seen = set()
            for t in avoid321.enumerate_tsets(n):
                h, _ = avoid321.h_and_segments(avoid321.word_of_tset(t))
                fiber = {
                    avoid321.perm_from_choices(t, forms)
                    for forms in itertools.product(avoid321.FORM_CHOICES, repeat=h)
                }
                assert len(fiber) == 2**h
                for p in fiber:
                    assert perm.avoids(p, (3, 2, 1))
                assert seen.isdisjoint(fiber)
                seen.update(fiber)
            assert len(seen) == avoid321.count_321_via_tsets(n)


class TestEnumerate321:
    def test_n2_matches_oracle(self):
        assert set(avoid321.enumerate_321(2)) == class_members(2)
        assert avoid321.count_321_via_tsets(2) == 10

    def test_matches_oracle(self):
        for n in (1, 2, 3):
            got = list(avoid321.enumerate_321(n))
            assert len(got) == len(set(got))
            assert set(got) == class_members(n)


class TestDyckRoute:
    def test_stats_worked_example(self):
        stats = avoid321.dyck_stats(DYCK_EXAMPLE)
        assert stats.h == 3
        assert stats.r == (0, 2, 1, 0, 1)
        assert stats.s == (0, 1, 2, 1, 0)
        assert stats.binomial_weight() == 9

    def test_stats_small(self):
        assert avoid321.dyck_stats("xy") == avoid321.DyckStats("xy", 1, (), ())
        assert avoid321.dyck_stats("xyxy") == avoid321.DyckStats("xyxy", 2, (1,), (1,))

    def test_stats_rejects_non_dyck(self):
        with pytest.raises(ValueError):
            avoid321.dyck_stats("yx")

    def test_tsets_for_dyck_examples(self):
        assert set(avoid321.tsets_for_dyck(DYCK_EXAMPLE)) == NINE_TSETS
        assert list(avoid321.tsets_for_dyck("xy")) == [(1,)]
        assert set(avoid321.tsets_for_dyck("xyxy")) == {(1, 3), (1, 4)}

    def test_fibers_partition_staircase_sets(self):
        from threecycle import words

        for n in range(1, 7):
            everything = set(avoid321.enumerate_tsets(n))
            seen = set()
            for word in words.dyck_words(n, "x", "y"):
                stats = avoid321.dyck_stats(word)
                fiber = set(avoid321.tsets_for_dyck(word))
                assert len(fiber) == stats.binomial_weight()
                assert seen.isdisjoint(fiber)
                seen.update(fiber)
            assert seen == everything

    def test_counting_routes_agree(self):
        for n in range(1, 9):
            via_t = avoid321.count_321_via_tsets(n)
            via_d = avoid321.count_321_via_dyck(n)
            f = avoid321.h_polynomial(n)
            assert via_t == via_d == f.evaluate(2)
            assert f.evaluate(1) == avoid321.fuss_catalan(n)

    def test_table_row(self):
        assert [avoid321.count_321_via_dyck(n) for n in range(1, 6)] == [
            2,
            10,
            60,
            388,
            2606,
        ]

    def test_count_matches_oracle(self):
        for n in (1, 2, 3):
            assert avoid321.count_321_via_dyck(n) == oracle.oracle_count(
                oracle.query(n, "321")
            )

    def test_h_polynomial_examples(self):
        assert avoid321.h_polynomial(1).coefficients == (0, 1)
        poly = avoid321.h_polynomial(2)
        assert poly.coefficients == (0, 1, 2)
        assert poly.evaluate(1) == 3 and poly.evaluate(2) == 10

    def test_identity(self):
        assert all(avoid321.dyck_identity_check(n) for n in range(1, 11))

    def test_subclass_count(self):
        for n in (1, 2, 3):
            assert avoid321.count_all312(n) == oracle.oracle_count(
                oracle.query(n, "321", form="312")
            )
