import itertools

import pytest

from golden import ORDER4_TRIPLE_ARRAY, ORDER5_QUAD_ARRAY
from molsnet import (MolsSet, TupleArray, distinct_tuple_count, is_t_orthogonal,
                     make_additive_square, make_mols_family, make_multiplicative_square,
                     superimpose, verify_set_orthogonality)


class TestSuperimpose:
    def test_first_three_order_4_squares_match_published_array(self, family4):
        array = superimpose(list(family4.squares[:3]))
        assert array.order == 4 and array.arity == 3
        assert array.grid == ORDER4_TRIPLE_ARRAY
        assert array.tuple_at(2, 2) == (4, 1, 3)

    def test_all_four_order_5_squares_match_published_array(self, family5):
        array = superimpose(list(family5.squares))
        assert array.grid == ORDER5_QUAD_ARRAY

    def test_source_defaults_to_positions(self, family5):
        assert superimpose(list(family5.squares[:2])).source == (1, 2)
        assert superimpose(list(family5.squares[:2]), (3, 4)).source == (3, 4)

    def test_needs_at_least_two_squares(self, family5):
        with pytest.raises(ValueError):
            superimpose([family5[0]])

    def test_rejects_mixed_orders(self, family4, family5):
        with pytest.raises(ValueError):
            superimpose([family4[0], family5[0]])

    def test_square_with_itself_gives_diagonal_tuples(self):
        square = make_additive_square(3, 1)
        array = superimpose([square, square])
        for i in range(1, 4):
            for j in range(1, 4):
                x = square.at(i, j)
                assert array.tuple_at(i, j) == (x, x)


class TestIsTOrthogonal:
    def test_published_arrays_are_orthogonal(self):
        for grid, t in ((ORDER4_TRIPLE_ARRAY, 3), (ORDER5_QUAD_ARRAY, 4)):
            report = is_t_orthogonal(TupleArray(len(grid), t, grid))
            assert report.is_orthogonal
            assert report.distinct_count == len(grid) ** 2
            assert report.first_collision is None

    def test_self_stack_is_never_orthogonal(self):
        # Only the n diagonal tuples (x, x) can occur.
        for n in (2, 3, 4, 5):
            square = make_mols_family(n)[0]
            report = is_t_orthogonal(superimpose([square, square]))
            assert not report.is_orthogonal
            assert report.distinct_count == n

    def test_first_collision_is_the_row_major_minimum(self):
        square = make_additive_square(3, 1)    # rows 231 312 123
        report = is_t_orthogonal(superimpose([square, square]))
        # Cell (1,1) holds (2,2); the next cell with symbol 2 is (2,3).
        assert report.first_collision == ((1, 1), (2, 3))

    def test_consecutive_shift_squares_collide(self, family4):
        # (i*j, i'*j) mod 5 repeats pairs across the row wrap, so the first
        # two shift squares are not 2-orthogonal: 12 distinct pairs, not 16.
        report = is_t_orthogonal(superimpose(list(family4.squares[:2])))
        assert not report.is_orthogonal
        assert report.distinct_count == 12
        a, b = report.first_collision
        array = superimpose(list(family4.squares[:2]))
        assert array.tuple_at(*a) == array.tuple_at(*b)

    def test_no_order_4_shift_pair_is_orthogonal(self, family4):
        # The shift family is 3- and 4-orthogonal but never 2-orthogonal.
        for a, b in itertools.combinations(range(4), 2):
            report = is_t_orthogonal(superimpose([family4[a], family4[b]]))
            assert not report.is_orthogonal

    def test_verdict_ignores_square_order(self, family5):
        chosen = [family5[0], family5[1], family5[3]]
        verdicts = {is_t_orthogonal(superimpose(list(p))).is_orthogonal
                    for p in itertools.permutations(chosen)}
        assert verdicts == {True}


class TestDistinctTupleCount:
    def test_published_array_counts(self):
        assert distinct_tuple_count(TupleArray(4, 3, ORDER4_TRIPLE_ARRAY)) == 16
        assert distinct_tuple_count(TupleArray(5, 4, ORDER5_QUAD_ARRAY)) == 25

    def test_count_of_first_two_order_4_squares(self, family4):
        array = superimpose(list(family4.squares[:2]))
        # Independent recount: collect the 16 pairs and deduplicate by
        # scanning a list, no hashing of the main path involved.
        seen = []
        for i in range(1, 5):
            for j in range(1, 5):
                pair = (family4[0].at(i, j), family4[1].at(i, j))
                if pair not in seen:
                    seen.append(pair)
        assert len(seen) == 12
        assert distinct_tuple_count(array) == 12

    def test_bounds(self, family5):
        # Never below n (each row of the first square is a permutation)
        # and never above n^2.
        n = 5
        stacks = [list(family5.squares[:2]), list(family5.squares),
                  [family5[2], family5[2]]]
        for squares in stacks:
            count = distinct_tuple_count(superimpose(squares))
            assert n <= count <= n * n

    def test_agrees_with_report(self, family4):
        for combo in itertools.combinations(range(4), 2):
            array = superimpose([family4[i] for i in combo])
            assert distinct_tuple_count(array) == is_t_orthogonal(array).distinct_count


class TestVerifySetOrthogonality:
    def test_order_5_family_passes_every_t(self, family5):
        for t, subsets in ((2, 6), (3, 4), (4, 1)):
            report = verify_set_orthogonality(family5, t)
            assert report.all_orthogonal
            assert len(report.verdicts) == subsets
            assert report.failures == ()

    def test_order_4_family_is_3_and_4_orthogonal(self, family4):
        assert verify_set_orthogonality(family4, 3).all_orthogonal
        assert verify_set_orthogonality(family4, 4).all_orthogonal

    def test_order_4_family_fails_pairwise(self, family4):
        report = verify_set_orthogonality(family4, 2)
        assert not report.all_orthogonal
        assert len(report.failures) == 6

    def test_verdicts_carry_subset_indices_in_order(self, family5):
        report = verify_set_orthogonality(family5, 3)
        assert [v.indices for v in report.verdicts] == [
            (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]

    def test_repeated_square_fails_on_that_pair(self, family5):
        square = family5[0]
        doubled = MolsSet(5, (square, family5[1], square))
        report = verify_set_orthogonality(doubled, 2)
        failing = [v.indices for v in report.failures]
        assert (1, 3) in failing
        assert report.verdicts[0].report.is_orthogonal      # (1, 2) is fine

    def test_t_must_fit_the_set(self, family5):
        with pytest.raises(ValueError):
            verify_set_orthogonality(family5, 1)
        with pytest.raises(ValueError):
            verify_set_orthogonality(family5, 5)


class TestFamilyProperties:
    @pytest.mark.parametrize("n", [3, 5, 7, 11])
    def test_prime_families_are_t_orthogonal_for_all_t(self, n):
        family = make_mols_family(n)
        for t in range(2, n):
            if t > len(family):
                continue
            assert verify_set_orthogonality(family, t).all_orthogonal

    @pytest.mark.parametrize("n", [4, 6, 10])
    def test_shift_families_full_subset_and_triples(self, n):
        # The published range for this construction is t = 3..n, which is
        # empty at n = 2, hence the start at 4.
        family = make_mols_family(n)
        assert is_t_orthogonal(superimpose(list(family.squares))).is_orthogonal
        for combo in itertools.combinations(range(n), 3):
            array = superimpose([family[i] for i in combo])
            assert is_t_orthogonal(array).is_orthogonal


class TestTupleArrayChecks:
    def test_shape_and_range_are_enforced(self):
        with pytest.raises(ValueError):
            TupleArray(2, 1, (((1,), (2,)), ((2,), (1,))))
        with pytest.raises(ValueError):
            TupleArray(2, 2, (((1, 1),),))
        with pytest.raises(ValueError):
            TupleArray(2, 2, (((1, 3), (2, 1)), ((2, 2), (1, 1))))

    def test_multiplicative_square_equals_additive_only_where_expected(self):
        # Sanity: the two constructions differ already at order 2 (cells),
        # though both are Latin.
        assert make_multiplicative_square(2).cells != make_additive_square(2, 1).cells
