import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schurweyl.young import (
    Box,
    StandardTableau,
    YoungDiagram,
    axial_distance,
    bound_for_box,
    column_ordered_tableau,
    dim_symmetric_group_irrep,
    dim_unitary_group_irrep,
    dominates,
    entropy_lower_bound,
    enumerate_standard_tableaux,
    hook_length,
    max_schmidt_bound,
    partitions_of,
    removable_boxes,
    remove_largest,
    row_ordered_tableau,
    split_tableau,
    tableau_with_largest_in,
)


@st.composite
def partition_strategy(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    counts = Counter(bins)
    return YoungDiagram(tuple(sorted(counts.values(), reverse=True)))


def brute_hook(diagram, box):
    # independent of the closed formula: count arm and leg boxes directly
    arm = sum(1 for j in range(box.col + 1, diagram.rows[box.row - 1] + 1))
    leg = sum(1 for i in range(box.row + 1, diagram.n_rows + 1)
              if diagram.rows[i - 1] >= box.col)
    return arm + leg + 1


class TestYoungDiagram:
    def test_basic_fields(self):
        dg = YoungDiagram((3, 2, 1))
        assert dg.n_boxes == 6
        assert dg.columns == (3, 2, 1)
        assert dg.conjugate() == dg

    def test_conjugate(self):
        assert YoungDiagram((4, 2)).columns == (2, 2, 1, 1)

    def test_rejects_bad_rows(self):
        with pytest.raises(ValueError):
            YoungDiagram((1, 2))
        with pytest.raises(ValueError):
            YoungDiagram((2, 0))

    def test_string_round_trip(self):
        dg = YoungDiagram.from_string("3,2,1")
        assert dg.rows == (3, 2, 1)
        assert str(dg) == "3,2,1"
        with pytest.raises(ValueError):
            YoungDiagram.from_string("3,x")
        with pytest.raises(ValueError):
            YoungDiagram.from_string("")

    @given(partition_strategy())
    def test_conjugation_involution(self, dg):
        assert dg.conjugate().conjugate() == dg
        assert sum(dg.columns) == dg.n_boxes


class TestHooksAndRemovable:
    def test_hook_examples(self):
        dg = YoungDiagram((3, 2, 1))
        assert hook_length(dg, Box(1, 1)) == 5  # 3-1+3-1+1
        assert hook_length(dg, Box(2, 1)) == 3  # 2-1+3-2+1
        assert hook_length(YoungDiagram((1,)), Box(1, 1)) == 1

    def test_hook_outside_diagram(self):
        with pytest.raises(ValueError, match="outside"):
            hook_length(YoungDiagram((2, 1)), Box(2, 2))

    @given(partition_strategy())
    def test_hooks_match_brute_force(self, dg):
        for box in dg.boxes():
            assert hook_length(dg, box) == brute_hook(dg, box)

    def test_removable_examples(self):
        assert removable_boxes(YoungDiagram((3, 2, 1))) == [Box(3, 1), Box(2, 2), Box(1, 3)]
        assert removable_boxes(YoungDiagram((1, 1, 1))) == [Box(3, 1)]
        assert removable_boxes(YoungDiagram((3,))) == [Box(1, 3)]

    @given(partition_strategy())
    def test_removable_iff_hook_one(self, dg):
        removable = set(removable_boxes(dg))
        for box in dg.boxes():
            assert (hook_length(dg, box) == 1) == (box in removable)

    @given(partition_strategy())
    def test_removal_gives_valid_diagram(self, dg):
        for box in removable_boxes(dg):
            smaller = dg.remove(box)
            assert smaller.n_boxes == dg.n_boxes - 1


class TestBounds:
    def test_bound_examples(self):
        dg = YoungDiagram((3, 2, 1))
        assert bound_for_box(dg, Box(3, 1)) == Fraction(8, 15)
        assert bound_for_box(dg, Box(2, 2)) == Fraction(2, 3)
        assert bound_for_box(dg, Box(1, 3)) == 1
        assert bound_for_box(YoungDiagram((2, 2, 2, 1)), Box(4, 1)) == Fraction(2, 5)
        assert bound_for_box(YoungDiagram((3, 3, 3, 2, 1)), Box(5, 1)) == Fraction(8, 21)

    def test_bound_rejects_non_removable(self):
        with pytest.raises(ValueError, match="not removable"):
            bound_for_box(YoungDiagram((3, 2, 1)), Box(1, 1))

    def test_max_bound_examples(self):
        assert max_schmidt_bound(YoungDiagram((3, 2, 1))) == (Fraction(1), Box(1, 3))
        assert max_schmidt_bound(YoungDiagram((3, 3, 1))) == (Fraction(3, 5), Box(3, 1))
        assert max_schmidt_bound(YoungDiagram((1, 1, 1, 1))) == (Fraction(1, 4), Box(4, 1))

    def test_max_bound_requires_two_boxes(self):
        with pytest.raises(ValueError, match="at least 2"):
            max_schmidt_bound(YoungDiagram((1,)))

    @given(st.integers(min_value=2, max_value=10))
    def test_row_and_column_endpoints(self, n):
        assert max_schmidt_bound(YoungDiagram((n,)))[0] == 1
        assert max_schmidt_bound(YoungDiagram((1,) * n))[0] == Fraction(1, n)

    @given(partition_strategy())
    def test_bound_sandwich(self, dg):
        if dg.n_boxes < 2:
            return
        value, _ = max_schmidt_bound(dg)
        shortest_column = dg.columns[-1]
        assert Fraction(1, shortest_column) <= value <= 1

    def test_entropy_examples(self):
        assert entropy_lower_bound(YoungDiagram((1, 1, 1))) == pytest.approx(math.log(3))
        assert entropy_lower_bound(YoungDiagram((3,))) == 0.0
        assert entropy_lower_bound(YoungDiagram((3, 3, 1))) == pytest.approx(math.log(5 / 3))

    @given(partition_strategy())
    def test_entropy_is_minus_log_bound(self, dg):
        if dg.n_boxes < 2:
            return
        value, _ = max_schmidt_bound(dg)
        assert entropy_lower_bound(dg) == pytest.approx(-math.log(value), abs=1e-15)


class TestDimensions:
    def test_symmetric_group_examples(self):
        assert dim_symmetric_group_irrep(YoungDiagram((2, 1))) == 2
        assert dim_symmetric_group_irrep(YoungDiagram((7,))) == 1
        assert dim_symmetric_group_irrep(YoungDiagram((3, 2, 1))) == 16

    def test_unitary_group_examples(self):
        assert dim_unitary_group_irrep(YoungDiagram((2, 1)), 2) == 2
        assert dim_unitary_group_irrep(YoungDiagram((2, 1)), 3) == 8
        assert dim_unitary_group_irrep(YoungDiagram((1, 1, 1)), 3) == 1
        assert dim_unitary_group_irrep(YoungDiagram((2, 2)), 2) == 1
        assert dim_unitary_group_irrep(YoungDiagram((1, 1, 1)), 2) == 0

    @pytest.mark.parametrize("n", range(1, 9))
    def test_squares_sum_to_factorial(self, n):
        total = sum(dim_symmetric_group_irrep(nu) ** 2 for nu in partitions_of(n))
        assert total == math.factorial(n)

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("d", range(1, 5))
    def test_schur_weyl_dimension_count(self, n, d):
        total = sum(
            dim_symmetric_group_irrep(nu) * dim_unitary_group_irrep(nu, d)
            for nu in partitions_of(n)
        )
        assert total == d**n

    def test_partition_counts(self):
        assert len(partitions_of(3)) == 3
        assert len(partitions_of(4)) == 5
        assert len(partitions_of(8)) == 22


class TestStandardTableaux:
    def test_validation(self):
        StandardTableau(((1, 3), (2,)))
        with pytest.raises(ValueError):
            StandardTableau(((1, 2), (2,)))  # not a bijection
        with pytest.raises(ValueError):
            StandardTableau(((2, 1), (3,)))  # row not increasing
        with pytest.raises(ValueError):
            StandardTableau(((1, 2), (4, 3)))

    def test_string_round_trip(self):
        t = StandardTableau.from_string("[[1,3],[2]]")
        assert t.rows == ((1, 3), (2,))
        assert str(t) == "[[1,3],[2]]"
        with pytest.raises(ValueError):
            StandardTableau.from_string("nonsense")

    def test_enumeration_examples(self):
        two_one = enumerate_standard_tableaux(YoungDiagram((2, 1)))
        assert [t.rows for t in two_one] == [((1, 2), (3,)), ((1, 3), (2,))]
        assert len(enumerate_standard_tableaux(YoungDiagram((5,)))) == 1
        assert len(enumerate_standard_tableaux(YoungDiagram((2, 2)))) == 2

    def test_enumeration_is_sorted_by_row_word(self):
        tableaux = enumerate_standard_tableaux(YoungDiagram((3, 2)))
        words = [t.row_word() for t in tableaux]
        assert words == sorted(words)

    @given(partition_strategy(max_n=6))
    def test_count_matches_hook_formula(self, dg):
        tableaux = enumerate_standard_tableaux(dg)
        assert len(tableaux) == dim_symmetric_group_irrep(dg)
        assert len(set(tableaux)) == len(tableaux)

    @given(partition_strategy(max_n=6))
    def test_ordered_fillings_present(self, dg):
        tableaux = enumerate_standard_tableaux(dg)
        assert row_ordered_tableau(dg) in tableaux
        assert column_ordered_tableau(dg) in tableaux

    def test_ordered_fillings(self):
        dg = YoungDiagram((3, 2, 1))
        assert row_ordered_tableau(dg).rows == ((1, 2, 3), (4, 5), (6,))
        assert column_ordered_tableau(dg).rows == ((1, 4, 6), (2, 5), (3,))

    def test_tableau_with_largest_in(self):
        dg = YoungDiagram((3, 2, 1))
        t = tableau_with_largest_in(dg, Box(2, 2))
        assert t.rows == ((1, 4, 5), (2, 6), (3,))
        assert t.position(6) == Box(2, 2)


class TestTableauOperations:
    def test_remove_largest_examples(self):
        assert remove_largest(StandardTableau(((1, 3), (2,)))).rows == ((1,), (2,))
        assert remove_largest(StandardTableau(((1, 2), (3,)))).rows == ((1, 2),)
        big = row_ordered_tableau(YoungDiagram((3, 2, 1)))
        assert remove_largest(big) == row_ordered_tableau(YoungDiagram((3, 2)))

    @given(partition_strategy(max_n=6), st.randoms())
    def test_remove_largest_stays_standard(self, dg, rnd):
        tableaux = enumerate_standard_tableaux(dg)
        t = rnd.choice(tableaux)
        if t.n >= 2:
            smaller = remove_largest(t)
            assert smaller.n == t.n - 1

    def test_split_examples(self):
        t = StandardTableau(((1, 3), (2, 4)))
        t_a, t_b = split_tableau(t, 2)
        assert t_a.rows == ((1,), (2,))
        assert t_b is not None and t_b.rows == ((1,), (2,))

        t = StandardTableau(((1, 3), (2,)))
        t_a, t_b = split_tableau(t, 1)
        assert t_a.rows == ((1,),)
        assert t_b is None

    def test_split_row_block(self):
        # entries 3,4 fill row 2 completely: a vertically translated row shape
        t_a, t_b = split_tableau(StandardTableau(((1, 2), (3, 4))), 2)
        assert t_a.rows == ((1, 2),)
        assert t_b is not None and t_b.rows == ((1, 2),)

    @given(partition_strategy(max_n=6), st.randoms())
    def test_split_last_entry(self, dg, rnd):
        tableaux = enumerate_standard_tableaux(dg)
        t = rnd.choice(tableaux)
        if t.n >= 2:
            t_a, t_b = split_tableau(t, t.n - 1)
            assert t_a == remove_largest(t)
            assert t_b is not None and t_b.rows == ((1,),)

    def test_axial_distance_examples(self):
        t = StandardTableau(((1, 2), (3,)))
        assert axial_distance(t, 1) == 1
        assert axial_distance(t, 2) == -2
        assert axial_distance(StandardTableau(((1, 3), (2,))), 2) == 2

    @given(partition_strategy(max_n=6), st.randoms())
    def test_axial_distance_characterizes_adjacency(self, dg, rnd):
        tableaux = enumerate_standard_tableaux(dg)
        t = rnd.choice(tableaux)
        for k in range(1, t.n):
            r = axial_distance(t, k)
            same_row = t.position(k).row == t.position(k + 1).row
            same_col = t.position(k).col == t.position(k + 1).col
            assert (r == 1) == same_row
            assert (r == -1) == same_col
            if not same_row and not same_col:
                assert abs(r) >= 2


class TestDominance:
    def test_examples(self):
        assert dominates((2, 2), (2, 1, 1))
        assert not dominates((2, 1, 1), (2, 2))
        assert dominates((3, 1), (2, 2))
        assert dominates((2, 2), (2, 2))

    def test_requires_equal_weight(self):
        with pytest.raises(ValueError):
            dominates((2,), (1,))
