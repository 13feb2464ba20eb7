from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import cone_pairs_st, partition_pool, partitions_st
from kostka import config
from kostka.errors import InvalidPair, InvalidPartition, SizeCapExceeded
from kostka.partitions import (
    KostkaPair,
    as_partition,
    conjugate,
    dominated_partitions,
    dominates,
    enumerate_partitions,
    format_partition,
    in_kostka_cone,
    kostka_count,
    kostka_positive,
    pad,
    parse_partition,
    prefix_dominates,
    prefix_sums,
    render_diagram,
    size,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]  # p(0..10)


class TestBasics:
    def test_as_partition_trims_and_validates(self):
        assert as_partition([3, 2, 0, 0]) == (3, 2)
        assert as_partition(()) == ()
        with pytest.raises(InvalidPartition):
            as_partition((1, 2))
        with pytest.raises(InvalidPartition):
            as_partition((2, -1))

    def test_pad_and_size(self):
        assert pad((3, 1), 4) == (3, 1, 0, 0)
        assert size((3, 1)) == 4
        assert size(()) == 0

    def test_prefix_sums(self):
        assert prefix_sums((3, 2), 4) == (3, 5, 5, 5)
        assert prefix_sums((), 2) == (0, 0)

    def test_conjugate_golden(self):
        assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
        assert conjugate(()) == ()
        assert conjugate((8, 7, 7, 7, 3, 2)) == (6, 6, 5, 4, 4, 4, 4, 1)

    @given(partitions_st(max_boxes=14))
    def test_conjugate_involution(self, p):
        assert conjugate(conjugate(p)) == p
        if p:
            assert len(conjugate(p)) == p[0]
            assert conjugate(p)[0] == len(p)

    def test_render_diagram(self):
        assert render_diagram((3, 1)) == "###\n#"


class TestDominance:
    @given(partitions_st(max_boxes=12))
    def test_reflexive(self, p):
        assert dominates(p, p)

    def test_size_mismatch_is_false(self):
        assert not dominates((2, 1), (2,))
        assert not dominates((2,), (2, 1))

    def test_transitive_and_antisymmetric_exhaustive(self):
        parts = list(enumerate_partitions(6))
        for a, b in itertools.product(parts, repeat=2):
            if dominates(a, b) and dominates(b, a):
                assert a == b
        for a, b, c in itertools.product(parts, repeat=3):
            if dominates(a, b) and dominates(b, c):
                assert dominates(a, c)

    @given(partitions_st(max_boxes=10), partitions_st(max_boxes=10))
    def test_dominates_is_sized_prefix_dominance(self, a, b):
        assert dominates(a, b) == (size(a) == size(b) and prefix_dominates(a, b))

    @given(partitions_st(max_boxes=10))
    def test_conjugation_reverses_dominance(self, a):
        for b in dominated_partitions(a, max_len=size(a)):
            assert dominates(conjugate(b), conjugate(a))

    def test_in_kostka_cone_respects_rank(self):
        assert in_kostka_cone((2, 1), (1, 1, 1), 3)
        assert not in_kostka_cone((2, 1), (1, 1, 1), 2)
        assert not in_kostka_cone((2, 2), (3, 1), 2)


class TestKostkaCount:
    def test_worked_tableau_example(self):
        assert kostka_count((4, 2, 1), (3, 2, 1, 1)) == 4

    def test_small_goldens(self):
        assert kostka_count((2, 1), (1, 1, 1)) == 2
        assert kostka_count((2, 2), (2, 1, 1)) == 1
        assert kostka_count((), ()) == 1
        assert kostka_count((3, 1), (2, 2)) == 1

    def test_same_shape_gives_one_and_single_row_counts_once(self):
        for n in range(1, 7):
            for lam in enumerate_partitions(n):
                assert kostka_count(lam, lam) == 1
                assert kostka_count((n,), lam) == 1

    def test_size_mismatch_counts_zero(self):
        assert kostka_count((2, 1), (1, 1)) == 0

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded):
            kostka_count((4, 2, 1), (3, 2, 1, 1), cap=5)

    @given(cone_pairs_st(max_boxes=8))
    def test_matches_cell_filling_oracle(self, pair):
        assert kostka_count(pair.lam, pair.mu) == oracles.ssyt_count(pair.lam, pair.mu)

    @given(partitions_st(max_boxes=8), partitions_st(max_boxes=8))
    def test_positivity_iff_dominance(self, a, b):
        positive = size(a) == size(b) and kostka_count(a, b) > 0
        assert positive == dominates(a, b)
        assert kostka_positive(a, b) == dominates(a, b)


class TestEnumeration:
    def test_partition_numbers(self):
        for n, expected in enumerate(PARTITION_COUNTS):
            assert sum(1 for _ in enumerate_partitions(n)) == expected

    def test_decreasing_lex_order_and_bounds(self):
        got = list(enumerate_partitions(6, max_part=3, max_len=3))
        assert got == sorted(got, reverse=True)
        assert all(p[0] <= 3 and len(p) <= 3 for p in got)
        assert got == [(3, 3), (3, 2, 1), (2, 2, 2)]

    def test_dominated_partitions_against_filter(self):
        for lam in enumerate_partitions(6):
            listed = list(dominated_partitions(lam, max_len=6))
            brute = [
                mu for mu in enumerate_partitions(6) if oracles.dominance(lam, mu)
            ]
            assert sorted(listed) == sorted(brute)

    def test_pool_sizes_are_stable(self):
        assert len(partition_pool(10)) == sum(PARTITION_COUNTS)


class TestPairType:
    def test_normalization_and_defaults(self):
        pair = KostkaPair((4, 2, 1, 0), (3, 2, 1, 1))
        assert pair.lam == (4, 2, 1)
        assert pair.rank == 4
        assert pair.n == 7
        assert pair.width == 4
        assert str(pair) == "(4,2,1 | 3,2,1,1; r=4)"

    def test_padded(self):
        pair = KostkaPair((2, 1), (1, 1, 1))
        assert pair.padded() == ((2, 1, 0), (1, 1, 1))

    def test_invalid_pairs(self):
        with pytest.raises(InvalidPair):
            KostkaPair((2, 1), (1, 1))  # size mismatch
        with pytest.raises(InvalidPair):
            KostkaPair((2, 1), (1, 1, 1), rank=2)  # mu needs 3 rows
        with pytest.raises(InvalidPartition):
            KostkaPair((1, 2), (2, 1))

    def test_zero_pair_is_allowed(self):
        pair = KostkaPair((), (), rank=1)
        assert pair.n == 0 and pair.width == 0


class TestParsing:
    def test_round_trip(self):
        for text in ("4,2,1", "1", "7,7,4,4,4,4,4"):
            assert format_partition(parse_partition(text)) == text

    def test_empty_forms(self):
        assert parse_partition("") == ()
        assert parse_partition("0") == ()
        assert parse_partition("()") == ()
        assert format_partition(()) == "0"

    def test_rejects_garbage(self):
        with pytest.raises(InvalidPartition):
            parse_partition("1,2")
        with pytest.raises(InvalidPartition):
            parse_partition("a,b")
        with pytest.raises(InvalidPartition):
            parse_partition("3,-1")
