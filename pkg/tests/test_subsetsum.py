from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kostka.cone import decompose, is_irreducible
from kostka.errors import AssertionFailure, InvalidInstance, SizeCapExceeded
from kostka.partitions import KostkaPair, dominates, size
from kostka.subsetsum import (
    SubsetSumInstance,
    proof_decomposition,
    reduce_to_kostka,
    reduction_equivalence_check,
    subset_sum_oracle,
)

GOLDEN = SubsetSumInstance((3, 2, 1), 4)


class TestInstance:
    def test_validation(self):
        with pytest.raises(InvalidInstance):
            SubsetSumInstance((), 1)
        with pytest.raises(InvalidInstance):
            SubsetSumInstance((1, 0), 1)
        with pytest.raises(InvalidInstance):
            SubsetSumInstance((1, 2), 0)
        with pytest.raises(InvalidInstance):
            SubsetSumInstance((1, 2), 4)  # target above the total

    def test_accessors(self):
        assert GOLDEN.total == 6
        assert GOLDEN.sorted_desc().values == (3, 2, 1)


class TestOracle:
    def test_golden_witness(self):
        assert subset_sum_oracle(GOLDEN) == (1, 3)

    def test_full_set_and_singleton(self):
        assert subset_sum_oracle(SubsetSumInstance((2, 1), 3)) == (1, 2)
        assert subset_sum_oracle(SubsetSumInstance((5,), 5)) == (1,)

    def test_no_witness(self):
        assert subset_sum_oracle(SubsetSumInstance((4, 2), 3)) is None

    def test_lexicographic_preference(self):
        # (1,4) and (2,3) both sum to 6; the former wins
        assert subset_sum_oracle(SubsetSumInstance((5, 4, 2, 1), 6)) == (1, 4)

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded):
            subset_sum_oracle(SubsetSumInstance((1,) * 25, 5))

    def test_matches_bruteforce(self):
        for values in itertools.product((1, 2, 3), repeat=4):
            inst = SubsetSumInstance(values, 4)
            fast = subset_sum_oracle(inst)
            best = None
            for r in range(1, 5):
                for combo in itertools.combinations(range(1, 5), r):
                    if sum(values[i - 1] for i in combo) == 4:
                        if best is None or combo < best:
                            best = combo
            assert fast == best, values


class TestReduction:
    def test_golden_pair(self):
        pair = reduce_to_kostka(GOLDEN)
        assert pair == KostkaPair(
            (4, 3, 2, 1, 1, 1, 1), (2, 2, 2, 2, 1, 1, 1, 1, 1), rank=9
        )

    def test_golden_decomposition(self):
        selected, complement = proof_decomposition(GOLDEN, (1, 3))
        assert selected == KostkaPair((2, 1, 1), (1, 1, 1, 1), rank=9)
        assert complement == KostkaPair(
            (2, 2, 1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1, 1, 1, 1), rank=9
        )

    def test_bad_subset_is_rejected(self):
        with pytest.raises(AssertionFailure):
            proof_decomposition(GOLDEN, (1, 2))  # sums to 5, not 4

    @given(
        st.lists(st.integers(min_value=1, max_value=8), min_size=1, max_size=5),
        st.data(),
    )
    def test_reduction_is_always_a_cone_point(self, values, data):
        target = data.draw(st.integers(min_value=1, max_value=sum(values)))
        inst = SubsetSumInstance(tuple(values), target)
        pair = reduce_to_kostka(inst)
        total = sum(values)
        assert dominates(pair.lam, pair.mu)
        assert size(pair.lam) == 2 * total + 1
        assert pair.rank == 2 * total - target + 1
        assert pair.width == len(values) + 1  # one column per value, plus the tall one

    def test_equivalence_golden(self):
        report = reduction_equivalence_check(GOLDEN)
        assert report.subset == (1, 3)
        assert report.decomposition is not None
        assert report.coordinates == 18

    def test_exhaustive_multisets(self):
        # every multiset of up to 5 values <= 5, every feasible target
        checked = 0
        for d in range(1, 6):
            for values in itertools.combinations_with_replacement(
                range(1, 6), d
            ):
                for target in range(1, sum(values) + 1):
                    inst = SubsetSumInstance(values, target)
                    report = reduction_equivalence_check(inst, cap=60)
                    yes = report.subset is not None
                    assert yes == (report.decomposition is not None)
                    checked += 1
        assert checked > 1500

    def test_no_instances_give_irreducible_pairs(self):
        inst = SubsetSumInstance((4, 2), 3)
        pair = reduce_to_kostka(inst)
        assert subset_sum_oracle(inst) is None
        assert is_irreducible(pair)

    def test_yes_instances_decompose(self):
        pair = reduce_to_kostka(GOLDEN)
        found = decompose(pair)
        assert found is not None
        small, large = found
        assert small.n + large.n == pair.n
