"""
Test suite for the BN and MB recurrences

Tests cover:
- Binomial and multinomial coefficients
- BN(n) / MB(n) against the published table (exact rows)
- Partition terms and the regrouped MB sum
- Term-count instrumentation
- Memo table behaviour
- Exact ratios
"""
from fractions import Fraction
from threading import Thread

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import DomainError
from src.services.counting import (
    ExactRatio,
    MemoTable,
    OpCounter,
    PartitionTriple,
    binomial,
    bn_count,
    factorial_table,
    mb_count,
    mb_count_by_children,
    mb_partition_term,
    multinomial3,
    ratio,
)
from tests.reference_table import EXACT_BN, EXACT_MB


class TestCoefficients:
    """binomial / multinomial3"""

    @pytest.mark.parametrize(
        ("n", "k", "expected"),
        [(4, 0, 1), (4, 2, 6), (22, 11, 705432), (0, 0, 1), (10, 10, 1)],
    )
    def test_binomial_values(self, n: int, k: int, expected: int):
        assert binomial(n, k) == expected

    @pytest.mark.parametrize(("n", "k"), [(3, 4), (-1, 0), (3, -1)])
    def test_binomial_domain_errors(self, n: int, k: int):
        with pytest.raises(DomainError):
            binomial(n, k)

    @pytest.mark.parametrize(
        ("n_p", "n_c", "n_so", "expected"),
        [(0, 2, 0, 1), (1, 1, 0, 2), (1, 1, 1, 6), (0, 0, 0, 1), (2, 2, 2, 90)],
    )
    def test_multinomial3_values(self, n_p: int, n_c: int, n_so: int, expected: int):
        assert multinomial3(n_p, n_c, n_so) == expected

    def test_multinomial3_rejects_negative(self):
        with pytest.raises(DomainError):
            multinomial3(1, -1, 0)

    def test_factorial_table_shared_through_memo(self, memo: MemoTable):
        assert factorial_table(5, memo) == [1, 1, 2, 6, 24, 120]
        assert binomial(5, 2, memo) == 10
        # A later request extends the same table
        assert factorial_table(6, memo)[-1] == 720

    @given(st.integers(min_value=1, max_value=60), st.data())
    @settings(max_examples=60, deadline=None)
    def test_pascal_rule(self, n: int, data: st.DataObject):
        k = data.draw(st.integers(min_value=1, max_value=n))
        assert binomial(n, k) == binomial(n - 1, k - 1) + (binomial(n - 1, k) if k < n else 0)

    @given(
        st.integers(min_value=0, max_value=25),
        st.integers(min_value=0, max_value=25),
        st.integers(min_value=0, max_value=25),
    )
    @settings(max_examples=60, deadline=None)
    def test_multinomial3_factors_into_binomials(self, n_p: int, n_c: int, n_so: int):
        total = n_p + n_c + n_so
        expected = binomial(total, n_c) * binomial(total - n_c, n_p)
        assert multinomial3(n_p, n_c, n_so) == expected
        assert multinomial3(n_so, n_p, n_c) == expected


class TestBnCount:
    """Labeled DAG recurrence"""

    def test_base_case(self):
        assert bn_count(0) == 1

    @pytest.mark.parametrize("n", sorted(EXACT_BN))
    def test_matches_published_exact_values(self, n: int, memo: MemoTable):
        assert bn_count(n, memo) == EXACT_BN[n]

    def test_memo_holds_n_plus_one_entries(self, memo: MemoTable):
        bn_count(12, memo)
        assert len(memo) == 13
        assert memo.entries[0] == 1
        assert memo.entries[12] == EXACT_BN[12]

    def test_memo_entries_are_reused(self, memo: MemoTable):
        bn_count(10, memo)
        counter = OpCounter()
        assert bn_count(7, memo, counter) == EXACT_BN[7]
        assert counter.terms_evaluated == 0
        assert counter.big_multiplications == 0

    def test_memo_entries_are_positive(self, memo: MemoTable):
        bn_count(40, memo)
        assert all(value > 0 for value in memo.entries.values())

    def test_concurrent_fill_is_consistent(self):
        shared = MemoTable()
        results: dict[int, int] = {}

        def fill(n: int) -> None:
            results[n] = bn_count(n, shared)

        threads = [Thread(target=fill, args=(n,)) for n in (12, 9, 12, 5)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()

        assert results[12] == EXACT_BN[12]
        assert results[9] == EXACT_BN[9]
        assert len(shared) == 13

    def test_negative_n_rejected(self):
        with pytest.raises(DomainError):
            bn_count(-1)


class TestMbCount:
    """Markov blanket structure count"""

    def test_base_case(self):
        assert mb_count(1) == 1

    @pytest.mark.parametrize("n", sorted(EXACT_MB))
    def test_matches_published_exact_values(self, n: int, memo: MemoTable):
        assert mb_count(n, memo) == EXACT_MB[n]

    def test_zero_nodes_rejected(self):
        with pytest.raises(DomainError):
            mb_count(0)

    @pytest.mark.parametrize(
        ("n", "n_p", "n_so", "expected"),
        [(3, 1, 0, 4), (3, 0, 2, 1), (1, 0, 0, 1), (3, 0, 0, 3), (3, 0, 1, 4), (3, 1, 1, 2)],
    )
    def test_partition_terms(self, n: int, n_p: int, n_so: int, expected: int):
        assert mb_partition_term(n, n_p, n_so) == expected

    def test_partition_term_rejects_overfull_split(self):
        with pytest.raises(DomainError):
            mb_partition_term(3, 2, 1)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_partition_terms_sum_to_mb(self, n: int, memo: MemoTable):
        total = sum(
            mb_partition_term(n, n_p, n_so, memo)
            for n_p in range(n)
            for n_so in range(n - n_p)
        )
        assert total == mb_count(n, memo)

    def test_regrouped_sum_agrees_up_to_64(self, memo: MemoTable):
        for n in range(1, 65):
            assert mb_count_by_children(n, memo) == mb_count(n, memo)

    def test_mb_never_exceeds_bn(self, memo: MemoTable):
        for n in range(1, 65):
            bn, mb = bn_count(n, memo), mb_count(n, memo)
            assert mb <= bn
            assert (mb == bn) == (n in (1, 2))

    def test_partition_triple_derives_children(self):
        assert PartitionTriple.for_node_count(5, 1, 2) == PartitionTriple(n_p=1, n_c=1, n_so=2)
        with pytest.raises(DomainError):
            PartitionTriple.for_node_count(0, 0, 0)


class TestTermCounts:
    """OpCounter instrumentation of both summations"""

    @pytest.mark.parametrize("n", range(1, 23))
    def test_bn_evaluates_n_summands(self, n: int):
        counter = OpCounter()
        bn_count(n, MemoTable(), counter)
        assert counter.terms_evaluated == n
        assert counter.fill_terms == n * (n - 1) // 2

    @pytest.mark.parametrize("n", range(1, 23))
    def test_mb_evaluates_triangular_summands(self, n: int):
        counter = OpCounter()
        mb_count(n, MemoTable(), counter)
        assert counter.terms_evaluated == n * (n + 1) // 2

    def test_reset_clears_all_fields(self):
        counter = OpCounter()
        mb_count(6, MemoTable(), counter)
        assert counter.big_multiplications > 0
        counter.reset()
        assert counter == OpCounter()


class TestExactRatio:
    """BN(n) / MB(n) as an exact rational"""

    def test_unit_ratio(self):
        assert ratio(1) == ExactRatio(1, 1)

    def test_ratio_keeps_counts_unreduced(self):
        r = ratio(3)
        assert (r.numerator, r.denominator) == (25, 15)
        assert r == ExactRatio(5, 3)
        assert str(r) == "5/3"
        assert r.reduced() == ExactRatio(5, 3)
        assert r.reduced().numerator == 5

    def test_ratio_four(self):
        assert ratio(4).as_fraction() == Fraction(543, 153)

    def test_equal_ratios_hash_equal(self):
        assert hash(ExactRatio(25, 15)) == hash(ExactRatio(5, 3))

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            ratio(0)
        with pytest.raises(DomainError):
            ExactRatio(1, 0)

    def test_ratio_at_least_one(self, memo: MemoTable):
        assert all(ratio(n, memo) >= ExactRatio(1, 1) for n in range(1, 30))

    def test_ratio_strictly_increasing_from_two(self, memo: MemoTable):
        ratios = [ratio(n, memo) for n in range(2, 23)]
        assert all(a < b for a, b in zip(ratios, ratios[1:]))

    def test_growth_factor_band(self, memo: MemoTable):
        for n in range(4, 22):
            growth = ratio(n + 1, memo) / ratio(n, memo)
            assert Fraction(2) <= growth <= Fraction(12, 5), n

    def test_ordering_against_other_types_is_unsupported(self):
        with pytest.raises(TypeError):
            _ = ExactRatio(5, 3) < 2
        with pytest.raises(TypeError):
            _ = ExactRatio(5, 3) >= "1"
        assert ExactRatio(5, 3) != 5
