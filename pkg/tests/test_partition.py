from itertools import accumulate, product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbitcalc.errors import CapError, SizeError
from orbitcalc.partition import (
    Ordering,
    Partition,
    add_rowwise,
    decrement_smallest,
    dominance_leq,
    enumerate_partitions,
    exponent,
    increment_largest,
    lex_cmp,
    make_partition,
    parse_partition,
    transpose,
)

P = Partition.of


def _prefix(p, n):
    sums = list(accumulate(p.parts))
    return sums + [sums[-1] if sums else 0] * (n - len(sums))


def _count_partitions(n, largest=None):
    # independent recursive count
    if largest is None:
        largest = n
    if n == 0:
        return 1
    return sum(_count_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


class TestMakePartition:
    def test_normalizes(self):
        assert make_partition([1, 3, 0, 3]).parts == (3, 3, 1)

    def test_empty(self):
        p = make_partition([])
        assert p.parts == () and p.size == 0

    def test_canonical_input_kept(self):
        assert make_partition([2, 2, 2]).parts == (2, 2, 2)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            make_partition([3, -1])

    def test_constructor_checks_order(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    @given(st.lists(st.integers(min_value=0, max_value=9), max_size=12))
    def test_canonical_for_permutations(self, raw):
        assert make_partition(raw) == make_partition(list(reversed(raw)))
        assert make_partition(raw).size == sum(raw)


class TestParse:
    @pytest.mark.parametrize(
        "text, parts",
        [("3,3,2", (3, 3, 2)), ("3^2,2", (3, 3, 2)), ("3^2,1^3", (3, 3, 1, 1, 1)), ("1,3", (3, 1)), ("", ())],
    )
    def test_forms(self, text, parts):
        assert parse_partition(text).parts == parts

    @pytest.mark.parametrize("text", ["3,,2", "a", "3^x", "-1"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_partition(text)

    @given(st.lists(st.integers(min_value=1, max_value=20), max_size=10))
    def test_text_round_trip(self, raw):
        p = make_partition(raw)
        assert parse_partition(str(p)) == p


class TestTranspose:
    def test_single_row(self):
        assert transpose(P(5)) == P(1, 1, 1, 1, 1)

    def test_examples(self):
        assert transpose(P(3, 3, 1, 1)) == P(4, 2, 2)
        assert transpose(P(3, 3, 2, 2, 1, 1)) == P(6, 4, 2)

    def test_involution_exhaustive(self):
        for n in range(31):
            for p in enumerate_partitions(n):
                t = transpose(p)
                assert t.size == n
                assert transpose(t) == p


class TestDominance:
    def test_examples(self):
        assert dominance_leq(P(2, 2), P(3, 1))
        assert not dominance_leq(P(3, 1, 1, 1), P(2, 2, 1, 1))
        assert dominance_leq(P(2, 2, 1, 1), P(3, 1, 1, 1))

    def test_size_mismatch(self):
        with pytest.raises(SizeError):
            dominance_leq(P(3, 1), P(2, 2, 2))

    @pytest.mark.parametrize("n", range(15))
    def test_partial_order_axioms(self, n):
        parts = enumerate_partitions(n)
        prefix = np.array([_prefix(p, n) for p in parts]).reshape(len(parts), n)
        # independent matrix of the relation, checked against dominance_leq
        rel = np.all(prefix[:, None, :] <= prefix[None, :, :], axis=2)
        for i, j in product(range(len(parts)), repeat=2):
            assert rel[i, j] == dominance_leq(parts[i], parts[j])
        assert rel.diagonal().all()
        assert not (rel & rel.T & ~np.eye(len(parts), dtype=bool)).any()
        composed = (rel.astype(int) @ rel.astype(int)) > 0
        assert not (composed & ~rel).any()

    @pytest.mark.parametrize("n", range(13))
    def test_transpose_antitone_and_lex_refinement(self, n):
        parts = enumerate_partitions(n)
        for p, q in product(parts, repeat=2):
            leq = dominance_leq(p, q)
            assert leq == dominance_leq(transpose(q), transpose(p))
            if leq:
                assert lex_cmp(p, q) in (Ordering.LESS, Ordering.EQUAL)


class TestLex:
    def test_examples(self):
        assert lex_cmp(P(3, 1), P(2, 2)) is Ordering.GREATER
        assert lex_cmp(P(2, 2), P(2, 2)) is Ordering.EQUAL
        assert lex_cmp(P(2, 1, 1), P(2, 2)) is Ordering.LESS

    def test_size_mismatch(self):
        with pytest.raises(SizeError):
            lex_cmp(P(2), P(1))


class TestRowArithmetic:
    def test_add_rowwise(self):
        assert add_rowwise([P(2, 2, 2), P(1, 1), P(1, 1), P(2)]) == P(6, 4, 2)
        assert add_rowwise([P(4), P()]) == P(4)
        assert add_rowwise([P(2, 2), P(2, 2)]) == P(4, 4)

    @given(st.lists(st.lists(st.integers(min_value=0, max_value=6), max_size=6), max_size=4))
    def test_add_rowwise_size(self, raws):
        ps = [make_partition(r) for r in raws]
        assert add_rowwise(ps).size == sum(p.size for p in ps)

    def test_decrement_smallest(self):
        assert decrement_smallest(P(3, 3, 3)) == P(3, 3, 2)
        assert decrement_smallest(exponent((1, 9))) == exponent((1, 8))
        assert decrement_smallest(P(4, 4, 1, 1, 1)) == P(4, 4, 1, 1)
        with pytest.raises(SizeError):
            decrement_smallest(P())

    def test_increment_largest(self):
        assert increment_largest(P(3, 3)) == P(4, 3)
        assert increment_largest(P()) == P(1)
        assert increment_largest(P(2, 2)) == P(3, 2)

    @given(st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=8))
    def test_size_adjust_by_one(self, raw):
        p = make_partition(raw)
        assert decrement_smallest(p).size == p.size - 1
        assert increment_largest(p).size == p.size + 1


class TestEnumerate:
    def test_four(self):
        assert enumerate_partitions(4) == [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]

    def test_zero(self):
        assert enumerate_partitions(0) == [P()]

    def test_eight(self):
        assert len(enumerate_partitions(8)) == 22

    @pytest.mark.parametrize("n", [0, 1, 5, 12, 20])
    def test_counts_unique_descending(self, n):
        parts = enumerate_partitions(n)
        assert len(parts) == _count_partitions(n)
        assert len(set(parts)) == len(parts)
        assert all(lex_cmp(a, b) is Ordering.GREATER for a, b in zip(parts, parts[1:]))

    def test_cap(self):
        assert len(enumerate_partitions(40)) == 37338
        with pytest.raises(CapError):
            enumerate_partitions(41)
        assert len(enumerate_partitions(6, cap=6)) == 11
        with pytest.raises(CapError):
            enumerate_partitions(7, cap=6)
