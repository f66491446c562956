from itertools import combinations

import pytest

from orbitcalc.collapse import ls_dual
from orbitcalc.duality import bv_dual, bv_dual_trace, recipe_for
from orbitcalc.errors import ParityError, SizeError, UnsupportedGroupError
from orbitcalc.groups import (
    Mp,
    SO_even,
    SO_odd,
    Sp,
    TypeA,
    has_orthogonal_parity,
    has_symplectic_parity,
    is_special,
    is_valid,
    principal_partition,
)
from orbitcalc.partition import Partition, dominance_leq, enumerate_partitions, exponent, transpose

P = Partition.of


def dual_inputs(G):
    parity = has_symplectic_parity if G == SO_odd(G.n) else has_orthogonal_parity
    return [q for q in enumerate_partitions(G.dual_partition_size) if parity(q)]


@pytest.mark.parametrize(
    "q, G, expected",
    [
        (P(3, 3, 3), Sp(4), P(3, 3, 2)),
        (P(2, 2), SO_odd(2), P(3, 1, 1)),
        (P(3, 3), SO_even(3), P(2, 2, 1, 1)),
        (P(4, 4, 1, 1, 1), Sp(5), P(4, 2, 2, 2)),
    ],
)
def test_examples(q, G, expected):
    assert bv_dual(q, G) == expected


def test_trace_stages():
    trace = bv_dual_trace(P(4, 4, 1, 1, 1), Sp(5))
    assert trace.adjusted == P(4, 4, 1, 1)
    assert trace.collapsed == P(4, 4, 1, 1)
    assert trace.result == P(4, 2, 2, 2)
    assert trace.to_dict()["recipe"]["size_adjust"] == "decrement_smallest"


def test_type_a_is_transpose():
    for q in enumerate_partitions(7):
        assert bv_dual(q, TypeA(7)) == transpose(q)


class TestPreconditions:
    def test_wrong_size(self):
        with pytest.raises(SizeError):
            bv_dual(P(3, 3), Sp(4))

    def test_wrong_parity(self):
        with pytest.raises(ParityError):
            bv_dual(P(3, 2, 2, 2), Sp(4))
        with pytest.raises(ParityError):
            bv_dual(P(3, 1), SO_odd(2))

    def test_metaplectic(self):
        with pytest.raises(UnsupportedGroupError):
            recipe_for(Mp(2))
        with pytest.raises(UnsupportedGroupError):
            ls_dual(P(2, 2), Mp(2))


class TestLsDual:
    def test_examples(self):
        assert ls_dual(P(2, 1, 1), Sp(2)) == P(2, 2)
        assert ls_dual(P(2, 2), Sp(2)) == P(2, 2)
        assert ls_dual(exponent((1, 5)), SO_odd(2)) == P(5)

    def test_rejects_invalid(self):
        with pytest.raises(ParityError):
            ls_dual(P(3, 1), Sp(2))


def groups_up_to(max_size):
    for n in range(max_size // 2 + 1):
        for G in (Sp(n), SO_odd(n), SO_even(n)):
            if max(G.partition_size, G.dual_partition_size) <= max_size:
                yield G


def test_outputs_valid_and_special():
    for G in groups_up_to(16):
        for q in dual_inputs(G):
            r = bv_dual(q, G)
            assert is_valid(r, G) and is_special(r, G)


def test_order_reversing():
    for G in groups_up_to(14):
        inputs = dual_inputs(G)
        image = {q: bv_dual(q, G) for q in inputs}
        for p, q in combinations(inputs, 2):
            if dominance_leq(p, q):
                assert dominance_leq(image[q], image[p])
            if dominance_leq(q, p):
                assert dominance_leq(image[p], image[q])


def test_round_trip_anchor():
    assert bv_dual(P(3, 3, 3), Sp(4)) == P(3, 3, 2)
    assert bv_dual(P(3, 3, 2), SO_odd(4)) == P(3, 3, 3)


@pytest.mark.parametrize("n", range(7))
def test_round_trips_on_specials(n):
    for q in enumerate_partitions(2 * n + 1):
        if is_valid(q, SO_odd(n)) and is_special(q, SO_odd(n)):
            assert bv_dual(bv_dual(q, Sp(n)), SO_odd(n)) == q
    for q in enumerate_partitions(2 * n):
        if is_valid(q, Sp(n)) and is_special(q, Sp(n)):
            assert bv_dual(bv_dual(q, SO_odd(n)), Sp(n)) == q
    if 2 * n <= 14:
        for q in enumerate_partitions(2 * n):
            if is_valid(q, SO_even(n)) and is_special(q, SO_even(n)):
                assert bv_dual(bv_dual(q, SO_even(n)), SO_even(n)) == q


@pytest.mark.parametrize("n", range(1, 13))
def test_generic_gives_principal(n):
    for G in (Sp(n), SO_odd(n), SO_even(n)):
        assert bv_dual(exponent((1, G.dual_partition_size)), G) == principal_partition(G)
