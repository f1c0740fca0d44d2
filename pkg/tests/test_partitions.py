import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import conjugate_brute, partitions_brute
from skewschur.partitions import (
    LiteralError,
    Partition,
    contains,
    dominates,
    first_dominance_failure,
    list_partitions,
    make_partition,
    parse_partition,
    sorted_partition,
    transpose,
    union,
)


@st.composite
def partitions(draw, max_n=12):
    parts = draw(st.lists(st.integers(1, 6), max_size=max_n))
    return Partition(sorted(parts, reverse=True))


def test_make_partition_strips_zeros():
    assert make_partition((4, 4, 3, 0, 0)) == (4, 4, 3)
    assert make_partition(()) == ()
    assert make_partition((0,)) == ()
    with pytest.raises(ValueError):
        make_partition((4, 3, 4))
    with pytest.raises(ValueError):
        make_partition((2, -1))


def test_partition_part_is_zero_padded():
    lam = Partition((4, 4, 3))
    assert lam.size == 11 and lam.length == 3
    assert [lam.part(k) for k in range(1, 6)] == [4, 4, 3, 0, 0]


@pytest.mark.parametrize(
    "lam, expected",
    [((4, 4, 3), (3, 3, 3, 2)), ((), ()), ((4, 2, 2, 2, 2), (5, 5, 1, 1))],
)
def test_transpose_examples(lam, expected):
    assert transpose(lam) == expected


@pytest.mark.parametrize("n", range(11))
def test_transpose_is_size_preserving_involution(n):
    for lam in list_partitions(n):
        assert transpose(lam) == conjugate_brute(lam)
        assert transpose(transpose(lam)) == lam
        assert transpose(lam).size == n


@pytest.mark.parametrize(
    "lam, mu, expected",
    [
        ((4, 2, 1), (4, 4), True),
        ((3, 1), (3, 1), True),
        ((2, 1, 1), (2, 2), True),
        ((4, 4), (4, 2, 1), False),
        ((1,), (), False),
        ((), (), True),
    ],
)
def test_dominates_examples(lam, mu, expected):
    assert dominates(lam, mu) is expected


def test_first_dominance_failure_reports_prefix():
    assert first_dominance_failure((1, 1, 1), (2, 1)) is None
    assert first_dominance_failure((2, 1), (1, 1, 1)) == (1, 2, 1)
    assert first_dominance_failure((1,), ()) == (1, 1, 0)


def _dominates_brute(lam, mu):
    # zero-padded prefix sums out to a common length
    n = max(len(lam), len(mu)) + 1
    a = list(lam) + [0] * (n - len(lam))
    b = list(mu) + [0] * (n - len(mu))
    return all(sum(a[:k]) <= sum(b[:k]) for k in range(1, n + 1))


def test_dominates_matches_padded_prefix_sums():
    universe = [lam for n in range(8) for lam in list_partitions(n)]
    for lam in universe:
        for mu in universe:
            assert dominates(lam, mu) == _dominates_brute(lam, mu)


@pytest.mark.parametrize("n", range(1, 9))
def test_dominance_is_a_partial_order_on_equal_sizes(n):
    ps = list_partitions(n)
    for a in ps:
        assert dominates(a, a)
        for b in ps:
            if a != b and dominates(a, b):
                assert not dominates(b, a)
            for c in ps:
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)


def test_extended_dominance_is_antisymmetric_across_sizes():
    universe = [lam for n in range(8) for lam in list_partitions(n)]
    for a in universe:
        for b in universe:
            if dominates(a, b) and dominates(b, a):
                assert a == b


@given(partitions(), partitions(), partitions())
def test_extended_dominance_is_transitive(a, b, c):
    if dominates(a, b) and dominates(b, c):
        assert dominates(a, c)


@pytest.mark.parametrize("n", range(11))
def test_transpose_reverses_dominance(n):
    ps = list_partitions(n)
    for lam in ps:
        for mu in ps:
            assert dominates(lam, mu) == dominates(transpose(mu), transpose(lam))


def test_sorted_sequence_lemma_random():
    rng = random.Random(20071)
    for _ in range(10_000):
        r = rng.randint(0, 8)
        s = rng.randint(r, 10)
        a = [rng.randint(0, 6) for _ in range(r)]
        b = [ai + rng.randint(0, 3) for ai in a] + [rng.randint(0, 6) for _ in range(s - r)]
        assert dominates(sorted_partition(a), sorted_partition(b))


def test_union():
    assert union((3, 1), (2, 1)) == (3, 2, 1, 1)
    assert union((1,), (1,)) == (1, 1)
    assert union((4, 2), ()) == (4, 2)


def test_contains():
    assert contains((2,), (4, 4, 3))
    assert contains((), (1,))
    assert not contains((2,), (1, 1, 1, 1))
    assert not contains((1, 1, 1), (5, 5))


@pytest.mark.parametrize("n", range(11))
def test_list_partitions_against_compositions(n):
    got = list_partitions(n)
    assert got == partitions_brute(n)
    assert len(set(got)) == len(got)


def test_list_partitions_small():
    assert list_partitions(0) == [()]
    assert list_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list_partitions(5)) == 7


@pytest.mark.parametrize(
    "text, expected",
    [("4,4,3", (4, 4, 3)), ("443", (4, 4, 3)), ("0", ()), ("", ()), ("12,3", (12, 3)), (" 4, 4 ,3 ", (4, 4, 3))],
)
def test_parse_partition(text, expected):
    assert parse_partition(text) == expected


@pytest.mark.parametrize("text, column", [("4a3", 2), ("10", 2), ("4,x", 3), ("344", 1)])
def test_parse_partition_errors_carry_position(text, column):
    with pytest.raises(LiteralError) as info:
        parse_partition(text)
    assert info.value.position + 1 == column


@given(partitions())
def test_str_round_trips(lam):
    assert parse_partition(str(lam)) == lam
