from functools import lru_cache
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import product_expansion_oracle, schur_expansion_oracle
from skewschur.partitions import Partition, dominates, list_partitions, transpose
from skewschur.shapes import (
    EMPTY_SHAPE,
    SkewShape,
    cols_l,
    enumerate_skew_shapes,
    parse_shape,
    rows_k,
    star_product,
    transpose_shape,
)
from skewschur.tableaux import (
    LRFilling,
    SchurExpansion,
    enumerate_lr_fillings,
    hybrid_filling,
    is_lattice,
    least_dominant_filling,
    lr_expand,
    most_dominant_filling,
    reverse_reading_word,
    support,
)

SHAPES_UPTO_6 = [s for n in range(1, 7) for s in enumerate_skew_shapes(n)]
SHAPES_UPTO_7 = SHAPES_UPTO_6 + enumerate_skew_shapes(7)


def test_443_over_2_fillings():
    fillings = list(enumerate_lr_fillings(parse_shape("443/2")))
    assert [f.word_string() for f in fillings] == ["112211322", "112211332"]
    assert all(f.is_lr() for f in fillings)
    assert lr_expand(parse_shape("443/2")) == SchurExpansion({(4, 4, 1): 1, (4, 3, 2): 1})


def test_reverse_reading_word_of_plain_ssyt():
    f = LRFilling(parse_shape("443/2"), ((1, 2), (1, 1, 2, 3), (5, 7, 7)))
    assert f.is_semistandard()
    assert reverse_reading_word(f) == (2, 1, 3, 2, 1, 1, 7, 7, 5)
    assert not f.is_lr()


def test_filling_row_sizes_are_checked():
    with pytest.raises(ValueError):
        LRFilling(parse_shape("21"), ((1,), (2,)))


@pytest.mark.parametrize(
    "word, expected",
    [
        ((), True),
        ((1, 1, 2), True),
        ((1, 2, 1, 3), True),
        ((2,), False),
        ((1, 2, 2), False),
        ((1, 1, 2, 3, 3), False),
        ((1, 1, 2, 2, 3), True),
    ],
)
def test_is_lattice(word, expected):
    assert is_lattice(word) is expected


def test_semistandard_detection():
    shape = parse_shape("22")
    assert LRFilling(shape, ((1, 1), (2, 2))).is_semistandard()
    assert not LRFilling(shape, ((1, 1), (1, 2))).is_semistandard()
    assert not LRFilling(shape, ((2, 1), (3, 3))).is_semistandard()


def test_empty_shape_has_one_filling():
    fillings = list(enumerate_lr_fillings(EMPTY_SHAPE))
    assert len(fillings) == 1 and fillings[0].rows == ()
    assert lr_expand(EMPTY_SHAPE) == SchurExpansion({(): 1})


@pytest.mark.parametrize("n", range(1, 8))
def test_straight_shape_has_only_superstandard_filling(n):
    for lam in list_partitions(n):
        fillings = list(enumerate_lr_fillings(SkewShape(lam)))
        assert len(fillings) == 1
        assert fillings[0].rows == tuple((i,) * p for i, p in enumerate(lam, start=1))


def test_fillings_come_in_reading_word_order():
    for shape in SHAPES_UPTO_6:
        words = [f.reading_word for f in enumerate_lr_fillings(shape)]
        assert words == sorted(words) and len(set(words)) == len(words)


@pytest.mark.parametrize("n", range(1, 8))
def test_expansion_matches_kostka_oracle(n):
    for shape in enumerate_skew_shapes(n):
        oracle = schur_expansion_oracle(shape.outer, shape.inner)
        assert dict(lr_expand(shape)) == oracle, shape


def test_equal_support_pair_expansions():
    assert lr_expand(parse_shape("3311/21")) == SchurExpansion(
        {(3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1, (2, 1, 1, 1): 1}
    )
    assert lr_expand(parse_shape("3321/211")) == SchurExpansion(
        {(3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 2, (2, 1, 1, 1): 1}
    )


@pytest.mark.parametrize(
    "alpha, beta",
    [((1,), (1,)), ((2,), (1,)), ((2, 1), (1,)), ((2, 1), (2,)), ((2, 1), (2, 1)), ((3,), (1, 1)), ((2, 2), (1, 1))],
)
def test_star_product_expands_as_product(alpha, beta):
    shape = star_product(SkewShape(alpha), SkewShape(beta))
    assert dict(lr_expand(shape)) == product_expansion_oracle(alpha, beta)


def test_every_enumerated_filling_is_lr():
    for shape in SHAPES_UPTO_6:
        for f in enumerate_lr_fillings(shape):
            assert f.is_lr()
            assert sum(f.content) == shape.size
            assert Partition(f.content) == tuple(f.content)


def test_schur_expansion_algebra():
    a = SchurExpansion({(2,): 1, (1, 1): 1})
    b = SchurExpansion({(2,): 1})
    d = a - b
    assert d == SchurExpansion({(1, 1): 1})
    assert (b - a) == SchurExpansion({(1, 1): -1})
    assert not (b - a).is_schur_positive()
    assert (a - a) == SchurExpansion() and (a - a).is_schur_positive()
    assert list(a) == [(2,), (1, 1)]
    assert a.transpose() == SchurExpansion({(1, 1): 1, (2,): 1})
    assert str(a - b - b) == "-s[2] + s[11]"
    assert str(SchurExpansion({(2, 2, 1): 2})) == "2s[221]"
    assert str(SchurExpansion()) == "0"
    assert SchurExpansion({(2,): 0}) == SchurExpansion()


def test_support_matches_expansion_keys():
    shape = parse_shape("553111/31")
    assert support(shape) == frozenset(lr_expand(shape))


def test_extreme_fillings_of_running_example():
    shape = parse_shape("553111/31")
    low, high = least_dominant_filling(shape), most_dominant_filling(shape)
    assert low.content == (4, 3, 2, 1, 1, 1)
    assert high.content == (5, 5, 1, 1)
    assert high.content == tuple(transpose(cols_l(shape, 1)))
    assert low.is_lr() and high.is_lr()
    assert Partition(low.content) in support(shape) and Partition(high.content) in support(shape)


@pytest.mark.parametrize("n", range(1, 8))
def test_support_sits_between_extreme_contents(n):
    for shape in enumerate_skew_shapes(n):
        low = rows_k(shape, 1)
        high = transpose(cols_l(shape, 1))
        expansion = lr_expand(shape)
        assert low in expansion and high in expansion
        for nu in expansion:
            assert dominates(low, nu) and dominates(nu, high)


@pytest.mark.long
def test_support_sits_between_extreme_contents_size_8():
    for shape in enumerate_skew_shapes(8):
        low, high = rows_k(shape, 1), transpose(cols_l(shape, 1))
        expansion = lr_expand(shape)
        assert low in expansion and high in expansion
        assert all(dominates(low, nu) and dominates(nu, high) for nu in expansion)


def test_omega_symmetry():
    for shape in SHAPES_UPTO_7:
        assert lr_expand(transpose_shape(shape)) == lr_expand(shape).transpose()


def test_hybrid_filling_contents():
    for shape in SHAPES_UPTO_6:
        col_content = tuple(transpose(cols_l(shape, 1)))
        for k in range(1, shape.num_rows + 2):
            f = hybrid_filling(shape, k)
            assert f.is_lr()
            assert f.content == col_content[: k - 1] + tuple(rows_k(shape, k))


def test_hybrid_endpoints_are_extreme_fillings():
    shape = parse_shape("553111/31")
    assert hybrid_filling(shape, 1) == least_dominant_filling(shape)
    assert hybrid_filling(shape, shape.num_rows + 1) == most_dominant_filling(shape)


def test_constructed_fillings_reject_bad_input():
    with pytest.raises(ValueError):
        hybrid_filling(parse_shape("21"), 0)
    with pytest.raises(ValueError):
        most_dominant_filling(EMPTY_SHAPE)
    with pytest.raises(ValueError):
        least_dominant_filling(EMPTY_SHAPE)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.data())
def test_random_shapes_hybrid_and_count(outer, data):
    outer = sorted(outer, reverse=True)
    inner = sorted((data.draw(st.integers(0, p)) for p in outer), reverse=True)
    inner = [min(m, p) for m, p in zip(inner, outer)]
    shape = SkewShape(outer, inner)
    if not shape.size:
        return
    expansion = lr_expand(shape)
    assert sum(c * _dimension(lam) for lam, c in expansion.items()) == _skew_dimension(shape)
    for k in range(1, shape.num_rows + 2):
        assert hybrid_filling(shape, k).is_lr()


def _dimension(lam) -> int:
    # hook length formula
    conj = transpose(lam)
    hooks = 1
    for i, p in enumerate(lam):
        for j in range(p):
            hooks *= (p - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(lam)) // hooks


def _skew_dimension(shape: SkewShape) -> int:
    # standard fillings of the skew shape, by removing maximal corners
    @lru_cache(maxsize=None)
    def count(cells: frozenset) -> int:
        if not cells:
            return 1
        return sum(
            count(cells - {c})
            for c in cells
            if (c[0] + 1, c[1]) not in cells and (c[0], c[1] + 1) not in cells
        )

    return count(frozenset(shape.boxes()))
