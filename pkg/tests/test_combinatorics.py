from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from moore_complex.combinatorics import (
    Simplex,
    binomial,
    binomial_table,
    colex_enumerate,
    colex_rank,
    colex_rank_array,
    colex_unrank,
    colex_unrank_array,
    faces,
)
from moore_complex.errors import InvalidSimplexError, RankRangeError


def brute_colex(n, m):
    """Colex order by definition: compare subsets by their largest differing element."""
    return sorted(combinations(range(1, n + 1), m), key=lambda t: t[::-1])


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (4, 0, 1), (6, 3, 20), (3, 5, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_is_exact_beyond_machine_words():
    assert binomial(200, 100) == comb(200, 100)
    assert binomial(200, 100) > 2**64


def test_rank_examples():
    order = brute_colex(4, 2)
    assert colex_rank(Simplex(1, 2)) == 0
    assert colex_rank(Simplex(2, 3)) == order.index((2, 3)) == 2
    assert colex_rank(Simplex(1, 2, 3)) == 0


def test_rank_rejects_out_of_range_vertex():
    with pytest.raises(InvalidSimplexError):
        colex_rank(Simplex(1, 5), n=4)


def test_unrank_examples():
    order = brute_colex(4, 2)
    assert colex_unrank(0, 1, 4) == Simplex(1, 2)
    assert colex_unrank(2, 1, 4) == Simplex(*order[2]) == Simplex(2, 3)
    assert colex_unrank(3, 1, 4) == Simplex(*order[3]) == Simplex(1, 4)


@pytest.mark.parametrize("r", [-1, 6, 100])
def test_unrank_range_error(r):
    with pytest.raises(RankRangeError):
        colex_unrank(r, 1, 4)


def test_roundtrip_exhaustive():
    for n in range(1, 13):
        for k in range(0, 5):
            for r in range(comb(n, k + 1)):
                assert colex_rank(colex_unrank(r, k, n)) == r


def test_rank_matches_colex_order_exhaustive():
    for n in range(1, 11):
        for m in range(1, min(n, 5) + 1):
            ranks = [colex_rank(s) for s in brute_colex(n, m)]
            assert ranks == list(range(comb(n, m)))


def test_vectorized_forms_agree_with_scalar():
    for n, m in [(9, 1), (9, 3), (12, 4), (10, 5)]:
        table = binomial_table(n, m)
        rows = colex_enumerate(n, m)
        assert [tuple(r) for r in rows.tolist()] == brute_colex(n, m)
        ranks = colex_rank_array(rows, table)
        assert np.array_equal(ranks, np.arange(comb(n, m)))
        assert np.array_equal(colex_unrank_array(ranks, m, table), rows)


@pytest.mark.parametrize(
    "s,expected",
    [
        (Simplex(1, 2, 3), [Simplex(1, 2), Simplex(1, 3), Simplex(2, 3)]),
        (Simplex(1, 2), [Simplex(1), Simplex(2)]),
        (Simplex(4, 7), [Simplex(4), Simplex(7)]),
        (Simplex(3), []),
    ],
)
def test_faces(s, expected):
    assert faces(s) == expected


@given(st.sets(st.integers(1, 30), min_size=1, max_size=8))
def test_faces_are_distinct_valid_and_complete(vs):
    s = Simplex.of(vs)
    fs = faces(s)
    if s.dim == 0:
        assert fs == []
        return
    assert len(fs) == len(set(fs)) == s.dim + 1
    for f in fs:
        assert f.dim == s.dim - 1 and set(f) < set(s)


def test_simplex_invariants():
    assert Simplex.of([3, 1, 2]) == Simplex(1, 2, 3)
    assert Simplex(1, 2) != Simplex(1, 3)
    for bad in [(2, 1), (1, 1), (0, 1)]:
        with pytest.raises(InvalidSimplexError):
            Simplex(*bad)
    with pytest.raises(InvalidSimplexError):
        Simplex.of([1, 1, 2])
    with pytest.raises(InvalidSimplexError):
        Simplex.of([1, 9], n=8)


@given(st.sets(st.integers(1, 40), min_size=1, max_size=6))
def test_rank_unrank_property(vs):
    s = Simplex.of(vs)
    assert colex_unrank(colex_rank(s), s.dim, max(s)) == s
