from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stlab.qforms import (
    Composition,
    InvalidRange,
    SearchTooLarge,
    brute_force_extrema,
    compositions,
    cycle_form,
    lemma3_bounds,
    lemma4_lower,
    path_form,
)


def test_forms():
    assert path_form((4, 1, 1, 1)) == 6
    assert path_form(Composition((1, 2, 3, 1))) == 11
    assert path_form((1, 1)) == 1
    assert cycle_form((3, 1, 1, 1, 1)) == 9 == 2 * 7 - 5
    assert cycle_form((1,) * 6) == 6
    assert cycle_form((1, 3)) == 6


def test_composition_validation():
    with pytest.raises(InvalidRange):
        Composition((1, 0, 2))
    c = Composition([2, 3])
    assert (c.n, c.k, c.parts) == (5, 2, (2, 3))


def test_compositions():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert sum(1 for _ in compositions(10, 4)) == 84
    assert list(compositions(3, 3)) == [(1, 1, 1)]
    with pytest.raises(InvalidRange):
        list(compositions(2, 3))


@pytest.mark.parametrize("n", range(1, 11))
def test_composition_counts(n):
    for k in range(1, n + 1):
        cs = list(compositions(n, k))
        assert len(cs) == comb(n - 1, k - 1) == len(set(cs))
        assert cs == sorted(cs)
        assert all(sum(c) == n and min(c) >= 1 for c in cs)


def test_lemma3_examples():
    b = lemma3_bounds(7, 4)
    assert (b.lower, b.upper) == (6, 11)
    assert b.upper_witness.parts == (1, 2, 3, 1)
    assert b.lower_witness.parts == (4, 1, 1, 1)
    assert lemma3_bounds(7, 2).upper == 12
    for k in range(2, 9):
        b = lemma3_bounds(k, k)
        assert b.lower == b.upper == k - 1
    assert lemma3_bounds(7, 3).upper_witness.parts == (3, 3, 1)
    with pytest.raises(InvalidRange):
        lemma3_bounds(3, 4)
    with pytest.raises(InvalidRange):
        lemma3_bounds(3, 1)


def test_lemma4_examples():
    b = lemma4_lower(7, 5)
    assert b.lower == 9 and b.upper is None
    assert b.lower_witness.parts == (1, 1, 1, 1, 3)
    assert cycle_form((3, 1, 1, 1, 1)) == b.lower
    assert lemma4_lower(8, 8).lower_witness.parts == (1,) * 8
    b = lemma4_lower(6, 2)
    assert b.lower == 10 and b.lower_witness.parts == (1, 5)


def test_brute_force_examples():
    lo, _, hi, _ = brute_force_extrema(7, 4, "path")
    assert (lo, hi) == (6, 11)
    assert brute_force_extrema(7, 5, "cycle")[0] == 9
    lo, alo, hi, ahi = brute_force_extrema(5, 5, "path")
    assert lo == hi == 4 and alo == ahi == (1,) * 5
    with pytest.raises(SearchTooLarge):
        brute_force_extrema(40, 20, "path")


@pytest.mark.parametrize("n", range(2, 15))
def test_closed_forms_match_oracle(n):
    for k in range(2, n + 1):
        b = lemma3_bounds(n, k)
        lo, alo, hi, ahi = brute_force_extrema(n, k, "path")
        assert (lo, hi) == (b.lower, b.upper) == (n - 1, b.upper)
        assert path_form(alo) == lo and path_form(ahi) == hi
        assert brute_force_extrema(n, k, "cycle")[0] == 2 * n - k


@pytest.mark.parametrize("n", range(2, 65))
def test_witness_self_consistency(n):
    for k in range(2, n + 1):
        b = lemma3_bounds(n, k)
        assert b.lower_witness.n == n and b.lower_witness.k == k
        assert b.upper_witness.n == n and b.upper_witness.k == k
        assert path_form(b.lower_witness) == n - 1
        assert path_form(b.upper_witness) == b.upper
        if k >= 4:
            a, c = (n - k + 4) // 2, (n - k + 5) // 2
            assert b.upper == a * c + k - 5


@given(st.lists(st.integers(1, 20), min_size=2, max_size=12), st.integers(0, 11))
def test_symmetries(xs, r):
    assert path_form(xs) == path_form(xs[::-1])
    r %= len(xs)
    rot = xs[r:] + xs[:r]
    assert cycle_form(xs) == cycle_form(rot) == cycle_form(xs[::-1])
