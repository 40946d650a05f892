import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from injforest.combinatorics import (
    Composition,
    Partition,
    binomial,
    compositions,
    exact_div,
    fuss_catalan,
    fuss_catalan_recurrence,
    fuss_catalan_series,
    orbit_size,
    partitions,
    series_mul,
    series_power,
)
from injforest.errors import DomainError, InexactDivisionError


def test_binomial_outside_range_is_zero():
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(-2, 1) == 0
    assert binomial(0, 0) == 1
    assert binomial(10, 3) == 120


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(InexactDivisionError):
        exact_div(7, 2)
    with pytest.raises(ZeroDivisionError):
        exact_div(1, 0)


def test_composition_arithmetic():
    a = Composition((1, 2, 0))
    assert a.k == 3 and a.total == 3
    assert a + Composition.unit(3, 3) == (1, 2, 1)
    assert a - Composition.unit(3, 1) == (0, 2, 0)
    with pytest.raises(DomainError):
        a - Composition.unit(3, 3)
    with pytest.raises(DomainError):
        a + Composition((1, 1))
    with pytest.raises(DomainError):
        Composition.unit(3, 4)
    assert Composition.zero(2) == (0, 0)


def test_partition_must_decrease():
    assert Partition((3, 3, 1)) == (3, 3, 1)
    with pytest.raises(DomainError):
        Partition((1, 2))


def test_composition_modes():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(compositions(3, 2, "less_than"))) == 1 + 3
    assert len(list(compositions(3, 2, "at_most"))) == 1 + 3 + 6
    with pytest.raises(DomainError):
        list(compositions(2, 2, "bogus"))


@given(st.integers(1, 4), st.integers(0, 7))
def test_composition_count(k, n):
    got = list(compositions(k, n))
    assert len(got) == math.comb(n + k - 1, k - 1)
    assert len(set(got)) == len(got)
    assert all(sum(c) == n for c in got)
    assert got == sorted(got)


def test_partitions_of_six_into_three():
    assert [tuple(p) for p in partitions(3, 6)] == [
        (6, 0, 0), (5, 1, 0), (4, 2, 0), (4, 1, 1), (3, 3, 0), (3, 2, 1), (2, 2, 2)
    ]


@given(st.lists(st.integers(0, 4), min_size=1, max_size=5))
def test_orbit_size_counts_rearrangements(parts):
    lam = sorted(parts, reverse=True)
    assert orbit_size(lam) == len(set(__import__("itertools").permutations(lam)))


def test_fuss_catalan_values():
    assert [fuss_catalan(n, 2, 1) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [fuss_catalan(n, 3, 1) for n in range(5)] == [1, 1, 3, 12, 55]
    assert fuss_catalan(6, 2, 6) == 6188
    assert fuss_catalan(0, 2, 5) == 1
    with pytest.raises(DomainError):
        fuss_catalan(3, 2, 0)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_recurrence_matches_closed_form(p):
    assert fuss_catalan_recurrence(p, 12) == [fuss_catalan(n, p, 1) for n in range(12)]


@given(st.integers(1, 3), st.integers(1, 4))
def test_series_power_law(p, r):
    base = fuss_catalan_series(p, 1, 10)
    assert series_power(base, r, 10) == fuss_catalan_series(p, r, 10)


def test_series_mul_truncates():
    assert series_mul([1, 1], [1, 1], 2) == [1, 2]
    assert series_power([1, 1], 0, 3) == [1, 0, 0]
