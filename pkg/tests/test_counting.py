import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from injforest.combinatorics import compositions, fuss_catalan, partitions
from injforest.counting import (
    ColorSeq,
    alpha,
    alpha_direct,
    count_forests,
    count_forests_total,
    count_trees,
    count_triangulations_by_type,
    feasible,
    xi,
)
from injforest.enumeration import brute_count
from injforest.errors import DomainError

import reference_values as ref


def test_headline_count():
    assert count_forests(ref.HEADLINE_LAMBDA, ref.HEADLINE_ROOTS) == ref.HEADLINE_COUNT


def test_small_counts():
    assert count_forests((3, 1, 1), (1, 1)) == 20
    assert count_trees((2, 2, 2), 3) == 54
    assert count_forests_total(5, 3, 2) == 48
    assert count_forests_total(4, 2, 1) == 1


def test_degenerate_cases():
    # the empty forest
    assert count_forests((0, 0, 0), ()) == 1
    assert count_forests((1, 0, 0), ()) == 0
    # all vertices share one color: only isolated roots of that color
    assert count_forests((3, 0), (1, 1, 1)) == 1
    assert count_forests((2, 0), (1, 1, 1)) == 0
    assert count_trees((1,), 1) == 1
    assert count_trees((2,), 1) == 0
    assert count_trees((0, 2), 1) == 0


def test_root_order_does_not_matter():
    assert count_forests((4, 3, 2), (1, 3)) == count_forests((4, 3, 2), (3, 1))


def test_colorseq_helpers():
    cs = ColorSeq.from_multiplicities((2, 0, 1))
    assert cs.entries == (1, 1, 3)
    assert cs.multiplicities == (2, 0, 1)
    assert cs.replace_last({2, 1}).entries == (1, 1, 1, 2)
    with pytest.raises(DomainError):
        ColorSeq(2, (3,))
    with pytest.raises(DomainError):
        count_forests((1, 1), (3,))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(
    lambda k: st.tuples(st.lists(st.integers(0, 3), min_size=k, max_size=k),
                        st.lists(st.integers(1, k), max_size=2))))
def test_formula_matches_oracle(args):
    lam, roots = args
    k = len(lam)
    assert count_forests(lam, ColorSeq(k, tuple(roots))) == brute_count(lam, ColorSeq(k, tuple(roots)))


@given(st.lists(st.integers(0, 4), min_size=2, max_size=4), st.integers(1, 2))
def test_infeasible_counts_vanish(lam, m):
    roots = (1,) * m
    if not feasible(lam, roots):
        assert count_forests(lam, roots) == 0


@pytest.mark.parametrize("k,n,m", [(2, 5, 1), (3, 5, 2), (3, 6, 3), (4, 5, 1)])
def test_totals_sum_over_characters(k, n, m):
    roots = (1,) * m
    assert sum(count_forests(lam, roots) for lam in compositions(k, n)) == count_forests_total(n, k, m)


def test_xi_distribution_sums_to_catalan():
    for n in range(1, 10):
        assert sum(xi(n, 2, nu) for nu in compositions(2, n, "less_than")) == fuss_catalan(n, 2, 1)
    assert sum(xi(5, 3, nu) for nu in compositions(3, 5, "less_than")) == fuss_catalan(5, 3, 1)


def test_alpha_values_and_cross_check():
    assert alpha(6, 2, (1, 1, 1), (2, 2)) == 2000
    assert alpha(6, 2, (3, 0, 0), (2, 2)) == 1458
    for rho in partitions(3, 3):
        for mu in compositions(2, 6, "at_most"):
            assert alpha(6, 2, rho, mu) == alpha_direct(6, 2, rho, mu)
    with pytest.raises(DomainError):
        alpha(4, 2, (0, 0, 0), (1, 1))


def test_triangulation_counts():
    assert count_triangulations_by_type(16, (6, 5, 5)) == 1382976
    assert count_triangulations_by_type(6, (4, 1, 1)) == 0
    for n, row in ref.TRIANGULATION_COUNTS.items():
        assert sum(row.values()) == fuss_catalan(n - 2, 2, 1)
        for lam, v in row.items():
            assert count_triangulations_by_type(n, lam) == v
