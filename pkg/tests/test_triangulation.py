import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from injforest.combinatorics import fuss_catalan
from injforest.enumeration import parse_tree
from injforest.errors import DomainError
from injforest.triangulation import (
    Triangulation,
    census,
    chi,
    chi_inverse,
    enumerate_triangulations,
    is_equitable,
    is_proper,
    proper_three_coloring,
    type_of,
)

import reference_values as ref


def test_octagon_example():
    t = Triangulation(8, ref.OCTAGON_DIAGONALS)
    coloring = proper_three_coloring(t)
    assert coloring.colors == ref.OCTAGON_COLORS
    assert is_proper(t, coloring)
    assert tuple(type_of(t)) == (3, 3, 2)
    assert str(chi(t)) == ref.OCTAGON_TREE
    assert chi_inverse(parse_tree(ref.OCTAGON_TREE)) == t


def test_triangles_cover_the_polygon():
    t = Triangulation(8, ref.OCTAGON_DIAGONALS)
    assert len(t.triangles) == 6
    assert t.triangles[0] == (0, 1, 5)
    assert json.loads(t.to_json())["n"] == 8


def test_invalid_triangulations():
    with pytest.raises(DomainError):
        Triangulation(5, frozenset({(0, 2)}))
    with pytest.raises(DomainError):
        Triangulation(4, frozenset({(0, 2), (1, 3)}))
    with pytest.raises(DomainError):
        Triangulation(5, frozenset({(0, 1), (0, 2)}))
    with pytest.raises(DomainError):
        chi_inverse(parse_tree("1()"))


@pytest.mark.parametrize("n", range(3, 10))
def test_enumeration_counts_and_bijection(n):
    tris = list(enumerate_triangulations(n))
    assert len(tris) == len(set(tris)) == fuss_catalan(n - 2, 2, 1)
    trees = {chi(t) for t in tris}
    assert len(trees) == len(tris)
    for t in tris:
        assert chi_inverse(chi(t)) == t


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 11), st.data())
def test_character_bridge(n, data):
    tris = list(enumerate_triangulations(n))
    t = data.draw(st.sampled_from(tris))
    a, b, c = proper_three_coloring(t).character
    assert tuple(chi(t).character(3)) == (a - 1, b - 1, c)


def test_equitable_hexagons():
    tris = list(enumerate_triangulations(6))
    assert sum(map(is_equitable, tris)) == 8


@pytest.mark.parametrize("n", range(3, 11))
def test_brute_census_matches_formula(n):
    assert census(n, "brute").cells == census(n, "formula").cells


def test_census_against_reference():
    for n, row in ref.TRIANGULATION_COUNTS.items():
        assert census(n).nonzero() == row
    with pytest.raises(DomainError):
        census(6, "guess")
