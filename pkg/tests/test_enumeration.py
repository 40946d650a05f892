import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from injforest.combinatorics import compositions
from injforest.counting import count_forests, count_trees
from injforest.enumeration import (
    ColoredForest,
    ColoredTree,
    assemble_tree,
    attach_root,
    brute_count,
    character,
    decompose_tree,
    delete_last_root,
    enumerate_forests,
    enumerate_trees,
    forest_from_json,
    parse_forest,
    parse_tree,
    serialize_forest,
)
from injforest.errors import DomainError, GuardError

import reference_values as ref


def test_tree_invariants():
    t = parse_tree("1(3()2())")
    assert str(t) == "1(2()3())"  # children are kept in color order
    assert t.size() == 3 and t.max_color() == 3
    assert tuple(t.character(3)) == (1, 1, 1)
    with pytest.raises(DomainError):
        ColoredTree(1, (ColoredTree(1, ()),))
    with pytest.raises(DomainError):
        parse_tree("1(2()2())")
    with pytest.raises(DomainError):
        parse_tree("1(2()")


def test_headline_forest_parses_with_its_character():
    f = parse_forest(ref.HEADLINE_FOREST, 4)
    assert tuple(character(f)) == ref.HEADLINE_LAMBDA
    assert f.roots.entries == ref.HEADLINE_ROOTS
    assert serialize_forest(f) == ref.HEADLINE_FOREST


@pytest.mark.slow
def test_headline_count_by_oracle():
    assert brute_count(ref.HEADLINE_LAMBDA, ref.HEADLINE_ROOTS, max_size=40) == ref.HEADLINE_COUNT


def test_gallery_enumeration():
    forests = list(enumerate_forests(ref.GALLERY_LAMBDA, ref.GALLERY_ROOTS))
    assert len(forests) == len(set(forests)) == ref.GALLERY_COUNT
    assert parse_forest(ref.GALLERY_FIRST, 3) in forests


def test_root_deletion_example():
    before = parse_forest(ref.DELETION_BEFORE, 5)
    after, S = delete_last_root(before)
    assert serialize_forest(after) == ref.DELETION_AFTER
    assert S == ref.DELETION_SET
    assert attach_root(after, S, 5) == before


def test_attach_root_rejects_mismatches():
    f = parse_forest("1() 2()", 3)
    with pytest.raises(DomainError):
        attach_root(f, {2}, 2)
    with pytest.raises(DomainError):
        attach_root(f, {1, 3}, 2)
    with pytest.raises(DomainError):
        delete_last_root(ColoredForest(3, ()))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=3, max_size=3), st.integers(1, 3))
def test_tree_stream_matches_count(lam, c):
    trees = list(enumerate_trees(lam, c))
    assert len(trees) == len(set(trees)) == count_trees(lam, c)
    for t in trees:
        assert t.color == c and tuple(t.character(3)) == tuple(lam)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=3, max_size=3),
       st.lists(st.integers(1, 3), min_size=1, max_size=2))
def test_deletion_round_trip(lam, roots):
    for f in enumerate_forests(lam, tuple(roots)):
        smaller, S = delete_last_root(f)
        assert attach_root(smaller, S, f.trees[-1].color) == f


def test_decompose_assemble():
    for lam in compositions(3, 4):
        for t in enumerate_trees(lam, 2):
            assert assemble_tree(t.color, decompose_tree(t)) == t


def test_serialization_round_trips():
    f = parse_forest(ref.HEADLINE_FOREST, 4)
    assert parse_forest(serialize_forest(f), 4) == f
    assert forest_from_json(serialize_forest(f, "json")) == f
    doc = json.loads(serialize_forest(f, "json"))
    assert doc["k"] == 4 and len(doc["trees"]) == 3
    dot = serialize_forest(parse_forest("3(1())", 3), "dot")
    assert dot.startswith("digraph") and "v0 -> v1" in dot
    with pytest.raises(DomainError):
        serialize_forest(f, "svg")


def test_size_guard():
    with pytest.raises(GuardError):
        next(enumerate_forests((5, 5, 5), (1,)))
    with pytest.raises(GuardError):
        brute_count((5, 5, 5), (1,))
    assert brute_count((5, 5, 5), (1,), max_size=15) == count_forests((5, 5, 5), (1,))
