"""Explicit injectively colored trees and forests.

An isomorphism of colored forests fixes the roots and preserves colors, and
injectivity allows at most one child of each color below any vertex.  So a
tree is determined by its root color and the map child-color -> subtree, and
storing children sorted by color gives a canonical representative: two
trees are isomorphic exactly when they compare equal.
"""

from __future__ import annotations

import itertools
import json
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import Composition
from .counting import ColorSeq, as_colorseq
from .errors import DomainError, GuardError

DEFAULT_MAX_SIZE = 12


@dataclass(frozen=True)
class ColoredTree:
    color: int
    children: tuple[ColoredTree, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if self.color < 1:
            raise DomainError(f"colors are 1-based, got {self.color}")
        last = 0
        for child in self.children:
            if not isinstance(child, ColoredTree):
                raise DomainError(f"child {child!r} is not a ColoredTree")
            if child.color <= last:
                raise DomainError("child colors must be strictly increasing")
            if child.color == self.color:
                raise DomainError(f"child shares its parent's color {self.color}")
            last = child.color

    @classmethod
    def from_map(cls, color: int, children: dict[int, ColoredTree]) -> ColoredTree:
        for c, t in children.items():
            if t.color != c:
                raise DomainError(f"subtree under key {c} is rooted at color {t.color}")
        return cls(color, tuple(children[c] for c in sorted(children)))

    @property
    def child_map(self) -> dict[int, ColoredTree]:
        return {t.color: t for t in self.children}

    def size(self) -> int:
        return 1 + sum(t.size() for t in self.children)

    def max_color(self) -> int:
        return max([self.color, *(t.max_color() for t in self.children)])

    def character(self, k: int) -> Composition:
        counts = [0] * k
        stack = [self]
        while stack:
            node = stack.pop()
            if node.color > k:
                raise DomainError(f"color {node.color} exceeds k={k}")
            counts[node.color - 1] += 1
            stack.extend(node.children)
        return Composition(counts)

    def __str__(self) -> str:
        return f"{self.color}({''.join(str(t) for t in self.children)})"


@dataclass(frozen=True)
class ColoredForest:
    k: int
    trees: tuple[ColoredTree, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "trees", tuple(self.trees))
        if self.k < 1:
            raise DomainError(f"k must be positive, got {self.k}")
        for t in self.trees:
            if t.max_color() > self.k:
                raise DomainError(f"tree {t} uses a color above k={self.k}")

    @property
    def roots(self) -> ColorSeq:
        return ColorSeq(self.k, tuple(t.color for t in self.trees))

    def size(self) -> int:
        return sum(t.size() for t in self.trees)

    def __str__(self) -> str:
        return serialize_forest(self)


def character(f: ColoredForest | ColoredTree, k: int | None = None) -> Composition:
    """Vertex census by color."""
    if isinstance(f, ColoredTree):
        return f.character(k if k is not None else f.max_color())
    total = Composition.zero(f.k)
    for t in f.trees:
        total = total + t.character(f.k)
    return total


def decompose_tree(t: ColoredTree) -> dict[int, ColoredTree]:
    """Child color -> subtree hanging from the root."""
    return t.child_map


def assemble_tree(color: int, parts: dict[int, ColoredTree]) -> ColoredTree:
    return ColoredTree.from_map(color, parts)


# -- counting oracle ------------------------------------------------------

def _box(lam: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(v + 1) for v in lam))


def _minus(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _tree_count(lam: tuple[int, ...], c: int) -> int:
    # c is 0-based here
    if lam[c] == 0:
        return 0
    rest = list(lam)
    rest[c] -= 1
    others = tuple(i for i in range(len(lam)) if i != c)
    return _optional_children(tuple(rest), others)


@lru_cache(maxsize=None)
def _optional_children(lam: tuple[int, ...], colors: tuple[int, ...]) -> int:
    """Ways to hang at most one subtree of each listed color, using exactly lam."""
    if not colors:
        return int(not any(lam))
    head, tail = colors[0], colors[1:]
    total = _optional_children(lam, tail)  # no child of color head
    if lam[head] == 0:
        return total
    for nu in _box(lam):
        if nu[head] == 0:
            continue
        t = _tree_count(nu, head)
        if t:
            total += t * _optional_children(_minus(lam, nu), tail)
    return total


@lru_cache(maxsize=None)
def _forest_count(lam: tuple[int, ...], colors: tuple[int, ...]) -> int:
    if not colors:
        return int(not any(lam))
    head, tail = colors[0], colors[1:]
    total = 0
    for nu in _box(lam):
        if nu[head] == 0:
            continue
        t = _tree_count(nu, head)
        if t:
            total += t * _forest_count(_minus(lam, nu), tail)
    return total


def brute_count(lam: Sequence[int], roots, max_size: int = DEFAULT_MAX_SIZE) -> int:
    """Count (lam, roots)-forests by structural recursion, without the closed form.

    Memoized over (sub-character, root color); refuses characters larger
    than ``max_size`` vertices.
    """
    lam = Composition(lam)
    cseq = as_colorseq(roots, lam.k)
    if lam.total > max_size:
        raise GuardError(f"|lambda| = {lam.total} exceeds the size guard {max_size}")
    return _forest_count(tuple(lam), tuple(c - 1 for c in cseq.entries))


# -- explicit enumeration -------------------------------------------------

@lru_cache(maxsize=4096)
def _trees(lam: tuple[int, ...], c: int) -> tuple[ColoredTree, ...]:
    # c is 1-based; result is materialized so sub-results can be shared
    if lam[c - 1] == 0:
        return ()
    rest = list(lam)
    rest[c - 1] -= 1
    rest = tuple(rest)
    others = [i for i in range(1, len(lam) + 1) if i != c]
    out = []
    for size in range(len(others) + 1):
        for S in itertools.combinations(others, size):
            for split in _splits(rest, S):
                streams = [_trees(nu, i) for nu, i in zip(split, S)]
                for kids in itertools.product(*streams):
                    out.append(ColoredTree(c, kids))
    return tuple(out)


def _splits(lam: tuple[int, ...], colors: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ordered splits lam = nu^1 + ... + nu^r with each nu^j admitting a colors[j]-tree."""
    if not colors:
        if not any(lam):
            yield ()
        return
    head, tail = colors[0], colors[1:]
    for nu in _box(lam):
        if nu[head - 1] == 0 or not _tree_count(nu, head - 1):
            continue
        rest = _minus(lam, nu)
        if tail and not _forest_count(rest, tuple(c - 1 for c in tail)):
            continue
        for more in _splits(rest, tail):
            yield (nu, *more)


def _guard(lam: Composition, max_size: int) -> None:
    if lam.total > max_size:
        raise GuardError(f"|lambda| = {lam.total} exceeds the size guard {max_size}")


def enumerate_trees(lam: Sequence[int], c: int, max_size: int = DEFAULT_MAX_SIZE) -> Iterator[ColoredTree]:
    """One canonical tree per isomorphism class of (lam, c)-trees.

    Ordered by the set of child colors at the root (smaller sets first), then
    by how the remaining vertices are split among those children.
    """
    lam = Composition(lam)
    if not 1 <= c <= lam.k:
        raise DomainError(f"root color {c} outside [1, {lam.k}]")
    _guard(lam, max_size)
    yield from _trees(tuple(lam), c)


def enumerate_forests(lam: Sequence[int], roots, max_size: int = DEFAULT_MAX_SIZE) -> Iterator[ColoredForest]:
    """One canonical forest per isomorphism class of (lam, roots)-forests."""
    lam = Composition(lam)
    cseq = as_colorseq(roots, lam.k)
    _guard(lam, max_size)
    for split in _splits(tuple(lam), cseq.entries):
        streams = [_trees(nu, c) for nu, c in zip(split, cseq.entries)]
        for trees in itertools.product(*streams):
            yield ColoredForest(lam.k, trees)


# -- root deletion and attachment -----------------------------------------

def delete_last_root(f: ColoredForest) -> tuple[ColoredForest, frozenset[int]]:
    """Remove the last root; its children become new trailing roots.

    Returns the smaller forest and the set of colors of the promoted roots
    (they are appended in increasing color order).
    """
    if not f.trees:
        raise DomainError("cannot delete a root from the empty forest")
    last = f.trees[-1]
    S = frozenset(t.color for t in last.children)
    return ColoredForest(f.k, f.trees[:-1] + last.children), S


def attach_root(f: ColoredForest, S: Iterable[int], c: int) -> ColoredForest:
    """Inverse of :func:`delete_last_root`: a new c-colored last root adopts the trailing |S| roots."""
    S = sorted(set(S))
    if not 1 <= c <= f.k:
        raise DomainError(f"root color {c} outside [1, {f.k}]")
    if c in S:
        raise DomainError(f"new root color {c} is also in S={S}")
    r = len(S)
    if r > len(f.trees):
        raise DomainError(f"forest has only {len(f.trees)} roots, S needs {r}")
    adopted = f.trees[len(f.trees) - r:] if r else ()
    if [t.color for t in adopted] != S:
        raise DomainError(
            f"trailing root colors {[t.color for t in adopted]} do not match S={S}"
        )
    kept = f.trees[: len(f.trees) - r]
    return ColoredForest(f.k, kept + (ColoredTree(c, adopted),))


# -- serialization ----------------------------------------------------------

SERIAL_FORMATS = ("text", "json", "dot")

_TOKEN = re.compile(r"\s*(\d+|\(|\))")


def parse_tree(text: str) -> ColoredTree:
    forest = _parse_trees(text)
    if len(forest) != 1:
        raise DomainError(f"expected one tree, found {len(forest)}")
    return forest[0]


def _parse_trees(text: str) -> list[ColoredTree]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DomainError(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
    i = 0

    def tree() -> ColoredTree:
        nonlocal i
        if i >= len(tokens) or not tokens[i].isdigit():
            raise DomainError(f"expected a color in {text!r}")
        color = int(tokens[i])
        i += 1
        if i >= len(tokens) or tokens[i] != "(":
            raise DomainError(f"expected '(' after color {color} in {text!r}")
        i += 1
        kids = []
        while i < len(tokens) and tokens[i] != ")":
            kids.append(tree())
        if i >= len(tokens):
            raise DomainError(f"unbalanced parentheses in {text!r}")
        i += 1
        # sibling order carries no information; store children canonically
        return ColoredTree(color, tuple(sorted(kids, key=lambda t: t.color)))

    out = []
    while i < len(tokens):
        out.append(tree())
    return out


def parse_forest(text: str, k: int) -> ColoredForest:
    """Read the canonical text form: whitespace-separated trees in root order."""
    return ColoredForest(k, tuple(_parse_trees(text)))


def _tree_json(t: ColoredTree) -> dict:
    return {"color": t.color, "children": [_tree_json(c) for c in t.children]}


def _tree_from_json(doc: dict) -> ColoredTree:
    return ColoredTree(int(doc["color"]), tuple(_tree_from_json(c) for c in doc["children"]))


def forest_from_json(text: str) -> ColoredForest:
    doc = json.loads(text)
    return ColoredForest(int(doc["k"]), tuple(_tree_from_json(t) for t in doc["trees"]))


def _dot(f: ColoredForest, name: str) -> str:
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    counter = itertools.count()

    def walk(t: ColoredTree, is_root: bool) -> str:
        node = f"v{next(counter)}"
        shape = ", shape=doublecircle" if is_root else ""
        lines.append(f'  {node} [label="{t.color}"{shape}];')
        for child in t.children:
            lines.append(f"  {node} -> {walk(child, False)};")
        return node

    roots = [walk(t, True) for t in f.trees]
    if len(roots) > 1:
        lines.append(f"  {{ rank=same; {'; '.join(roots)}; }}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize_forest(f: ColoredForest, format: str = "text") -> str:
    if format == "text":
        return " ".join(str(t) for t in f.trees)
    if format == "json":
        return json.dumps({"k": f.k, "trees": [_tree_json(t) for t in f.trees]}, separators=(",", ":"))
    if format == "dot":
        return _dot(f, "forest")
    raise DomainError(f"unknown format {format!r}; expected one of {SERIAL_FORMATS}")
