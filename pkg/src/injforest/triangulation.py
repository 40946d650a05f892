"""Triangulations of the convex n-gon, their 3-colorings and dual trees.

Vertices are 0..n-1 counterclockwise; the base side is {0, 1} with vertex 0
colored 1 and vertex 1 colored 2.  Every region handled below is the part of
the polygon cut off by a side or diagonal {a, b}, written with a < b and
spanning the vertices a, a+1, ..., b.  The base region is (1, n), where n
stands for vertex 0.  Inside a region the triangle on {a, b} has a unique
apex v with a < v < b, and the two subregions are (a, v) and (v, b).
"""

from __future__ import annotations

import json
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

from .combinatorics import Partition, fuss_catalan, partitions
from .counting import count_triangulations_by_type
from .enumeration import ColoredTree
from .errors import DomainError
from .tables import CountTable

Diagonal = tuple[int, int]


def _crosses(d: Diagonal, e: Diagonal) -> bool:
    a, b = d
    c, e2 = e
    return (a < c < b < e2) or (c < a < e2 < b)


@dataclass(frozen=True)
class Triangulation:
    n: int
    diagonals: frozenset[Diagonal]

    def __post_init__(self):
        n = self.n
        if n < 3:
            raise DomainError(f"n must be at least 3, got {n}")
        diags = set()
        for d in self.diagonals:
            a, b = sorted(d)
            if not (0 <= a < b <= n - 1) or b - a in (1, n - 1):
                raise DomainError(f"{d} is not a diagonal of the {n}-gon")
            diags.add((a, b))
        if len(diags) != n - 3:
            raise DomainError(f"a triangulation of the {n}-gon has {n - 3} diagonals, got {len(diags)}")
        ds = sorted(diags)
        for i, d in enumerate(ds):
            for e in ds[i + 1:]:
                if _crosses(d, e):
                    raise DomainError(f"diagonals {d} and {e} cross")
        object.__setattr__(self, "diagonals", frozenset(diags))

    def _edge(self, a: int, b: int) -> bool:
        a, b = a % self.n, b % self.n
        if a > b:
            a, b = b, a
        return b - a in (1, self.n - 1) or (a, b) in self.diagonals

    def apex(self, a: int, b: int) -> int:
        """Third vertex of the triangle on {a, b} inside region (a, b)."""
        for v in range(a + 1, b):
            if self._edge(a, v) and self._edge(v, b):
                return v
        raise DomainError(f"region ({a}, {b}) has no triangle")

    @cached_property
    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        """Triangles as sorted vertex triples, the base triangle first."""
        out = []
        stack = [(1, self.n)]
        while stack:
            a, b = stack.pop()
            if b - a < 2:
                continue
            v = self.apex(a, b)
            out.append(tuple(sorted((a % self.n, v, b % self.n))))
            stack.append((v, b))
            stack.append((a, v))
        return tuple(out)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "diagonals": sorted(map(list, self.diagonals))})

    def __str__(self) -> str:
        return f"Tri{self.n}[{' '.join(f'{a}-{b}' for a, b in sorted(self.diagonals))}]"


def _regions(a: int, b: int, n: int) -> Iterator[frozenset[Diagonal]]:
    if b - a < 2:
        yield frozenset()
        return
    for v in range(a + 1, b):
        own = set()
        for d in ((a, v), (v, b)):
            x, y = d[0] % n, d[1] % n
            x, y = min(x, y), max(x, y)
            if y - x not in (1, n - 1):
                own.add((x, y))
        for left in _regions(a, v, n):
            for right in _regions(v, b, n):
                yield frozenset(own) | left | right


def enumerate_triangulations(n: int) -> Iterator[Triangulation]:
    """All C_{n-2} triangulations, ordered by the base apex and then recursively."""
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    for diags in _regions(1, n, n):
        yield Triangulation(n, diags)


@dataclass(frozen=True)
class TriColoring:
    colors: tuple[int, ...]

    @property
    def character(self) -> tuple[int, int, int]:
        return tuple(self.colors.count(c) for c in (1, 2, 3))

    @property
    def type(self) -> Partition:
        return Partition(sorted(self.character, reverse=True))


def proper_three_coloring(t: Triangulation) -> TriColoring:
    """The unique proper coloring with vertex 0 -> 1 and vertex 1 -> 2."""
    n = t.n
    colors = [0] * n
    colors[0], colors[1] = 1, 2
    stack = [(1, n)]
    while stack:
        a, b = stack.pop()
        if b - a < 2:
            continue
        v = t.apex(a, b)
        colors[v] = 6 - colors[a % n] - colors[b % n]
        stack.extend(((a, v), (v, b)))
    return TriColoring(tuple(colors))


def is_proper(t: Triangulation, coloring: TriColoring) -> bool:
    cols = coloring.colors
    n = t.n
    edges = [(i, (i + 1) % n) for i in range(n)] + list(t.diagonals)
    return all(cols[a] != cols[b] for a, b in edges) and set(cols) <= {1, 2, 3}


def type_of(t: Triangulation) -> Partition:
    return proper_three_coloring(t).type


def is_equitable(t: Triangulation) -> bool:
    lam = type_of(t)
    return lam[0] - lam[2] <= 1


def chi(t: Triangulation) -> ColoredTree:
    """Dual tree rooted at the base triangle.

    A triangle reached across the diagonal {a, b} is colored by the color
    missing from a and b, which is the color of its apex; the root triangle's
    apex is always colored 3.
    """
    n = t.n
    colors = proper_three_coloring(t).colors

    def build(a: int, b: int) -> ColoredTree:
        v = t.apex(a, b)
        kids = []
        if v - a >= 2:
            kids.append(build(a, v))
        if b - v >= 2:
            kids.append(build(v, b))
        return ColoredTree(colors[v], tuple(sorted(kids, key=lambda c: c.color)))

    return build(1, n)


def chi_inverse(tree: ColoredTree) -> Triangulation:
    """Rebuild the triangulation whose dual tree is ``tree``.

    In region (a, b) the subtree across side (a, v) has the color of b and
    the subtree across (v, b) has the color of a, so the child colors say
    which side each subtree sits on and the subtree sizes fix the apex.
    """
    if tree.color != 3:
        raise DomainError(f"the root must be colored 3, got {tree.color}")
    if tree.max_color() > 3:
        raise DomainError("the tree must be 3-colored")
    n = tree.size() + 2
    diags: set[Diagonal] = set()

    def place(node: ColoredTree, a: int, b: int, ca: int, cb: int) -> None:
        kids = node.child_map
        if node.color != 6 - ca - cb:
            raise DomainError(f"subtree root {node.color} cannot sit on an edge colored {ca},{cb}")
        left, right = kids.get(cb), kids.get(ca)
        v = a + 1 + (left.size() if left else 0)
        for x, y in ((a, v), (v, b)):
            x, y = x % n, y % n
            x, y = min(x, y), max(x, y)
            if y - x not in (1, n - 1):
                diags.add((x, y))
        if left:
            place(left, a, v, ca, node.color)
        if right:
            place(right, v, b, node.color, cb)

    place(tree, 1, n, 2, 1)
    return Triangulation(n, frozenset(diags))


def census(n: int, method: str = "formula") -> CountTable:
    """Triangulation counts by type, either by brute force or from the closed form."""
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    rows = [tuple(lam) for lam in partitions(3, n)]
    if method == "formula":
        cells = {lam: count_triangulations_by_type(n, lam) for lam in rows}
    elif method == "brute":
        cells = dict.fromkeys(rows, 0)
        for t in enumerate_triangulations(n):
            cells[tuple(type_of(t))] += 1
    else:
        raise DomainError(f"unknown census method {method!r}")
    return CountTable("tri", {"n": n, "method": method}, ["l1", "l2", "l3"], rows, cells,
                      fuss_catalan(n - 2, 2, 1))
