"""Count tables in a fixed grid or long layout, with CSV/JSON export."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .combinatorics import compositions, fuss_catalan, partitions
from .counting import (
    ColorSeq,
    alpha,
    count_forests,
    count_forests_total,
    count_triangulations_by_type,
    xi,
)
from .errors import DomainError

FORMULAS = ("xi", "alpha", "tri", "forest")


@dataclass
class CountTable:
    """Cells keyed by index tuples, plus the total they must add up to.

    ``axes`` names each index coordinate; ``rows`` lists every index tuple in
    output order (zero cells included).  ``expected_total`` is the
    Fuss-Catalan (or Catalan) number the cells distribute.
    """

    formula: str
    params: dict
    axes: list[str]
    rows: list[tuple[int, ...]]
    cells: dict[tuple[int, ...], int]
    expected_total: int
    grid: bool = False
    meta: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.cells.values())

    def __getitem__(self, key):
        return self.cells[tuple(key)]

    def nonzero(self) -> dict[tuple[int, ...], int]:
        return {key: v for key, v in self.cells.items() if v}

    def grid_values(self) -> list[list[int]]:
        """Two-axis tables as a list of rows (first axis down, second across)."""
        if not self.grid:
            raise DomainError("table is not a two-axis grid")
        size = self.meta["size"]
        return [[self.cells[(i, j)] for j in range(size)] for i in range(size)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.grid:
            size = self.meta["size"]
            w.writerow([f"{self.axes[0]}\\{self.axes[1]}", *range(size)])
            for i, row in enumerate(self.grid_values()):
                w.writerow([i, *row])
        else:
            w.writerow([*self.axes, "count"])
            for key in self.rows:
                w.writerow([*key, self.cells[key]])
        w.writerow(["total", self.total])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "formula": self.formula,
            "params": self.params,
            "axes": self.axes,
            "cells": [{"index": list(key), "count": str(self.cells[key])} for key in self.rows],
            "total": str(self.total),
            "expected_total": str(self.expected_total),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _grid_table(formula, params, axes, size, value, full_domain, expected) -> CountTable:
    rows = [(i, j) for i in range(size) for j in range(size)]
    cells = {key: value(key) for key in rows}
    # cells beyond the displayed square must all vanish
    outside = sum(value(key) for key in full_domain if key not in cells)
    if outside:
        raise AssertionError(f"{formula} table truncation dropped {outside}")
    return CountTable(formula, params, axes, rows, cells, expected, grid=True, meta={"size": size})


def xi_table(n: int, p: int = 2) -> CountTable:
    if n < 1 or p < 1:
        raise DomainError(f"need n, p >= 1, got n={n}, p={p}")
    expected = fuss_catalan(n, p, 1)
    params = {"n": n, "p": p}
    axes = [f"nu{i}" for i in range(1, p + 1)]

    def value(key):
        return xi(n, p, key) if sum(key) < n else 0

    if p == 2:
        domain = [tuple(c) for c in compositions(2, n, "less_than")]
        return _grid_table("xi", params, axes, n // 2 + 1, value, domain, expected)
    rows = [tuple(c) for c in compositions(p, n, "less_than")]
    return CountTable("xi", params, axes, rows, {key: value(key) for key in rows}, expected)


def alpha_table(n: int, rho) -> CountTable:
    rho = tuple(rho)
    p = len(rho) - 1
    if p < 1:
        raise DomainError("rho needs at least two parts")
    ell = sum(rho)
    if ell < 1:
        raise DomainError("rho must be a nonzero partition")
    expected = fuss_catalan(n, p, p * ell)
    params = {"n": n, "rho": list(rho)}
    axes = [f"mu{i}" for i in range(1, p + 1)]

    def value(key):
        return alpha(n, p, rho, key) if sum(key) <= n else 0

    domain = [tuple(c) for c in compositions(p, n, "at_most")]
    if p == 2:
        size = min(n, (ell + n) // 2) + 1
        return _grid_table("alpha", params, axes, size, value, domain, expected)
    return CountTable("alpha", params, axes, domain, {key: value(key) for key in domain}, expected)


def tri_table(n: int) -> CountTable:
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    rows = [tuple(lam) for lam in partitions(3, n)]
    cells = {lam: count_triangulations_by_type(n, lam) for lam in rows}
    return CountTable("tri", {"n": n}, ["l1", "l2", "l3"], rows, cells, fuss_catalan(n - 2, 2, 1))


def forest_table(n: int, roots, k: int) -> CountTable:
    cseq = ColorSeq(k, tuple(roots))
    if cseq.m < 1:
        raise DomainError("need at least one root")
    rows = [tuple(lam) for lam in compositions(k, n)]
    cells = {lam: count_forests(lam, cseq) for lam in rows}
    params = {"n": n, "k": k, "roots": list(cseq.entries)}
    axes = [f"lambda{i}" for i in range(1, k + 1)]
    return CountTable("forest", params, axes, rows, cells, count_forests_total(n, k, cseq.m))


def table(formula: str, **params) -> CountTable:
    """Build a table: ``xi(n, p)``, ``alpha(n, rho)``, ``tri(n)`` or ``forest(n, roots, k)``."""
    builders = {"xi": xi_table, "alpha": alpha_table, "tri": tri_table, "forest": forest_table}
    if formula not in builders:
        raise DomainError(f"unknown formula {formula!r}; expected one of {FORMULAS}")
    try:
        out = builders[formula](**params)
    except TypeError as exc:
        raise DomainError(f"bad parameters for {formula}: {exc}") from None
    if out.total != out.expected_total:
        raise AssertionError(
            f"{formula} table sums to {out.total}, expected {out.expected_total}"
        )
    return out
