import csv
import io
import json

import pytest

from injforest.errors import DomainError
from injforest.tables import table

import reference_values as ref


@pytest.mark.parametrize("n", sorted(ref.XI_TABLES))
def test_xi_grids(n):
    assert table("xi", n=n, p=2).grid_values() == ref.XI_TABLES[n]


@pytest.mark.parametrize("rho", sorted(ref.ALPHA_TABLES))
def test_alpha_grids(rho):
    tab = table("alpha", n=ref.ALPHA_N, rho=rho)
    assert tab.grid_values() == ref.ALPHA_TABLES[rho]
    assert tab.total == tab.expected_total == ref.ALPHA_TOTAL


def test_tri_table_includes_zero_rows():
    tab = table("tri", n=6)
    assert tab.rows[0] == (6, 0, 0)
    assert tab.nonzero() == ref.TRIANGULATION_COUNTS[6]


def test_forest_table_total():
    tab = table("forest", n=5, roots=(1, 2), k=3)
    assert tab.total == tab.expected_total == 48


def test_csv_layout():
    text = table("xi", n=4).to_csv()
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["nu1\\nu2", "0", "1", "2"]
    assert rows[2] == ["1", "0", "8", "2"]
    assert rows[-1] == ["total", "14"]
    long = list(csv.reader(io.StringIO(table("tri", n=5).to_csv())))
    assert long[0] == ["l1", "l2", "l3", "count"]


def test_json_keeps_big_integers_exact():
    doc = json.loads(table("tri", n=16).to_json())
    cells = {tuple(c["index"]): int(c["count"]) for c in doc["cells"]}
    assert cells[(6, 5, 5)] == 1382976
    assert int(doc["total"]) == int(doc["expected_total"]) == 2674440


def test_bad_requests():
    with pytest.raises(DomainError):
        table("nope", n=3)
    with pytest.raises(DomainError):
        table("xi", n=0)
    with pytest.raises(DomainError):
        table("alpha", n=4, rho=(0, 0, 0))
    with pytest.raises(DomainError):
        table("xi", n=4, q=2)
    with pytest.raises(DomainError):
        table("tri", n=2).grid_values()
