"""Integer sequences read off the count tables, in OEIS b-file layout."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .combinatorics import fuss_catalan
from .counting import xi
from .errors import DomainError


def catalan(start: int, stop: int) -> Iterator[tuple[int, int]]:
    yield from fuss(2, 1, start, stop)


def fuss(p: int, r: int, start: int, stop: int) -> Iterator[tuple[int, int]]:
    """(i, A_i(p, r)) for start <= i <= stop."""
    _check_range(start, stop)
    for i in range(start, stop + 1):
        yield i, fuss_catalan(i, p, r)


def row_sum(h: int, start: int, stop: int) -> Iterator[tuple[int, int]]:
    """(n, sum over t of xi_n((t, h))): the h-th row total of the n-th table."""
    if h < 0:
        raise DomainError(f"h must be nonnegative, got {h}")
    _check_range(max(start, 1), stop)
    for n in range(max(start, 1), stop + 1):
        yield n, sum(xi(n, 2, (t, h)) for t in range(0, n - h))


def antidiagonal(n: int) -> Iterator[tuple[int, int]]:
    """(h, xi_n((h, (n-1)/2 - h))) along the main antidiagonal, n odd."""
    if n < 1 or n % 2 == 0:
        raise DomainError(f"the antidiagonal sequence needs odd n >= 1, got {n}")
    half = (n - 1) // 2
    for h in range(half + 1):
        yield h, xi(n, 2, (h, half - h))


def _check_range(start: int, stop: int) -> None:
    if start < 0 or stop < start:
        raise DomainError(f"bad index range {start}..{stop}")


def bfile(pairs: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{i} {v}\n" for i, v in pairs)
