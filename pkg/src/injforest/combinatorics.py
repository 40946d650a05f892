"""Exact integer primitives.

Binomials with the zero-outside-range convention, composition and partition
streams, orbit sizes, and Fuss-Catalan (Raney) numbers together with their
truncated generating series.  Every value is a Python ``int``; nothing here
ever touches floating point.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence

from .errors import DomainError, InexactDivisionError

MODES = ("exact", "less_than", "at_most")


def binomial(a: int, b: int) -> int:
    """C(a, b), taken to be 0 unless 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def exact_div(num: int, den: int) -> int:
    """Divide, raising if the quotient is not an integer."""
    if den == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, rem = divmod(num, den)
    if rem:
        raise InexactDivisionError(f"{num} is not divisible by {den}")
    return q


class Composition(tuple):
    """A k-part composition: a tuple of nonnegative integers.

    Behaves exactly like a tuple of its parts; ``k`` and ``total`` are
    derived.  Component indices in the public API are 1-based (colors), but
    the tuple itself is indexed from 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, (int(p) for p in parts))
        if len(self) < 1:
            raise DomainError("a composition needs k >= 1 parts")
        if any(p < 0 for p in self):
            raise DomainError(f"negative part in {tuple(self)}")
        return self

    @classmethod
    def zero(cls, k: int) -> Composition:
        return cls((0,) * k)

    @classmethod
    def unit(cls, k: int, i: int) -> Composition:
        """The generator with a single 1 in (1-based) slot i."""
        if not 1 <= i <= k:
            raise DomainError(f"slot {i} out of range for k={k}")
        return cls(int(j == i - 1) for j in range(k))

    @property
    def k(self) -> int:
        return len(self)

    @property
    def total(self) -> int:
        return sum(self)

    def __add__(self, other):
        if len(other) != len(self):
            raise DomainError("cannot add compositions with different k")
        return Composition(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if len(other) != len(self):
            raise DomainError("cannot subtract compositions with different k")
        return Composition(a - b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)!r})"


class Partition(Composition):
    """A composition whose parts are weakly decreasing."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(self[i] < self[i + 1] for i in range(len(self) - 1)):
            raise DomainError(f"{tuple(self)} is not weakly decreasing")
        return self


def _exact_compositions(k: int, n: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _exact_compositions(k - 1, n - first):
            yield (first, *rest)


def compositions(k: int, n: int, mode: str = "exact") -> Iterator[Composition]:
    """Lazily yield Lambda_k(n), Lambda_k(<n) or Lambda_k(<=n).

    Order is lexicographic on part vectors, so the non-exact modes interleave
    totals rather than grouping them.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if mode not in MODES:
        raise DomainError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode == "exact":
        if n < 0:
            return
        for parts in _exact_compositions(k, n):
            yield Composition(parts)
        return
    bound = n - 1 if mode == "less_than" else n
    if bound < 0:
        return
    # Lexicographic order over the whole box, skipping oversized vectors.
    for parts in _bounded(k, bound):
        yield Composition(parts)


def _bounded(k: int, budget: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        for v in range(budget + 1):
            yield (v,)
        return
    for first in range(budget + 1):
        for rest in _bounded(k - 1, budget - first):
            yield (first, *rest)


def partitions(k: int, n: int) -> Iterator[Partition]:
    """Lambda_k^+(n) in reverse lexicographic order (largest first part first)."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")

    def rec(slots: int, remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for first in range(min(cap, remaining), -1, -1):
            if first * slots < remaining:
                break
            for rest in rec(slots - 1, remaining - first, first):
                yield (first, *rest)

    if n < 0:
        return
    for parts in rec(k, n, n):
        yield Partition(parts)


def orbit_size(lam: Sequence[int]) -> int:
    """Number of distinct rearrangements of ``lam``: k! / prod(mult_v!)."""
    lam = Partition(lam)
    denom = 1
    for mult in Counter(lam).values():
        denom *= math.factorial(mult)
    return exact_div(math.factorial(len(lam)), denom)


def fuss_catalan(n: int, p: int, r: int) -> int:
    """A_n(p, r) = r/(np + r) * C(np + r, n)."""
    if r <= 0:
        raise DomainError(f"r must be positive, got {r}")
    if n < 0 or p < 0:
        raise DomainError(f"need n, p >= 0, got n={n}, p={p}")
    top = n * p + r
    return exact_div(r * binomial(top, n), top)


def fuss_catalan_series(p: int, r: int, N: int) -> list[int]:
    """[A_0(p, r), ..., A_{N-1}(p, r)] from the closed form."""
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    return [fuss_catalan(n, p, r) for n in range(N)]


def fuss_catalan_recurrence(p: int, N: int) -> list[int]:
    """A_0(p,1), ..., A_{N-1}(p,1) from the p-fold convolution recurrence.

    A_n = sum over Lambda_p(n-1) of A_{lam_1} ... A_{lam_p}; computed as the
    coefficient of x^{n-1} in the p-th power of the partial series.  For p = 0
    the empty product makes A_1 = 1 and every later term 0.
    """
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    seq = [1]
    for n in range(1, N):
        # only coefficients below n are needed and already known
        if p == 0:
            seq.append(1 if n == 1 else 0)
            continue
        power = series_power(seq, p, n)
        seq.append(power[n - 1])
    return seq


def series_mul(a: Sequence[int], b: Sequence[int], N: int) -> list[int]:
    """Product of two power series truncated to N coefficients."""
    out = [0] * N
    for i, ai in enumerate(a[:N]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: N - i]):
            out[i + j] += ai * bj
    return out


def series_power(a: Sequence[int], e: int, N: int) -> list[int]:
    """a**e truncated to N coefficients (e >= 0)."""
    result = [1] + [0] * (N - 1)
    base = list(a[:N]) + [0] * max(0, N - len(a))
    while e:
        if e & 1:
            result = series_mul(result, base, N)
        e >>= 1
        if e:
            base = series_mul(base, base, N)
    return result
