"""Closed-form counts.

Forest and tree counts by character, the total forest count, the two
Fuss-Catalan distributions (``xi`` over tree characters, ``alpha`` over
forests with a partition of root colors), and triangulation counts by
coloring type.  Everything returns exact ``int``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .combinatorics import (
    Composition,
    Partition,
    binomial,
    exact_div,
    orbit_size,
)
from .errors import DomainError
from .keypoly import eval_pk


@dataclass(frozen=True)
class ColorSeq:
    """A root color sequence c_1..c_m over the colors 1..k (m may be 0)."""

    k: int
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(c) for c in self.entries))
        if self.k < 1:
            raise DomainError(f"k must be positive, got {self.k}")
        for c in self.entries:
            if not 1 <= c <= self.k:
                raise DomainError(f"root color {c} outside [1, {self.k}]")

    @classmethod
    def from_multiplicities(cls, mults: Sequence[int]) -> ColorSeq:
        """The sorted sequence 1^{m_1} 2^{m_2} ... k^{m_k}."""
        entries = [i for i, m in enumerate(mults, start=1) for _ in range(m)]
        return cls(len(mults), tuple(entries))

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        counts = [0] * self.k
        for c in self.entries:
            counts[c - 1] += 1
        return tuple(counts)

    def replace_last(self, S: Iterable[int]) -> ColorSeq:
        """Drop the last root color and append the colors of S in increasing order."""
        if not self.entries:
            raise DomainError("empty color sequence has no last root")
        return ColorSeq(self.k, self.entries[:-1] + tuple(sorted(S)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def as_colorseq(roots, k: int) -> ColorSeq:
    if isinstance(roots, ColorSeq):
        if roots.k != k:
            raise DomainError(f"color sequence is over {roots.k} colors, composition has {k}")
        return roots
    return ColorSeq(k, tuple(roots))


def feasible(lam: Sequence[int], roots) -> bool:
    """0 <= lam_i - i_c <= |lam| - lam_i for every color i."""
    lam = Composition(lam)
    mults = as_colorseq(roots, lam.k).multiplicities
    n = lam.total
    return all(0 <= li - ci <= n - li for li, ci in zip(lam, mults))


def count_forests(lam: Sequence[int], roots) -> int:
    """Number of isomorphism classes of (lam, roots)-forests."""
    lam = Composition(lam)
    cseq = as_colorseq(roots, lam.k)
    mults = cseq.multiplicities
    n, m = lam.total, cseq.m
    if n == 0:
        return int(m == 0)
    for li, ci in zip(lam, mults):
        if li == n:
            return int(m == n and m == ci)
    num = eval_pk(lam.k, lam, mults)
    den = 1
    for li, ci in zip(lam, mults):
        num *= binomial(n - li, li - ci)
        den *= n - li
    if num == 0:
        return 0
    return exact_div(num, den)


def count_trees(lam: Sequence[int], c: int) -> int:
    """Number of (lam, c)-trees."""
    lam = Composition(lam)
    k, n = lam.k, lam.total
    if not 1 <= c <= k:
        raise DomainError(f"root color {c} outside [1, {k}]")
    lc = lam[c - 1]
    if lc == 0:
        return 0
    if k == 1:
        return int(n == 1)
    num = n ** (k - 2) * binomial(n - lc, lc - 1)
    den = 1
    for i, li in enumerate(lam, start=1):
        if i != c:
            num *= binomial(n - li, li)
            den *= n - li
    if num == 0:
        return 0
    return exact_div(num, den)


def count_forests_total(n: int, k: int, m: int) -> int:
    """All injectively k-colored forests on n vertices with m given root colors."""
    if n < 1 or m < 1 or k < 1:
        raise DomainError(f"need n, k, m >= 1, got n={n}, k={k}, m={m}")
    return exact_div(m * binomial(k * n - n, n - m), n)


def xi(n: int, p: int, nu: Sequence[int]) -> int:
    """Tree count t_{(nu, n - |nu|), p+1} as a distribution of A_n(p, 1)."""
    nu = tuple(int(v) for v in nu)
    if p < 1 or len(nu) != p:
        raise DomainError(f"nu must have p = {p} >= 1 parts, got {nu}")
    if any(v < 0 for v in nu):
        raise DomainError(f"negative part in {nu}")
    s = sum(nu)
    if s >= n:
        raise DomainError(f"|nu| = {s} must be less than n = {n}")
    num = n ** (p - 1) * binomial(s, n - s - 1)
    den = 1
    for v in nu:
        num *= binomial(n - v, v)
        den *= n - v
    if num == 0:
        return 0
    return exact_div(num, den)


def _check_alpha_args(n: int, p: int, rho, mu) -> tuple[Partition, tuple[int, ...]]:
    if p < 1:
        raise DomainError(f"p must be positive, got {p}")
    try:
        rho = Partition(rho)
    except DomainError as exc:
        raise DomainError(f"rho must be a partition: {exc}") from None
    if rho.k != p + 1:
        raise DomainError(f"rho must have p + 1 = {p + 1} parts, got {tuple(rho)}")
    if rho.total < 1:
        raise DomainError("rho must be a nonzero partition")
    mu = tuple(int(v) for v in mu)
    if len(mu) != p or any(v < 0 for v in mu):
        raise DomainError(f"mu must have {p} nonnegative parts, got {mu}")
    if n < 0 or sum(mu) > n:
        raise DomainError(f"need |mu| <= n, got mu={mu}, n={n}")
    return rho, mu


def alpha(n: int, p: int, rho: Sequence[int], mu: Sequence[int]) -> int:
    """Distribution of A_n(p, p*|rho|) indexed by mu in Lambda_p(<= n).

    Computed as the forest count for character rho + (mu, n - |mu|) with root
    colors 1^{rho_1} ... (p+1)^{rho_{p+1}}; :func:`alpha_direct` evaluates the
    displayed closed form independently.
    """
    rho, mu = _check_alpha_args(n, p, rho, mu)
    lam = rho + Composition((*mu, n - sum(mu)))
    return count_forests(lam, ColorSeq.from_multiplicities(rho))


def alpha_direct(n: int, p: int, rho: Sequence[int], mu: Sequence[int]) -> int:
    """The closed form for ``alpha`` written out term by term."""
    rho, mu = _check_alpha_args(n, p, rho, mu)
    ell = rho.total
    s = sum(mu)
    if rho[0] == ell and mu[0] == n:
        return int(n == 0)
    xs = [rho[i] + mu[i] for i in range(p)] + [rho[p] + n - s]
    num = eval_pk(p + 1, xs, rho)
    top = ell + s - rho[p]
    num *= binomial(top, n - s)
    den = top
    for i in range(p):
        t = ell + n - rho[i] - mu[i]
        num *= binomial(t, mu[i])
        den *= t
    if num == 0:
        return 0
    return exact_div(num, den)


def count_triangulations_by_type(n: int, lam: Sequence[int]) -> int:
    """Triangulations of the convex n-gon whose proper 3-coloring has type lam."""
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    lam = Partition(lam)
    if lam.k != 3:
        raise DomainError(f"type must have 3 parts, got {tuple(lam)}")
    if lam.total != n:
        raise DomainError(f"|type| = {lam.total} does not equal n = {n}")
    if lam[2] == 0:
        return 0
    num = orbit_size(lam) * n * (n - 2)
    den = 3
    for li in lam:
        num *= binomial(n - li - 1, li - 1)
        den *= n - li - 1
    if num == 0:
        return 0
    return exact_div(num, den)
