"""The key polynomial P_k and the identities it satisfies.

P_k lives in Z[x_1..x_k, y_1..y_k].  Two views are kept side by side:
``build_pk`` expands it symbolically into a :class:`SparsePoly`, while
``eval_pk`` evaluates the defining subset sum directly at integer points,
which is all the counting formulas need.

Variable indices are 0-based inside a SparsePoly: x_i is index i-1 and y_i
is index k+i-1.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Mapping, Sequence

from .errors import DomainError

Exponent = tuple[int, ...]


class SparsePoly:
    """Exact multivariate polynomial over the integers.

    ``terms`` maps exponent vectors to nonzero ``int`` coefficients.  Instances
    are treated as immutable; arithmetic always returns a new polynomial.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[Exponent, int] | None = None):
        if num_vars < 1:
            raise DomainError("num_vars must be positive")
        clean: dict[Exponent, int] = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars or any(e < 0 for e in exp):
                raise DomainError(f"bad exponent vector {exp} for {num_vars} variables")
            if coef:
                clean[exp] = clean.get(exp, 0) + coef
        self.num_vars = num_vars
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors ---------------------------------------------------
    @classmethod
    def constant(cls, num_vars: int, value: int) -> SparsePoly:
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def var(cls, num_vars: int, index: int) -> SparsePoly:
        if not 0 <= index < num_vars:
            raise DomainError(f"variable index {index} out of range")
        exp = [0] * num_vars
        exp[index] = 1
        return cls(num_vars, {tuple(exp): 1})

    def _coerce(self, other) -> SparsePoly:
        if isinstance(other, SparsePoly):
            if other.num_vars != self.num_vars:
                raise DomainError(
                    f"arity mismatch: {self.num_vars} vs {other.num_vars} variables"
                )
            return other
        if isinstance(other, int):
            return SparsePoly.constant(self.num_vars, other)
        return NotImplemented

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            terms[exp] = terms.get(exp, 0) + coef
        return SparsePoly(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return SparsePoly(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> SparsePoly:
        if e < 0:
            raise DomainError("negative powers are not polynomials")
        result = SparsePoly.constant(self.num_vars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SparsePoly.constant(self.num_vars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection -----------------------------------------------------
    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.num_vars:
            raise DomainError("point has the wrong number of coordinates")
        total = 0
        for exp, coef in self.terms.items():
            term = coef
            for v, e in zip(point, exp):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(self, assignments: Mapping[int, SparsePoly | int]) -> SparsePoly:
        """Replace variable ``i`` by ``assignments[i]``; others are left alone."""
        repl: dict[int, SparsePoly] = {}
        for i, q in assignments.items():
            if not 0 <= i < self.num_vars:
                raise DomainError(f"variable index {i} out of range")
            repl[i] = self._coerce(q)
            if repl[i] is NotImplemented:
                raise DomainError(f"cannot substitute {q!r}")
        power_cache: dict[tuple[int, int], SparsePoly] = {}

        def power(i: int, e: int) -> SparsePoly:
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = repl[i] ** e
            return power_cache[key]

        acc: dict[Exponent, int] = {}
        for exp, coef in self.terms.items():
            kept = tuple(0 if i in repl else e for i, e in enumerate(exp))
            term = SparsePoly(self.num_vars, {kept: coef})
            for i, e in enumerate(exp):
                if e and i in repl:
                    term = term * power(i, e)
            for e2, c2 in term.terms.items():
                acc[e2] = acc.get(e2, 0) + c2
        return SparsePoly(self.num_vars, acc)

    # -- text -----------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def render(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.num_vars)
        if not self.terms:
            return "0"
        pieces = []
        for idx, (exp, coef) in enumerate(self.sorted_terms()):
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coef)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag), *factors])
            if idx == 0:
                pieces.append(body if coef > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if coef > 0 else '-'} {body}")
        return " ".join(pieces)

    __str__ = render

    def __repr__(self) -> str:
        return f"SparsePoly({self.num_vars}, {self.render()!r})"

    @classmethod
    def parse(cls, text: str, names: Sequence[str]) -> SparsePoly:
        """Read a sum of monomials such as ``x1^2*y2 - 2*x1*y3 + 3``.

        Juxtaposed factors (``x1^2y2``) are accepted as well as ``*``.
        """
        index = {name: i for i, name in enumerate(names)}
        num_vars = len(names)
        # longest names first so "x10" is not read as "x1" followed by "0"
        alternation = "|".join(re.escape(n) for n in sorted(names, key=len, reverse=True))
        factor_re = re.compile(rf"\s*\*?\s*(?:({alternation})(?:\^(\d+))?|(\d+))")
        compact = text.replace(" ", "")
        if not compact:
            raise DomainError("empty polynomial text")
        out = SparsePoly(num_vars)
        for sign, body in re.findall(r"([+-]?)([^+-]+)", compact):
            exp = [0] * num_vars
            coef = -1 if sign == "-" else 1
            pos = 0
            while pos < len(body):
                m = factor_re.match(body, pos)
                if not m or m.end() == pos:
                    raise DomainError(f"cannot parse monomial {body!r}")
                if m.group(1):
                    exp[index[m.group(1)]] += int(m.group(2) or 1)
                else:
                    coef *= int(m.group(3))
                pos = m.end()
            out = out + SparsePoly(num_vars, {tuple(exp): coef})
        return out


def default_names(num_vars: int) -> list[str]:
    if num_vars % 2 == 0:
        k = num_vars // 2
        return [f"x{i}" for i in range(1, k + 1)] + [f"y{i}" for i in range(1, k + 1)]
    return [f"v{i}" for i in range(1, num_vars + 1)]


def poly_arith(a: SparsePoly, b: SparsePoly, op: str) -> SparsePoly:
    if a.num_vars != b.num_vars:
        raise DomainError(f"arity mismatch: {a.num_vars} vs {b.num_vars} variables")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown operation {op!r}")


def substitute(p: SparsePoly, assignments: Mapping[int, SparsePoly | int]) -> SparsePoly:
    return p.substitute(assignments)


def xvar(k: int, i: int) -> SparsePoly:
    return SparsePoly.var(2 * k, i - 1)


def yvar(k: int, i: int) -> SparsePoly:
    return SparsePoly.var(2 * k, k + i - 1)


def _subsets(items: Sequence[int]) -> Iterable[tuple[int, ...]]:
    for size in range(len(items) + 1):
        yield from itertools.combinations(items, size)


def build_pk(k: int) -> SparsePoly:
    """Symbolic expansion of P_k in the 2k variables x_1..x_k, y_1..y_k."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    nv = 2 * k
    colors = range(1, k + 1)
    x_all = SparsePoly(nv)
    for i in colors:
        x_all = x_all + xvar(k, i)
    total = SparsePoly(nv)
    for S in _subsets(list(colors)):
        s = len(S)
        y_prod = SparsePoly.constant(nv, 1)
        for i in S:
            y_prod = y_prod * yvar(k, i)
        if s == k:
            # (X - kX) X^{-1} collapses to (1 - k)
            summand = (1 - k) * y_prod
        else:
            x_s = SparsePoly(nv)
            for i in S:
                x_s = x_s + xvar(k, i)
            summand = (x_s - s * x_all) * x_all ** (k - s - 1) * y_prod
        total = total + summand if s % 2 == 0 else total - summand
    assert total.is_homogeneous(k), "P_k must be homogeneous of degree k"
    return total


def build_pk_shift(k: int, I: Iterable[int]) -> SparsePoly:
    """P_k with x_k -> x_k - 1, y_i -> y_i + [i in I] (i < k), y_k -> y_k - 1."""
    I = frozenset(I)
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    bad = [i for i in I if not 1 <= i <= k - 1]
    if bad:
        raise DomainError(f"shift set must lie in [1, {k - 1}], got {sorted(bad)}")
    assignments: dict[int, SparsePoly] = {k - 1: xvar(k, k) - 1, 2 * k - 1: yvar(k, k) - 1}
    for i in I:
        assignments[k + i - 1] = yvar(k, i) + 1
    return build_pk(k).substitute(assignments)


def eval_pk(k: int, xs: Sequence[int], ys: Sequence[int]) -> int:
    """P_k(xs, ys) by direct summation over the 2^k subsets."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if len(xs) != k or len(ys) != k:
        raise DomainError(f"need {k} x-values and {k} y-values")
    x_all = sum(xs)
    total = 0
    for S in _subsets(range(k)):
        s = len(S)
        y_prod = 1
        for i in S:
            y_prod *= ys[i]
        if y_prod == 0:
            continue
        if s == k:
            summand = (1 - k) * y_prod
        else:
            summand = (sum(xs[i] for i in S) - s * x_all) * x_all ** (k - s - 1) * y_prod
        total += -summand if s % 2 else summand
    return total


# -- the four identities ------------------------------------------------

def _check_vanishes_on_zero_y(k: int, pk: SparsePoly) -> bool:
    return pk.substitute({k + i: 0 for i in range(k)}).is_zero()


def _check_pair_restriction(k: int, pk: SparsePoly) -> bool:
    if k < 2:
        return True
    for a, b in itertools.combinations(range(1, k + 1), 2):
        assignments: dict[int, SparsePoly | int] = {}
        for i in range(1, k + 1):
            if i in (a, b):
                assignments[i - 1] = 1
            else:
                assignments[i - 1] = 0
                assignments[k + i - 1] = 0
        lhs = pk.substitute(assignments)
        ya, yb = yvar(k, a), yvar(k, b)
        rhs = 2 ** (k - 2) * (ya + yb - ya * yb)
        if lhs != rhs:
            return False
    return True


def _permutation_substitution(k: int, sigma: Sequence[int]) -> dict[int, SparsePoly]:
    # sigma is 0-based: x_i -> x_{sigma(i)}, y_i -> y_{sigma(i)}
    out: dict[int, SparsePoly] = {}
    for i, s in enumerate(sigma):
        out[i] = SparsePoly.var(2 * k, s)
        out[k + i] = SparsePoly.var(2 * k, k + s)
    return out


def _check_symmetry(k: int, pk: SparsePoly) -> bool:
    if k >= 5:
        # adjacent transpositions generate S_k
        perms = []
        for i in range(k - 1):
            sigma = list(range(k))
            sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
            perms.append(sigma)
    else:
        perms = [list(p) for p in itertools.permutations(range(k))]
    return all(pk.substitute(_permutation_substitution(k, s)) == pk for s in perms)


def shift_identity_sides(k: int) -> tuple[SparsePoly, SparsePoly]:
    """Both sides of the shifted-sum identity, fully expanded.

    Left: P_k * prod_{i<k} (X - x_i - 1).  Right: sum over I subset of [1, k-1]
    of P_k^(I) * prod_{i in I} (x_i - y_i) * prod_{j not in I} (X - 2 x_j + y_j),
    where X = x_1 + ... + x_k.
    """
    if k < 2:
        raise DomainError("the shifted-sum identity needs k >= 2")
    nv = 2 * k
    x_all = SparsePoly(nv)
    for i in range(1, k + 1):
        x_all = x_all + xvar(k, i)
    pk = build_pk(k)
    lhs = pk
    for i in range(1, k):
        lhs = lhs * (x_all - xvar(k, i) - 1)
    rhs = SparsePoly(nv)
    for I in _subsets(list(range(1, k))):
        term = build_pk_shift(k, I)
        for i in range(1, k):
            if i in I:
                term = term * (xvar(k, i) - yvar(k, i))
            else:
                term = term * (x_all - 2 * xvar(k, i) + yvar(k, i))
        rhs = rhs + term
    return lhs, rhs


def _check_shift_identity(k: int, pk: SparsePoly) -> bool:
    lhs, rhs = shift_identity_sides(k)
    return (lhs - rhs).is_zero()


_CHECKS = {
    "i": _check_vanishes_on_zero_y,
    "ii": _check_pair_restriction,
    "iii": _check_symmetry,
    "iv": _check_shift_identity,
}
IDENTITY_PARTS = tuple(_CHECKS)


def verify_identity(k: int, part: str) -> bool:
    """Check one of the four P_k identities by exact symbolic expansion.

    ``i``: P_k vanishes when every y is 0.  ``ii``: restricting to the pair
    {a, b} gives 2^(k-2) (y_a + y_b - y_a y_b).  ``iii``: invariance under
    simultaneous permutation of x and y.  ``iv``: the shifted-sum identity
    of :func:`shift_identity_sides`.
    """
    if part not in _CHECKS:
        raise DomainError(f"unknown identity part {part!r}; expected one of {IDENTITY_PARTS}")
    if part in ("ii", "iv") and k < 2:
        raise DomainError(f"part {part} needs k >= 2")
    return _CHECKS[part](k, build_pk(k))


def z_substitution(k: int) -> SparsePoly:
    """P_k rewritten in z_i = x_i - y_i (the x slots now hold z)."""
    return build_pk(k).substitute({i - 1: xvar(k, i) + yvar(k, i) for i in range(1, k + 1)})


def z_coefficient_report(k: int) -> dict[str, int]:
    """Minimum and maximum coefficient of P_k in (z, y) variables.

    The coefficients have been observed to be nonnegative; this only reports,
    it never asserts.
    """
    p = z_substitution(k)
    coefs = list(p.terms.values())
    return {
        "k": k,
        "terms": len(coefs),
        "min_coefficient": min(coefs),
        "max_coefficient": max(coefs),
        "negative_terms": sum(c < 0 for c in coefs),
    }


def z_names(k: int) -> list[str]:
    return [f"z{i}" for i in range(1, k + 1)] + [f"y{i}" for i in range(1, k + 1)]
