"""Exhaustive cross-checks between closed forms, recurrences and explicit objects.

Each ``check_*`` function sweeps a bounded family of instances and returns a
:class:`CheckResult`; ``run_suite`` groups them for the command line.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache

from . import keypoly
from .combinatorics import (
    Composition,
    compositions,
    fuss_catalan,
    fuss_catalan_recurrence,
    fuss_catalan_series,
    partitions,
    series_power,
)
from .counting import (
    ColorSeq,
    alpha,
    alpha_direct,
    count_forests,
    count_forests_total,
    count_trees,
    feasible,
    xi,
)
from .enumeration import (
    assemble_tree,
    attach_root,
    brute_count,
    character,
    decompose_tree,
    delete_last_root,
    enumerate_forests,
    enumerate_trees,
    parse_forest,
    serialize_forest,
)
from .errors import DomainError
from .triangulation import (
    census,
    chi,
    chi_inverse,
    enumerate_triangulations,
    is_proper,
    proper_three_coloring,
)


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        # keep reports readable when something is badly wrong
        if len(self.failures) < 20:
            self.failures.append(message)
        elif len(self.failures) == 20:
            self.failures.append("... further failures suppressed")

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "instances": self.instances,
            "failures": list(self.failures),
            "seconds": round(self.seconds, 3),
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}  ({self.instances} instances, {self.seconds:.2f}s)"


def _timed(name: str):
    def wrap(fn: Callable[..., CheckResult]):
        def run(*args, **kwargs) -> CheckResult:
            start = time.perf_counter()
            result = fn(CheckResult(name), *args, **kwargs)
            result.seconds = time.perf_counter() - start
            return result

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


def multiplicity_vectors(k: int, max_m: int, min_m: int = 0) -> Iterator[Composition]:
    for m in range(min_m, max_m + 1):
        yield from compositions(k, m)


# -- forests ----------------------------------------------------------------

@_timed("oracle: brute-force count equals the closed form")
def check_oracle(res: CheckResult, k: int = 3, max_n: int = 8, max_m: int = 3) -> CheckResult:
    for lam in compositions(k, max_n, "at_most"):
        for mults in multiplicity_vectors(k, max_m):
            cseq = ColorSeq.from_multiplicities(mults)
            res.instances += 1
            b, f = brute_count(lam, cseq, max_size=max_n), count_forests(lam, cseq)
            if b != f:
                res.fail(f"lambda={tuple(lam)} roots={cseq.entries}: brute {b} != formula {f}")
            if not feasible(lam, cseq) and f:
                res.fail(f"lambda={tuple(lam)} roots={cseq.entries}: infeasible but counted {f}")
    return res


@_timed("streams: enumerated forests are distinct, well-formed and fully counted")
def check_streams(res: CheckResult, k: int = 3, max_n: int = 6, max_m: int = 2) -> CheckResult:
    for lam in compositions(k, max_n, "at_most"):
        for mults in multiplicity_vectors(k, max_m):
            cseq = ColorSeq.from_multiplicities(mults)
            res.instances += 1
            texts = []
            for f in enumerate_forests(lam, cseq, max_size=max_n):
                if character(f) != lam or f.roots != cseq:
                    res.fail(f"{f} has wrong character or roots for {tuple(lam)}, {cseq.entries}")
                text = serialize_forest(f)
                if parse_forest(text, k) != f:
                    res.fail(f"text codec does not round-trip {text}")
                texts.append(text)
            if len(set(texts)) != len(texts):
                res.fail(f"duplicate forests for {tuple(lam)}, {cseq.entries}")
            expected = count_forests(lam, cseq)
            if len(texts) != expected:
                res.fail(f"{tuple(lam)}, {cseq.entries}: streamed {len(texts)} != {expected}")
    return res


@_timed("theta: last-root deletion and attachment are inverse and split the count by S")
def check_theta(res: CheckResult, k: int = 3, max_n: int = 6, max_m: int = 3) -> CheckResult:
    for lam in compositions(k, max_n, "at_most"):
        for mults in multiplicity_vectors(k, max_m, min_m=1):
            cseq = ColorSeq.from_multiplicities(mults)
            c = cseq.entries[-1]
            by_S: Counter = Counter()
            for f in enumerate_forests(lam, cseq, max_size=max_n):
                res.instances += 1
                g, S = delete_last_root(f)
                if attach_root(g, S, c) != f:
                    res.fail(f"theta' o theta moved {f}")
                target_lam = Composition(lam) - Composition.unit(k, c)
                if character(g) != target_lam or g.roots != cseq.replace_last(S):
                    res.fail(f"theta({f}) = {g} lands in the wrong set")
                by_S[S] += 1
            others = [i for i in range(1, k + 1) if i != c]
            if lam[c - 1] == 0:
                continue
            smaller = Composition(lam) - Composition.unit(k, c)
            for size in range(len(others) + 1):
                for S in itertools.combinations(others, size):
                    want = count_forests(smaller, cseq.replace_last(S))
                    if by_S[frozenset(S)] != want:
                        res.fail(f"{tuple(lam)}, {cseq.entries}, S={S}: {by_S[frozenset(S)]} != {want}")
    return res


@_timed("recurrence: forest count satisfies the last-root recurrence")
def check_forest_recurrence(res: CheckResult, k: int = 3, max_n: int = 7, max_m: int = 3) -> CheckResult:
    for lam in compositions(k, max_n, "at_most"):
        for mults in multiplicity_vectors(k, max_m, min_m=1):
            if mults[k - 1] == 0:
                continue
            cseq = ColorSeq.from_multiplicities(mults)  # sorted, so c_m = k
            if not feasible(lam, cseq):
                continue
            res.instances += 1
            smaller = Composition(lam) - Composition.unit(k, k)
            rhs = 0
            for size in range(k):
                for S in itertools.combinations(range(1, k), size):
                    rhs += count_forests(smaller, cseq.replace_last(S))
            lhs = count_forests(lam, cseq)
            if lhs != rhs:
                res.fail(f"{tuple(lam)}, {cseq.entries}: {lhs} != {rhs}")
    return res


def _swap(nu: tuple[int, ...], i: int, c: int) -> tuple[int, ...]:
    out = list(nu)
    out[i - 1], out[c - 1] = out[c - 1], out[i - 1]
    return tuple(out)


@_timed("recurrence: tree count satisfies the child-character convolution")
def check_tree_recurrence(res: CheckResult, k: int = 3, max_n: int = 7) -> CheckResult:
    @lru_cache(maxsize=None)
    def t_hat(lam: tuple[int, ...], c: int) -> int:
        return 1 if not any(lam) else count_trees(lam, c)

    @lru_cache(maxsize=None)
    def conv(target: tuple[int, ...], c: int, colors: tuple[int, ...]) -> int:
        # sum over mu^(i), i in colors, with sum_i (i c).mu^(i) = target
        if not colors:
            return int(not any(target))
        i, rest = colors[0], colors[1:]
        total = 0
        for image in itertools.product(*(range(v + 1) for v in target)):
            mu = _swap(image, i, c)
            remaining = tuple(b - a for a, b in zip(image, target))
            total += t_hat(mu, c) * conv(remaining, c, rest)
        return total

    for lam in compositions(k, max_n, "at_most"):
        for c in range(1, k + 1):
            res.instances += 1
            lhs = t_hat(tuple(lam), c)
            if lam[c - 1] == 0:
                rhs = int(not any(lam))
            else:
                target = tuple(Composition(lam) - Composition.unit(k, c))
                rhs = conv(target, c, tuple(i for i in range(1, k + 1) if i != c))
            if lhs != rhs:
                res.fail(f"t_hat{tuple(lam)},{c}: {lhs} != {rhs}")
    return res


@_timed("decompose: trees reassemble from their root decomposition")
def check_decompose(res: CheckResult, k: int = 3, max_n: int = 7, c: int = 3) -> CheckResult:
    for lam in compositions(k, max_n, "at_most"):
        for t in enumerate_trees(lam, c, max_size=max_n):
            res.instances += 1
            parts = decompose_tree(t)
            if assemble_tree(t.color, parts) != t:
                res.fail(f"reassembly changed {t}")
            total = Composition.unit(k, c)
            for sub in parts.values():
                total = total + sub.character(k)
            if total != lam:
                res.fail(f"decomposition of {t} loses vertices")
    return res


@_timed("bridge: tree count equals the one-root forest count")
def check_bridge(res: CheckResult, k: int = 3, max_n: int = 8) -> CheckResult:
    for lam in compositions(k, max_n, "at_most"):
        for c in range(1, k + 1):
            res.instances += 1
            a, b = count_trees(lam, c), count_forests(lam, (c,))
            if a != b:
                res.fail(f"{tuple(lam)}, c={c}: trees {a} != forests {b}")
    return res


@_timed("symmetry: forest count is invariant under root reordering and color relabeling")
def check_symmetry(res: CheckResult, k: int = 3, max_n: int = 6, max_m: int = 3) -> CheckResult:
    perms = list(itertools.permutations(range(k)))
    for lam in compositions(k, max_n, "at_most"):
        for mults in multiplicity_vectors(k, max_m, min_m=1):
            cseq = ColorSeq.from_multiplicities(mults)
            base = count_forests(lam, cseq)
            for order in set(itertools.permutations(cseq.entries)):
                res.instances += 1
                if count_forests(lam, order) != base:
                    res.fail(f"{tuple(lam)}: order {order} changes the count")
            for sigma in perms:
                res.instances += 1
                # color i is renamed sigma(i)
                new_lam = [0] * k
                for i in range(k):
                    new_lam[sigma[i]] = lam[i]
                new_roots = tuple(sigma[c - 1] + 1 for c in cseq.entries)
                if count_forests(new_lam, new_roots) != base:
                    res.fail(f"{tuple(lam)}, {cseq.entries}: relabeling by {sigma} changes the count")
    return res


# -- Fuss-Catalan layer -------------------------------------------------------

@_timed("fuss-catalan: closed form, recurrence and series powers agree")
def check_fuss(res: CheckResult, max_p: int = 3, max_n: int = 10, max_r: int = 4, terms: int = 12) -> CheckResult:
    for p in range(1, max_p + 1):
        res.instances += 1
        closed = fuss_catalan_series(p, 1, max_n + 1)
        if closed != fuss_catalan_recurrence(p, max_n + 1):
            res.fail(f"p={p}: closed form disagrees with the convolution recurrence")
        base = fuss_catalan_series(p, 1, terms)
        for r in range(1, max_r + 1):
            res.instances += 1
            if fuss_catalan_series(p, r, terms) != series_power(base, r, terms):
                res.fail(f"p={p}, r={r}: B_(p,r) is not B_(p,1)^r")
    return res


@_timed("totals: forest totals over characters match the Fuss-Catalan closed form")
def check_totals(res: CheckResult, max_k: int = 3, max_n: int = 8, max_m: int = 3) -> CheckResult:
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            for c in range(1, k + 1):
                res.instances += 1
                s = sum(count_trees(lam, c) for lam in compositions(k, n))
                if s != fuss_catalan(n, k - 1, 1):
                    res.fail(f"k={k}, n={n}, c={c}: trees sum to {s}")
            for m in range(1, max_m + 1):
                want = count_forests_total(n, k, m)
                if k > 1 and n >= m and want != fuss_catalan(n - m, k - 1, k * m - m):
                    res.fail(f"k={k}, n={n}, m={m}: total {want} is not A_(n-m)(k-1, km-m)")
                # every root sequence with the same length gives the same total
                for roots in itertools.product(range(1, k + 1), repeat=m):
                    res.instances += 1
                    s = sum(count_forests(lam, roots) for lam in compositions(k, n))
                    if s != want:
                        res.fail(f"k={k}, n={n}, roots={roots}: {s} != {want}")
    return res


@_timed("distributions: xi and alpha sum to their Fuss-Catalan numbers")
def check_distributions(res: CheckResult, max_p: int = 3, max_n_xi: int = 10,
                        max_ell: int = 3, max_n_alpha: int = 8) -> CheckResult:
    for p in range(1, max_p + 1):
        for n in range(1, max_n_xi + 1):
            res.instances += 1
            total = 0
            for nu in compositions(p, n, "less_than"):
                v = xi(n, p, nu)
                if v != count_trees((*nu, n - sum(nu)), p + 1):
                    res.fail(f"xi_{n}{tuple(nu)} disagrees with the tree count")
                total += v
            if total != fuss_catalan(n, p, 1):
                res.fail(f"p={p}, n={n}: xi sums to {total}")
    p = 2
    for ell in range(1, max_ell + 1):
        for rho in partitions(p + 1, ell):
            for n in range(0, max_n_alpha + 1):
                res.instances += 1
                total = 0
                for mu in compositions(p, n, "at_most"):
                    a, d = alpha(n, p, rho, mu), alpha_direct(n, p, rho, mu)
                    if a != d:
                        res.fail(f"alpha_{n}({tuple(rho)},{tuple(mu)}): {a} != {d}")
                    total += a
                if total != fuss_catalan(n, p, p * ell):
                    res.fail(f"rho={tuple(rho)}, n={n}: alpha sums to {total}")
    return res


# -- polynomial -----------------------------------------------------------------

@_timed("polynomial identities")
def check_poly(res: CheckResult, ks=(2, 3, 4, 5), parts=("i", "ii", "iii"), iv_ks=(2, 3, 4)) -> CheckResult:
    for part in parts:
        for k in ks:
            res.instances += 1
            if not keypoly.verify_identity(k, part):
                res.fail(f"part {part} fails for k={k}")
    for k in iv_ks:
        res.instances += 1
        if not keypoly.verify_identity(k, "iv"):
            res.fail(f"part iv fails for k={k}")
    for k in ks:
        res.instances += 1
        if not keypoly.build_pk(k).is_homogeneous(k):
            res.fail(f"P_{k} is not homogeneous of degree {k}")
    return res


@_timed("polynomial: subset-sum evaluation matches the expanded polynomial")
def check_eval(res: CheckResult, ks=(2, 3, 4, 5), samples: int = 200, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    for k in ks:
        pk = keypoly.build_pk(k)
        for _ in range(samples):
            res.instances += 1
            xs = [rng.randint(-20, 20) for _ in range(k)]
            ys = [rng.randint(-20, 20) for _ in range(k)]
            direct = keypoly.eval_pk(k, xs, ys)
            if direct != pk.evaluate(xs + ys):
                res.fail(f"k={k}, xs={xs}, ys={ys}")
            perm = list(range(k))
            rng.shuffle(perm)
            if keypoly.eval_pk(k, [xs[i] for i in perm], [ys[i] for i in perm]) != direct:
                res.fail(f"k={k}: evaluation not symmetric under {perm}")
    return res


# -- triangulations ------------------------------------------------------------

@_timed("chi: dual-tree map is a bijection onto root-3 trees")
def check_chi(res: CheckResult, max_n: int = 9) -> CheckResult:
    for n in range(3, max_n + 1):
        seen = set()
        count = 0
        for t in enumerate_triangulations(n):
            count += 1
            res.instances += 1
            coloring = proper_three_coloring(t)
            if not is_proper(t, coloring):
                res.fail(f"{t}: coloring {coloring.colors} is not proper")
            tree = chi(t)
            if chi_inverse(tree) != t:
                res.fail(f"{t}: chi_inverse(chi) differs")
            bridge = Composition(coloring.character) - Composition((1, 1, 0))
            if tree.character(3) != bridge:
                res.fail(f"{t}: tree character {tuple(tree.character(3))} != {tuple(bridge)}")
            seen.add(tree)
        if count != fuss_catalan(n - 2, 2, 1):
            res.fail(f"n={n}: enumerated {count} triangulations")
        if len(seen) != count:
            res.fail(f"n={n}: chi is not injective")
        trees = 0
        for lam in compositions(3, n - 2):
            for tree in enumerate_trees(lam, 3, max_size=n):
                trees += 1
                res.instances += 1
                if chi(chi_inverse(tree)) != tree:
                    res.fail(f"chi(chi_inverse({tree})) differs")
        if trees != count:
            res.fail(f"n={n}: {trees} root-3 trees but {count} triangulations")
    return res


@_timed("census: brute-force type counts equal the closed form")
def check_census(res: CheckResult, max_n_brute: int = 12, max_n_formula: int = 16) -> CheckResult:
    for n in range(3, max_n_formula + 1):
        res.instances += 1
        formula = census(n, "formula")
        if formula.total != fuss_catalan(n - 2, 2, 1):
            res.fail(f"n={n}: formula census sums to {formula.total}")
        if n <= max_n_brute:
            brute = census(n, "brute")
            if brute.cells != formula.cells:
                diff = {key: (brute.cells[key], formula.cells[key])
                        for key in formula.rows if brute.cells[key] != formula.cells[key]}
                res.fail(f"n={n}: brute/formula differ at {diff}")
    return res


# -- suites ------------------------------------------------------------------------

def _suite_oracle(k=3, max_n=8, max_m=3, ci=False):
    if ci:
        max_n = min(max_n, 6 if k <= 3 else 5)
    out = [check_oracle(k, max_n, max_m)]
    if k == 3 and not ci:
        out.append(check_oracle(4, 6, 2))
    out.append(check_streams(k, min(max_n, 5), 2))
    return out


def _suite_poly(k=None, part=None, ci=False, seed=0):
    if k is not None or part is not None:
        ks = (k,) if k is not None else (2, 3, 4)
        parts = (part,) if part is not None else keypoly.IDENTITY_PARTS
        out = CheckResult(f"polynomial identity {'/'.join(parts)} for k={'/'.join(map(str, ks))}")
        start = time.perf_counter()
        for kk in ks:
            for pp in parts:
                if pp in ("ii", "iv") and kk < 2:
                    raise DomainError(f"part {pp} needs k >= 2")
                out.instances += 1
                if not keypoly.verify_identity(kk, pp):
                    out.fail(f"part {pp} fails for k={kk}")
        out.seconds = time.perf_counter() - start
        return [out]
    if ci:
        return [check_poly((2, 3, 4), ("i", "ii", "iii"), (2, 3)), check_eval((2, 3, 4), 50, seed)]
    return [check_poly(), check_eval(seed=seed)]


def _suite_chi(max_n=9, ci=False):
    return [check_chi(min(max_n, 8) if ci else max_n)]


def _suite_census(max_n=12, ci=False):
    return [check_census(min(max_n, 10) if ci else max_n, 16)]


def _suite_recurrence(k=3, max_n=7, ci=False):
    if ci:
        max_n = min(max_n, 5)
    return [
        check_forest_recurrence(k, max_n),
        check_tree_recurrence(k, max_n),
        check_theta(k, min(max_n, 6), 3),
        check_decompose(k, max_n),
        check_bridge(k, max_n + 1),
    ]


def _suite_fuss(ci=False):
    if ci:
        return [check_fuss(), check_totals(3, 6, 2), check_distributions(3, 8, 2, 6)]
    return [check_fuss(), check_totals(), check_distributions()]


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "oracle": _suite_oracle,
    "poly": _suite_poly,
    "chi": _suite_chi,
    "census": _suite_census,
    "recurrence": _suite_recurrence,
    "fuss": _suite_fuss,
}


def run_suite(name: str, **options) -> list[CheckResult]:
    if name == "all":
        ci = options.get("ci", False)
        results = []
        for suite in SUITES.values():
            results.extend(suite(ci=ci))
        return results
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; expected one of {sorted(SUITES)} or 'all'")
    return SUITES[name](**options)
