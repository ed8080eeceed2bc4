"""Named identity and inequality suites.

Each suite cross-checks independent routes (enumeration, closed forms,
generating functions, explicit maps) over a grid and returns a
:class:`SuiteResult` listing every mismatch.  The CLI ``verify`` command is a
thin wrapper around :data:`SUITES`.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Any, Callable

from . import counting, experiments, genfunc, maps, oracle
from .partset import ODD_PARTS, Explicit, Progression, TwoProgressions

__all__ = ["SUITES", "SuiteResult", "random_dominating_pair", "printed_index_mismatch", "run_suite"]


@dataclass
class SuiteResult:
    name: str
    summary: str
    checks: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, **detail: Any) -> None:
        self.checks += 1
        if not ok:
            self.failures.append({k: (str(v) if isinstance(v, int) and abs(v) > 2**53 else v) for k, v in detail.items()})

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "summary": self.summary,
            "checks": self.checks,
            "failures": self.failures,
            "notes": self.notes,
        }


def straub(max_n: int = 20, oracle_max_n: int = 16) -> SuiteResult:
    res = SuiteResult("straub", f"r(n | odd parts) = r(n | distinct parts) for n <= {max_n}")
    f_stream = genfunc.coeff_stream(genfunc.build_gf("f", d=1, a=1), max_n)
    h_stream = genfunc.coeff_stream(genfunc.build_gf("h_y", d=1, a=1).specialize(1), max_n)
    for n in range(1, max_n + 1):
        closed = counting.fda(1, 1, n)
        res.expect(f_stream[n][0] == h_stream[n][0] == closed, n=n, route="gf", f=f_stream[n][0], h=h_stream[n][0])
        if n <= oracle_max_n:
            (odd, _), (dist, _) = oracle.tally(n, [oracle.PartsInSet(ODD_PARTS), oracle.DDistinctMin(1, 1)])
            res.expect(odd == dist == closed, n=n, route="oracle", odd=odd, distinct=dist, closed=closed)
    return res


def theorem_k2(max_n: int = 20, oracle_max_n: int = 16, bijection_max_n: int | None = None) -> SuiteResult:
    """FO_{j,2}(n) = FD_{j,2}(n) by enumeration, by marked GFs and by phi image sizes."""
    bijection_max_n = max_n if bijection_max_n is None else bijection_max_n
    res = SuiteResult("theorem-k2", f"FO=FD for all j, n <= {max_n}")
    shared = genfunc.coeff_stream(genfunc.build_gf("fd_fo_marked"), max_n)
    for n in range(1, max_n + 1):
        gf = [genfunc.fo_fd_j2(j, n) for j in range(n + 1)]
        res.expect(all(fo == fd == shared[n][j] for j, (fo, fd) in enumerate(gf)), n=n, route="gf", values=gf)
        res.expect(sum(fd for _, fd in gf) == 2 ** (n - 1), n=n, route="gf-total")
        if n <= oracle_max_n:
            cs = [oracle.ExactlyJSizesDivisible(j, 2) for j in range(n + 1)]
            cs += [oracle.ExactlyJSizesRepeated(j, 2) for j in range(n + 1)]
            counts = [c for c, _ in oracle.tally(n, cs)]
            fo, fd = counts[: n + 1], counts[n + 1 :]
            res.expect(fo == fd == [v for _, v in gf], n=n, route="oracle", fo=fo, fd=fd)
        if n <= bijection_max_n:
            images = maps.phi_image_counts(n)
            res.expect(
                all(images.get(j, 0) == gf[j][0] for j in range(n + 1)), n=n, route="phi", images=images
            )
    return res


def alder_type(max_n: int = 14, d_max: int = 4, gf_max_n: int = 40) -> SuiteResult:
    res = SuiteResult("alder-type", f"h_d^(a)(n) = f_d^(a)(n) for d <= {d_max}, n <= {max_n}")
    for d in range(1, d_max + 1):
        for a in range(1, d + 2):
            f_gf = genfunc.coeff_stream(genfunc.build_gf("f", d=d, a=a), gf_max_n)
            h_gf = genfunc.coeff_stream(genfunc.build_gf("h_y", d=d, a=a).specialize(1), gf_max_n)
            for n in range(1, gf_max_n + 1):
                res.expect(f_gf[n][0] == h_gf[n][0] == counting.fda(d, a, n), d=d, a=a, n=n, route="gf")
            for n in range(1, max_n + 1):
                (f, _), (h, _) = oracle.tally(n, [oracle.PartsInSet(Progression(a, d + 1)), oracle.DDistinctMin(d, a)])
                res.expect(f == h == counting.hda(d, a, n), d=d, a=a, n=n, route="oracle", f=f, h=h)
    return res


def refinement(max_n: int = 20, oracle_max_n: int = 14, d_max: int = 4) -> SuiteResult:
    """h partitions with lambda parts vs f partitions with largest part a + (d+1)(lambda - 1)."""
    res = SuiteResult("refinement", f"parts/largest-part refinement for d <= {d_max}; C(n-k, k-1) for n <= {max_n}")
    for d in range(1, d_max + 1):
        for a in range(1, d + 2):
            fy = genfunc.coeff_stream(genfunc.build_gf("f_y", d=d, a=a), oracle_max_n)
            hy = genfunc.coeff_stream(genfunc.build_gf("h_y", d=d, a=a), oracle_max_n)
            X = Progression(a, d + 1)
            for n in range(1, oracle_max_n + 1):
                table = counting.hda_refined_by_parts(d, a, n)
                h_by_parts = oracle.count_by_parts(n, oracle.DDistinctMin(d, a))
                f_by_parts = oracle.count_by_parts(n, oracle.PartsInSet(X))
                f_by_largest = Counter(p.largest for p in oracle.enumerate_in_set(X, n))
                for lam in range(1, n + 1):
                    expected = table.get(lam, 0)
                    largest = a + (d + 1) * (lam - 1)
                    res.expect(h_by_parts.get(lam, 0) == expected, d=d, a=a, n=n, lam=lam, route="oracle-h")
                    res.expect(f_by_largest.get(largest, 0) == expected, d=d, a=a, n=n, lam=lam, route="oracle-f")
                    res.expect(hy[n][lam] == expected, d=d, a=a, n=n, lam=lam, route="gf-h_y")
                    res.expect(fy[n][lam] == f_by_parts.get(lam, 0), d=d, a=a, n=n, lam=lam, route="gf-f_y")
                res.expect(sum(table.values()) == counting.hda(d, a, n), d=d, a=a, n=n, route="marginal")
    for n in range(1, max_n + 1):
        table = counting.hda_refined_by_parts(1, 1, n)
        for k in range(1, n + 1):
            res.expect(table.get(k, 0) == comb(n - k, k - 1), n=n, k=k, route="binomial")
    return res


def printed_index_mismatch(d: int, a: int, n_max: int) -> int | None:
    """First ``n`` where the excess differs from fp^(a,1) - fp^(a,d-1), or None."""
    if d < 2:
        return None
    for n in range(1, n_max + 1):
        if genfunc.beck_excess(d, a, n) != genfunc.beck_pair_count(d, a, 1, n) - genfunc.beck_pair_count(d, a, d - 1, n):
            return n
    return None


def beck(max_n: int = 20, oracle_max_n: int = 20, d_max: int = 4) -> SuiteResult:
    res = SuiteResult("beck", f"f-over-h part excess: GF = derivative = pair counts = enumeration, d <= {d_max}, n <= {max_n}")
    res.expect(genfunc.beck_excess(1, 1, 4) == 3, spot="E(f_1^(1)(4), h_1^(1)(4))")
    for n in range(1, max_n + 1):
        batch = []
        for d in range(1, d_max + 1):
            for a in range(1, d + 2):
                batch += [oracle.PartsInSet(Progression(a, d + 1)), oracle.DDistinctMin(d, a)]
        tallies = oracle.tally(n, batch) if n <= oracle_max_n else None
        i = 0
        for d in range(1, d_max + 1):
            for a in range(1, d + 2):
                paths = genfunc.beck_excess_paths(d, a, n, include_oracle=False)
                if tallies is not None:
                    paths["oracle"] = tallies[i][1] - tallies[i + 1][1]
                i += 2
                res.expect(len(set(paths.values())) == 1, d=d, a=a, n=n, paths=paths)
                res.expect(paths["gf"] >= 0, d=d, a=a, n=n, route="nonnegative")
    for d in range(2, d_max + 1):
        first = printed_index_mismatch(d, 1, max_n)
        res.notes.append(f"second index d-1 first disagrees for d={d}, a=1 at n={first}")
    return res


def random_dominating_pair(rng: random.Random, n: int) -> maps.DominatingPair:
    """Random strictly increasing ``T`` up to ``n`` and a termwise-larger ``S``."""
    T = []
    b = rng.randint(1, 3)
    while b <= n:
        T.append(b)
        b += rng.randint(1, 3)
    S = []
    for b in T:
        a = max(S[-1] + 1 if S else 1, b) + rng.choice((0, 0, 1, 2))
        if a > n:
            break
        S.append(a)
    return maps.DominatingPair(S, T)


def st_inequality(max_n: int = 18, pairs: int = 200, seed: int = 0) -> SuiteResult:
    res = SuiteResult("st-inequality", f"r_S(n) <= r_T(n) and the S->T injection on {pairs} random pairs, n <= {max_n}")
    rng = random.Random(seed)
    for trial in range(pairs):
        pair = random_dominating_pair(rng, max_n)
        S, T = Explicit(pair.S), Explicit(pair.T)
        for n in range(1, max_n + 1):
            rs, rt = counting.count_in_set(S, n), counting.count_in_set(T, n)
            res.expect(rs <= rt, trial=trial, S=pair.S, T=pair.T, n=n, r_S=rs, r_T=rt)
            images = set()
            domain = 0
            for p in oracle.enumerate_in_set(S, n):
                q = maps.st_inject(pair, p)
                domain += 1
                if q.perimeter != n or any(v not in pair.T for v in q.parts):
                    res.expect(False, trial=trial, n=n, source=str(p), image=str(q), route="inject-target")
                images.add(q.parts)
            res.expect(domain == rs, trial=trial, n=n, route="domain-size", enumerated=domain, closed=rs)
            res.expect(len(images) == domain, trial=trial, n=n, route="injective")
    return res


def reduction(max_n: int = 100, d_max: int = 4) -> SuiteResult:
    res = SuiteResult("reduction", f"h_d^(a) = ell_(2d+2)^(a, a+d+1) for d <= {d_max}, n <= {max_n}")
    for d in range(1, d_max + 1):
        for a in range(1, d + 2):
            for n in range(1, max_n + 1):
                h = counting.hda(d, a, n)
                ell = counting.ell_two_residue(2 * (d + 1), a, a + d + 1, n)
                res.expect(h == ell, d=d, a=a, n=n, h=h, ell=ell)
    return res


def two_residue(max_n: int = 100, oracle_max_n: int = 14, d_max: int = 6) -> SuiteResult:
    res = SuiteResult("two-residue", f"two-residue binomial sums vs enumeration (n <= {oracle_max_n}) and GF (n <= {max_n})")
    for d in range(2, d_max + 1):
        for a in range(1, d):
            for b in range(a + 1, d + 1):
                gf = genfunc.coeff_stream(genfunc.build_gf("ell2", d=d, a=a, b=b), max_n)
                blocks = genfunc.coeff_stream(genfunc.build_gf("ell2_blocks", d=d, a=a, b=b), max_n)
                X = TwoProgressions(a, b, d)
                for n in range(1, max_n + 1):
                    closed = counting.ell_two_residue(d, a, b, n)
                    res.expect(gf[n][0] == blocks[n][0] == closed == counting.count_in_set(X, n), d=d, a=a, b=b, n=n, route="gf")
                    if n <= oracle_max_n:
                        brute = oracle.count_where(n, oracle.PartsInSet(X))
                        res.expect(brute == closed, d=d, a=a, b=b, n=n, route="oracle", brute=brute, closed=closed)
    return res


def rev_alder(max_n: int = 16, d_max: int = 5) -> SuiteResult:
    res = SuiteResult("rev-alder", f"ell_d^(a) >= h_d^(a) for a < (d+3)/2, d <= {d_max}, n <= {max_n}")
    for d in range(1, d_max + 1):
        for a in range(1, d + 2):
            if 2 * a >= d + 3:
                continue
            for n in range(1, max_n + 1):
                ell, h = counting.ell_pm(d, a, n), counting.hda(d, a, n)
                res.expect(ell >= h, d=d, a=a, n=n, ell=ell, h=h)
    return res


def shift(max_n: int = 16, d_max: int = 5) -> SuiteResult:
    res = SuiteResult("shift", f"shift inequalities for d <= {d_max}, n <= {max_n}")
    for d in range(1, d_max + 1):
        for n in range(1, max_n + 1):
            for a in range(1, d + 2):
                if 2 * a < d + 3:
                    res.expect(counting.ell_pm(d + 1, a, n) <= counting.ell_pm(d, a, n), d=d, a=a, n=n, kind="ell d+1")
                res.expect(counting.hda(d + 1, a, n) <= counting.hda(d, a, n), d=d, a=a, n=n, kind="h d+1")
                if a + 1 <= d + 1:
                    res.expect(counting.hda(d, a + 1, n) <= counting.hda(d, a, n), d=d, a=a, n=n, kind="h a+1")
    return res


def lxy(max_n: int = 16) -> SuiteResult:
    """Even parts counted with multiplicity vs (number of parts) - (number of distinct parts).

    Also records where the repeated-size count departs from the same
    statistic; that comparison is informational only.
    """
    res = SuiteResult("lxy", f"even parts (with multiplicity) vs parts minus distinct parts, n <= {max_n}")
    first_gap = None
    for n in range(1, max_n + 1):
        even = Counter()
        excess = Counter()
        for p in oracle.enumerate_perimeter(n):
            even[sum(1 for v in p.parts if v % 2 == 0)] += 1
            excess[len(p) - len(set(p.parts))] += 1
        res.expect(even == excess, n=n, even=dict(even), excess=dict(excess))
        repeated = [c for c, _ in oracle.tally(n, [oracle.ExactlyJSizesRepeated(j, 2) for j in range(n + 1)])]
        if first_gap is None and any(repeated[j] != excess.get(j, 0) for j in range(n + 1)):
            first_gap = n
    res.notes.append(f"repeated part sizes first differ from parts minus distinct parts at n={first_gap}")
    return res


def aab_beck(max_n: int = 16) -> SuiteResult:
    """Parts excess of no-even-size over no-repeated-size = one even size with all parts >= 2."""
    res = SuiteResult("aab-beck", f"FO_(0,2)/FD_(0,2) part excess, n <= {max_n}")
    target = oracle.Custom(lambda p: p.parts[-1] >= 2 and sum(1 for v in set(p.parts) if v % 2 == 0) == 1)
    for n in range(1, max_n + 1):
        (_, no_even), (_, no_rep), (rhs, _) = oracle.tally(
            n, [oracle.ExactlyJSizesDivisible(0, 2), oracle.ExactlyJSizesRepeated(0, 2), target]
        )
        res.expect(no_even - no_rep == rhs, n=n, lhs=no_even - no_rep, rhs=rhs)
    return res


def prop17(max_n: int = 30, d_max: int = 6) -> SuiteResult:
    res = SuiteResult("prop17", f"two-residue dominance on every legal cell, d <= {d_max}, n <= {max_n}")
    for cell in experiments.prop17_grid(d_max):
        try:
            experiments.check_prop17(*cell, max_n)
            res.expect(True)
        except experiments.Prop17Violation as exc:
            res.expect(False, cell=cell, reason=str(exc))
    return res


def trichotomy(max_n: int = 60, d_max: int = 3) -> SuiteResult:
    """Signs of h_d^(a) - ell_(2d+2)^(m1,m2) on the proved boundary rows."""
    res = SuiteResult("trichotomy", f"boundary cases m = 2d+2 for d <= {d_max}, n <= {max_n}")
    for d in range(1, d_max + 1):
        m = 2 * d + 2
        for a in range(1, d + 2):
            for m1 in range(1, m):
                for m2 in range(m1 + 1, m + 1):
                    regime = experiments.trichotomy_regime(d, a, m, m1, m2)
                    if regime == "unknown":
                        continue
                    report = experiments.scan_kangkim(d, a, m, m1, m2, max_n)
                    res.expect(not report.violations, d=d, a=a, m1=m1, m2=m2, regime=regime, violations=report.violations)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "straub": straub,
    "theorem-k2": theorem_k2,
    "alder-type": alder_type,
    "beck": beck,
    "st-inequality": st_inequality,
    "reduction": reduction,
    "refinement": refinement,
    "two-residue": two_residue,
    "rev-alder": rev_alder,
    "shift": shift,
    "lxy": lxy,
    "aab-beck": aab_beck,
    "prop17": prop17,
    "trichotomy": trichotomy,
}


def run_suite(name: str, **kwargs: Any) -> SuiteResult:
    return SUITES[name](**kwargs)
