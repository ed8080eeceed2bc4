"""Asymptotic constants and scanners for the open comparison questions.

Scanners never decide whether a conjecture is true.  They compute exact
signed differences over a range of perimeters and package them as a
:class:`ScanReport`; the caller decides what to do with violations.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

from . import counting, oracle
from .errors import require

__all__ = [
    "AsymptoticConstants",
    "Prop17Violation",
    "ScanReport",
    "a_d_constant",
    "alpha_root",
    "asymptotic_constants",
    "check_prop17",
    "prop17_grid",
    "scan_fofd",
    "scan_kangkim",
    "trichotomy_regime",
]

TIPPING_GUARD = 1e-9


def alpha_root(d: int) -> float:
    """Root of ``x**d + x - 1`` in ``(0, 1)`` by bisection."""
    require(d >= 1, "d", "must be >= 1")
    lo, hi = 0.0, 1.0  # f(0) = -1 < 0 < 1 = f(1), f increasing
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if mid**d + mid - 1.0 < 0.0:
            lo = mid
        else:
            hi = mid
    return lo if abs(lo**d + lo - 1.0) <= abs(hi**d + hi - 1.0) else hi


def a_d_constant(d: int, tol: float = 1e-15) -> float:
    """``(d/2) log(alpha_d)**2 + sum_{r>=1} alpha_d**(r d) / r**2``, tail cut once a term drops below ``tol``."""
    alpha = alpha_root(d)
    base = alpha**d  # equals 1 - alpha
    total = 0.5 * d * math.log(alpha) ** 2
    r = 1
    while True:
        term = base**r / (r * r)
        total += term
        if term < tol:
            break
        r += 1
    return total


@dataclass(frozen=True)
class AsymptoticConstants:
    d: int
    alpha_d: float
    A_d: float
    ratio: float  # pi**2 / (3 A_d)
    tipping: int
    tipping_near_integer: bool


def asymptotic_constants(d: int) -> AsymptoticConstants:
    """Constants for the classical tipping point ``floor(pi**2 / (3 A_d))``.

    If the ratio lies within ``TIPPING_GUARD`` of an integer the floor is
    numerically ambiguous; the nearest integer is used and the flag set.
    """
    alpha = alpha_root(d)
    A = a_d_constant(d)
    ratio = math.pi**2 / (3 * A)
    nearest = round(ratio)
    near = abs(ratio - nearest) < TIPPING_GUARD
    return AsymptoticConstants(d, alpha, A, ratio, nearest if near else math.floor(ratio), near)


# ---------------------------------------------------------------------------
# reports


@dataclass
class ScanReport:
    family: str
    params: dict[str, int]
    n_range: tuple[int, int]
    diffs: list[int]
    violations: list[int]
    regime: str = "data-only"
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return sign_verdict(self.diffs)

    @property
    def stable_from(self) -> int:
        """First ``n`` after which the scanned range has no violation."""
        lo, _ = self.n_range
        return max(self.violations) + 1 if self.violations else lo

    @property
    def trend(self) -> str:
        return tail_trend(self.diffs)

    def diff_at(self, n: int) -> int:
        return self.diffs[n - self.n_range[0]]

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "params": dict(self.params),
            "n_range": list(self.n_range),
            "diffs": [str(x) for x in self.diffs],
            "violations": list(self.violations),
            "verdict": self.verdict,
            "regime": self.regime,
            "stable_from": self.stable_from,
            "trend": self.trend,
            "trend_is_heuristic": True,
            **self.meta,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, obj: dict[str, Any]) -> ScanReport:
        known = {"family", "params", "n_range", "diffs", "violations", "verdict", "regime",
                 "stable_from", "trend", "trend_is_heuristic"}
        return cls(
            family=obj["family"],
            params=dict(obj["params"]),
            n_range=tuple(obj["n_range"]),
            diffs=[int(x) for x in obj["diffs"]],
            violations=list(obj["violations"]),
            regime=obj.get("regime", "data-only"),
            meta={k: v for k, v in obj.items() if k not in known},
        )


REPORT_SCHEMA = {
    "type": "object",
    "required": ["family", "params", "n_range", "diffs", "violations", "verdict"],
    "properties": {
        "family": {"type": "string"},
        "params": {"type": "object", "additionalProperties": {"type": "integer"}},
        "n_range": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        "diffs": {"type": "array", "items": {"type": "string", "pattern": "^-?[0-9]+$"}},
        "violations": {"type": "array", "items": {"type": "integer"}},
        "verdict": {"enum": ["all-zero", "all-nonnegative", "all-nonpositive", "mixed"]},
    },
}


def sign_verdict(diffs: list[int]) -> str:
    if all(x == 0 for x in diffs):
        return "all-zero"
    if all(x >= 0 for x in diffs):
        return "all-nonnegative"
    if all(x <= 0 for x in diffs):
        return "all-nonpositive"
    return "mixed"


def tail_trend(diffs: list[int]) -> str:
    """Heuristic: mean of the last quarter against the quarter before it."""
    q = len(diffs) // 4
    if q == 0:
        return "too-short"
    last = sum(diffs[-q:]) / q
    prev = sum(diffs[-2 * q : -q]) / q
    if last > prev:
        return "increasing"
    if last < prev:
        return "decreasing"
    return "flat"


# ---------------------------------------------------------------------------
# scanners


def scan_fofd(j: int, k: int, n_max: int) -> ScanReport:
    """``FD_{j,k}(n) - FO_{j,k}(n)`` by enumeration; violations are negative differences."""
    require(j >= 0, "j", "must be >= 0")
    require(k >= 2, "k", "must be >= 2")
    require(1 <= n_max <= oracle.MAX_PERIMETER, "n_max", f"need 1 <= n_max <= {oracle.MAX_PERIMETER}")
    diffs = []
    for n in range(1, n_max + 1):
        (fd, _), (fo, _) = oracle.tally(n, [oracle.ExactlyJSizesRepeated(j, k), oracle.ExactlyJSizesDivisible(j, k)])
        diffs.append(fd - fo)
    violations = [n for n, x in enumerate(diffs, start=1) if x < 0]
    regime = "identity" if k == 2 else "conjectured-nonnegative-eventually"
    return ScanReport("fofd", {"j": j, "k": k}, (1, n_max), diffs, violations, regime)


def trichotomy_regime(d: int, a: int, m: int, m1: int, m2: int) -> str:
    """Expected behaviour of ``h_d^(a) - ell_m^(m1,m2)``.

    ``+inf``/``-inf`` off the boundary are conjectural; on ``m = 2d + 2`` the
    three listed cases follow from the two-residue comparison, and every other
    boundary cell is ``unknown``.
    """
    boundary = 2 * d + 2
    if m > boundary:
        return "conjectured+inf"
    if m < boundary:
        return "conjectured-inf"
    top = a + d + 1
    if (m1, m2) == (a, top):
        return "zero"
    if m1 >= a and m2 >= top:
        return "+inf"
    if m1 <= a and m2 <= top:
        return "-inf"
    return "unknown"


def scan_kangkim(d: int, a: int, m: int, m1: int, m2: int, n_max: int) -> ScanReport:
    """``h_d^(a)(n) - ell_m^(m1,m2)(n)`` from the closed forms.

    Violations are differences whose sign contradicts the expected regime
    (nonzero for ``zero``); ``unknown`` cells never report violations.
    """
    require(d >= 1, "d", "must be >= 1")
    require(1 <= a <= d + 1, "a", "need 1 <= a <= d + 1")
    require(0 < m1, "m1", "must be positive")
    require(m1 < m2, "m2", "must exceed m1")
    require(m2 <= m, "m", "must be >= m2")
    require(1 <= n_max <= 200, "n_max", "need 1 <= n_max <= 200")
    diffs = [counting.hda(d, a, n) - counting.ell_two_residue(m, m1, m2, n) for n in range(1, n_max + 1)]
    regime = trichotomy_regime(d, a, m, m1, m2)
    bad = {
        "conjectured+inf": lambda x: x < 0,
        "+inf": lambda x: x < 0,
        "conjectured-inf": lambda x: x > 0,
        "-inf": lambda x: x > 0,
        "zero": lambda x: x != 0,
        "unknown": lambda x: False,
    }[regime]
    violations = [n for n, x in enumerate(diffs, start=1) if bad(x)]
    params = {"d": d, "a": a, "m": m, "m1": m1, "m2": m2}
    return ScanReport("kangkim", params, (1, n_max), diffs, violations, regime)


class Prop17Violation(AssertionError):
    def __init__(self, report: ScanReport, reason: str):
        super().__init__(reason)
        self.report = report


def check_prop17(d: int, a1: int, b1: int, a2: int, b2: int, n_max: int) -> ScanReport:
    """Check ``ell_d^(a1,b1)(n) >= ell_d^(a2,b2)(n)`` and an eventually nondecreasing gap.

    The gap must be nonnegative everywhere and nondecreasing on a tail that
    covers at least the second half of the scan.  Raises
    :class:`Prop17Violation` otherwise.
    """
    require(0 < a1 <= a2 <= d, "a2", "need 0 < a1 <= a2 <= d")
    require(0 < b1 <= b2 <= d, "b2", "need 0 < b1 <= b2 <= d")
    require((a1, b1) != (a2, b2), "b2", "tuples must differ")
    require(a1 < b1, "b1", "need a1 < b1")
    require(a2 < b2, "b2", "need a2 < b2")
    require(n_max >= 1, "n_max", "must be >= 1")
    diffs = [
        counting.ell_two_residue(d, a1, b1, n) - counting.ell_two_residue(d, a2, b2, n) for n in range(1, n_max + 1)
    ]
    violations = [n for n, x in enumerate(diffs, start=1) if x < 0]
    monotone_from = 1
    for n in range(2, n_max + 1):
        if diffs[n - 1] < diffs[n - 2]:
            monotone_from = n
    params = {"d": d, "a1": a1, "b1": b1, "a2": a2, "b2": b2}
    report = ScanReport("prop17", params, (1, n_max), diffs, violations, "+inf", {"monotone_from": monotone_from})
    if violations:
        raise Prop17Violation(report, f"negative gap at n = {violations}")
    if monotone_from > max(1, n_max // 2):
        raise Prop17Violation(report, f"gap still decreasing at n = {monotone_from}")
    return report


def prop17_grid(d_max: int) -> list[tuple[int, int, int, int, int]]:
    """Every legal ``(d, a1, b1, a2, b2)`` with ``d <= d_max``."""
    cells = []
    for d in range(2, d_max + 1):
        tuples = [(a, b) for a in range(1, d) for b in range(a + 1, d + 1)]
        for a1, b1 in tuples:
            for a2, b2 in tuples:
                if a1 <= a2 and b1 <= b2 and (a1, b1) != (a2, b2):
                    cells.append((d, a1, b1, a2, b2))
    return cells
