"""Named counting families with their closed-form, GF and enumeration routes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import counting, genfunc, oracle
from .errors import ValidationError
from .partset import Progression, TwoProgressions

PARAM_ORDER = ("d", "a", "b", "j", "k", "m", "m1", "m2")


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple[str, ...]
    description: str
    closed: Optional[Callable[..., int]] = None  # (n, **params) -> int
    gf: Optional[Callable[..., tuple[genfunc.RationalGF, int]]] = None  # params -> (GF, marker degree)
    constraint: Optional[Callable[..., oracle.ConstraintSpec]] = None
    oracle_value: Optional[Callable[..., int]] = None  # (n, **params) -> int
    exact_when: Optional[Callable[..., bool]] = None  # params -> closed/gf routes available

    def methods(self, params: dict[str, int] | None = None) -> list[str]:
        out = [m for m, f in (("closed", self.closed), ("gf", self.gf)) if f is not None]
        if params is not None and self.exact_when is not None and not self.exact_when(**params):
            out = []
        if self.constraint is not None or self.oracle_value is not None:
            out.append("oracle")
        return out

    def check_params(self, params: dict[str, int]) -> dict[str, int]:
        missing = [k for k in self.params if params.get(k) is None]
        if missing:
            raise ValidationError(missing[0], f"family {self.name!r} needs --{missing[0]}")
        chosen = {k: params[k] for k in self.params}
        # run the constructors once so range errors surface before any work
        if self.constraint is not None:
            self.constraint(**chosen)
        if self.gf is not None and "gf" in self.methods(chosen):
            self.gf(**chosen)
        return chosen

    def values(self, ns: list[int], params: dict[str, int], method: str = "auto") -> list[int]:
        p = self.check_params(params)
        available = self.methods(p)
        if method == "auto":
            method = available[0]
        if method not in available:
            raise ValidationError("method", f"{self.name!r} with these parameters supports {available}")
        if method == "closed":
            return [self.closed(n, **p) for n in ns]
        if method == "gf":
            g, j = self.gf(**p)
            stream = genfunc.coeff_stream(g, max(ns))
            return [stream[n][j] for n in ns]
        if self.oracle_value is not None:
            return [self.oracle_value(n, **p) for n in ns]
        c = self.constraint(**p)
        return [oracle.count_where(n, c) for n in ns]


def _fofd_closed(which: int) -> Callable[..., int]:
    def closed(n: int, j: int, k: int) -> int:
        if k != 2:
            raise ValidationError("method", "no closed form for k != 2; use --method oracle")
        return genfunc.fo_fd_j2(j, n)[which]

    return closed


def _marked_gf(name: str) -> Callable[..., tuple[genfunc.RationalGF, int]]:
    def gf(j: int, k: int):
        if k != 2:
            raise ValidationError("k", "generating function only for k = 2")
        return genfunc.build_gf(name), j

    return gf


def _beck_oracle(n: int, d: int, a: int) -> int:
    return genfunc.beck_excess_paths(d, a, n)["oracle"]


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in [
        Family(
            "r", (), "all partitions of perimeter n",
            closed=lambda n: counting.r(n),
            gf=lambda: (genfunc.build_gf("r"), 0),
            constraint=lambda: oracle.AllParts(),
        ),
        Family(
            "f", ("d", "a"), "parts congruent to a mod d+1",
            closed=lambda n, d, a: counting.fda(d, a, n),
            gf=lambda d, a: (genfunc.build_gf("f", d=d, a=a), 0),
            constraint=lambda d, a: oracle.PartsInSet(Progression(a, d + 1)) if 1 <= a <= d + 1 else _bad_a(),
        ),
        Family(
            "h", ("d", "a"), "parts d-distinct and >= a",
            closed=lambda n, d, a: counting.hda(d, a, n),
            gf=lambda d, a: (genfunc.build_gf("h_y", d=d, a=a).specialize(1), 0),
            constraint=lambda d, a: oracle.DDistinctMin(d, a) if 1 <= a <= d + 1 else _bad_a(),
        ),
        Family(
            "ell", ("d", "a"), "parts congruent to +-a mod d+3",
            closed=lambda n, d, a: counting.ell_pm(d, a, n),
            gf=lambda d, a: (genfunc.build_gf("ell", d=d, a=a), 0),
            constraint=lambda d, a: oracle.PartsCongruentPM(a, d + 3),
        ),
        Family(
            "ell2", ("d", "a", "b"), "parts congruent to a or b mod d",
            closed=lambda n, d, a, b: counting.ell_two_residue(d, a, b, n),
            gf=lambda d, a, b: (genfunc.build_gf("ell2", d=d, a=a, b=b), 0),
            constraint=lambda d, a, b: oracle.PartsInSet(TwoProgressions(a, b, d)),
        ),
        Family(
            "fo", ("j", "k"), "exactly j part sizes divisible by k",
            closed=_fofd_closed(0),
            exact_when=lambda j, k: k == 2,
            gf=_marked_gf("fo_marked"),
            constraint=lambda j, k: oracle.ExactlyJSizesDivisible(j, k),
        ),
        Family(
            "fd", ("j", "k"), "exactly j part sizes appearing at least k times",
            closed=_fofd_closed(1),
            exact_when=lambda j, k: k == 2,
            gf=_marked_gf("fd_marked"),
            constraint=lambda j, k: oracle.ExactlyJSizesRepeated(j, k),
        ),
        Family(
            "beck", ("d", "a"), "total parts of f_d^(a) minus total parts of h_d^(a)",
            closed=lambda n, d, a: genfunc.beck_excess(d, a, n),
            gf=lambda d, a: (genfunc.build_gf("beck", d=d, a=a), 0),
            oracle_value=_beck_oracle,
        ),
        Family(
            "fp", ("d", "a", "b"), "ordered pairs from f_d^(a) x f_d^(b) with perimeters summing to n",
            closed=lambda n, d, a, b: genfunc.beck_pair_count(d, a, b, n),
        ),
    ]
}


def _bad_a():
    raise ValidationError("a", "need 1 <= a <= d + 1")


def canonical_params(params: dict[str, int]) -> str:
    return ";".join(f"{k}={params[k]}" for k in PARAM_ORDER if k in params)

