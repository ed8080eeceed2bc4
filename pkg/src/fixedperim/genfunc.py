"""Exact rational generating functions in ``q`` with polynomial coefficients.

Coefficients of ``q**n`` are :class:`ZPoly` values, integer polynomials in a
marking variable (``z`` for marked part sizes, ``y`` for number of parts).
A :class:`RationalGF` keeps its denominator normalised to constant term 1,
so the series coefficients follow from the recurrence

    c_n = num_n - sum_{i >= 1} den_i * c_{n-i}.

Fractions are never reduced; products and quotients just multiply out, which
is harmless because only the series expansion is ever observed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import counting, oracle
from .errors import ValidationError, require
from .partset import Progression

__all__ = [
    "FAMILIES",
    "RationalGF",
    "ZPoly",
    "beck_excess",
    "beck_excess_paths",
    "beck_pair_count",
    "build_gf",
    "coeff_stream",
    "fo_fd_j2",
]


@dataclass(frozen=True)
class ZPoly:
    """Dense integer polynomial in the marking variable; trailing zeros stripped."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def const(cls, value: int) -> ZPoly:
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __add__(self, other: ZPoly) -> ZPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ZPoly(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    def __neg__(self) -> ZPoly:
        return ZPoly(-x for x in self.coeffs)

    def __sub__(self, other: ZPoly) -> ZPoly:
        return self + (-other)

    def __mul__(self, other: ZPoly | int) -> ZPoly:
        if isinstance(other, int):
            return ZPoly(x * other for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ZPoly(out)

    __rmul__ = __mul__

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> ZPoly:
        return ZPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def to_list(self) -> list[int]:
        return list(self.coeffs) or [0]

    def __repr__(self) -> str:
        return f"ZPoly({list(self.coeffs)})"


ZERO = ZPoly()
ONE = ZPoly.const(1)
Z = ZPoly((0, 1))

QPoly = tuple  # tuple[ZPoly, ...], index = power of q


def _qp(coeffs: Sequence) -> QPoly:
    out = [c if isinstance(c, ZPoly) else ZPoly.const(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _qadd(a: QPoly, b: QPoly) -> QPoly:
    n = max(len(a), len(b))
    return _qp([(a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)])


def _qneg(a: QPoly) -> QPoly:
    return tuple(-c for c in a)


def _qmul(a: QPoly, b: QPoly) -> QPoly:
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return _qp(out)


def _qmap(a: QPoly, fn) -> QPoly:
    return _qp([fn(c) for c in a])


def _q(*terms: tuple[int, ZPoly | int]) -> QPoly:
    """Sparse constructor: ``_q((0, 1), (3, Z))`` is ``1 + z q^3``."""
    top = max((e for e, _ in terms), default=-1)
    out = [ZERO] * (top + 1)
    for e, c in terms:
        out[e] = out[e] + (c if isinstance(c, ZPoly) else ZPoly.const(c))
    return _qp(out)


@dataclass(frozen=True)
class RationalGF:
    numerator: QPoly
    denominator: QPoly

    def __post_init__(self) -> None:
        num, den = _qp(self.numerator), _qp(self.denominator)
        if not den or den[0] != ONE:
            if den and den[0] == -ONE:
                num, den = _qneg(num), _qneg(den)
            else:
                raise ValueError("denominator must have constant term 1")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def poly(cls, num: QPoly) -> RationalGF:
        return cls(num, _q((0, 1)))

    def __add__(self, other: RationalGF) -> RationalGF:
        return RationalGF(
            _qadd(_qmul(self.numerator, other.denominator), _qmul(other.numerator, self.denominator)),
            _qmul(self.denominator, other.denominator),
        )

    def __neg__(self) -> RationalGF:
        return RationalGF(_qneg(self.numerator), self.denominator)

    def __sub__(self, other: RationalGF) -> RationalGF:
        return self + (-other)

    def __mul__(self, other: RationalGF) -> RationalGF:
        return RationalGF(_qmul(self.numerator, other.numerator), _qmul(self.denominator, other.denominator))

    def __truediv__(self, other: RationalGF) -> RationalGF:
        # the divisor's numerator becomes a denominator, so it needs constant term +-1
        return RationalGF(_qmul(self.numerator, other.denominator), _qmul(self.denominator, other.numerator))

    def specialize(self, value: int) -> RationalGF:
        """Substitute the marking variable."""
        ev = lambda c: ZPoly.const(c(value))  # noqa: E731
        return RationalGF(_qmap(self.numerator, ev), _qmap(self.denominator, ev))

    def marker_derivative(self) -> RationalGF:
        """Quotient-rule derivative with respect to the marking variable."""
        num, den = self.numerator, self.denominator
        dnum = _qmap(num, ZPoly.derivative)
        dden = _qmap(den, ZPoly.derivative)
        return RationalGF(_qadd(_qmul(dnum, den), _qneg(_qmul(num, dden))), _qmul(den, den))

    def to_json(self) -> str:
        return json.dumps(
            {
                "numerator": [c.to_list() for c in self.numerator],
                "denominator": [c.to_list() for c in self.denominator],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> RationalGF:
        obj = json.loads(text)
        return cls(_qp([ZPoly(c) for c in obj["numerator"]]), _qp([ZPoly(c) for c in obj["denominator"]]))


def coeff_stream(g: RationalGF, n_max: int) -> list[ZPoly]:
    """Series coefficients of ``g`` for ``q**0 .. q**n_max``."""
    num, den = g.numerator, g.denominator
    if not den or den[0] != ONE:
        raise ValueError("denominator must have constant term 1")
    out: list[ZPoly] = []
    for n in range(n_max + 1):
        c = num[n] if n < len(num) else ZERO
        for i in range(1, min(n, len(den) - 1) + 1):
            if den[i]:
                c = c - den[i] * out[n - i]
        out.append(c)
    return out


# ---------------------------------------------------------------------------
# builders


def _gf(num: QPoly, den: QPoly) -> RationalGF:
    return RationalGF(num, den)


def _fd_fo_marked() -> RationalGF:
    # q(1 - (1 - z) q) / (1 - 2q + (1 - z) q^3)
    one_minus_z = ONE - Z
    return _gf(_q((1, 1), (2, -one_minus_z)), _q((0, 1), (1, -2), (3, one_minus_z)))


def _blocks():
    """Profile blocks at x = y = 1: A = E N_m, B marks m >= 1, C marks m >= 2."""
    geo = _gf(_q((0, 1)), _q((0, 1), (1, -1)))  # 1 / (1 - q)
    q = RationalGF.poly(_q((1, 1)))
    A = q * geo
    B = q * _gf(_q((0, 1), (1, Z - ONE)), _q((0, 1), (1, -1)))
    C = q * _gf(_q((0, 1), (2, Z - ONE)), _q((0, 1), (1, -1)))
    return A, B, C


def _fd_marked() -> RationalGF:
    _, B, C = _blocks()
    one = RationalGF.poly(_q((0, 1)))
    return B / (one - C)


def _fo_marked() -> RationalGF:
    A, B, _ = _blocks()
    one = RationalGF.poly(_q((0, 1)))
    zA = RationalGF.poly(_q((0, Z))) * A
    return A * (one + zA) / (one - A * B)


def _check_da(d: int, a: int) -> None:
    require(d >= 1, "d", "must be >= 1")
    require(1 <= a <= d + 1, "a", "need 1 <= a <= d + 1")


def _f(d: int, a: int) -> RationalGF:
    _check_da(d, a)
    return _gf(_q((a, 1)), _q((0, 1), (1, -1), (d + 1, -1)))


def _f_y(d: int, a: int) -> RationalGF:
    # y q^a / (1 - y q - q^(d+1))
    _check_da(d, a)
    return _gf(_q((a, Z)), _q((0, 1), (1, -Z), (d + 1, -1)))


def _h_y(d: int, a: int) -> RationalGF:
    # y q^a / (1 - q - y q^(d+1))
    _check_da(d, a)
    return _gf(_q((a, Z)), _q((0, 1), (1, -1), (d + 1, -Z)))


def _beck(d: int, a: int) -> RationalGF:
    _check_da(d, a)
    base = _q((0, 1), (1, -1), (d + 1, -1))
    return _gf(_q((a + 1, 1), (a + 1 + d, -1)), _qmul(base, base))


def _beck_derived(d: int, a: int) -> RationalGF:
    """Parts-marked f GF minus parts-marked h GF, differentiated at y = 1."""
    return _f_y(d, a).marker_derivative().specialize(1) - _h_y(d, a).marker_derivative().specialize(1)


def _check_abd(d: int, a: int, b: int) -> None:
    require(0 < a, "a", "must be positive")
    require(a < b, "b", "must exceed a")
    require(b <= d, "d", "must be >= b")


def _ell2(d: int, a: int, b: int) -> RationalGF:
    _check_abd(d, a, b)
    return _gf(_q((a, 1), (a + 1, -1), (b, 1)), _q((0, 1), (1, -2), (2, 1), (d, -1)))


def _ell2_blocks(d: int, a: int, b: int) -> RationalGF:
    _check_abd(d, a, b)
    geo = _gf(_q((0, 1)), _q((0, 1), (1, -1)))
    one = RationalGF.poly(_q((0, 1)))
    head = RationalGF.poly(_q((a, 1))) * geo
    f = RationalGF.poly(_q((b - a, 1))) * geo
    g = RationalGF.poly(_q((a - b + d, 1))) * geo
    return head * (one + f) / (one - f * g)


def _progression(first: int, step: int) -> RationalGF:
    require(first >= 1, "first", "must be >= 1")
    require(step >= 1, "step", "must be >= 1")
    return _gf(_q((first, 1)), _q((0, 1), (1, -1), (step, -1)))


def _ell(d: int, a: int) -> RationalGF:
    require(d >= 1, "d", "must be >= 1")
    m = d + 3
    require(1 <= a < m, "a", "need 1 <= a < d + 3")
    r1, r2 = sorted((a, m - a))
    if r1 == r2:
        return _progression(r1, m)
    return _ell2(m, r1, r2)


FAMILIES = {
    "r": (lambda: _gf(_q((1, 1)), _q((0, 1), (1, -2))), ()),
    "fd_fo_marked": (_fd_fo_marked, ()),
    "fd_marked": (_fd_marked, ()),
    "fo_marked": (_fo_marked, ()),
    "f": (_f, ("d", "a")),
    "f_y": (_f_y, ("d", "a")),
    "h_y": (_h_y, ("d", "a")),
    "beck": (_beck, ("d", "a")),
    "beck_derived": (_beck_derived, ("d", "a")),
    "ell2": (_ell2, ("d", "a", "b")),
    "ell2_blocks": (_ell2_blocks, ("d", "a", "b")),
    "ell": (_ell, ("d", "a")),
    "progression": (_progression, ("first", "step")),
}


def build_gf(name: str, **params: int) -> RationalGF:
    """Rational GF for a named family.

    ``r``            profile GF at x = y = 1, ``q / (1 - 2q)``
    ``fd_fo_marked`` shared z-marked GF of FD_{j,2} and FO_{j,2}
    ``fd_marked``    FD_{j,2} assembled from the profile blocks
    ``fo_marked``    FO_{j,2} assembled from the profile blocks
    ``f`` / ``f_y``  parts congruent to a mod d+1 (y marks number of parts)
    ``h_y``          d-distinct parts >= a, y marks number of parts
    ``beck``         excess of total parts, f over h
    ``beck_derived`` the same excess via the y-derivative of ``f_y - h_y``
    ``ell2``         parts congruent to a or b mod d (``ell2_blocks``: from blocks)
    ``ell``          parts congruent to +-a mod d+3
    ``progression``  parts in {first, first+step, ...}
    """
    if name not in FAMILIES:
        raise ValidationError("family", f"unknown generating function family {name!r}")
    builder, keys = FAMILIES[name]
    missing = [k for k in keys if k not in params]
    extra = [k for k in params if k not in keys]
    if missing or extra:
        raise ValidationError("params", f"{name} takes {keys}, got {tuple(params)}")
    return builder(**params)


# ---------------------------------------------------------------------------
# derived quantities


@lru_cache(maxsize=None)
def _marked_streams(n_max: int) -> tuple[tuple[ZPoly, ...], tuple[ZPoly, ...]]:
    return tuple(coeff_stream(_fo_marked(), n_max)), tuple(coeff_stream(_fd_marked(), n_max))


def fo_fd_j2(j: int, n: int) -> tuple[int, int]:
    """``(FO_{j,2}(n), FD_{j,2}(n))`` read off the block-built marked GFs."""
    require(j >= 0, "j", "must be >= 0")
    require(n >= 1, "n", "must be >= 1")
    size = max(32, 1 << (n - 1).bit_length())
    fo, fd = _marked_streams(size)
    return fo[n][j], fd[n][j]


@lru_cache(maxsize=None)
def _f_stream(d: int, a: int, n_max: int) -> tuple[int, ...]:
    return tuple([0] + [counting.fda(d, a, m) for m in range(1, n_max + 1)])


def beck_pair_count(d: int, a: int, b: int, n: int) -> int:
    """Ordered pairs (pi1, pi2) from the f_d^(a) and f_d^(b) families with perimeters summing to ``n``.

    ``d`` is the f-family parameter; the modulus of both families is ``d + 1``.
    """
    _check_da(d, a)
    require(1 <= b <= d + 1, "b", "need 1 <= b <= d + 1")
    if n < 2:
        return 0
    fa, fb = _f_stream(d, a, n), _f_stream(d, b, n)
    return sum(fa[n - m] * fb[m] for m in range(1, n))


@lru_cache(maxsize=None)
def _beck_stream(d: int, a: int, n_max: int) -> tuple[int, ...]:
    return tuple(c[0] for c in coeff_stream(_beck(d, a), n_max))


def beck_excess(d: int, a: int, n: int) -> int:
    """Total parts over f_d^(a)(n) minus total parts over h_d^(a)(n)."""
    _check_da(d, a)
    require(n >= 1, "n", "must be >= 1")
    size = max(32, 1 << (n - 1).bit_length())
    return _beck_stream(d, a, size)[n]


def beck_excess_paths(d: int, a: int, n: int, include_oracle: bool = True) -> dict[str, int]:
    """The excess computed independently by GF, y-derivative, pair counts and (optionally) enumeration."""
    out = {
        "gf": beck_excess(d, a, n),
        "derivative": coeff_stream(_beck_derived(d, a), n)[n][0],
        "pairs": beck_pair_count(d, a, 1, n) - beck_pair_count(d, a, d + 1, n),
    }
    if include_oracle:
        (_, f_parts), (_, h_parts) = oracle.tally(
            n, [oracle.PartsInSet(Progression(a, d + 1)), oracle.DDistinctMin(d, a)]
        )
        out["oracle"] = f_parts - h_parts
    return out
