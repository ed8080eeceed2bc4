"""Closed-form fixed-perimeter counters.

A perimeter-``n`` partition with largest part ``alpha`` has ``n - alpha``
further parts, each at most ``alpha``.  With parts restricted to ``X`` this
is a multiset choice from ``X_alpha = {x in X : x <= alpha}``, so stars and
bars gives ``C(|X_alpha| + n - alpha - 1, n - alpha)`` whenever
``alpha in X``.  Everything here is exact integer arithmetic.
"""
from __future__ import annotations

from math import comb

from .errors import require
from .partset import ALL_PARTS, PartSet, Progression, TwoProgressions

__all__ = [
    "count_in_set",
    "count_in_set_by_largest",
    "ell_pm",
    "ell_two_residue",
    "fda",
    "hda",
    "hda_refined_by_parts",
    "r",
]


def count_in_set_by_largest(X: PartSet, alpha: int, n: int) -> int:
    """Perimeter-``n`` partitions with parts in ``X`` and largest part ``alpha``."""
    require(1 <= alpha <= n, "alpha", "need 1 <= alpha <= n")
    if alpha not in X:
        return 0
    return comb(X.count_upto(alpha) + n - alpha - 1, n - alpha)


def count_in_set(X: PartSet, n: int) -> int:
    require(n >= 1, "n", "must be >= 1")
    return sum(count_in_set_by_largest(X, alpha, n) for alpha in X.upto(n))


def r(n: int) -> int:
    """Number of partitions of perimeter ``n``."""
    return count_in_set(ALL_PARTS, n)


def ell_two_residue(d: int, a: int, b: int, n: int) -> int:
    """Perimeter-``n`` partitions with parts congruent to ``a`` or ``b`` mod ``d``.

    Largest part ``a + dk`` sees ``2k + 1`` allowed values below it and
    largest part ``b + dk`` sees ``2k + 2``, giving two binomial sums.
    """
    require(0 < a, "a", "must be positive")
    require(a < b, "b", "must exceed a")
    require(b <= d, "d", "must be >= b")
    require(n >= 1, "n", "must be >= 1")
    total = 0
    for k in range((n - a) // d + 1 if n >= a else 0):
        rest = n - a - d * k
        total += comb(2 * k + rest, rest)
    for k in range((n - b) // d + 1 if n >= b else 0):
        rest = n - b - d * k
        total += comb(2 * k + 1 + rest, rest)
    return total


def _check_da(d: int, a: int) -> None:
    require(d >= 1, "d", "must be >= 1")
    require(1 <= a <= d + 1, "a", "need 1 <= a <= d + 1")


def fda(d: int, a: int, n: int) -> int:
    """Parts congruent to ``a`` modulo ``d + 1``."""
    _check_da(d, a)
    return count_in_set(Progression(a, d + 1), n)


def hda(d: int, a: int, n: int) -> int:
    """Parts ``d``-distinct and at least ``a``; equinumerous with :func:`fda`."""
    _check_da(d, a)
    return fda(d, a, n)


def hda_refined_by_parts(d: int, a: int, n: int) -> dict[int, int]:
    """Map ``lambda -> count`` of ``h`` partitions with ``lambda`` parts.

    The entry equals the number of ``f`` partitions whose largest part is
    ``a + (d + 1)(lambda - 1)``.  Only feasible ``lambda`` appear.
    """
    _check_da(d, a)
    require(n >= 1, "n", "must be >= 1")
    X = Progression(a, d + 1)
    table = {}
    lam = 1
    while a + (d + 1) * (lam - 1) <= n:
        table[lam] = count_in_set_by_largest(X, a + (d + 1) * (lam - 1), n)
        lam += 1
    return table


def ell_pm(d: int, a: int, n: int) -> int:
    """Parts congruent to ``+a`` or ``-a`` modulo ``d + 3``.

    When ``2a == d + 3`` both residues coincide and the set is the single
    progression ``a, 3a, 5a, ...``.
    """
    require(d >= 1, "d", "must be >= 1")
    modulus = d + 3
    require(1 <= a < modulus, "a", "need 1 <= a < d + 3")
    require(n >= 1, "n", "must be >= 1")
    r1, r2 = a % modulus, (modulus - a) % modulus
    if r1 == r2:
        return count_in_set(Progression(r1, modulus), n)
    lo, hi = sorted((r1, r2))
    return ell_two_residue(modulus, lo, hi, n)


def two_residue_set(d: int, a: int, b: int) -> TwoProgressions:
    return TwoProgressions(a, b, d)
