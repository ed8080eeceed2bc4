"""Brute-force enumeration of fixed-perimeter partitions.

Every partition of perimeter ``n`` corresponds to exactly one profile
``E w N`` where ``w`` is a free word of length ``n - 1``.  Enumeration walks
an ``(n-1)``-bit counter over ``w`` (``E = 0``, ``N = 1``, most significant
bit first), so the stream order is lexicographic in the profile and the index
space ``[0, 2**(n-1))`` splits into independent ranges.

Counting runs on numpy batches: a chunk of counter values is decoded into a
``rows x (n + 2)`` multiplicity matrix once, and every constraint is a
vectorised mask over that matrix.  Each constraint also has a pure-Python
``accepts`` on a :class:`MultiplicityForm`, used for streamed enumeration and
for :class:`Custom` predicates.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, Union

import numpy as np

from .core import EMPTY, EmptyPartition, MultiplicityForm, Partition, from_multiplicity_form, to_multiplicity_form
from .errors import require
from .partset import PartSet

__all__ = [
    "AllParts",
    "ConstraintSpec",
    "Custom",
    "DDistinctMin",
    "ExactlyJSizesDivisible",
    "ExactlyJSizesRepeated",
    "PartsCongruentPM",
    "PartsInSet",
    "count_by_parts",
    "count_where",
    "enumerate_in_set",
    "enumerate_perimeter",
    "enumerate_profiles",
    "enumerate_size",
    "tally",
    "total_parts_where",
]

MAX_PERIMETER = 26
CHUNK_BITS = 16
_TO_PROFILE = str.maketrans("01", "EN")


class _Batch:
    """Decoded multiplicities for the counter values ``lo <= x < hi``."""

    def __init__(self, n: int, lo: int, hi: int):
        x = np.arange(lo, hi, dtype=np.int64)
        rows = x.size
        idx = np.arange(rows)
        mult = np.zeros((rows, n + 2), dtype=np.int16)
        e = np.ones(rows, dtype=np.int64)
        for t in range(n - 1):
            bit = (x >> (n - 2 - t)) & 1
            mult[idx, e] += bit.astype(np.int16)
            e += 1 - bit
        mult[idx, e] += 1
        self.n = n
        self.mult = mult
        self.present = mult > 0
        self.alpha = e
        self.lam = mult.sum(axis=1, dtype=np.int64)


# ---------------------------------------------------------------------------
# constraints


@dataclass(frozen=True)
class AllParts:
    def accepts(self, mf: MultiplicityForm) -> bool:
        return True

    def mask(self, batch: _Batch) -> np.ndarray:
        return np.ones(batch.mult.shape[0], dtype=bool)


@dataclass(frozen=True)
class PartsInSet:
    parts: PartSet

    def accepts(self, mf: MultiplicityForm) -> bool:
        return all(v in self.parts for v in mf.sizes)

    def mask(self, batch: _Batch) -> np.ndarray:
        allowed = np.array([v in self.parts for v in range(batch.n + 2)])
        return ~(batch.present & ~allowed).any(axis=1)


@dataclass(frozen=True)
class DDistinctMin:
    """Parts pairwise differ by at least ``d`` and are all ``>= a``."""

    d: int
    a: int

    def __post_init__(self) -> None:
        require(self.d >= 1, "d", "must be >= 1")
        require(self.a >= 1, "a", "must be >= 1")

    def accepts(self, mf: MultiplicityForm) -> bool:
        if any(m > 1 for _, m in mf.entries):
            return False
        sizes = mf.sizes
        return sizes[0] >= self.a and all(y - x >= self.d for x, y in zip(sizes, sizes[1:]))

    def mask(self, batch: _Batch) -> np.ndarray:
        present = batch.present
        ok = (batch.mult <= 1).all(axis=1) & ~present[:, : self.a].any(axis=1)
        last = np.full(present.shape[0], -(10**6), dtype=np.int64)
        for v in range(1, batch.n + 1):
            p = present[:, v]
            ok &= ~p | (v - last >= self.d)
            last = np.where(p, v, last)
        return ok


@dataclass(frozen=True)
class ExactlyJSizesDivisible:
    """Exactly ``j`` distinct part sizes are divisible by ``k``."""

    j: int
    k: int

    def __post_init__(self) -> None:
        require(self.j >= 0, "j", "must be >= 0")
        require(self.k >= 2, "k", "must be >= 2")

    def accepts(self, mf: MultiplicityForm) -> bool:
        return sum(1 for v in mf.sizes if v % self.k == 0) == self.j

    def mask(self, batch: _Batch) -> np.ndarray:
        cols = list(range(self.k, batch.n + 1, self.k))
        return batch.present[:, cols].sum(axis=1) == self.j


@dataclass(frozen=True)
class ExactlyJSizesRepeated:
    """Exactly ``j`` distinct part sizes occur at least ``k`` times."""

    j: int
    k: int

    def __post_init__(self) -> None:
        require(self.j >= 0, "j", "must be >= 0")
        require(self.k >= 2, "k", "must be >= 2")

    def accepts(self, mf: MultiplicityForm) -> bool:
        return sum(1 for _, m in mf.entries if m >= self.k) == self.j

    def mask(self, batch: _Batch) -> np.ndarray:
        return (batch.mult >= self.k).sum(axis=1) == self.j


@dataclass(frozen=True)
class PartsCongruentPM:
    """Every part is congruent to ``a`` or ``-a`` modulo ``modulus``."""

    a: int
    modulus: int

    def __post_init__(self) -> None:
        require(0 < self.a < self.modulus, "a", "need 0 < a < modulus")

    def _ok(self, v: int) -> bool:
        r = v % self.modulus
        return r == self.a or r == self.modulus - self.a

    def accepts(self, mf: MultiplicityForm) -> bool:
        return all(self._ok(v) for v in mf.sizes)

    def mask(self, batch: _Batch) -> np.ndarray:
        allowed = np.array([v >= 1 and self._ok(v) for v in range(batch.n + 2)])
        return ~(batch.present & ~allowed).any(axis=1)


@dataclass(frozen=True)
class Custom:
    predicate: Callable[[Partition], bool]
    name: str = "custom"

    def accepts(self, mf: MultiplicityForm) -> bool:
        return bool(self.predicate(from_multiplicity_form(mf)))


ConstraintSpec = Union[
    AllParts, PartsInSet, DDistinctMin, ExactlyJSizesDivisible, ExactlyJSizesRepeated, PartsCongruentPM, Custom
]


# ---------------------------------------------------------------------------
# enumeration


def _check_n(n: int) -> None:
    require(isinstance(n, int) and n >= 1, "n", "perimeter must be >= 1")


def enumerate_profiles(n: int, lo: int = 0, hi: int | None = None) -> Iterator[str]:
    """Profile words of perimeter ``n`` for counter values in ``[lo, hi)``."""
    _check_n(n)
    hi = 1 << (n - 1) if hi is None else hi
    if n == 1:
        if lo <= 0 < hi:
            yield "EN"
        return
    fmt = f"0{n - 1}b"
    for x in range(lo, hi):
        yield "E" + format(x, fmt).translate(_TO_PROFILE) + "N"


def _word_to_partition(word: str) -> Partition:
    parts = []
    width = 0
    for ch in word:
        if ch == "E":
            width += 1
        else:
            parts.append(width)
    parts.reverse()
    return Partition(parts)


def enumerate_perimeter(n: int) -> Iterator[Partition]:
    """All ``2**(n-1)`` partitions of perimeter ``n`` in profile-lexicographic order."""
    for word in enumerate_profiles(n):
        yield _word_to_partition(word)


def enumerate_size(N: int) -> Iterator[Partition | EmptyPartition]:
    """All partitions of the integer ``N`` (``EMPTY`` for ``N == 0``)."""
    require(0 <= N <= 40, "N", "need 0 <= N <= 40")
    if N == 0:
        yield EMPTY
        return

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(N, N):
        yield Partition(parts)


def enumerate_in_set(parts: PartSet, n: int) -> Iterator[Partition]:
    """Perimeter-``n`` partitions with every part in ``parts``, built directly.

    Picks the largest part ``alpha`` and then a multiset of ``n - alpha``
    further parts from the allowed values ``<= alpha``.  Avoids walking all
    ``2**(n-1)`` profiles when the set is sparse.
    """
    _check_n(n)
    allowed = parts.upto(n)
    for alpha in allowed:
        smaller = [v for v in allowed if v <= alpha]
        for combo in itertools.combinations_with_replacement(smaller, n - alpha):
            yield Partition((alpha,) + tuple(reversed(combo)))


# ---------------------------------------------------------------------------
# counting


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    return max(1, int(os.environ.get("FIXEDPERIM_THREADS", "1")))


def _ranges(n: int) -> list[tuple[int, int]]:
    total = 1 << (n - 1)
    step = 1 << CHUNK_BITS
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def tally(n: int, constraints: Sequence[ConstraintSpec], workers: int | None = None) -> list[tuple[int, int]]:
    """``(count, total number of parts)`` for each constraint at perimeter ``n``.

    All constraints share one pass over the enumeration.
    """
    _check_n(n)
    require(n <= MAX_PERIMETER, "n", f"oracle supports n <= {MAX_PERIMETER}")
    constraints = list(constraints)
    vectorised = [i for i, c in enumerate(constraints) if hasattr(c, "mask")]
    custom = [i for i, c in enumerate(constraints) if not hasattr(c, "mask")]

    def run(bounds: tuple[int, int]) -> list[tuple[int, int]]:
        lo, hi = bounds
        out = [(0, 0)] * len(constraints)
        if vectorised:
            batch = _Batch(n, lo, hi)
            for i in vectorised:
                m = constraints[i].mask(batch)
                out[i] = (int(m.sum()), int(batch.lam[m].sum()))
        if custom:
            for word in enumerate_profiles(n, lo, hi):
                p = _word_to_partition(word)
                mf = to_multiplicity_form(p)
                for i in custom:
                    if constraints[i].accepts(mf):
                        c, t = out[i]
                        out[i] = (c + 1, t + len(p))
        return out

    chunks = _ranges(n)
    w = _workers(workers)
    if w > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=w) as pool:
            partials = list(pool.map(run, chunks))
    else:
        partials = [run(ch) for ch in chunks]
    return [
        (sum(p[i][0] for p in partials), sum(p[i][1] for p in partials)) for i in range(len(constraints))
    ]


def count_where(n: int, c: ConstraintSpec, workers: int | None = None) -> int:
    return tally(n, [c], workers)[0][0]


def total_parts_where(n: int, c: ConstraintSpec, workers: int | None = None) -> int:
    """Sum of the number of parts over perimeter-``n`` partitions satisfying ``c``."""
    return tally(n, [c], workers)[0][1]


def count_by_parts(n: int, c: ConstraintSpec) -> dict[int, int]:
    """Counts of partitions satisfying ``c`` keyed by number of parts (nonzero entries only)."""
    _check_n(n)
    require(n <= MAX_PERIMETER, "n", f"oracle supports n <= {MAX_PERIMETER}")
    totals = np.zeros(n + 1, dtype=np.int64)
    if not hasattr(c, "mask"):
        for p in enumerate_perimeter(n):
            if c.accepts(to_multiplicity_form(p)):
                totals[len(p)] += 1
    else:
        for lo, hi in _ranges(n):
            batch = _Batch(n, lo, hi)
            totals += np.bincount(batch.lam[c.mask(batch)], minlength=n + 1)[: n + 1]
    return {lam: int(v) for lam, v in enumerate(totals) if v}
