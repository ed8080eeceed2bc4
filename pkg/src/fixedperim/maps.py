"""Profile rewrites between repeated-size and even-size partitions, and the S-to-T injection.

A profile splits into blocks ``E N^{r_1} E N^{r_2} ... E N^{r_alpha}`` where
``r_i`` is the multiplicity of part ``i`` for ``i < alpha`` and ``r_alpha``
is the multiplicity of the largest part (the closing ``N`` included).

``phi`` rewrites each ``N^{m} E`` between consecutive E's and the trailing
``N^{m} N``; ``psi`` turns the ``i``-th block ``E N^{m}`` into ``E^{m+1}`` or
``N^{m+1}`` by the parity of ``i``.  Both preserve word length, hence perimeter.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .core import Partition, Profile, partition_of_profile, profile_of, to_multiplicity_form
from .errors import ValidationError, require
from . import oracle

__all__ = [
    "DominatingPair",
    "phi",
    "phi_image_counts",
    "phi_word",
    "psi",
    "psi_word",
    "st_inject",
]


def _runs(word: str) -> list[int]:
    return [len(chunk) for chunk in word.split("E")[1:]]


def phi_word(word: str) -> str:
    runs = _runs(word)
    out = ["E"]
    for m in runs[:-1]:
        out.append("N" if m == 0 else "E" + "N" * (m - 1) + "E")
    m_last = runs[-1] - 1
    out.append("N" if m_last == 0 else "E" + "N" * m_last)
    return "".join(out)


def psi_word(word: str) -> str:
    runs = _runs(word)
    runs[-1] -= 1  # detach the closing N
    out = []
    for i, m in enumerate(runs, start=1):
        out.append(("E" if i % 2 else "N") * (m + 1))
    out.append("N")
    return "".join(out)


def phi(p: Partition) -> Partition:
    """Send ``j`` repeated part sizes to ``j`` even part sizes, same perimeter."""
    return partition_of_profile(Profile(phi_word(profile_of(p).word)))


def psi(p: Partition) -> Partition:
    """Inverse of :func:`phi`."""
    return partition_of_profile(Profile(psi_word(profile_of(p).word)))


def _even_sizes(word: str) -> int:
    runs = _runs(word)
    alpha = len(runs)
    return sum(1 for i in range(2, alpha, 2) if runs[i - 1]) + (alpha % 2 == 0)


def _repeated_sizes(word: str) -> int:
    return sum(1 for m in _runs(word) if m >= 2)


def phi_image_counts(n: int) -> dict[int, int]:
    """Sizes of ``phi`` images of the repeated-size classes at perimeter ``n``.

    Enumerates every profile, checks that ``phi`` keeps the perimeter, sends
    ``j`` repeated sizes to ``j`` even sizes and never collides, then returns
    ``j -> number of distinct images``.
    """
    seen: set[str] = set()
    counts: Counter[int] = Counter()
    for word in oracle.enumerate_profiles(n):
        image = phi_word(word)
        j = _repeated_sizes(word)
        if len(image) != len(word):
            raise AssertionError(f"phi changed the perimeter of {word}")
        if _even_sizes(image) != j:
            raise AssertionError(f"phi({word}) = {image} has the wrong number of even sizes")
        if image in seen:
            raise AssertionError(f"phi is not injective: {image} hit twice")
        seen.add(image)
        counts[j] += 1
    return dict(sorted(counts.items()))


@dataclass(frozen=True)
class DominatingPair:
    """Strictly increasing ``S = (a_0, a_1, ...)`` and ``T = (b_0, b_1, ...)`` with ``a_i >= b_i``."""

    S: tuple[int, ...]
    T: tuple[int, ...]

    def __init__(self, S: Sequence[int], T: Sequence[int]):
        S, T = tuple(S), tuple(T)
        for name, seq in (("S", S), ("T", T)):
            require(all(v >= 1 for v in seq), name, "entries must be positive")
            require(all(x < y for x, y in zip(seq, seq[1:])), name, "must be strictly increasing")
        require(len(T) >= len(S), "T", "must have at least as many terms as S")
        require(all(a >= b for a, b in zip(S, T)), "T", "need a_i >= b_i termwise")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "T", T)

    @classmethod
    def from_sets(cls, S, T, n: int) -> DominatingPair:
        """Truncate two (possibly infinite) part sets to the prefixes that matter up to ``n``."""
        # b_i <= a_i, so T has at least as many values <= n as S does
        return cls(S.upto(n), T.upto(n))


def st_inject(pair: DominatingPair, p: Partition) -> Partition:
    """Map a partition with parts in ``S`` to one with parts in ``T`` of equal perimeter.

    Writing ``p = a_0^{m_0} ... a_k^{m_k + 1}``, the image is
    ``b_0^{m_0 + a_k - b_k} b_1^{m_1} ... b_k^{m_k + 1}``.
    """
    index = {v: i for i, v in enumerate(pair.S)}
    mult = to_multiplicity_form(p).as_dict()
    bad = [v for v in mult if v not in index]
    if bad:
        raise ValidationError("p", f"parts {bad} are not in S")
    k = index[p.largest]
    exps = [mult.get(pair.S[i], 0) for i in range(k + 1)]
    exps[0] += pair.S[k] - pair.T[k]
    parts = []
    for i in range(k, -1, -1):
        parts.extend([pair.T[i]] * exps[i])
    return Partition(parts)
