"""Declarative sets of allowed part values."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import require

__all__ = ["Explicit", "PartSet", "Progression", "TwoProgressions", "ALL_PARTS", "ODD_PARTS"]


@dataclass(frozen=True)
class Explicit:
    """A finite, strictly increasing list of allowed parts."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        values = tuple(int(v) for v in values)
        require(all(v >= 1 for v in values), "values", "parts must be positive")
        require(all(x < y for x, y in zip(values, values[1:])), "values", "must be strictly increasing")
        object.__setattr__(self, "values", values)

    def __contains__(self, x: int) -> bool:
        return x in self.values

    def count_upto(self, alpha: int) -> int:
        return sum(1 for v in self.values if v <= alpha)

    def upto(self, alpha: int) -> list[int]:
        return [v for v in self.values if v <= alpha]


@dataclass(frozen=True)
class Progression:
    """``{first, first + step, first + 2 step, ...}``."""

    first: int
    step: int

    def __post_init__(self) -> None:
        require(self.first >= 1, "first", "must be >= 1")
        require(self.step >= 1, "step", "must be >= 1")

    def __contains__(self, x: int) -> bool:
        return x >= self.first and (x - self.first) % self.step == 0

    def count_upto(self, alpha: int) -> int:
        if alpha < self.first:
            return 0
        return (alpha - self.first) // self.step + 1

    def upto(self, alpha: int) -> list[int]:
        return list(range(self.first, alpha + 1, self.step))


@dataclass(frozen=True)
class TwoProgressions:
    """Values congruent to ``a`` or ``b`` modulo ``d``, with ``0 < a < b <= d``.

    Each residue class starts at its residue, so ``b == d`` stands for the
    multiples of ``d``.
    """

    a: int
    b: int
    d: int

    def __post_init__(self) -> None:
        require(0 < self.a, "a", "must be positive")
        require(self.a < self.b, "b", "must exceed a")
        require(self.b <= self.d, "d", "must be >= b")

    def __contains__(self, x: int) -> bool:
        return x >= 1 and (x % self.d == self.a % self.d or x % self.d == self.b % self.d)

    def count_upto(self, alpha: int) -> int:
        return max(0, (alpha - self.a) // self.d + 1) + max(0, (alpha - self.b) // self.d + 1)

    def upto(self, alpha: int) -> list[int]:
        return sorted(list(range(self.a, alpha + 1, self.d)) + list(range(self.b, alpha + 1, self.d)))


PartSet = Union[Explicit, Progression, TwoProgressions]

ALL_PARTS = Progression(1, 1)
ODD_PARTS = Progression(1, 2)
