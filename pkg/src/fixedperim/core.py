"""Partitions, lattice-path profiles and multiplicity forms.

A partition of perimeter ``n`` (largest part plus number of parts minus one)
is encoded by its profile: the word over ``{E, N}`` obtained by walking the
boundary of the Ferrers diagram from the lower-left corner to the upper-right
corner.  The profile always starts with ``E``, ends with ``N`` and has length
``n + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "EMPTY",
    "EmptyPartition",
    "MultiplicityForm",
    "Partition",
    "Profile",
    "ferrers",
    "from_multiplicity_form",
    "partition_of_profile",
    "profile_of",
    "stats",
    "to_multiplicity_form",
]


class EmptyPartition:
    """The partition of 0.  It has no parts and no perimeter."""

    _instance: EmptyPartition | None = None
    parts: tuple[int, ...] = ()

    def __new__(cls) -> EmptyPartition:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __len__(self) -> int:
        return 0

    def __repr__(self) -> str:
        return "EMPTY"

    def __str__(self) -> str:
        return "()"


EMPTY = EmptyPartition()


@dataclass(frozen=True, order=True)
class Partition:
    """A nonempty nonincreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a Partition needs at least one part; use EMPTY for the partition of 0")
        if parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Read ``"5+3+3"`` (or a comma/space separated list)."""
        tokens = text.replace(",", "+").replace(" ", "+").split("+")
        return cls(sorted((int(t) for t in tokens if t), reverse=True))

    @property
    def largest(self) -> int:
        return self.parts[0]

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def perimeter(self) -> int:
        return self.parts[0] + len(self.parts) - 1

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))


@dataclass(frozen=True)
class Profile:
    """Boundary word of a Ferrers diagram, e.g. ``Profile("ENENN")`` for 2+2+1."""

    word: str

    def __post_init__(self) -> None:
        w = self.word
        if not isinstance(w, str) or len(w) < 2:
            raise ValueError(f"profile too short: {w!r}")
        if set(w) - {"E", "N"}:
            raise ValueError(f"profile letters must be E or N: {w!r}")
        if w[0] != "E" or w[-1] != "N":
            raise ValueError(f"profile must start with E and end with N: {w!r}")

    @property
    def perimeter(self) -> int:
        return len(self.word) - 1

    def runs(self) -> list[int]:
        """N-run length after each E; the last run includes the closing N."""
        return [len(chunk) for chunk in self.word.split("E")[1:]]

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class MultiplicityForm:
    """``(value, multiplicity)`` pairs with strictly increasing values."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev = 0
        for value, mult in self.entries:
            if value <= prev or mult < 1:
                raise ValueError(f"bad multiplicity form: {self.entries}")
            prev = value

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.entries)

    @property
    def length(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def largest(self) -> int:
        return self.entries[-1][0]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def stats(p: Partition) -> tuple[int, int, int]:
    """Return ``(largest part, number of parts, perimeter)``."""
    alpha, lam = p.parts[0], len(p.parts)
    return alpha, lam, alpha + lam - 1


def profile_of(p: Partition) -> Profile:
    if not isinstance(p, Partition):
        raise ValueError("the empty partition has no profile")
    parts = p.parts
    # walk from the bottom row upward; each row of length v adds E's up to v then an N
    out = []
    width = 0
    for v in reversed(parts):
        out.append("E" * (v - width))
        out.append("N")
        width = v
    return Profile("".join(out))


def partition_of_profile(w: Profile | str) -> Partition:
    word = w.word if isinstance(w, Profile) else Profile(w).word
    parts = []
    width = 0
    for ch in word:
        if ch == "E":
            width += 1
        else:
            parts.append(width)
    return Partition(reversed(parts))


def to_multiplicity_form(p: Partition) -> MultiplicityForm:
    counts: dict[int, int] = {}
    for v in p.parts:
        counts[v] = counts.get(v, 0) + 1
    return MultiplicityForm(tuple(sorted(counts.items())))


def from_multiplicity_form(mf: MultiplicityForm) -> Partition:
    parts = []
    for value, mult in reversed(mf.entries):
        parts.extend([value] * mult)
    return Partition(parts)


def ferrers(p: Partition, bullet: str = "•") -> str:
    """ASCII Ferrers diagram, one row per part, largest part on top."""
    return "\n".join(" ".join(bullet * v) for v in p.parts)
