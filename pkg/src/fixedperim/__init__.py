"""Exact counting, enumeration and identity checking for partitions of fixed perimeter.

The perimeter of a partition is its largest part plus its number of parts
minus one.  Submodules:

- ``core``: partitions, profiles and multiplicity forms
- ``oracle``: brute-force enumeration and constraint counting
- ``counting``: closed forms
- ``genfunc``: rational generating functions and coefficient streams
- ``maps``: the repeated/even rewrite and the S-to-T injection
- ``experiments``: asymptotic constants and comparison scanners
- ``verify``: named cross-check suites
"""
from __future__ import annotations

from .core import EMPTY, MultiplicityForm, Partition, Profile, ferrers, partition_of_profile, profile_of, stats
from .errors import ValidationError

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "MultiplicityForm",
    "Partition",
    "Profile",
    "ValidationError",
    "ferrers",
    "partition_of_profile",
    "profile_of",
    "stats",
]
