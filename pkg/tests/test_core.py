from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from fixedperim.core import (
    EMPTY,
    MultiplicityForm,
    Partition,
    Profile,
    ferrers,
    from_multiplicity_form,
    partition_of_profile,
    profile_of,
    stats,
    to_multiplicity_form,
)

partitions = st.lists(st.integers(1, 12), min_size=1, max_size=10).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_stats_example():
    p = Partition.parse("5+3+3")
    assert stats(p) == (5, 3, 7)
    assert p.perimeter == 7 and p.size == 11


def test_profile_examples():
    assert profile_of(Partition.parse("2+2+1")).word == "ENENN"
    assert profile_of(Partition((1,))).word == "EN"
    assert partition_of_profile("ENENN").parts == (2, 2, 1)


@pytest.mark.parametrize("bad", [(), (0,), (1, 2), (3, -1)])
def test_partition_rejects(bad):
    with pytest.raises(ValueError):
        Partition(bad)


@pytest.mark.parametrize("word", ["", "NE", "EE", "EXN", "NN"])
def test_profile_rejects(word):
    with pytest.raises(ValueError):
        Profile(word)


def test_empty_partition():
    assert len(EMPTY) == 0 and EMPTY.parts == ()


@given(partitions)
def test_profile_round_trip(p):
    w = profile_of(p)
    assert len(w.word) == p.perimeter + 1
    assert partition_of_profile(w) == p


@given(partitions)
def test_multiplicity_round_trip(p):
    mf = to_multiplicity_form(p)
    assert from_multiplicity_form(mf) == p
    assert sum(m for _, m in mf.entries) == len(p.parts)
    assert list(mf.sizes) == sorted(set(p.parts))


def test_multiplicity_form_rejects_unsorted():
    with pytest.raises(ValueError):
        MultiplicityForm(((3, 1), (2, 1)))


def test_ferrers_rows_top_down():
    rows = ferrers(Partition.parse("5+3+3")).splitlines()
    assert [r.count("•") for r in rows] == [5, 3, 3]
