from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from fixedperim import counting, genfunc, oracle
from fixedperim.errors import ValidationError
from fixedperim.genfunc import ZPoly, RationalGF, build_gf, coeff_stream
from fixedperim.partset import Progression

small_polys = st.lists(st.integers(-5, 5), max_size=5).map(ZPoly)


@given(small_polys, small_polys, st.integers(-3, 3))
def test_zpoly_ring_ops_evaluate(a, b, x):
    assert (a + b)(x) == a(x) + b(x)
    assert (a - b)(x) == a(x) - b(x)
    assert (a * b)(x) == a(x) * b(x)


def test_zpoly_derivative():
    assert ZPoly((3, 2, 5)).derivative() == ZPoly((2, 10))


def test_r_series():
    stream = coeff_stream(build_gf("r"), 40)
    assert stream[0] == genfunc.ZERO
    assert [stream[n][0] for n in range(1, 41)] == [2 ** (n - 1) for n in range(1, 41)]


def test_rejects_bad_denominator():
    with pytest.raises(ValueError):
        RationalGF((ZPoly((1,)),), (ZPoly((2,)), ZPoly((1,))))
    with pytest.raises(ValueError):
        RationalGF((ZPoly((1,)),), (genfunc.ZERO, ZPoly((1,))))


def test_negated_denominator_is_normalised():
    g = RationalGF((ZPoly((-1,)),), (ZPoly((-1,)), ZPoly((1,))))  # 1 / (1 - q)
    assert [c[0] for c in coeff_stream(g, 5)] == [1] * 6


@pytest.mark.parametrize("name,params", [("fd_fo_marked", {}), ("f_y", {"d": 2, "a": 1}), ("ell2", {"d": 5, "a": 2, "b": 4})])
def test_json_round_trip(name, params):
    g = build_gf(name, **params)
    text = g.to_json()
    obj = json.loads(text)
    assert set(obj) == {"numerator", "denominator"}
    assert obj["denominator"][0] == [1]
    assert RationalGF.from_json(text) == g


def test_build_gf_rejects():
    with pytest.raises(ValidationError):
        build_gf("nope")
    with pytest.raises(ValidationError):
        build_gf("f", d=1)
    with pytest.raises(ValidationError):
        build_gf("f", d=1, a=5)


def test_specialize_and_derivative():
    fy = build_gf("f_y", d=1, a=1)
    f = coeff_stream(fy.specialize(1), 15)
    parts = coeff_stream(fy.marker_derivative().specialize(1), 15)
    X = Progression(1, 2)
    for n in range(1, 16):
        assert f[n][0] == counting.fda(1, 1, n)
        assert parts[n][0] == oracle.total_parts_where(n, oracle.PartsInSet(X))


def test_marked_gfs_against_oracle():
    shared = coeff_stream(build_gf("fd_fo_marked"), 14)
    for n in range(1, 15):
        fo = [oracle.count_where(n, oracle.ExactlyJSizesDivisible(j, 2)) for j in range(n + 1)]
        fd = [oracle.count_where(n, oracle.ExactlyJSizesRepeated(j, 2)) for j in range(n + 1)]
        assert fo == fd == [shared[n][j] for j in range(n + 1)]
        assert [genfunc.fo_fd_j2(j, n) for j in range(n + 1)] == list(zip(fo, fd))


def test_family_gfs_match_closed_forms():
    for d in range(1, 5):
        for a in range(1, d + 2):
            f = coeff_stream(build_gf("f", d=d, a=a), 40)
            ell = coeff_stream(build_gf("ell", d=d, a=a), 40)
            for n in range(1, 41):
                assert f[n][0] == counting.fda(d, a, n)
                assert ell[n][0] == counting.ell_pm(d, a, n)
    prog = coeff_stream(build_gf("progression", first=2, step=3), 20)
    assert [prog[n][0] for n in range(1, 21)] == [counting.count_in_set(Progression(2, 3), n) for n in range(1, 21)]


def test_beck_spot_value_from_raw_part_sums():
    n = 4
    f_parts = sum(len(p) for p in oracle.enumerate_perimeter(n) if all(v % 2 for v in p.parts))
    h_parts = sum(len(p) for p in oracle.enumerate_perimeter(n) if len(set(p.parts)) == len(p))
    assert (f_parts, h_parts) == (8, 5)
    assert genfunc.beck_excess(1, 1, n) == 3


def test_beck_paths_agree():
    for d in range(1, 4):
        for a in range(1, d + 2):
            for n in range(1, 13):
                paths = genfunc.beck_excess_paths(d, a, n)
                assert len(set(paths.values())) == 1, (d, a, n, paths)


def test_printed_second_index_fails():
    # the pair-count form only holds with second index d + 1
    for d in range(2, 5):
        assert any(
            genfunc.beck_excess(d, 1, n)
            != genfunc.beck_pair_count(d, 1, 1, n) - genfunc.beck_pair_count(d, 1, d - 1, n)
            for n in range(1, 13)
        )
