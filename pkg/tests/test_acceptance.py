"""Acceptance criteria 1-10, each timed against its runtime limit.

Every criterion prints one ``PASS``/``FAIL`` line; the lines are repeated in
the pytest terminal summary.
"""
from __future__ import annotations

import json
import math
import time
from contextlib import contextmanager
from math import comb

import jsonschema

from fixedperim import counting, experiments, genfunc, maps, oracle, verify
from fixedperim.core import partition_of_profile

from baseline_grid import BASELINE, run_all
from conftest import ACCEPTANCE_LINES


@contextmanager
def criterion(number: int, title: str, limit: float):
    start = time.perf_counter()
    status = "FAIL"
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= limit:
            detail = f" (over the {limit:g} s limit)"
            raise AssertionError(f"criterion {number} took {elapsed:.1f} s, limit {limit:g} s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {number}: {status} {title} [{elapsed:.1f} s]{detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)


def assert_suite(name: str, **kwargs) -> None:
    res = verify.run_suite(name, **kwargs)
    assert res.passed, (name, res.failures[:5])


def test_01_baseline_counts():
    with criterion(1, "p(4)=5, r(4)=8, r(n)=2^(n-1)", 10):
        assert sum(1 for _ in oracle.enumerate_size(4)) == 5
        assert sum(1 for _ in oracle.enumerate_perimeter(4)) == 8
        for n in range(1, 17):
            assert oracle.count_where(n, oracle.AllParts()) == 2 ** (n - 1)
        for n in range(1, 41):
            assert counting.r(n) == 2 ** (n - 1)


def test_02_theorem_k2_triple_check():
    with criterion(2, "FO_{j,2} = FD_{j,2} by oracle, marked GF and phi images, n <= 20", 60):
        assert_suite("theorem-k2", max_n=20, oracle_max_n=16, bijection_max_n=20)


def test_03_bijection_soundness():
    with criterion(3, "psi o phi = phi o psi = id, repeated sizes -> even sizes, n <= 14", 60):
        for n in range(1, 15):
            for word in oracle.enumerate_profiles(n):
                image = maps.phi_word(word)
                assert maps.psi_word(image) == word
                assert maps.phi_word(maps.psi_word(word)) == word
                p, q = partition_of_profile(word), partition_of_profile(image)
                assert q.perimeter == p.perimeter == n
                repeated = sum(1 for v in set(p.parts) if p.parts.count(v) >= 2)
                even = sum(1 for v in set(q.parts) if v % 2 == 0)
                assert repeated == even, word


def test_04_alder_type_and_refinement():
    with criterion(4, "h_d^(a) = f_d^(a) for d <= 4, n <= 14; refinement table; C(n-k, k-1)", 60):
        assert_suite("alder-type", max_n=14, d_max=4)
        assert_suite("refinement", max_n=20, oracle_max_n=14, d_max=4)
        for n in range(1, 21):
            table = counting.hda_refined_by_parts(1, 1, n)
            assert all(table.get(k, 0) == comb(n - k, k - 1) for k in range(1, n + 1))


def test_05_beck_identity():
    with criterion(5, "part excess: three paths agree, spot value 8 - 5 = 3, index d-1 fails", 60):
        assert_suite("beck", max_n=20, oracle_max_n=20, d_max=4)
        f_parts = sum(len(p) for p in oracle.enumerate_perimeter(4) if all(v % 2 for v in p.parts))
        h_parts = sum(len(p) for p in oracle.enumerate_perimeter(4) if len(set(p.parts)) == len(p))
        assert (f_parts, h_parts) == (8, 5)
        assert genfunc.beck_excess(1, 1, 4) == f_parts - h_parts == 3
        for d in range(2, 5):
            assert verify.printed_index_mismatch(d, 1, 12) is not None


def test_06_st_inequality():
    with criterion(6, "r_S <= r_T and injectivity on 200 random dominating pairs, n <= 18", 120):
        assert_suite("st-inequality", max_n=18, pairs=200, seed=0)


def test_07_two_residue_machinery():
    with criterion(7, "two-residue count, GF, reduction, revAlder and shift inequalities", 120):
        assert_suite("two-residue", max_n=100, oracle_max_n=14, d_max=6)
        assert_suite("reduction", max_n=100, d_max=4)
        assert_suite("rev-alder", max_n=16, d_max=5)
        assert_suite("shift", max_n=16, d_max=5)


def test_08_prop17_and_trichotomy():
    with criterion(8, "two-residue dominance d <= 6, n <= 30; boundary signs d <= 3, n <= 60", 60):
        assert_suite("prop17", max_n=30, d_max=6)
        assert_suite("trichotomy", max_n=60, d_max=3)


def test_09_constants():
    with criterion(9, "alpha_1, alpha_2, A_1 and tipping(1)", 10):
        assert abs(experiments.alpha_root(1) - 0.5) < 1e-12
        assert abs(experiments.alpha_root(2) - (math.sqrt(5) - 1) / 2) < 1e-10
        assert abs(experiments.a_d_constant(1) - math.pi**2 / 12) < 1e-9
        assert experiments.asymptotic_constants(1).tipping == 4


def test_10_scanners_against_baseline():
    with criterion(10, "fofd and kangkim scans are schema-valid and keep the baseline signs", 60):
        baseline = {(b["family"], json.dumps(b["params"], sort_keys=True)): b for b in json.loads(BASELINE.read_text())}
        reports = run_all()
        assert len(reports) == len(baseline)
        for r in reports:
            obj = json.loads(r.to_json())
            jsonschema.validate(obj, experiments.REPORT_SCHEMA)
            old = baseline[(r.family, json.dumps(r.params, sort_keys=True))]
            signs = [(x > 0) - (x < 0) for x in r.diffs]
            assert signs == [(int(x) > 0) - (int(x) < 0) for x in old["diffs"]], r.params
            assert obj["verdict"] == old["verdict"]
