"""Scan grid pinned by the checked-in baseline.  Run this file to regenerate it."""
from __future__ import annotations

import json
from pathlib import Path

from fixedperim import experiments

BASELINE = Path(__file__).parent / "data" / "scan_baseline.json"
FOFD_N_MAX = 20
KANGKIM_N_MAX = 40


def fofd_cells() -> list[tuple[int, int]]:
    return [(j, 3) for j in range(3)]


def kangkim_cells() -> list[tuple[int, int, int, int, int]]:
    cells = []
    for d in (1, 2):
        for a in range(1, d + 2):
            for m in (2 * d + 1, 2 * d + 2, 2 * d + 3):
                for m1 in range(1, m):
                    for m2 in range(m1 + 1, m + 1):
                        cells.append((d, a, m, m1, m2))
    return cells


def run_all() -> list[experiments.ScanReport]:
    reports = [experiments.scan_fofd(j, k, FOFD_N_MAX) for j, k in fofd_cells()]
    reports += [experiments.scan_kangkim(*cell, KANGKIM_N_MAX) for cell in kangkim_cells()]
    return reports


if __name__ == "__main__":
    BASELINE.write_text(json.dumps([r.to_dict() for r in run_all()], indent=1) + "\n")
