"""Regenerate the golden files from the development-time oracles.

Run from the repository root: ``python tests/oracles/make_golden.py``.
Every value that has an independent oracle is computed by it and checked
against the production code before anything is written.
"""

from __future__ import annotations

import json
import sys
from itertools import product
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
sys.path[:0] = [str(ROOT / "src"), str(ROOT)]

from tests.oracles.recovery_oracle import recovery_summary  # noqa: E402
from tridist.census import build_census  # noqa: E402
from tridist.curvefam import witness_membership  # noqa: E402
from tridist.exactmath import to_str  # noqa: E402
from tridist.frame import AnchorFrame, Configuration  # noqa: E402
from tridist.lab import selftest  # noqa: E402
from tridist.lab.generators import grid  # noqa: E402
from tridist.lab.scaling import ExperimentSpec, rows_to_csv, run_scaling  # noqa: E402
from tridist.lab.search import SearchSpec, exhaustive_min_kappa  # noqa: E402

GOLDEN = ROOT / "src" / "tridist" / "golden"


def witness_incidences(frame, D):
    return [[to_str(v) for v in t] for t in product(D, repeat=4) if witness_membership(frame, *t)]


def naive_census(config):
    # squared distances straight from coordinates
    a, b = config.frame.a, config.frame.b
    anchors = [(1, 0), (-1, 0), (a, b)]
    D, fib = set(), {}
    for x, y in config.points:
        ds = [(x - u) ** 2 + (y - v) ** 2 for u, v in anchors]
        D.update(ds)
        fib[ds[2]] = fib.get(ds[2], 0) + 1
    return len(D), sum(k * (k - 1) // 2 for k in fib.values())


def main():
    GOLDEN.mkdir(exist_ok=True)

    rows = []
    for frame, curve in selftest.RECOVERY_SUITE:
        summary = recovery_summary(*frame, *curve)
        rows.append({"frame": [to_str(v) for v in frame], "curve": [to_str(v) for v in curve], **summary})
    (GOLDEN / "recovery_suite.json").write_text(json.dumps(rows, indent=1) + "\n")

    micro = []
    for pts in selftest.MICRO_INSTANCES:
        config = Configuration(AnchorFrame(0, 1), pts)
        D = build_census(config).D
        quads = witness_incidences(config.frame, D)
        micro.append({"frame": ["0", "1"], "points": [[to_str(c) for c in p] for p in pts], "I": len(quads), "quadruples": quads})
    (GOLDEN / "incidence_micro.json").write_text(json.dumps(micro, indent=1) + "\n")

    spec = SearchSpec(**selftest.SEARCH_SPEC)
    kappa, count = exhaustive_min_kappa(spec)
    (GOLDEN / "search_oracle.json").write_text(
        json.dumps({"spec": selftest.SEARCH_SPEC, "kappa_min": kappa, "optimal_sets": count}, indent=1) + "\n"
    )

    scan = ExperimentSpec.from_json(selftest.SCAN_SPEC)
    scan_rows, _ = run_scaling(scan)
    for r in scan_rows:
        config = grid(r["size"], scan.frame)
        if naive_census(config) != (r["kappa"], r["Q"]):
            raise SystemExit(f"census oracle disagrees at m = {r['size']}")
        if r["I"] is not None and r["kappa"] <= 15:
            if len(witness_incidences(scan.frame, build_census(config).D)) != r["I"]:
                raise SystemExit(f"incidence oracle disagrees at m = {r['size']}")
    (GOLDEN / "scan_grid.csv").write_text(rows_to_csv(scan_rows))
    print("golden files written to", GOLDEN)


if __name__ == "__main__":
    main()
