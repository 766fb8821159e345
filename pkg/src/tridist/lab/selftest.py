"""Fixed-seed invariant suite and golden-file regression."""

from __future__ import annotations

import difflib
import json
import random
from fractions import Fraction
from importlib import resources
from pathlib import Path

from ..census import build_census, enumerate_equal_pairs
from ..curvefam import (
    build_curve,
    dual_membership,
    membership,
    reconstruct_witnesses,
    recovery_report,
)
from ..errors import InvariantViolation
from ..exactmath import parse, to_str
from ..frame import AnchorFrame, Configuration
from ..incidence import build_and_count, verify_chain
from ..zfcore import ZfInstance, incidence_lower_bound
from .generators import random_frame, random_rational
from .scaling import ExperimentSpec, rows_to_csv, run_scaling
from .search import SearchSpec, search_min_kappa

RECOVERY_SUITE = (
    ((0, 1), (1, 1)),
    ((0, 1), (1, 5)),
    ((Fraction(1, 3), 2), (3, 7)),
    ((Fraction(-1, 2), Fraction(3, 2)), (2, 5)),
    ((2, 1), (4, 9)),
    ((-1, 1), (3, 5)),
    ((Fraction(1, 3), 2), (5, 2)),
    ((1, 1), (2, 3)),
    ((Fraction(2, 5), 1), (4, 4)),
    ((3, 2), (1, 6)),
)
MICRO_INSTANCES = (((0, 0),), ((1, 1), (-1, 1)))
SEARCH_SPEC = {"n": 4, "m": 3, "seed": 42, "steps": 4000}
SCAN_SPEC = {"family": "grid", "sizes": list(range(4, 21)), "frame": ["0", "1"], "seed": 0, "max_kappa": 25}
ZF_EXAMPLE = {"monomials": [[1, 0, 0, "1"], [0, 1, 0, "1"], [0, 0, 1, "-1"]], "A": [1, 2], "B": [1, 2], "C": [2, 3, 4]}


def default_golden_dir() -> Path:
    return Path(str(resources.files("tridist") / "golden"))


def _load(golden: Path, name: str):
    return json.loads((golden / name).read_text())


def _diff(expected: str, actual: str, name: str) -> str:
    return "".join(difflib.unified_diff(
        expected.splitlines(keepends=True), actual.splitlines(keepends=True), f"golden/{name}", "regenerated"
    ))


def check_recovery(golden: Path) -> dict:
    bad = []
    for entry in _load(golden, "recovery_suite.json"):
        frame = AnchorFrame(*(parse(c) for c in entry["frame"]))
        X, V = (parse(c) for c in entry["curve"])
        rep = recovery_report(build_curve(frame, X, V))
        got = {k: rep[k] for k in ("critical_points", "kinds", "recovered")}
        want = {k: entry[k] for k in got}
        if got != want or rep["max_candidates"] > 4:
            bad.append({"frame": entry["frame"], "curve": entry["curve"], "expected": want, "got": got})
    return {"ok": not bad, "mismatches": bad}


def check_incidence(golden: Path, workers: int = 1) -> dict:
    bad = []
    for entry in _load(golden, "incidence_micro.json"):
        config = Configuration(AnchorFrame(*(parse(c) for c in entry["frame"])), [[parse(c) for c in p] for p in entry["points"]])
        inst = build_and_count(config, workers=workers)
        quads = [[to_str(v) for v in t] for t in inst.incident_quadruples]
        if inst.I != entry["I"] or quads != entry["quadruples"]:
            bad.append({"points": entry["points"], "expected": entry["I"], "got": inst.I})
    return {"ok": not bad, "mismatches": bad}


def check_search(golden: Path) -> dict:
    want = _load(golden, "search_oracle.json")
    _, kappa, _ = search_min_kappa(SearchSpec.from_json(want["spec"]))
    return {"ok": kappa == want["kappa_min"], "expected": want["kappa_min"], "got": kappa}


def check_scan(golden: Path, workers: int = 1) -> dict:
    rows, slope = run_scaling(ExperimentSpec.from_json({**SCAN_SPEC, "workers": workers}))
    text = rows_to_csv(rows)
    want = (golden / "scan_grid.csv").read_text()
    out = {"ok": text == want, "slope": slope}
    if text != want:
        out["diff"] = _diff(want, text, "scan_grid.csv")
    return out


def check_invariants(seed: int = 0) -> dict:
    """Duality, witnesses, the incidence chain and the zero-count chain at fixed seeds."""
    rng = random.Random(seed)
    failures = []
    for _ in range(60):
        frame = random_frame(rng)
        X, V, Y, U = (Fraction(rng.randint(0, 40), rng.randint(1, 3)) for _ in range(4))
        if membership(build_curve(frame, X, V), Y, U) != dual_membership(frame, Y, U, X, V):
            failures.append({"check": "duality", "frame": frame.to_json(), "quad": [to_str(v) for v in (X, Y, U, V)]})
    for _ in range(8):
        frame = random_frame(rng)
        config = random_rational(rng.randint(1, 5), frame, rng)
        census = build_census(config)
        if census.n > 2 * census.kappa**2:
            failures.append({"check": "sanity", "config": config.to_json()})
        for (i, j), quad in enumerate_equal_pairs(census):
            if len(reconstruct_witnesses(frame, quad)) > 4:
                failures.append({"check": "witnesses", "quad": [to_str(v) for v in quad]})
        try:
            verify_chain(build_and_count(config))
        except InvariantViolation as exc:
            failures.append({"check": "chain", **exc.details})
    try:
        incidence_lower_bound(ZfInstance.from_json(ZF_EXAMPLE))
    except InvariantViolation as exc:
        failures.append({"check": "zf", **exc.details})
    return {"ok": not failures, "failures": failures}


def selftest(golden_dir: Path | str | None = None, workers: int = 1) -> dict:
    golden = Path(golden_dir) if golden_dir is not None else default_golden_dir()
    checks = {
        "invariants": check_invariants(),
        "recovery_golden": check_recovery(golden),
        "incidence_golden": check_incidence(golden, workers),
        "search_golden": check_search(golden),
        "scan_golden": check_scan(golden, workers),
    }
    return {"ok": all(c["ok"] for c in checks.values()), "checks": checks}
