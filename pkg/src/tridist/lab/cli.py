"""Command line: every subcommand prints JSON (or writes it to --out).

Exit status is 0 when every internal check passes, 1 when a check fails
and 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..census import build_census, census_report
from ..curvefam import (
    CurveError,
    build_curve,
    coincidence_groups,
    collinear_diagnostics,
    intersection_guard,
    known_shared_components,
    overlap_audit,
    recovery_report,
)
from ..errors import InvariantViolation
from ..exactmath import ExactMathError, parse, to_str
from ..frame import FrameError, load_configuration
from ..incidence import DEFAULT_MAX_KAPPA, build_and_count, multiplicity_report, verify_chain
from ..zfcore import ZfError, ZfInstance, count_zeros, incidence_lower_bound
from .scaling import ExperimentSpec, rows_to_csv, run_scaling
from .search import SearchSpec, search_min_kappa
from .selftest import selftest

NAMES = ("Y", "U")
GUARD_KAPPA = 4


def _label(lab) -> list[str]:
    return [to_str(v) for v in lab]


def _read_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _config(args, *, any_frame: bool = False):
    config, scale = load_configuration(_read_json(args.config))
    if config.frame.collinear and not (any_frame or args.collinear_diagnostics):
        raise FrameError("collinear frame: pass --collinear-diagnostics to proceed")
    return config, scale


def _kappa_guard(census, limit):
    if limit is not None and census.kappa > limit:
        raise ValueError(f"kappa = {census.kappa} exceeds --max-kappa {limit}")


def cmd_analyze(args) -> dict:
    config, scale = _config(args, any_frame=True)
    census = build_census(config)
    rep = census_report(census)
    return {
        "frame": config.frame.to_json(),
        "flags": config.frame.flags(),
        "scale": to_str(scale),
        **rep,
        "ok": rep["lower_bound_ok"] and rep["sanity_bound_ok"],
    }


def cmd_curves(args) -> dict:
    config, _ = _config(args)
    census = build_census(config)
    _kappa_guard(census, args.max_kappa)
    frame = config.frame
    curves = [build_curve(frame, X, V) for X in census.D for V in census.D]
    groups = coincidence_groups(curves)
    group_id = {lab: k for k, g in enumerate(groups) for lab in g}
    shared = overlap_audit(curves)
    known = set(known_shared_components(frame))
    partners: dict = {c.label: set() for c in curves}
    for s in shared:
        for lab in s.labels:
            partners[lab].update(x for x in s.labels if x != lab)
    guard: dict = {c.label: [] for c in curves}
    if args.guard or census.kappa <= GUARD_KAPPA:
        for i, c1 in enumerate(curves):
            for c2 in curves[i + 1:]:
                deg, overlap = intersection_guard(c1, c2)
                for me, other in ((c1, c2), (c2, c1)):
                    guard[me.label].append({"with": _label(other.label), "degree": deg, "overlap": overlap})

    rows = []
    for c in curves:
        row = {
            "label": _label(c.label),
            "degrees": list(c.canonical.degrees),
            "H": c.canonical.format(NAMES),
            "grid": [[to_str(v) for v in r] for r in c.canonical.grid],
            "group": group_id[c.label],
            "overlap_partners": [_label(x) for x in sorted(partners[c.label])],
        }
        if guard[c.label]:
            row["guard"] = guard[c.label]
        if frame.collinear:
            row["line"] = collinear_diagnostics(frame, c.X, c.V).to_json()
        rows.append(row)
    sizes = [len(g) for g in groups] + [len(s.labels) for s in shared if s.factor not in known]
    return {
        "frame": frame.to_json(),
        "flags": frame.flags(),
        "kappa": census.kappa,
        "curves": rows,
        "max_group_size": max((len(g) for g in groups), default=0),
        "shared_factors": [
            {"factor": s.factor.format(NAMES), "labels": [_label(x) for x in s.labels], "known_exception": s.factor in known}
            for s in shared
        ],
        "ok": frame.collinear or max(sizes, default=0) <= 4,
    }


def cmd_incidence(args) -> dict:
    config, _ = _config(args)
    inst = build_and_count(
        config,
        collinear_diagnostics=args.collinear_diagnostics,
        max_kappa=args.max_kappa,
        workers=args.workers,
    )
    chain = verify_chain(inst, strict=False)
    mult = multiplicity_report(inst, strict=False)
    return {
        "kappa": inst.kappa,
        "I": inst.I,
        "Q": chain["Q"],
        "lower_bound": chain["lower_bound"],
        "chain_checks": chain["chain_checks"],
        "multiplicity_histogram": mult["group_size_histogram"],
        "multiplicity": mult,
        "ratio_I_over_kappa_8_3": chain["ratio_I_over_kappa_8_3"],
        **({"counterexamples": chain["counterexamples"]} if "counterexamples" in chain else {}),
        "ok": chain["ok"] and mult["prop1_ok"],
    }


def cmd_recover(args) -> dict:
    config, _ = _config(args)
    try:
        X, V = (parse(s.strip()) for s in args.curve.split(","))
    except ValueError as exc:
        raise ValueError("--curve expects X,V") from exc
    census = build_census(config)
    rep = recovery_report(build_curve(config.frame, X, V))
    expected_hits = rep["kinds"]["smooth"] if config.frame.a != -1 else None
    ok = rep["max_candidates"] <= 4 and (expected_hits is None or rep["recovered"]["smooth"] == expected_hits)
    return {"frame": config.frame.to_json(), "curve": [to_str(X), to_str(V)], "label_in_D": X in census.D and V in census.D, **rep, "ok": ok}


def cmd_zf(args) -> dict:
    inst = ZfInstance.from_json(_read_json(args.file))
    M, fibers = count_zeros(inst)
    rep = incidence_lower_bound(inst, strict=False)
    return {**rep, "M": M, "fibers": {to_str(c): [[to_str(a), to_str(b)] for a, b in v] for c, v in fibers.items()}}


def cmd_scan(args) -> dict:
    data = _read_json(args.spec)
    if args.collinear_diagnostics:
        data["collinear_diagnostics"] = True
    if args.workers:
        data["workers"] = args.workers
    spec = ExperimentSpec.from_json(data)
    rows, slope = run_scaling(spec)
    text = rows_to_csv(rows)
    csv_path = args.csv or spec.outputs.get("csv") or (str(Path(args.out).with_suffix(".csv")) if args.out else None)
    out = {"family": spec.family, "frame": spec.frame.to_json(), "seed": spec.seed, "rows": rows, "loglog_slope_kappa_vs_n": slope, "ok": True}
    if csv_path:
        Path(csv_path).write_text(text)
        out["csv"] = csv_path
    else:
        out["csv_text"] = text
    return out


def cmd_search(args) -> dict:
    spec = SearchSpec.from_json(_read_json(args.spec))
    config, kappa, trace = search_min_kappa(spec)
    return {"n": spec.n, "m": spec.m, "seed": spec.seed, "kappa_best": kappa, "configuration": config.to_json(), "trace": trace, "ok": True}


def cmd_selftest(args) -> dict:
    return selftest(args.golden, workers=args.workers or 1)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tridist", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--out", help="write the JSON report here instead of stdout")
        sp.add_argument("--collinear-diagnostics", action="store_true", help="allow b = 0 frames")
        sp.add_argument("--workers", type=int, default=1)
        sp.set_defaults(func=func)
        return sp

    add("analyze", cmd_analyze, "distance census").add_argument("config")
    sp = add("curves", cmd_curves, "curve family, coincidences and shared factors")
    sp.add_argument("config")
    sp.add_argument("--guard", action="store_true", help="Bézout guard for every pair (slow for large kappa)")
    sp.add_argument("--max-kappa", type=int, default=DEFAULT_MAX_KAPPA)
    sp = add("incidence", cmd_incidence, "incidence count and chain checks")
    sp.add_argument("config")
    sp.add_argument("--max-kappa", type=int, default=DEFAULT_MAX_KAPPA)
    sp = add("recover", cmd_recover, "critical points and label recovery for one curve")
    sp.add_argument("config")
    sp.add_argument("--curve", required=True, help="X,V")
    add("zf", cmd_zf, "zero count and incidence bound for F on A×B×C").add_argument("file")
    sp = add("scan", cmd_scan, "scaling experiment")
    sp.add_argument("spec")
    sp.add_argument("--csv", help="CSV output path")
    add("search", cmd_search, "annealing search for small kappa").add_argument("spec")
    add("selftest", cmd_selftest, "invariant suite and golden files").add_argument("--golden", help="golden directory")
    return p


def _emit(report: dict, out: str | None):
    text = json.dumps(report, indent=2, default=str) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_kappa", None) is not None and args.max_kappa <= 0:
        args.max_kappa = None
    try:
        report = args.func(args)
    except InvariantViolation as exc:
        _emit({"ok": False, "error": str(exc), "details": exc.details}, args.out)
        return 1
    except (FrameError, ZfError, CurveError, ExactMathError, ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"tridist {args.command}: {exc}\n")
        return 2
    _emit(report, args.out)
    return 0 if report.get("ok", True) else 1


if __name__ == "__main__":
    sys.exit(main())
