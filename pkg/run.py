#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
fermatmoduli — command-line runner

Every subcommand prints one report to stdout (text or JSON); logs go to
stderr. Run settings come from config.yaml (section ``run:``), then the
GFC_EPSILON environment variable (.env honoured), then the flags below.

Usage examples:
    python run.py genus --k 2 --n 5
    python run.py orbit-types --n 4
    python run.py symmetries --points=inf,0,1,-1,2 --orientation anticonformal
    python run.py symmetries --points-file points.json
    python run.py lift --curve data/hidalgo.json --perm "(1 2)(3 4)(5 6)" --anticonformal
    python run.py classify --curve data/hidalgo.json --output json
    python run.py verify --suite theorem1 --k 5

Exit codes: 0 success, 2 usage or input error, 3 numerical failure,
4 a verified statement did not hold.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, NamedTuple, Optional, Sequence

PROJECT_ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(PROJECT_ROOT))

import pandas as pd

from src.errors import GfcError, NoLift
from src.utils.config import RunConfig, load_run_config
from src.utils.io_utils import dumps
from src.utils.snapshot import save_run_snapshot

logger = logging.getLogger("fermatmoduli.run")

EXIT_OK = 0
EXIT_VIOLATION = 4

SUITES = ("theorem1", "humbert", "hidalgo", "p5", "prime-even")


class CommandResult(NamedTuple):
    payload: Any
    text: str
    code: int = EXIT_OK


def setup_logging(level: str = "WARNING") -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s | %(levelname)s | %(name)s | %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def _table(rows: list[dict]) -> str:
    if not rows:
        return "(none)"
    return pd.DataFrame(rows).to_string(index=False)


# ---------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------

def cmd_genus(args, run: RunConfig) -> CommandResult:
    from src.curve.fermat import genus, is_hyperbolic

    g = genus(args.k, args.n)
    payload = {"k": args.k, "n": args.n, "genus": g, "hyperbolic": is_hyperbolic(args.k, args.n)}
    return CommandResult(payload, str(g))


def cmd_orbit_types(args, run: RunConfig) -> CommandResult:
    from src.orbifold.orbit_types import orbit_type_solutions

    sols = orbit_type_solutions(args.n, args.max_n)
    rows = [s.as_row() for s in sols]
    return CommandResult({"n": args.n, "max_N": args.max_n or args.n + 1, "solutions": rows}, _table(rows))


def cmd_symmetries(args, run: RunConfig) -> CommandResult:
    from src.orbifold.configuration import ConeConfiguration, orbit_profile, symmetries
    from src.sphere.literals import split_literal_list
    from src.sphere.mobius import order
    from src.utils.io_utils import (
        load_configuration,
        parse_sphere_point,
        points_to_list,
        profile_to_dict,
        symmetry_to_dict,
    )

    if args.points_file:
        cfg = load_configuration(args.points_file, run.epsilon)
    else:
        pts = tuple(parse_sphere_point(s) for s in split_literal_list(args.points))
        cfg = ConeConfiguration(pts, run.epsilon)
    cap = min(run.order_cap, cfg.default_order_cap())
    entries, rows = [], []
    for s in symmetries(cfg, args.orientation, run.epsilon):
        q = order(s.map, cap, run.epsilon)
        entry = symmetry_to_dict(s, q)
        row = {"orientation": entry["orientation"], "cycles": entry["cycles"], "order": q,
               "N": "-", "A": "-", "B": "-", "C": "-"}
        if s.anticonformal:
            prof = orbit_profile(s, cfg, cap, run.epsilon)
            entry["profile"] = profile_to_dict(prof)
            row.update({"N": prof.N, "A": prof.A, "B": prof.B, "C": prof.C})
        entries.append(entry)
        rows.append(row)
    payload = {"points": points_to_list(cfg.points), "orientation": args.orientation, "symmetries": entries}
    return CommandResult(payload, _table(rows))


def cmd_lift(args, run: RunConfig) -> CommandResult:
    from src.curve.fermat import cone_points
    from src.lift.automorphism import auto_order, descend_to_involution, is_involution
    from src.lift.lifting import enumerate_lifts, is_h_coset
    from src.orbifold.configuration import parse_cycles, symmetries
    from src.sphere.literals import format_complex
    from src.utils.io_utils import automorphism_to_dict, load_curve, symmetry_to_dict

    curve = load_curve(args.curve, run.epsilon)
    perm = parse_cycles(args.perm, curve.size)
    orientation = "anticonformal" if args.anticonformal else "conformal"
    match = [s for s in symmetries(cone_points(curve, run.epsilon), orientation, run.epsilon) if s.perm == perm]
    if not match:
        raise NoLift(f"no {orientation} symmetry of the cone points induces {args.perm}")
    family = enumerate_lifts(curve, match[0], run.lift_cap, run.epsilon)
    lifts, rows = [], []
    for e, a in zip(family.exponents, family.lifts):
        q = auto_order(a, run.order_cap, run.epsilon)
        # order 2s with s odd: a^s is an anticonformal involution
        descends = descend_to_involution(a, run.order_cap, run.epsilon) is not None
        lifts.append({"exponents": list(e), "order": q, "odd_descent": descends, **automorphism_to_dict(a)})
        rows.append({"exponents": " ".join(map(str, e)), "order": q,
                     "involution": is_involution(a, run.epsilon), "odd_descent": descends})
    tk = [format_complex(z) for z in family.tk]
    coset = is_h_coset(curve, family, run.epsilon, run.lift_cap)
    payload = {"symmetry": symmetry_to_dict(family.symmetry), "tk": tk, "count": len(lifts),
               "h_coset": coset, "lifts": lifts}
    text = f"t = ({', '.join(tk)})\n{len(lifts)} lifts, H-coset: {coset}\n{_table(rows)}"
    return CommandResult(payload, text)


def _classification_text(result) -> str:
    ex = result.exhaustion
    lines = [f"verdict: {result.verdict.value}", f"assumption: {result.assumption.value}"]
    if result.witness is not None:
        from src.orbifold.configuration import format_cycles
        from src.sphere.literals import format_complex

        w = result.witness
        kind = "anticonformal" if w.anticonformal else "conformal"
        lines.append(f"witness: perm {format_cycles(w.perm)}, {kind}, order {result.witness_order}")
        lines.append("  c = [" + ", ".join(format_complex(z) for z in w.c) + "]")
    lines.append(
        f"exhaustion: {ex.antisymmetries} anticonformal symmetries, {ex.lifts_scanned} lifts scanned "
        f"({ex.lifts_excluded_by_permutation} excluded by permutation), "
        f"{ex.involutions_found} involutions")
    return "\n".join(lines)


def cmd_classify(args, run: RunConfig) -> CommandResult:
    from src.moduli.classify import classify
    from src.utils.io_utils import classification_to_dict, load_curve

    curve = load_curve(args.curve, run.epsilon)
    result = classify(curve, run.epsilon, run.order_cap, run.lift_cap, run.workers, run.progress,
                      run.automorphism_samples, run.seed)
    return CommandResult(classification_to_dict(result), _classification_text(result))


def _suite_tags(suite: str, k: Optional[int], n: Optional[int]) -> list:
    from src.moduli import theorems as th

    if suite == "theorem1":
        return [th.Theorem1(k=k or 3)]
    if suite == "humbert":
        return th.humbert_rows()
    if suite == "hidalgo":
        return [th.Hidalgo(k=k or 2)]
    if suite == "p5":
        return [th.P3OrP5(p=k or 3, n=3 if case == "N4" else 5, case=case) for case in th.P5_CASES]
    return [th.PrimeEven(p=k or 3, n=n or 4)]


def cmd_verify(args, run: RunConfig) -> CommandResult:
    from src.moduli.theorems import verify_theorem
    from src.utils.io_utils import theorem_report_to_dict

    reports = [verify_theorem(tag, run.epsilon, run.lift_cap, run.workers, run.automorphism_samples)
               for tag in _suite_tags(args.suite, args.k, args.n)]
    rows = []
    for rep in reports:
        for case in rep.cases:
            failed = [name for name, ok in case.checks.items() if not ok]
            rows.append({"tag": rep.tag, "case": case.label,
                         "verdict": case.classification.verdict.value,
                         "conforms": case.conforms, "failed": ",".join(failed) or "-"})
    conforms = all(rep.conforms for rep in reports)
    payload = {"suite": args.suite, "conforms": conforms,
               "reports": [theorem_report_to_dict(rep) for rep in reports]}
    return CommandResult(payload, _table(rows), EXIT_OK if conforms else EXIT_VIOLATION)


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------

def _common_flags() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--config", default=None, help="YAML config (default: ./config.yaml if present)")
    c.add_argument("--epsilon", type=float, default=None)
    c.add_argument("--order-cap", type=int, default=None, dest="order_cap")
    c.add_argument("--lift-cap", type=int, default=None, dest="lift_cap")
    c.add_argument("--seed", type=int, default=None)
    c.add_argument("--workers", type=int, default=None)
    c.add_argument("--progress", action="store_true", default=None)
    c.add_argument("--output", choices=["text", "json"], default=None)
    c.add_argument("--log-level", default="WARNING", dest="log_level", help="Logging level (stderr)")
    c.add_argument("--snapshot-dir", default=None, dest="snapshot_dir",
                   help="Write run_snapshot.json (config, git commit, versions) here")
    return c


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    p = argparse.ArgumentParser(prog="run.py", description="Generalized Fermat curves: symmetries and fields of moduli.")
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("genus", parents=[common], help="Genus of type (k, n)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_genus)

    sp = sub.add_parser("orbit-types", parents=[common], help="Solve n+1 = 2NA + NB + 2C")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-N", type=int, default=None, dest="max_n", help="Largest N (default n+1)")
    sp.set_defaults(func=cmd_orbit_types)

    sp = sub.add_parser("symmetries", parents=[common], help="Extended Möbius symmetries of cone points")
    where = sp.add_mutually_exclusive_group(required=True)
    where.add_argument("--points", help="Comma separated literals, e.g. --points=inf,0,1,-6")
    where.add_argument("--points-file", dest="points_file", help='JSON file {"points": [...]}')
    sp.add_argument("--orientation", choices=["conformal", "anticonformal", "both"], default="both")
    sp.set_defaults(func=cmd_symmetries)

    sp = sub.add_parser("lift", parents=[common], help="Lift a cone-point symmetry to the curve")
    sp.add_argument("--curve", required=True, help="Curve JSON file")
    sp.add_argument("--perm", required=True, help='Cycle notation, e.g. "(1 2)(3 4)"')
    sp.add_argument("--anticonformal", action="store_true")
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("classify", parents=[common], help="Field of moduli and reality")
    sp.add_argument("--curve", required=True, help="Curve JSON file")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", parents=[common], help="Check a theorem on its prescribed configurations")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--k", type=int, default=None, help="k for theorem1/hidalgo, p for p5/prime-even")
    sp.add_argument("--n", type=int, default=None, help="n for prime-even (even, default 4)")
    sp.set_defaults(func=cmd_verify)
    return p


def _run_config(args) -> RunConfig:
    config_path = args.config or (PROJECT_ROOT / "config.yaml")
    overrides = {
        "epsilon": args.epsilon,
        "order_cap": args.order_cap,
        "lift_cap": args.lift_cap,
        "seed": args.seed,
        "workers": args.workers,
        "progress": args.progress,
        "output": args.output,
    }
    return load_run_config(config_path, overrides)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    setup_logging(args.log_level)
    try:
        run = _run_config(args)
        if args.snapshot_dir:
            save_run_snapshot(run, Path(args.snapshot_dir), args.cmd,
                              list(argv) if argv is not None else sys.argv[1:])
        result = args.func(args, run)
    except GfcError as e:
        logger.error("%s: %s", type(e).__name__, e)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    if run.output == "json":
        print(dumps(result.payload))
    else:
        print(result.text)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
