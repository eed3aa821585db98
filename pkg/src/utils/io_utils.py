"""JSON file schemas and report serialization.

    points file   {"points": ["inf", "0", "1", "-6", ...]}
    curve file    {"k": 2, "lambdas": ["-6", "-2+1.4142135623730951i", ...]}
    automorphism  {"perm": [2, 1, 4, 3, 6, 5], "c": ["1", ...], "anticonformal": true}

Every complex number goes through the literal grammar; permutations are 1-based.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Iterable, Optional

from src.curve.fermat import FermatCurve, build
from src.errors import InputError, SchemaError
from src.lift.automorphism import CurveAutomorphism
from src.moduli.classify import Exhaustion, ModuliClassification
from src.orbifold.configuration import ConeConfiguration, ConfigSymmetry, format_cycles
from src.orbifold.orbit_types import OrbitProfile
from src.sphere.literals import format_complex, is_infinity_token, parse_complex
from src.sphere.mobius import DEFAULT_EPS, ExtendedMobius, SpherePoint

logger = logging.getLogger(__name__)


def parse_sphere_point(text: str) -> SpherePoint:
    if is_infinity_token(text):
        return SpherePoint.infinity()
    return SpherePoint.from_complex(parse_complex(text))


def format_sphere_point(p: SpherePoint) -> str:
    return "inf" if p.is_infinity else format_complex(p.to_complex())


def read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise InputError(f"File not found: {path}") from e
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: not valid JSON ({e})") from e


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def write_json(obj: Any, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as f:
        f.write(dumps(obj))
    return path


def _literal_list(raw: Any, key: str) -> list[str]:
    if not isinstance(raw, list) or not all(isinstance(x, (str, int, float)) for x in raw):
        raise SchemaError(f"'{key}' must be a list of complex literals")
    return [str(x) for x in raw]


# ---------------------------------------------------------------------
# Input files
# ---------------------------------------------------------------------

def configuration_from_dict(data: Any, eps: float = DEFAULT_EPS) -> ConeConfiguration:
    if not isinstance(data, dict) or "points" not in data:
        raise SchemaError("points file needs a 'points' list")
    pts = [parse_sphere_point(s) for s in _literal_list(data["points"], "points")]
    return ConeConfiguration(tuple(pts), eps)


def load_configuration(path: str | Path, eps: float = DEFAULT_EPS) -> ConeConfiguration:
    return configuration_from_dict(read_json(path), eps)


def curve_from_dict(data: Any, eps: float = DEFAULT_EPS) -> FermatCurve:
    if not isinstance(data, dict) or "k" not in data or "lambdas" not in data:
        raise SchemaError("curve file needs 'k' and 'lambdas'")
    k = data["k"]
    if isinstance(k, bool) or not isinstance(k, int):
        raise SchemaError(f"'k' must be an integer, got {k!r}")
    lambdas = [parse_complex(s) for s in _literal_list(data["lambdas"], "lambdas")]
    return build(k, lambdas, eps)


def load_curve(path: str | Path, eps: float = DEFAULT_EPS) -> FermatCurve:
    return curve_from_dict(read_json(path), eps)


def curve_to_dict(curve: FermatCurve) -> dict:
    return {"k": curve.k, "lambdas": [format_complex(z, clean=False) for z in curve.lambdas]}


# ---------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------

def automorphism_to_dict(a: CurveAutomorphism) -> dict:
    return {
        "perm": [j + 1 for j in a.perm],
        "c": [format_complex(z) for z in a.c],
        "anticonformal": a.anticonformal,
    }


def mobius_to_dict(t: ExtendedMobius) -> dict:
    return {"matrix": [[format_complex(z) for z in row] for row in t.m.tolist()],
            "anticonformal": t.anticonformal}


def symmetry_to_dict(s: ConfigSymmetry, map_order: Optional[int] = None) -> dict:
    out = {
        "orientation": "anticonformal" if s.anticonformal else "conformal",
        "perm": [j + 1 for j in s.perm],
        "cycles": format_cycles(s.perm),
        "map": mobius_to_dict(s.map),
    }
    if map_order is not None:
        out["order"] = map_order
    return out


def profile_to_dict(p: OrbitProfile) -> dict:
    return p.as_row()


def exhaustion_to_dict(e: Exhaustion) -> dict:
    return e.as_dict()


def classification_to_dict(result: ModuliClassification) -> dict:
    out: dict[str, Any] = {"verdict": result.verdict.value}
    out["witness"] = automorphism_to_dict(result.witness) if result.witness is not None else None
    out["witness_order"] = result.witness_order
    out["witness_symmetry"] = format_cycles(result.witness_symmetry.perm) if result.witness_symmetry else None
    out["exhaustion"] = exhaustion_to_dict(result.exhaustion)
    out["assumption"] = result.assumption.value
    out["epsilon"] = result.epsilon
    return out


def points_to_list(points: Iterable[SpherePoint]) -> list[str]:
    return [format_sphere_point(p) for p in points]


def theorem_report_to_dict(report) -> dict:
    params = {k: (format_complex(v) if isinstance(v, complex) else v) for k, v in report.params.items()}
    cases = []
    for case in report.cases:
        cases.append({
            "label": case.label,
            "points": points_to_list(case.points),
            "curve": curve_to_dict(case.curve),
            "expected": case.expected,
            "classification": classification_to_dict(case.classification),
            "profile": profile_to_dict(case.profile) if case.profile is not None else None,
            "case_witness": automorphism_to_dict(case.case_witness) if case.case_witness is not None else None,
            "checks": dict(case.checks),
            "notes": dict(case.notes),
            "conforms": case.conforms,
        })
    return {"tag": report.tag, "params": params, "conforms": report.conforms, "cases": cases}
