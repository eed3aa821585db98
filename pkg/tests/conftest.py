"""Pytest configuration: make the project importable as `src.*`, shared curves."""
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.curve.fermat import FermatCurve, build  # noqa: E402
from src.moduli.theorems import hidalgo_curve  # noqa: E402


@pytest.fixture
def real_curve() -> FermatCurve:
    """Type (2,4) over the real points inf, 0, 1, -1, 2."""
    return build(2, [-1.0, 2.0])


@pytest.fixture
def generic_curve() -> FermatCurve:
    """Type (2,4) over cone points with no anticonformal symmetry."""
    return build(2, [0.3 + 1.7j, -2.2 + 0.4j])


@pytest.fixture
def hidalgo() -> FermatCurve:
    return hidalgo_curve(2)


@pytest.fixture
def curve_file(tmp_path):
    def write(k, lambdas) -> Path:
        import json

        path = tmp_path / "curve.json"
        path.write_text(json.dumps({"k": k, "lambdas": lambdas}), encoding="utf-8")
        return path
    return write
