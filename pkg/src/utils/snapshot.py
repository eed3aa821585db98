# src/utils/snapshot.py
"""
Run provenance: the command, effective RunConfig, Git commit and library
versions, written next to (never inside) the reports so that reports stay
byte-deterministic.
"""

import platform
import subprocess
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Sequence

import numpy as np
import scipy

from .config import RunConfig
from .io_utils import write_json


def git_short_hash() -> str:
    """Short SHA of HEAD, or 'unknown' outside a Git checkout."""
    try:
        repo_root = Path(__file__).parent.parent.parent
        return subprocess.check_output(
            ["git", "rev-parse", "--short", "HEAD"],
            cwd=str(repo_root),
            stderr=subprocess.DEVNULL,
            text=True,
        ).strip()
    except (subprocess.SubprocessError, FileNotFoundError):
        return "unknown"


def get_versions() -> Dict[str, str]:
    return {
        "python": sys.version,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "platform": platform.platform(),
    }


def save_run_snapshot(run: RunConfig, run_dir: Path, command: str,
                      argv: Sequence[str] = ()) -> Path:
    """Write run_dir/run_snapshot.json and return its path."""
    snapshot: Dict[str, Any] = {
        "command": command,
        "argv": list(argv),
        "timestamp": datetime.now().isoformat(),
        "git_commit": git_short_hash(),
        "run_config": run.as_dict(),
        "versions": get_versions(),
        "cwd": str(Path.cwd()),
    }
    return write_json(snapshot, Path(run_dir) / "run_snapshot.json")
