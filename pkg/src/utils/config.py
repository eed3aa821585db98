from __future__ import annotations
import os
import yaml
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from dotenv import load_dotenv

from src.errors import InvalidRunConfig

ORDER_CAP_CEILING = 40320
EPSILON_ENV = "GFC_EPSILON"
OUTPUT_MODES = ("text", "json")


def load_config(path: str | Path) -> Dict[str, Any]:
    """Read a YAML config. A missing file yields an empty dict (defaults apply)."""
    path = Path(path)
    if not path.exists():
        return {}
    with path.open("r", encoding="utf-8") as f:
        data = yaml.safe_load(f)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise InvalidRunConfig(f"{path}: top level must be a mapping")
    return data


def cfg_get(cfg: Dict[str, Any], key_path: str, default: Any = None) -> Any:
    cur: Any = cfg
    for part in key_path.split("."):
        if not isinstance(cur, dict) or part not in cur:
            return default
        cur = cur[part]
    return cur


@dataclass(frozen=True)
class RunConfig:
    epsilon: float = 1e-9
    order_cap: int = ORDER_CAP_CEILING
    lift_cap: int = 10**6
    seed: int = 0
    output: str = "text"
    workers: int = 1
    progress: bool = False
    automorphism_samples: int = 20

    def __post_init__(self):
        if not (0.0 < self.epsilon < 1e-3):
            raise InvalidRunConfig(f"epsilon must lie in (0, 1e-3), got {self.epsilon}")
        if self.order_cap < 1 or self.lift_cap < 1:
            raise InvalidRunConfig(
                f"caps must be >= 1, got order_cap={self.order_cap} lift_cap={self.lift_cap}")
        if self.output not in OUTPUT_MODES:
            raise InvalidRunConfig(f"output must be one of {OUTPUT_MODES}, got {self.output!r}")
        if self.workers < 1:
            raise InvalidRunConfig(f"workers must be >= 1, got {self.workers}")
        if self.automorphism_samples < 0:
            raise InvalidRunConfig("automorphism_samples must be >= 0")
        # anything above the ceiling is clipped, not rejected
        object.__setattr__(self, "order_cap", min(int(self.order_cap), ORDER_CAP_CEILING))

    @staticmethod
    def from_config(cfg: Dict[str, Any],
                    overrides: Optional[Mapping[str, Any]] = None,
                    env: Optional[Mapping[str, str]] = None) -> "RunConfig":
        """YAML ``run:`` section, then $GFC_EPSILON, then explicit overrides (CLI flags).

        ``None`` values in ``overrides`` mean "flag not given".
        """
        env = os.environ if env is None else env
        defaults = RunConfig()
        try:
            values: Dict[str, Any] = {
                "epsilon": float(cfg_get(cfg, "run.epsilon", defaults.epsilon)),
                "order_cap": int(cfg_get(cfg, "run.order_cap", defaults.order_cap)),
                "lift_cap": int(cfg_get(cfg, "run.lift_cap", defaults.lift_cap)),
                "seed": int(cfg_get(cfg, "run.seed", defaults.seed)),
                "output": str(cfg_get(cfg, "run.output", defaults.output)).lower(),
                "workers": int(cfg_get(cfg, "run.workers", defaults.workers)),
                "progress": bool(cfg_get(cfg, "run.progress", defaults.progress)),
                "automorphism_samples": int(
                    cfg_get(cfg, "run.automorphism_samples", defaults.automorphism_samples)),
            }
            if env.get(EPSILON_ENV):
                values["epsilon"] = float(env[EPSILON_ENV])
        except (TypeError, ValueError) as e:
            raise InvalidRunConfig(f"Bad run configuration value: {e}") from e
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = value
        return RunConfig(**values)

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


def load_run_config(path: str | Path | None,
                    overrides: Optional[Mapping[str, Any]] = None,
                    dotenv_path: str | Path | None = None) -> RunConfig:
    """Entry point used by the runner: .env, YAML file, flags."""
    load_dotenv(dotenv_path=dotenv_path, override=False)
    cfg = load_config(path) if path else {}
    return RunConfig.from_config(cfg, overrides)
