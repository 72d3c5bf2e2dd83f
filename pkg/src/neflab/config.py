"""Runtime knobs, loadable from the environment and a TOML/JSON file."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from pathlib import Path

try:
    import tomllib  # py >= 3.11
except ModuleNotFoundError:  # pragma: no cover - depends on interpreter
    import tomli as tomllib

PRECISION_ENV_VAR = "NEFLAB_PRECISION"


@dataclass(frozen=True)
class NeflabConfig:
    """Tuning parameters that never change verdict soundness.

    family_samples: how many instances each continuous family contributes to
        the conic-combination search pool (denser = more complete, slower).
    sqrt_denominator: denominator of the rational over-approximation used for
        irrational symmetric thresholds like 1 + sqrt(g+1).  Overridable via
        the NEFLAB_PRECISION environment variable.
    """

    family_samples: int = 8
    sqrt_denominator: int = 10**6

    def __post_init__(self):
        if self.family_samples < 1:
            raise ValueError("family_samples must be >= 1")
        if self.sqrt_denominator < 1:
            raise ValueError("sqrt_denominator must be >= 1")


DEFAULT_CONFIG = NeflabConfig()


def load_config(path: str | os.PathLike | None = None,
                env: dict | None = None) -> NeflabConfig:
    """Build a config from defaults, an optional TOML/JSON file, and the env.

    The file may set ``family_samples`` and ``sqrt_denominator`` (top level or
    under a ``[neflab]`` table).  NEFLAB_PRECISION, when set, wins over both.
    """
    env = os.environ if env is None else env
    values: dict = {}
    if path is not None:
        raw = Path(path).read_bytes()
        if str(path).endswith(".json"):
            data = json.loads(raw.decode("utf-8"))
        else:
            data = tomllib.loads(raw.decode("utf-8"))
        if isinstance(data.get("neflab"), dict):
            data = data["neflab"]
        for key in ("family_samples", "sqrt_denominator"):
            if key in data:
                values[key] = int(data[key])
    cfg = replace(DEFAULT_CONFIG, **values) if values else DEFAULT_CONFIG
    precision = env.get(PRECISION_ENV_VAR)
    if precision:
        try:
            cfg = replace(cfg, sqrt_denominator=int(precision))
        except ValueError as exc:
            raise ValueError(f"{PRECISION_ENV_VAR} must be a positive integer, got {precision!r}") from exc
    return cfg
