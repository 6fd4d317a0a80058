# selfsim_app/core/settings.py
from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path

APP_NAME = "SelfSimGraph"

logger = logging.getLogger(__name__)


def _config_dir() -> Path:
    # SELFSIM_CONFIG_DIR > %APPDATA%\SelfSimGraph > ~/.SelfSimGraph
    explicit = os.environ.get("SELFSIM_CONFIG_DIR")
    if explicit:
        d = Path(explicit)
    elif os.environ.get("APPDATA"):
        d = Path(os.environ["APPDATA"]) / APP_NAME
    else:
        d = Path.home() / f".{APP_NAME}"
    d.mkdir(parents=True, exist_ok=True)
    return d


def config_path() -> Path:
    return _config_dir() / "config.json"


@dataclass
class AnalysisConfig:
    monoid_identity_bound: int = 6     # B0: total degree of identity candidates
    monoid_bound: int = 24             # B: total degree explored by the congruence BFS
    monoid_state_cap: int = 200_000    # elements visited per congruence search
    circuit_cap: int = 1_000_000       # elementary circuits enumerated before giving up
    jobs: int = 1                      # batch worker threads
    report_format: str = "json"        # json | text

    def with_overrides(self, **overrides: object) -> "AnalysisConfig":
        known = {f.name for f in fields(self)}
        data = asdict(self)
        for k, v in overrides.items():
            if k in known and v is not None:
                data[k] = v
        return AnalysisConfig(**data)


def _from_mapping(data: dict) -> AnalysisConfig:
    cfg = AnalysisConfig()
    for k, v in data.items():
        if hasattr(cfg, k):
            setattr(cfg, k, v)
        else:
            logger.debug("config: ignoring unknown key %r", k)
    return cfg


def load_config(path: str | Path | None = None) -> AnalysisConfig:
    p = Path(path) if path is not None else config_path()
    if not p.exists():
        return AnalysisConfig()
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            raise ValueError("config root must be an object")
        return _from_mapping(data)
    except Exception as exc:  # noqa: BLE001
        logger.warning("config %s unreadable (%s); using defaults", p, exc)
        return AnalysisConfig()


def save_config(cfg: AnalysisConfig, path: str | Path | None = None) -> Path:
    p = Path(path) if path is not None else config_path()
    p.write_text(json.dumps(asdict(cfg), indent=2), encoding="utf-8")
    return p
