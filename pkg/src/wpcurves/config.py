"""Run configuration: defaults, a key=value file, one environment override, then flags."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from typing import Optional

WORKERS_ENV = "WPCURVES_WORKERS"
FORMATS = ("text", "json", "dot")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Config:
    max_group_order_cap: int = 10**7
    max_witness_degree: int = 24
    worker_count: int = os.cpu_count() or 1
    output_format: str = "text"

    def __post_init__(self):
        for name in ("max_group_order_cap", "max_witness_degree", "worker_count"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be an integer >= 1, got {value!r}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"output_format must be one of {FORMATS}, got {self.output_format!r}")


def parse_config_text(text: str) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment.  Unknown keys are errors."""
    known = {f.name: f.type for f in fields(Config)}
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key == "output_format":
            values[key] = value
        else:
            try:
                values[key] = int(value.replace("_", ""))
            except ValueError:
                raise ConfigError(f"line {lineno}: {key} needs an integer, got {value!r}") from None
    return values


def load_config(path: Optional[str] = None, overrides: Optional[dict] = None, environ=None) -> Config:
    environ = os.environ if environ is None else environ
    cfg = Config()
    if path:
        with open(path, encoding="utf-8") as fh:
            cfg = replace(cfg, **parse_config_text(fh.read()))
    if environ.get(WORKERS_ENV):
        try:
            cfg = replace(cfg, worker_count=int(environ[WORKERS_ENV]))
        except ValueError:
            raise ConfigError(f"{WORKERS_ENV} must be an integer") from None
    if overrides:
        cfg = replace(cfg, **{k: v for k, v in overrides.items() if v is not None})
    return cfg
