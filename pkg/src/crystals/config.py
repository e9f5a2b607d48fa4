"""Runtime settings for the command-line harness.

The config file is a flat ``key = value`` text format; blank lines and
``#`` comments are ignored.  Recognized keys:

    cache_dir = /path/to/cache
    types     = A1,A2,B2,C2,A3
    max_coeff = 2
    jobs      = 1

Precedence, highest first: command-line flags, the CRYSTALS_CACHE_DIR
environment variable (cache path only), the config file, built-in defaults.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputError

DEFAULT_TYPES = ["A1", "A2", "B2", "C2", "A3"]
ENV_CACHE = "CRYSTALS_CACHE_DIR"


@dataclass
class Settings:
    cache_dir: Path | None = None
    types: list[str] = field(default_factory=lambda: list(DEFAULT_TYPES))
    max_coeff: int | None = None
    jobs: int = 1


def parse_config_text(text: str) -> dict:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"config line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key] = value
    return out


def load_settings(path: str | os.PathLike | None = None) -> Settings:
    settings = Settings()
    if path is None:
        candidate = Path("crystals.cfg")
        path = candidate if candidate.exists() else None
    if path is not None:
        data = parse_config_text(Path(path).read_text(encoding="utf-8"))
        unknown = set(data) - {"cache_dir", "types", "max_coeff", "jobs"}
        if unknown:
            raise InputError(f"unknown config keys: {sorted(unknown)}")
        if "cache_dir" in data:
            settings.cache_dir = Path(data["cache_dir"]).expanduser()
        if "types" in data:
            settings.types = [t.strip() for t in data["types"].split(",") if t.strip()]
        if "max_coeff" in data:
            settings.max_coeff = int(data["max_coeff"])
        if "jobs" in data:
            settings.jobs = int(data["jobs"])
    env_cache = os.environ.get(ENV_CACHE)
    if env_cache:
        settings.cache_dir = Path(env_cache).expanduser()
    return settings
