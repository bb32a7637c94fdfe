"""Runtime settings with flag > environment > config file > default precedence."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .betti import DEFAULT_CLOSURE_CAP
from .closure import DEFAULT_ENUM_CAP
from .errors import InputError

ENV_CACHE_DIR = "IDEALPOWERS_CACHE_DIR"
ENV_MAX_CLOSURE = "IDEALPOWERS_MAX_CLOSURE"
ENV_MAX_ENUM = "IDEALPOWERS_MAX_ENUM"
ENV_WORKERS = "IDEALPOWERS_WORKERS"
ENV_CONFIG = "IDEALPOWERS_CONFIG"


@dataclass
class Settings:
    cache_dir: str | None = None
    max_closure: int = DEFAULT_CLOSURE_CAP
    max_enum: int = DEFAULT_ENUM_CAP
    workers: int = 1
    audit_rate: float = 0.05
    cross_check: bool = False


def resolve_settings(
    *,
    cache_dir: str | None = None,
    max_closure: int | None = None,
    max_enum: int | None = None,
    workers: int | None = None,
    config_path: str | None = None,
    env: dict[str, str] | None = None,
) -> Settings:
    """Merge explicit flags, environment variables and the config file."""
    env = dict(os.environ if env is None else env)
    settings = Settings()

    path = config_path or env.get(ENV_CONFIG)
    if path:
        try:
            data = json.loads(Path(path).read_text())
        except OSError as exc:
            raise InputError(f"cannot read config file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"config file {path} is not valid JSON: {exc}") from exc
        for key, caster in (
            ("cache_dir", str),
            ("max_closure", int),
            ("max_enum", int),
            ("workers", int),
            ("audit_rate", float),
            ("cross_check", bool),
        ):
            if key in data:
                try:
                    setattr(settings, key, caster(data[key]))
                except (TypeError, ValueError) as exc:
                    raise InputError(f"config key {key} has a bad value: {data[key]!r}") from exc

    if ENV_CACHE_DIR in env:
        settings.cache_dir = env[ENV_CACHE_DIR]
    for name, attr in ((ENV_MAX_CLOSURE, "max_closure"), (ENV_MAX_ENUM, "max_enum"), (ENV_WORKERS, "workers")):
        if name in env:
            try:
                setattr(settings, attr, int(env[name]))
            except ValueError as exc:
                raise InputError(f"{name} must be an integer, got {env[name]!r}") from exc

    if cache_dir is not None:
        settings.cache_dir = cache_dir
    if max_closure is not None:
        settings.max_closure = max_closure
    if max_enum is not None:
        settings.max_enum = max_enum
    if workers is not None:
        settings.workers = workers

    if settings.max_closure < 1 or settings.max_enum < 1 or settings.workers < 1:
        raise InputError("caps and worker count must be positive")
    return settings
