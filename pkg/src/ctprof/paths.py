"""Locate bundled data (fixtures, rulesets, designs, static assets)."""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path


def data_root() -> Path:
    return Path(resources.files("ctprof"))  # type: ignore[arg-type]


def fixtures_dir() -> Path:
    return data_root() / "fixtures"


def default_ruleset_path() -> Path:
    return data_root() / "rulesets" / "fade_default.rules.json"


def static_dir() -> Path:
    override = os.environ.get("CTPROF_STATIC")
    if override:
        return Path(override)
    return data_root() / "static"


def resolve_input_path(arg: str) -> Path:
    """Resolve a CLI path argument.

    Relative paths are tried against the working directory first, then
    against the packaged data root, so the shipped corpus is addressable as
    e.g. ``fixtures/cat.ctp.json`` from anywhere.
    """
    path = Path(arg)
    if path.exists() or path.is_absolute():
        return path
    packaged = data_root() / arg
    if packaged.exists():
        return packaged
    return path
