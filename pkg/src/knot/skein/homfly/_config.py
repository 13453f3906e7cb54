"""

Run settings for the command line front end and the verification harness.

Values are resolved in this order, later ones winning: built-in defaults,
a YAML settings file, the environment, command-line flags.

"""

import os
from dataclasses import dataclass, fields, replace
from typing import Optional

import yaml

from knot.skein.homfly._logger import get_homfly_logger
from knot.skein.homfly.young import CACHE_ENV

logger = get_homfly_logger()

MIN_BITS = 128

_TYPES = {
    "bits": int,
    "threads": int,
    "max_strands": int,
    "cache_dir": str,
    "tolerance": float,
}


@dataclass(frozen=True)
class Settings:
    """Resolved settings.

    Attributes:
        bits: mpmath precision for root-of-unity evaluation.
        threads: workers used by ``verify``.
        max_strands: largest cable the engine accepts.
        cache_dir: directory for the idempotent file cache.
        tolerance: relative tolerance of the numerical checks.
    """

    bits: int = 192
    threads: int = 2
    max_strands: int = 8
    cache_dir: Optional[str] = None
    tolerance: float = 1e-9

    def __post_init__(self):
        if self.bits < MIN_BITS:
            raise ValueError(
                f"Precision must be at least {MIN_BITS} bits: {self.bits}"
            )
        if self.threads < 1:
            raise ValueError(f"Need at least one thread: {self.threads}")
        if self.max_strands < 1:
            raise ValueError(f"Invalid strand budget: {self.max_strands}")
        if not 0 < self.tolerance < 1:
            raise ValueError(f"Tolerance out of range: {self.tolerance}")

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _read_settings_file(config_path: str) -> dict:
    try:
        with open(config_path, "r", encoding="utf-8") as stream:
            data = yaml.safe_load(stream)
    except FileNotFoundError:
        logger.warning(
            "No settings file at %s, using defaults", config_path
        )
        return {}

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ValueError(f"Settings file {config_path} is not a mapping")

    known = {f.name for f in fields(Settings)}
    for key in sorted(set(data) - known):
        logger.warning("Ignoring unknown setting %s in %s", key, config_path)
    return {k: v for k, v in data.items() if k in known}


def load_settings(config_path: Optional[str] = None, **overrides) -> Settings:
    """Resolve settings from file, environment and explicit overrides.

    Args:
        config_path: optional YAML file with any of the Settings fields.
        overrides: values from the command line; None means not given.

    Raises:
        ValueError: for an invalid value or a malformed settings file.
    """
    values = {}
    if config_path:
        values.update(_read_settings_file(config_path))

    env_cache = os.environ.get(CACHE_ENV)
    if env_cache:
        values["cache_dir"] = env_cache

    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        values = {k: _TYPES[k](v) for k, v in values.items()}
    except (TypeError, ValueError) as err:
        raise ValueError(f"Invalid setting: {err}") from err
    settings = replace(Settings(), **values)
    logger.debug("Settings: %s", settings)
    return settings
