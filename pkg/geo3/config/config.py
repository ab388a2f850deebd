import copy
import logging
import os
from pathlib import Path
from typing import Any

import yaml

from geo3.errors import ConfigError


LOGGER = logging.getLogger(__name__)

SUBKEY_SEPARATOR = "."
GEO3_CONFIG_PATH = "./geo3.yaml"
TOLERANCE_ENV_VAR = "GEO3_TOLERANCE"

DEFAULTS: dict[str, Any] = {
    "tolerances": {
        "regularity": 1e-9,
        "frame": 1e-9,
        "torsion": 1e-9,
        "quadrature": 1e-10,
        "arc_length": 1e-10,
        "strip": 1e-8,
        "umbilic": 1e-8,
        "classification": 1e-10,
        "planar_point": 1e-8,
        "asymptotic": 1e-9,
        "asymptotic_direction": 1e-9,
        "implicit": 1e-12,
        "checks": {
            "koszul": 1e-8,
            "gauss_weingarten": 1e-7,
            "egregium": 1e-6,
            "normal_identities": 1e-7,
            "minimality": 1e-7,
            "geodesic": 1e-6,
            "shape": 1e-6,
            "meusnier": 1e-8,
        },
    },
    "integration": {
        "steps_per_unit": 1000,
        "geodesic_min_steps": 2000,
        "parallel_steps": 1000,
        "simpson_max_depth": 40,
    },
    "sweeps": {
        "max_workers": 4,
    },
}


class Config:
    """Configuration for geo3.

    A process-wide singleton holding nested settings addressed with dotted keys,
    e.g. ``config["tolerances.checks.koszul"]``.
    """

    _instance = None

    @classmethod
    def is_initialized(cls) -> bool:
        """Whether the configuration has been initialized."""
        return (
            cls._instance is not None
            and hasattr(cls._instance, "_initialized")
            and cls._instance._initialized
        )

    @classmethod
    def get_instance(cls) -> "Config":
        """Return the Config singleton, loading it on first use."""
        if not cls.is_initialized():
            cls.load()
        return cls._instance

    @classmethod
    def from_yaml(cls, path: str | Path, override=False) -> "Config":
        """Create a Config instance from a file merged over the defaults."""
        if isinstance(path, str):
            path = Path(path)

        if not path.exists():
            raise FileNotFoundError(f"geo3 config file not found: {path}")

        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML in config file '{path}'", e)

        if not isinstance(data, dict):
            raise ConfigError(f"Config file '{path}' must contain a mapping")

        return cls(_merge(DEFAULTS, data), override)

    @classmethod
    def load(cls, path: str | Path = GEO3_CONFIG_PATH) -> "Config":
        """(Re)load the configuration.

        Reads ``path`` when it exists and the built-in defaults otherwise, then
        applies the ``GEO3_TOLERANCE`` environment override.
        """
        if Path(path).exists():
            LOGGER.info(f"Loading geo3 config from {path}")
            config = cls.from_yaml(path, override=True)
        else:
            config = cls(copy.deepcopy(DEFAULTS), override=True)

        if (raw := os.getenv(TOLERANCE_ENV_VAR)) is not None:
            config.apply_tolerance_override(raw)

        return config

    @classmethod
    def reset(cls) -> None:
        """Forget the current configuration. The next lookup reloads it."""
        if cls._instance is not None:
            cls._instance._initialized = False

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self, data: dict[str, Any], override=False):
        if not getattr(self, "_initialized", False) or override:
            self.data = data
            self._initialized = True

    def apply_tolerance_override(self, raw: str) -> None:
        """Apply a ``GEO3_TOLERANCE`` style override.

        A bare number replaces every ``tolerances.checks.*`` value. Otherwise the
        value is a comma separated list of ``key=value`` pairs whose keys are
        relative to ``tolerances``.

        Raises:
            ConfigError: If the override cannot be parsed.
        """
        raw = raw.strip()
        try:
            value = float(raw)
        except ValueError:
            value = None

        if value is not None:
            for key in self["tolerances.checks"]:
                self[f"tolerances.checks.{key}"] = value
            return

        for item in raw.split(","):
            key, sep, number = item.partition("=")
            if not sep or not key.strip():
                raise ConfigError(f"Malformed {TOLERANCE_ENV_VAR} entry '{item}'")
            try:
                self[f"tolerances.{key.strip()}"] = float(number)
            except ValueError as e:
                raise ConfigError(
                    f"Malformed {TOLERANCE_ENV_VAR} value '{number}' for '{key}'", e
                )

    def get(self, key: str, default: Any = None) -> Any:
        try:
            return self.__getitem__(key)
        except KeyError:
            return default

    def __getitem__(self, key: str):
        if not isinstance(key, str) or len(key) == 0:
            raise TypeError("Key must be a non-empty string.")

        obj = self.data
        for component in key.split(SUBKEY_SEPARATOR):
            if not isinstance(obj, dict) or (obj := obj.get(component)) is None:
                raise KeyError(f"Field '{key}' not found in config")

        return obj

    def __setitem__(self, key: str, value: Any):
        if not isinstance(key, str) or len(key) == 0:
            raise TypeError("Key must be a non-empty string.")

        key_components = key.split(SUBKEY_SEPARATOR)

        obj = self.data
        for component in key_components[:-1]:
            if (next_obj := obj.get(component)) is None:
                obj[component] = dict()
                next_obj = obj[component]

            obj = next_obj

        obj[key_components[-1]] = value

    def __str__(self):
        return yaml.dump(self.data, default_flow_style=False)


def _merge(base: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def tolerance(name: str) -> float:
    """Return ``tolerances.<name>`` from the active configuration."""
    return float(Config.get_instance()[f"tolerances.{name}"])


def setting(key: str) -> Any:
    """Return an arbitrary setting from the active configuration."""
    return Config.get_instance()[key]
