import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

# --- Type Hinting ---
EnumerationConfig = Dict[str, Any]
WeightConfig = Dict[str, Any]
LoggingConfig = Dict[str, Any]

DEFAULT_CONFIG_PATH = Path(__file__).with_name("default_config.yaml")
USER_CONFIG_ENV = "QEULER_CONFIG"
USER_CONFIG_FILE = "qeuler.yaml"
CACHE_ENV = "QEULER_CACHE"
CEILING_ENV = "QEULER_ENUM_CEILING"


class _DataObject:
    """A helper class to convert nested dictionaries to objects for attribute access."""
    def __init__(self, data: Dict[str, Any]):
        for key, value in data.items():
            if isinstance(value, dict):
                setattr(self, key, _DataObject(value))
            elif isinstance(value, list):
                setattr(self, key, [_DataObject(i) if isinstance(i, dict) else i for i in value])
            else:
                setattr(self, key, value)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self.__dict__}>"


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _read_yaml(path: Path) -> Dict[str, Any]:
    with open(path, 'r') as f:
        raw_config = yaml.safe_load(f)

    if not raw_config or not isinstance(raw_config, dict):
        raise ValueError(f"Configuration file is empty or invalid: {path}")
    return raw_config


class Config:
    """
    A singleton class to manage application configuration.

    Settings come from the packaged `default_config.yaml`, overlaid by an
    optional user file (`$QEULER_CONFIG`, or `./qeuler.yaml` when present).
    The QEULER_CACHE and QEULER_ENUM_CEILING environment variables win over
    both and are read on every access, so they can change at runtime.

    Usage:
        config = Config()
        ceiling = config.enumeration_ceiling
        level = config.logging.level
    """
    _instance: Optional['Config'] = None

    def __new__(cls, config_path: Optional[str] = None) -> 'Config':
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self, config_path: Optional[str] = None):
        if self._initialized:
            return

        self.config_path = self._resolve_user_path(config_path)
        self._data: Optional[_DataObject] = None
        self.load_config()

        self._initialized = True

    @staticmethod
    def _resolve_user_path(config_path: Optional[str]) -> Optional[Path]:
        if config_path:
            return Path(config_path)
        env_path = os.environ.get(USER_CONFIG_ENV)
        if env_path:
            return Path(env_path)
        local = Path(USER_CONFIG_FILE)
        return local if local.exists() else None

    def load_config(self):
        """Loads the packaged defaults and overlays the user file, if any."""
        if not DEFAULT_CONFIG_PATH.exists():
            raise FileNotFoundError(f"Default configuration missing at: {DEFAULT_CONFIG_PATH.resolve()}")
        raw_config = _read_yaml(DEFAULT_CONFIG_PATH)

        if self.config_path is not None:
            if not self.config_path.exists():
                raise FileNotFoundError(f"Configuration file not found at: {self.config_path.resolve()}")
            raw_config = _merge(raw_config, _read_yaml(self.config_path))

        self._data = _DataObject(raw_config)

    def reload(self, config_path: Optional[str] = None):
        """Reloads the configuration, optionally from a different user file."""
        if config_path is not None:
            self.config_path = Path(config_path)
        self.load_config()

    def __getattr__(self, name: str) -> Any:
        """Provides attribute-style access to the configuration data."""
        if name.startswith('_'):
            raise AttributeError(name)
        if self._data and hasattr(self._data, name):
            return getattr(self._data, name)
        raise AttributeError(f"'Config' object has no attribute '{name}'")

    @property
    def enumeration(self) -> EnumerationConfig:
        return self.__getattr__('enumeration')

    @property
    def weight(self) -> WeightConfig:
        return self.__getattr__('weight')

    @property
    def logging(self) -> LoggingConfig:
        return self.__getattr__('logging')

    @property
    def enumeration_ceiling(self) -> int:
        override = os.environ.get(CEILING_ENV)
        if override:
            try:
                return int(override)
            except ValueError:
                raise ValueError(f"{CEILING_ENV} must be an integer, got {override!r}")
        return int(self.enumeration.ceiling)

    @property
    def jobs(self) -> int:
        jobs = int(self.enumeration.jobs)
        return jobs if jobs > 0 else (os.cpu_count() or 1)

    @property
    def weight_cache_size(self) -> int:
        return int(self.weight.cache_size)

    @property
    def cache_path(self) -> Path:
        return Path(os.environ.get(CACHE_ENV) or self.__getattr__('cache').path)

    @property
    def database_path(self) -> Path:
        return Path(self.__getattr__('database').path)


# Global instance for easy access across the application
config = Config()
