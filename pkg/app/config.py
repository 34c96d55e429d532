"""
Centralized configuration for datasets, verification and output.
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml


DATA_DIR = Path(__file__).resolve().parent.parent / 'data'


class FillConfig:
    """Central configuration for dataset locations and harness constants."""

    # Dataset files shipped with the repository
    CENSUS_PATH = DATA_DIR / 'census.csv'
    FAMILIES_PATH = DATA_DIR / 'families.yaml'
    CHECKSUMS_PATH = DATA_DIR / 'checksums.yaml'
    SETTINGS_PATH = DATA_DIR / 'settings.yaml'

    # Verification
    DEFAULT_WORKERS = 1         # verify-census runs single-process unless --parallel
    RELABEL_TRIALS = 100        # random relabellings per iso_signature check
    FAMILY_EXTRA_RANGE = 5      # indices checked past each family's nine-tetrahedron edge
    VERIFY_CHECKSUMS = True

    # Output
    DEFAULT_FORMAT = 'table'
    MESSAGE_LOG_WIDTH = 78
    MESSAGE_LOG_SIZE = 500
    USE_COLOR = True

    DEBUG_ENV_VAR = 'MAGICFILL_DEBUG'

    # Keys settings.yaml may override
    _OVERRIDABLE = ('DEFAULT_WORKERS', 'RELABEL_TRIALS', 'FAMILY_EXTRA_RANGE',
                    'VERIFY_CHECKSUMS', 'DEFAULT_FORMAT', 'MESSAGE_LOG_WIDTH',
                    'MESSAGE_LOG_SIZE', 'USE_COLOR')

    @classmethod
    def load_settings(cls, path: Optional[Path] = None) -> Dict[str, Any]:
        """
        Overlay values from a YAML settings file onto the defaults.

        A missing or malformed file keeps the defaults. Returns the values
        that were applied.
        """
        path = Path(path) if path is not None else cls.SETTINGS_PATH
        try:
            with open(path, 'r') as f:
                data = yaml.safe_load(f) or {}
        except FileNotFoundError:
            print(f"Warning: settings file '{path}' not found. Using defaults.")
            return {}
        except yaml.YAMLError as e:
            print(f"Warning: invalid YAML in '{path}': {e}. Using defaults.")
            return {}
        if not isinstance(data, dict):
            print(f"Warning: settings file '{path}' is not a mapping. Using defaults.")
            return {}

        applied = {}
        for key, value in data.items():
            name = str(key).upper()
            if name not in cls._OVERRIDABLE:
                print(f"Warning: unknown setting '{key}' ignored")
                continue
            current = getattr(cls, name)
            if isinstance(current, bool) != isinstance(value, bool) or \
                    not isinstance(value, type(current)):
                print(f"Warning: setting '{key}' should be {type(current).__name__}, got {value!r}")
                continue
            setattr(cls, name, value)
            applied[name] = value
        return applied

    @classmethod
    def debug_enabled(cls) -> bool:
        """Debug traces are printed only when MAGICFILL_DEBUG is set."""
        return bool(os.environ.get(cls.DEBUG_ENV_VAR))

    @classmethod
    def enable_debug(cls) -> None:
        os.environ[cls.DEBUG_ENV_VAR] = '1'

    @classmethod
    def debug(cls, message: str) -> None:
        if cls.debug_enabled():
            print(f"[debug] {message}")
