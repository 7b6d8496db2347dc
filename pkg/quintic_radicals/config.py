#!/usr/bin/env python3
"""
Configuration Management for the quintic solvers
"""

import copy
import json
import logging
import os
import sys
from typing import Any, Dict, Mapping, Optional

logger = logging.getLogger(__name__)


class ConfigurationManager:
    """Manages configuration for the solver engine"""

    DEFAULT_CONFIG = {
        "solver": {
            "method": "both",
            "tol": 1e-12,
            "max_iter": 25,
            "trig_tol": 1e-10,
            "sigma_tol": 1e-13,
        },
        "batch": {
            "jobs": 0,  # 0 = available parallelism
        },
        "output": {
            "format": "json",  # json, text or csv
            "include_timing": True,
        },
        "verify": {
            "oracle": False,
            "match_tol": 1e-8,
        },
        "bounds": {
            "xi_min_exp": -9,
            "xi_max_exp": 9,
            "xi_points": 40,
            "theta_points": 20,
            "a_min_exp": -4,
            "a_max_exp": 4,
            "a_points": 20,
            "a_arguments": 16,
        },
        "demo": {
            "a": 0.01,
            "x0": 0.0,
            "steps": 14,
        },
        "error_handling": {
            "error_log": None,
            "log_tracebacks": True,
        },
        "logging": {
            "level": "WARNING",
        },
    }

    # environment variable -> (config key, type)
    ENVIRONMENT = {
        "QUINTIC_TOL": ("solver.tol", float),
        "QUINTIC_MAX_ITER": ("solver.max_iter", int),
        "QUINTIC_JOBS": ("batch.jobs", int),
    }

    def __init__(self, config_file: Optional[str] = None):
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        if config_file:
            self.load_config(config_file)

    def load_config(self, config_file: str):
        """Load configuration from JSON file"""
        try:
            with open(config_file, "r") as f:
                file_config = json.load(f)
            self._deep_update(self.config, file_config)
        except (OSError, ValueError) as e:
            logger.warning(f"Could not load config file {config_file}: {e}")

    def apply_environment(self, environ: Optional[Mapping[str, str]] = None):
        """Override settings from QUINTIC_* environment variables"""
        environ = os.environ if environ is None else environ
        for name, (key, cast) in self.ENVIRONMENT.items():
            raw = environ.get(name)
            if raw is None or raw == "":
                continue
            try:
                self.set(key, cast(raw))
            except ValueError:
                logger.warning(f"Ignoring malformed {name}={raw!r}")

    def _deep_update(self, original: Dict, update: Dict):
        """Recursively update dictionary, ignoring None values"""
        for key, value in update.items():
            if value is None:
                continue
            if isinstance(value, dict) and isinstance(original.get(key), dict):
                self._deep_update(original[key], value)
            else:
                original[key] = value

    def update(self, overrides: Dict):
        """Apply overrides (e.g. from command-line flags); None leaves a value unchanged"""
        self._deep_update(self.config, overrides)

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value with dot notation"""
        current = self.config
        for k in key.split("."):
            if isinstance(current, dict) and k in current:
                current = current[k]
            else:
                return default
        return current

    def set(self, key: str, value: Any):
        """Set configuration value with dot notation"""
        *parents, last = key.split(".")
        current = self.config
        for k in parents:
            current = current.setdefault(k, {})
        current[last] = value

    def save_config(self, config_file: str) -> bool:
        """Save current configuration to file"""
        try:
            with open(config_file, "w") as f:
                json.dump(self.config, f, indent=2)
            return True
        except OSError as e:
            logger.error(f"Error saving config: {e}")
            return False

    def __repr__(self):
        """Pretty print the config as a JSON string"""
        return json.dumps(self.config, indent=2)

    def dump_config_json(self, stream=None):
        """Dump the current configuration as JSON (stdout by default)"""
        stream = stream or sys.stdout
        json.dump(self.config, stream, indent=2)
        stream.write("\n")
