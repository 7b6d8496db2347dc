#!/usr/bin/env python3
"""
Error Handling System for the quintic solvers
"""

import logging
import traceback
from datetime import datetime
from typing import Any, Optional


class QuinticError(Exception):
    """Base class for all solver errors"""


class DegenerateInput(QuinticError, ValueError):
    """An input makes a formula undefined (e.g. u + y = 0 inside G)"""


class OutOfRange(QuinticError, ValueError):
    """An input lies outside the domain the algorithms are defined on"""


class PoleEvaluation(QuinticError, ValueError):
    """The angular function was evaluated exactly on a pole of sin(5σ)"""


class ResidualTooLarge(QuinticError):
    """A mapped root fails its residual check"""

    def __init__(self, message: str, value: complex = 0j, residual: float = 0.0):
        super().__init__(message)
        self.value = value
        self.residual = residual


class VietaResidualFailure(ResidualTooLarge):
    """The root recovered from Vieta's formulas is not a root"""


class MaxIterExceeded(QuinticError):
    """
    The iteration reached max_iter before the step size fell below tol.

    Carries the best estimate and the trace so callers can still report
    partial results.
    """

    def __init__(self, message: str, estimate: Any = None, trace: Any = None):
        super().__init__(message)
        self.estimate = estimate
        self.trace = trace


class BracketFailure(QuinticError):
    """No sign change of f(σ) - 2ξ could be found inside an interval"""

    def __init__(self, message: str, interval: Any = None):
        super().__init__(message)
        self.interval = interval


class NoConvergence(QuinticError):
    """The oracle's simultaneous iteration did not settle"""


class RequestError(QuinticError, ValueError):
    """A solve request or one of its coefficients could not be parsed"""


class ErrorHandler:
    """Handles failure logging for solve requests"""

    def __init__(self, config: dict):
        self.config = config
        self.log_file: Optional[str] = config.get("error_log")
        self.log_tracebacks = config.get("log_tracebacks", True)
        self.logger = logging.getLogger(__name__)

        if self.log_file:
            with open(self.log_file, "a") as f:
                f.write(f"\n{'=' * 50}\n")
                f.write(f"Quintic Solver Log - {datetime.now()}\n")
                f.write(f"{'=' * 50}\n\n")

    def _append(self, line: str):
        if not self.log_file:
            return
        with open(self.log_file, "a") as f:
            f.write(line)

    def log_success(self, label: str, detail: str):
        """Log a solved request"""
        self.logger.debug(f"{label}: {detail}")
        self._append(f"SUCCESS: {datetime.now()} - {label} - {detail}\n")

    def log_failure(self, label: str, reason: str):
        """Log a request that failed with a known solver error"""
        self.logger.warning(f"{label}: {reason}")
        self._append(f"FAIL: {datetime.now()} - {label} - {reason}\n")

    def log_exception(self, label: str, exception: Exception):
        """Log unexpected exceptions with stack trace"""
        self.logger.error(f"{label}: unexpected {type(exception).__name__}: {exception}")
        if not self.log_file:
            return
        with open(self.log_file, "a") as f:
            f.write(f"EXCEPTION: {datetime.now()} - {label}\n")
            f.write(f"  {str(exception)}\n")
            if self.log_tracebacks:
                f.write(f"  {traceback.format_exc()}\n")
