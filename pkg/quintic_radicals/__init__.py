#!/usr/bin/env python3
"""
Quintic solvers: iteration of radicals and angular bisection for the
Bring-Jerrard quintic and its normal forms
"""

from .config import ConfigurationManager
from .engine import SolverEngine
from .error_handler import ErrorHandler, QuinticError
from .pipeline import SolvePipeline
from .report import SolveReport, SolveRequest
from .request_reader import RequestReader

__version__ = "0.1.0"
__license__ = "MIT"

# Export main classes
__all__ = [
    "ConfigurationManager",
    "ErrorHandler",
    "QuinticError",
    "RequestReader",
    "SolveReport",
    "SolveRequest",
    "SolvePipeline",
    "SolverEngine",
]
