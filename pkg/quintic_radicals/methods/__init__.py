from .base_method import BaseSolveMethod, build_problem
from .combined_method import CombinedMethod
from .radical_method import RadicalMethod
from .trig_method import TrigMethod

__all__ = [
    "BaseSolveMethod",
    "CombinedMethod",
    "RadicalMethod",
    "TrigMethod",
    "build_problem",
]
