"""
Solvers for the trinomial quintic and its normal forms
"""

from .bring_jerrard import bring_jerrard_all_roots, bring_jerrard_radical
from .complex_branch import branch_nth_root, rational_power
from .oracle import (
    QuinticCoefficients,
    match_multisets,
    nearest_root,
    oracle_roots,
    principal_root,
    vieta_check,
)
from .radical_solver import (
    CONSTANTS,
    AlgorithmConstants,
    IterationTrace,
    RootEstimate,
    bring_radical,
    bring_radical_formula,
    g_map,
    naive_iteration_demo,
    radical_formula,
    solve_form1,
    solve_form2,
    solve_form3,
    starting_point,
)
from .reductions import (
    BringJerrardProblem,
    Form1Problem,
    Form2Problem,
    Form3Problem,
    bring_jerrard_to_form1,
    form1_to_form2,
    form2_to_form3,
    form3_root_to_form1_root,
    form3_root_to_form2_root,
)
from .trig_solver import (
    AngularInterval,
    RootRecord,
    RootSet,
    all_roots_form1,
    all_roots_form3,
    bisect_sigma,
    f_sigma,
    intervals_for,
    radius_from_sigma,
)

__all__ = [
    "AlgorithmConstants",
    "AngularInterval",
    "BringJerrardProblem",
    "CONSTANTS",
    "Form1Problem",
    "Form2Problem",
    "Form3Problem",
    "IterationTrace",
    "QuinticCoefficients",
    "RootEstimate",
    "RootRecord",
    "RootSet",
    "all_roots_form1",
    "all_roots_form3",
    "bisect_sigma",
    "branch_nth_root",
    "bring_jerrard_all_roots",
    "bring_jerrard_radical",
    "bring_jerrard_to_form1",
    "bring_radical",
    "bring_radical_formula",
    "f_sigma",
    "form1_to_form2",
    "form2_to_form3",
    "form3_root_to_form1_root",
    "form3_root_to_form2_root",
    "g_map",
    "intervals_for",
    "match_multisets",
    "naive_iteration_demo",
    "nearest_root",
    "oracle_roots",
    "principal_root",
    "radical_formula",
    "radius_from_sigma",
    "rational_power",
    "solve_form1",
    "solve_form2",
    "solve_form3",
    "starting_point",
    "vieta_check",
]
