import math

import numpy as np
import pytest
from conftest import assert_close
from hypothesis import given, settings
from hypothesis import strategies as st

from quintic_radicals.error_handler import DegenerateInput, MaxIterExceeded, OutOfRange
from quintic_radicals.solvers.oracle import (
    QuinticCoefficients,
    nearest_root,
    oracle_roots,
    principal_root,
)
from quintic_radicals.solvers.radical_solver import (
    CONSTANTS,
    XI_MAX,
    IterationTrace,
    bring_radical,
    bring_radical_formula,
    certified_bound,
    contraction_ratios,
    g_map,
    naive_iteration_demo,
    radical_formula,
    relative_error,
    solve_form1,
    solve_form2,
    solve_form3,
    starting_point,
)
from quintic_radicals.solvers.reductions import (
    THETA_MAX,
    Form1Problem,
    Form2Problem,
    Form3Problem,
    form1_to_form2,
    form2_to_form3,
)

ITERATE_TOL = 2e-10

# fmt: off
NAIVE_SEQUENCE = [
    -0.3981, 0.8275, -0.9652, 0.9909, -1.0002, 0.9980, -1.0016,
    0.9983, -1.0017, 0.9983, -1.0017, 0.9983, -1.0017, 0.9983,
]
# fmt: on


def _form3(a):
    return form2_to_form3(form1_to_form2(Form1Problem(a)))


def _oracle_y(p3):
    return principal_root(oracle_roots(QuinticCoefficients.from_problem(p3)), p3.theta)


def _oracle_x(a, near):
    roots = oracle_roots(QuinticCoefficients.from_problem(Form1Problem(a)))
    return nearest_root(near, roots)[0]


def test_constants():
    assert CONSTANTS.alpha == pytest.approx(math.cos(math.pi / 8), rel=1e-15)
    assert CONSTANTS.C0 == 4.32e-3
    assert CONSTANTS.K == 15.44
    assert CONSTANTS.Kprime == 14.68
    assert set(CONSTANTS.describe()) == {"alpha", "C0", "C1", "C1prime", "C2", "K", "Kprime"}


def test_starting_points():
    assert starting_point(5e-9) == pytest.approx(0.0145535, rel=1e-5)
    assert starting_point(75.75327872) == pytest.approx(2.66248, rel=1e-5)


@pytest.mark.parametrize("xi", [0.0, -1.0, XI_MAX * 10, math.nan])
def test_starting_point_out_of_range(xi):
    with pytest.raises(OutOfRange):
        starting_point(xi)


def test_example_1_iterates(example1):
    p3 = _form3(example1["a"])
    estimate, trace = solve_form3(p3)

    assert estimate.converged
    assert trace.iterates[0] == starting_point(p3.xi)
    for found, expected in zip(trace.iterates[1:4], example1["y_iterates"]):
        assert_close(found, expected, ITERATE_TOL)
    assert_close(estimate.value, example1["roots"][0][0], ITERATE_TOL)
    assert estimate.residual < 1e-15

    errors = trace.against(_oracle_y(p3)).abs_errors
    assert errors[1] == pytest.approx(example1["y_errors"][0], rel=0.01)
    assert errors[2] == pytest.approx(example1["y_errors"][1], rel=0.02)


def test_example_1_x_iterates(example1):
    a = example1["a"]
    estimate, trace = solve_form1(Form1Problem(a))

    assert_close(trace.iterates[1], example1["x1"], 2e-9)
    assert_close(estimate.value, example1["roots"][0][1])
    # the step-size stop leaves a residual of order tol
    assert estimate.residual < 1e-12

    errors = trace.against(_oracle_x(a, estimate.value)).abs_errors
    for found, expected in zip(errors[1:4], example1["x_errors"]):
        assert found == pytest.approx(expected, rel=0.05)


def test_example_2_iterates(example2):
    p3 = _form3(example2["a"])
    estimate, trace = solve_form3(p3)

    for found, expected in zip(trace.iterates[1:4], example2["y_iterates"]):
        assert_close(found, expected, ITERATE_TOL)
    assert_close(estimate.value, example2["roots"][0][0], ITERATE_TOL)

    errors = trace.against(_oracle_y(p3)).abs_errors
    for found, expected in zip(errors[1:4], example2["y_errors"]):
        assert found == pytest.approx(expected, rel=0.03)


def test_example_2_x_iterates(example2):
    a = example2["a"]
    estimate, trace = solve_form1(Form1Problem(a))

    assert_close(trace.iterates[1], example2["x1"], 2e-9)
    assert_close(estimate.value, example2["roots"][0][1])

    errors = trace.against(_oracle_x(a, estimate.value)).abs_errors
    for found, expected in zip(errors[1:4], example2["x_errors"]):
        assert found == pytest.approx(expected, rel=0.03)


def test_radical_formula_is_first_iterate(example2):
    p3 = _form3(example2["a"])
    _, trace = solve_form3(p3)
    assert radical_formula(p3) == trace.iterates[1]
    assert bring_radical_formula(example2["a"]) == pytest.approx(example2["x1"], abs=2e-9)


def test_real_axis_root():
    estimate, trace = solve_form3(Form3Problem.from_angle(1.0, 0.0))
    assert estimate.value.imag == 0.0
    assert estimate.value.real == pytest.approx(1.0, abs=1e-12)
    assert all(v.imag == 0.0 for v in trace.iterates)


def test_largest_xi():
    estimate, _ = solve_form3(Form3Problem.from_angle(XI_MAX, 0.1))
    assert estimate.converged
    assert estimate.residual < 1e-12


def test_solve_form2_maps_to_z(example2):
    a = example2["a"]
    p2 = form1_to_form2(Form1Problem(a))
    estimate, trace = solve_form2(p2)
    assert estimate.residual < 1e-12
    assert_close(a / estimate.value, example2["roots"][0][1])
    assert trace.iterates[-1] == estimate.value


def test_max_iter_exceeded_carries_partial_result():
    p3 = Form3Problem.from_angle(1.0, 0.1)
    with pytest.raises(MaxIterExceeded) as info:
        solve_form3(p3, tol=1e-15, max_iter=1)
    estimate = info.value.estimate
    assert not estimate.converged
    assert estimate.iterations == 1
    assert len(info.value.trace) == 2
    assert estimate.value == radical_formula(p3)


def test_max_iter_exceeded_in_x(example1):
    with pytest.raises(MaxIterExceeded) as info:
        solve_form1(Form1Problem(example1["a"]), tol=1e-15, max_iter=1)
    assert_close(info.value.estimate.value, example1["x1"], 2e-9)
    assert_close(info.value.trace.iterates[1], example1["x1"], 2e-9)


@pytest.mark.parametrize("tol,max_iter", [(1e-16, 25), (1e-12, 0)])
def test_invalid_controls(tol, max_iter):
    with pytest.raises(OutOfRange):
        solve_form3(Form3Problem.from_angle(1.0, 0.1), tol=tol, max_iter=max_iter)


def test_g_map_undefined_at_minus_u():
    with pytest.raises(DegenerateInput):
        g_map(Form3Problem.from_angle(1.0, 0.0), -1 + 0j)


def test_bring_radical():
    zero = bring_radical(0)
    assert zero.value == 0 and zero.iterations == 0
    estimate = bring_radical(0.01)
    assert Form1Problem(0.01).residual(estimate.value) < 1e-12
    assert bring_radical_formula(0) == 0


def test_certified_bound():
    assert certified_bound(1, 1.0, CONSTANTS.C0, CONSTANTS.K) == CONSTANTS.C0
    assert certified_bound(2, 1.0, CONSTANTS.C0, CONSTANTS.K) == pytest.approx(
        CONSTANTS.C0 / CONSTANTS.K
    )
    assert certified_bound(0, 1.0, CONSTANTS.C0, CONSTANTS.K) == math.inf
    assert certified_bound(40, 1.0, CONSTANTS.C0, CONSTANTS.K) > 0


def test_estimate_carries_bound(example1):
    estimate, _ = solve_form3(_form3(example1["a"]))
    assert estimate.certified_abs_bound == certified_bound(
        estimate.iterations, abs(estimate.value), CONSTANTS.C0, CONSTANTS.K
    )


def test_relative_error():
    assert relative_error(0, 0) == 0.0
    assert relative_error(1, 0) == math.inf
    assert relative_error(3, 2) == 0.5


def test_trace_validation():
    with pytest.raises(ValueError):
        IterationTrace([1 + 0j], abs_errors=[0.0])
    with pytest.raises(ValueError):
        IterationTrace([1 + 0j, 2 + 0j], 1 + 0j, [0.0], [0.0])
    measured = IterationTrace([1 + 0j, 3 + 0j]).against(2 + 0j)
    assert measured.abs_errors == [1.0, 1.0]
    assert measured.rel_errors == [0.5, 0.5]


def test_contraction_ratios():
    ratios = contraction_ratios([1.0, 0.1, 0.01, 1e-20], floor=1e-13)
    assert ratios == pytest.approx([0.1, 1e-18])
    assert contraction_ratios([1.0, 1e-14, 1e-15], floor=1e-13) == []


def test_naive_iteration_oscillates():
    trace = naive_iteration_demo(0.01, 0.0, 14)
    assert len(trace) == 15
    for found, expected in zip(trace.iterates[1:], NAIVE_SEQUENCE):
        assert found == pytest.approx(expected, abs=5e-5)


def test_naive_single_step():
    trace = naive_iteration_demo(0.01, 0.0, 1)
    assert trace.iterates == [0.0, pytest.approx(-(0.01**0.2))]


def test_naive_iteration_expands_errors():
    roots = oracle_roots(QuinticCoefficients.from_problem(Form1Problem(0.01)))
    real_root = min(roots, key=lambda v: abs(v.imag)).real

    steady = naive_iteration_demo(0.01, real_root, 1)
    assert abs(steady.iterates[1] - real_root) < 1e-8

    kicked = naive_iteration_demo(0.01, real_root + 1e-6, 1, reference=real_root)
    assert kicked.abs_errors[1] / kicked.abs_errors[0] >= 4.55


def test_naive_rejects_zero_steps():
    with pytest.raises(OutOfRange):
        naive_iteration_demo(0.01, 0.0, 0)


@settings(max_examples=50, deadline=None)
@given(
    log_xi=st.floats(min_value=-6, max_value=6),
    theta=st.floats(min_value=0.0, max_value=THETA_MAX),
)
def test_first_iterate_within_proven_bounds(log_xi, theta):
    p3 = Form3Problem.from_angle(10.0**log_xi, theta)
    y_star = _oracle_y(p3)
    y1 = radical_formula(p3)
    assert abs(y1 - y_star) < CONSTANTS.C0
    assert abs(y1 / y_star - 1) < CONSTANTS.C1_overview

    estimate, _ = solve_form3(p3)
    assert abs(estimate.value - y_star) <= 1e-11 * max(1.0, abs(y_star))


FIXED_POINT_GRID = [
    (float(xi), float(theta))
    for xi in np.logspace(-9, 9, 12)
    for theta in np.linspace(0.0, THETA_MAX, 6)
]


@pytest.mark.parametrize("xi,theta", FIXED_POINT_GRID)
def test_true_root_is_fixed_by_g(xi, theta):
    p3 = Form3Problem.from_angle(xi, theta)
    y_star = _oracle_y(p3)
    assert p3.residual(y_star) < 1e-12
    assert abs(g_map(p3, y_star) - y_star) < 1e-11
