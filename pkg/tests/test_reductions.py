import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quintic_radicals.error_handler import DegenerateInput, OutOfRange, ResidualTooLarge
from quintic_radicals.solvers.oracle import QuinticCoefficients, oracle_roots
from quintic_radicals.solvers.reductions import (
    THETA_MAX,
    BringJerrardProblem,
    Form1Problem,
    Form2Problem,
    Form3Problem,
    SpecialCaseRoots,
    bring_jerrard_to_form1,
    form1_to_form2,
    form2_root_to_form3_root,
    form2_to_form3,
    form3_root_to_form1_root,
    form3_root_to_form2_root,
)

moduli = st.floats(min_value=1e-3, max_value=1e3)
angles = st.floats(min_value=-math.pi, max_value=math.pi)
narrow = st.floats(min_value=0.1, max_value=10.0)


def test_form1_to_form2():
    assert form1_to_form2(Form1Problem(2.0)).lam == -8.0
    p2 = form1_to_form2(Form1Problem(1 + 1j))
    assert abs(p2.lam - 2.0) < 1e-15


def test_form1_rejects_zero():
    with pytest.raises(DegenerateInput, match="a must be nonzero"):
        Form1Problem(0)


def test_form1_rejects_non_finite():
    with pytest.raises(OutOfRange):
        Form1Problem(complex(math.inf, 0))


def test_form2_rejects_zero():
    with pytest.raises(DegenerateInput):
        Form2Problem(0j)


def test_form3_validation():
    with pytest.raises(OutOfRange):
        Form3Problem.from_angle(1.0, 1.0)
    with pytest.raises(OutOfRange):
        Form3Problem.from_angle(-1.0, 0.1)
    with pytest.raises(DegenerateInput):
        Form3Problem(1.0, 0.1, 1 + 0j)


def test_negative_real_lam_lands_on_the_seam():
    p3 = form2_to_form3(form1_to_form2(Form1Problem(0.01)))
    assert p3.theta == THETA_MAX
    assert p3.conjugated
    assert p3.frames_coincide
    assert p3.xi == pytest.approx(5e-9, rel=1e-14)
    assert abs(p3.u - cmath.exp(1j * math.pi / 5)) < 1e-15


def test_positive_real_lam_lands_on_the_real_axis():
    p3 = form2_to_form3(Form2Problem(2.0))
    assert p3.theta == 0.0
    assert p3.u == 1
    assert not p3.conjugated


def test_conjugation_when_rotation_angle_is_negative():
    p3 = form2_to_form3(Form2Problem(cmath.rect(3.0, 0.5)))
    assert p3.conjugated
    assert not p3.frames_coincide
    assert p3.theta == pytest.approx(0.1, abs=1e-14)


def test_example_2_reduction(example2):
    p3 = form2_to_form3(form1_to_form2(Form1Problem(example2["a"])))
    assert p3.xi == pytest.approx(example2["xi"], abs=1e-8)
    assert p3.theta == pytest.approx(example2["theta"], abs=1e-9)
    assert not p3.conjugated


@settings(max_examples=60, deadline=None)
@given(modulus=moduli, angle=angles)
def test_form3_roots_map_back_to_form2_roots(modulus, angle):
    p2 = Form2Problem(cmath.rect(modulus, angle))
    p3 = form2_to_form3(p2)
    assert 0.0 <= p3.theta <= THETA_MAX + 1e-14
    assert p3.xi == pytest.approx(modulus, rel=1e-14)
    for y in oracle_roots(QuinticCoefficients.from_problem(p3)):
        z = form3_root_to_form2_root(y, p3)
        assert p2.residual(z) < 1e-9
        assert abs(form2_root_to_form3_root(z, p3) - y) <= 1e-12 * max(1.0, abs(y))


@settings(max_examples=60, deadline=None)
@given(modulus=moduli, angle=angles)
def test_form3_roots_map_back_to_form1_roots(modulus, angle):
    p1 = Form1Problem(cmath.rect(modulus, angle))
    p3 = form2_to_form3(form1_to_form2(p1))
    for y in oracle_roots(QuinticCoefficients.from_problem(p3)):
        x = form3_root_to_form1_root(y, p3, p1)
        assert p1.residual(x) < 1e-10


def test_backmap_rejects_non_roots():
    p1 = Form1Problem(0.5)
    p3 = form2_to_form3(form1_to_form2(p1))
    with pytest.raises(DegenerateInput):
        form3_root_to_form1_root(0j, p3, p1)
    with pytest.raises(ResidualTooLarge) as info:
        form3_root_to_form1_root(1 + 0j, p3, p1)
    assert info.value.residual >= 1e-10


def test_bring_jerrard_special_cases():
    both = bring_jerrard_to_form1(BringJerrardProblem(0, 0))
    assert isinstance(both, SpecialCaseRoots)
    assert both.roots == (0j,) * 5

    p = BringJerrardProblem(0, 32)
    no_linear = bring_jerrard_to_form1(p)
    assert isinstance(no_linear, SpecialCaseRoots)
    assert len(no_linear.roots) == 5
    assert all(p.residual(v) < 1e-13 for v in no_linear.roots)
    assert any(abs(v + 2) < 1e-14 for v in no_linear.roots)

    p = BringJerrardProblem(-16, 0)
    no_constant = bring_jerrard_to_form1(p)
    assert isinstance(no_constant, SpecialCaseRoots)
    assert no_constant.roots[0] == 0
    assert all(p.residual(v) < 1e-13 for v in no_constant.roots)


@settings(max_examples=60, deadline=None)
@given(m1=narrow, t1=angles, m0=narrow, t0=angles)
def test_bring_jerrard_reduction_preserves_roots(m1, t1, m0, t0):
    p = BringJerrardProblem(cmath.rect(m1, t1), cmath.rect(m0, t0))
    p1, scale = bring_jerrard_to_form1(p)
    assert abs(scale**4 - p.d1) <= 1e-12 * abs(p.d1)
    for x in oracle_roots(QuinticCoefficients.from_problem(p1)):
        assert p.residual(scale * x) < 1e-10


def test_bring_jerrard_rejects_non_finite():
    with pytest.raises(OutOfRange):
        BringJerrardProblem(math.nan, 1)
