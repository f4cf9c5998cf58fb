import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dmlqu.exceptions import NotCentrosymmetricError, ValidationError
from dmlqu.lqu import lqu_bruteforce
from dmlqu.models import XModelParams, ZModelParams, hamiltonian_x, hamiltonian_z, spectrum_z
from dmlqu.thermal import (
    XState,
    double_hadamard,
    gibbs_state_numeric,
    hadamard_x_form,
    partition_x,
    partition_z,
    phase_normalize_x,
    thermal_state_x_closed,
    thermal_state_x_hadamard_closed,
    thermal_state_z_closed,
)

from oracles import gibbs_expm, h_x_operator, h_z_operator, random_model_draw, random_x_state


def test_gibbs_zero_hamiltonian():
    np.testing.assert_allclose(gibbs_state_numeric(np.zeros((4, 4)), 1.0), np.eye(4) / 4, atol=1e-16)


def test_gibbs_infinite_temperature():
    rho = gibbs_state_numeric(hamiltonian_z(ZModelParams(1, 0.5, 1)), 1e9)
    assert np.abs(rho - np.eye(4) / 4).max() <= 1e-8


def test_gibbs_matches_expm_oracle(rng):
    for _ in range(100):
        j, d, dm, t = random_model_draw(rng, t_range=(0.05, 50))
        h = h_x_operator(j, d, dm)
        ref, _ = gibbs_expm(h, t)
        assert np.abs(gibbs_state_numeric(h, t) - ref).max() <= 1e-10


def test_gibbs_survives_huge_beta():
    rho = gibbs_state_numeric(hamiltonian_z(ZModelParams(1, 0.5, 1)), 1e-6)
    assert np.all(np.isfinite(rho))
    assert abs(np.trace(rho).real - 1) <= 1e-12


def test_temperature_floor():
    with pytest.raises(ValidationError, match="ground_state"):
        thermal_state_z_closed(ZModelParams(1, 0.5, 1), 1e-7)
    with pytest.raises(ValidationError):
        gibbs_state_numeric(np.zeros((4, 4)), 0.0)


def test_partition_z_examples():
    assert partition_z(ZModelParams(1, 0.5, 1), 1e9).value == pytest.approx(4.0, rel=1e-8)
    z = partition_z(ZModelParams(1, 1, 0), 1.0)
    assert z.value == pytest.approx(2 * math.cosh(2) + 2, rel=1e-14)
    assert z.log == pytest.approx(math.log(2 * math.cosh(2) + 2), rel=1e-14)


def test_partition_z_matches_numeric_trace():
    p = ZModelParams(1, 0.5, 1)
    _, tr = gibbs_expm(h_z_operator(1, 0.5, 1), 1.0)
    assert abs(partition_z(p, 1.0).value - tr) / tr <= 1e-10


def test_partition_overflow_reports_log():
    p = ZModelParams(1, 0.5, 1)
    z = partition_z(p, 1e-3)
    assert z.value == math.inf
    assert z.log == pytest.approx(2.5e3, rel=1e-12)
    zx = partition_x(XModelParams(1, 0.5, 1), 1e-3)
    assert zx.value == math.inf and zx.log == pytest.approx(1e3 * (1 + math.sqrt(4.25)))


def test_partition_x_closed_form(rng):
    for _ in range(50):
        j, d, dm, t = random_model_draw(rng)
        p = XModelParams(j, d, dm)
        b, o1 = 1 / t, p.omega1
        ref = 2 * (math.exp(-b * j) * math.cosh(b * d * j) + math.exp(b * j) * math.cosh(b * o1))
        assert partition_x(p, t).value == pytest.approx(ref, rel=1e-12)


def test_log_partition_monotone_in_beta():
    p = ZModelParams(1, 0.5, 1)
    temps = np.logspace(2, -2, 50)
    logs = [partition_z(p, t).log for t in temps]
    assert np.all(np.diff(logs) > 0)


def test_z_closed_high_temperature():
    x = thermal_state_z_closed(ZModelParams(1, 0.5, 1), 1e9)
    np.testing.assert_allclose(x.populations, 0.25, atol=1e-9)
    assert abs(x.r14) < 1e-9 and abs(x.r23) < 1e-9


def test_z_closed_low_temperature_is_ground_projector():
    p = ZModelParams(1, 0.5, 1)
    v = spectrum_z(p)["z4"].vector
    proj = np.outer(v, v.conj())
    assert np.abs(thermal_state_z_closed(p, 1e-3).to_matrix() - proj).max() <= 1e-12


def test_z_closed_matches_numeric(rng):
    for _ in range(250):
        j, d, dm, t = random_model_draw(rng, t_range=(0.05, 50))
        x = thermal_state_z_closed(ZModelParams(j, d, dm), t)
        ref, _ = gibbs_expm(h_z_operator(j, d, dm), t)
        assert np.abs(x.to_matrix() - ref).max() <= 1e-10


def test_x_closed_examples():
    np.testing.assert_allclose(thermal_state_x_closed(XModelParams(1, 0.5, 1), 1e9), np.eye(4) / 4, atol=1e-9)
    rho = thermal_state_x_closed(XModelParams(1, 0.5, 0.0), 1.0)
    assert rho[0, 1] == 0 and rho[0, 2] == 0
    XState.from_matrix(rho)  # already X-form


def test_x_closed_matches_numeric(rng):
    for _ in range(250):
        j, d, dm, t = random_model_draw(rng, t_range=(0.05, 50))
        rho = thermal_state_x_closed(XModelParams(j, d, dm), t)
        ref, _ = gibbs_expm(h_x_operator(j, d, dm), t)
        assert np.abs(rho - ref).max() <= 1e-10


def test_x_closed_zero_omega1():
    # Delta = 0 and Dx = 0 make Omega1 vanish
    rho = thermal_state_x_closed(XModelParams(1.0, 0.0, 0.0), 0.7)
    ref, _ = gibbs_expm(h_x_operator(1.0, 0.0, 0.0), 0.7)
    assert np.abs(rho - ref).max() <= 1e-12


@pytest.mark.parametrize("temp", [0.05, 1.0, 30.0])
def test_thermal_states_valid(rng, temp):
    for _ in range(30):
        j, d, dm, _t = random_model_draw(rng)
        for rho in (
            thermal_state_z_closed(ZModelParams(j, d, dm), temp).to_matrix(),
            thermal_state_x_closed(XModelParams(j, d, dm), temp),
        ):
            assert abs(np.trace(rho).real - 1) <= 1e-12
            assert np.abs(rho - rho.conj().T).max() == 0
            assert np.linalg.eigvalsh(rho).min() >= -1e-12


def test_z_dm_sign_symmetry(rng):
    for _ in range(50):
        j, d, dm, t = random_model_draw(rng)
        a = thermal_state_z_closed(ZModelParams(j, d, dm), t)
        b = thermal_state_z_closed(ZModelParams(j, d, -dm), t)
        np.testing.assert_allclose(a.populations, b.populations, atol=1e-14)
        assert abs(abs(a.r23) - abs(b.r23)) <= 1e-14
        assert abs(a.r23 - np.conj(b.r23)) <= 1e-14


def test_hadamard_fixed_point():
    x = hadamard_x_form(np.eye(4) / 4)
    np.testing.assert_allclose(x.to_matrix(), np.eye(4) / 4, atol=1e-16)


def test_hadamard_matches_closed_form(rng):
    for _ in range(100):
        j, d, dm, t = random_model_draw(rng)
        p = XModelParams(j, d, dm)
        got = hadamard_x_form(thermal_state_x_closed(p, t)).to_matrix()
        want = thermal_state_x_hadamard_closed(p, t).to_matrix()
        assert np.abs(got - want).max() <= 1e-12


def test_hadamard_closed_example_values():
    p = XModelParams(1, 0.5, 1)
    b, o1 = 1.0, math.sqrt(4.25)
    z = 2 * (math.exp(-b) * math.cosh(0.5 * b) + math.exp(b) * math.cosh(b * o1))
    x = thermal_state_x_hadamard_closed(p, 1.0)
    assert x.p11 == pytest.approx(math.exp(-b) * math.cosh(0.5) / z, rel=1e-13)
    assert x.p22 == pytest.approx(math.exp(b) * math.cosh(o1) / z, rel=1e-13)
    assert x.r14 == pytest.approx(math.exp(-b) * math.sinh(0.5) / z, rel=1e-13)
    assert x.r23 == pytest.approx(-math.exp(b) * math.sinh(o1) * (0.5 + 2j) / (o1 * z), rel=1e-13)


def test_hadamard_involution(rng):
    for _ in range(20):
        j, d, dm, t = random_model_draw(rng)
        rho = thermal_state_x_closed(XModelParams(j, d, dm), t)
        assert np.abs(double_hadamard(double_hadamard(rho)) - rho).max() <= 1e-13


def test_hadamard_rejects_non_centrosymmetric():
    rho = np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)
    with pytest.raises(NotCentrosymmetricError) as exc:
        hadamard_x_form(rho)
    assert exc.value.leakage > 1e-10


def test_xstate_validation():
    with pytest.raises(ValidationError):
        XState(0.5, 0.5, 0.5, -0.5)
    with pytest.raises(ValidationError):
        XState(0.25, 0.25, 0.25, 0.25, r14=0.3)
    XState(0.25, 0.25, 0.25, 0.25, r14=0.25)


def test_phase_normalize():
    x = XState(0.4, 0.1, 0.1, 0.4, 0.3 * np.exp(1.2j), 0.05)
    y = phase_normalize_x(x)
    assert y.r14 == pytest.approx(0.3) and y.r14.imag == 0
    assert y.r23 == 0.05
    np.testing.assert_array_equal(x.populations, y.populations)
    assert phase_normalize_x(y) == y


def test_phase_normalize_preserves_bruteforce_lqu(rng):
    for _ in range(5):
        x = XState(*random_x_state(rng))
        a = lqu_bruteforce(x.to_matrix()).value
        b = lqu_bruteforce(phase_normalize_x(x).to_matrix()).value
        assert abs(a - b) <= 1e-6


@settings(max_examples=100, deadline=None)
@given(
    st.floats(0.01, 5) | st.floats(-5, -0.01),
    st.floats(0, 1),
    st.floats(-5, 5),
    st.floats(1e-6, 1e3),
)
def test_closed_states_finite_everywhere(j, d, dm, t):
    x = thermal_state_z_closed(ZModelParams(j, d, dm), t)
    rho = thermal_state_x_closed(XModelParams(j, d, dm), t)
    assert np.all(np.isfinite(x.to_matrix())) and np.all(np.isfinite(rho))
    assert abs(np.trace(rho).real - 1) <= 1e-12
