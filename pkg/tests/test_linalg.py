import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from dmlqu import linalg
from dmlqu.exceptions import ExponentOverflowError, NotHermitianError, NotPSDError, ValidationError
from dmlqu.linalg import (
    IDENTITY2,
    SIGMA_X,
    SIGMA_Z,
    hermitian_eigendecomposition,
    kron,
    matrix_exp_scaled,
    matrix_sqrt_psd,
)
from dmlqu.models import ZModelParams, hamiltonian_z
from dmlqu.thermal import gibbs_state_numeric, partition_z

from oracles import random_density, random_pure


def _random_hermitian(rng, n=4):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a + a.conj().T


def test_eig_diagonal():
    w, v = hermitian_eigendecomposition(np.diag([1.0, 2.0, 3.0, 4.0]))
    np.testing.assert_array_equal(w, [1, 2, 3, 4])
    np.testing.assert_allclose(v, np.eye(4), atol=1e-15)


def test_eig_zero():
    w, _ = hermitian_eigendecomposition(np.zeros((4, 4)))
    np.testing.assert_array_equal(w, np.zeros(4))


def test_eig_hamiltonian_z_matches_omega():
    # Omega = sqrt(4 + 2.25) = 2.5
    w, _ = hermitian_eigendecomposition(hamiltonian_z(ZModelParams(1, 0.5, 1)))
    np.testing.assert_allclose(w, [-2.5, -0.5, 0.5, 2.5], atol=1e-12)


def test_eig_random_reconstruction_and_orthonormality(rng):
    for _ in range(1000):
        m = _random_hermitian(rng)
        dec = hermitian_eigendecomposition(m)
        assert np.all(np.diff(dec.eigenvalues) >= 0)
        assert np.abs(dec.reconstruct() - m).max() <= 1e-10
        v = dec.eigenvectors
        assert np.abs(v.conj().T @ v - np.eye(4)).max() <= 1e-12


def test_eig_sign_convention_and_determinism(rng):
    m = _random_hermitian(rng)
    a = hermitian_eigendecomposition(m)
    b = hermitian_eigendecomposition(m.copy())
    np.testing.assert_array_equal(a.eigenvectors, b.eigenvectors)
    for k in range(4):
        col = a.eigenvectors[:, k]
        first = col[np.flatnonzero(np.abs(col) > 1e-10)[0]]
        assert abs(first.imag) < 1e-15 and first.real > 0


def test_eig_rejects_non_hermitian():
    m = np.zeros((4, 4), dtype=complex)
    m[1, 3] = 1.0
    with pytest.raises(NotHermitianError) as exc:
        hermitian_eigendecomposition(m)
    assert exc.value.pair == (1, 3)
    assert "[1][3]" in str(exc.value)


def test_eig_rejects_bad_shape():
    with pytest.raises(ValidationError):
        hermitian_eigendecomposition(np.eye(3))


def test_sqrt_identity_quarter():
    np.testing.assert_allclose(matrix_sqrt_psd(np.eye(4) / 4), np.eye(4) / 2, atol=1e-15)


def test_sqrt_projector_is_itself(rng):
    p = random_pure(rng)
    np.testing.assert_allclose(matrix_sqrt_psd(p), p, atol=1e-10)


def test_sqrt_thermal_state_squares_back():
    rho = gibbs_state_numeric(hamiltonian_z(ZModelParams(1, 0.5, 1)), 1.0)
    s = matrix_sqrt_psd(rho)
    assert np.abs(s @ s - rho).max() <= 1e-9
    assert np.abs(s - s.conj().T).max() <= 1e-15
    assert np.linalg.eigvalsh(s).min() >= 0


def test_sqrt_random_psd(rng):
    for k in range(200):
        r = random_density(rng, rank=1 + k % 4)
        s = matrix_sqrt_psd(r)
        assert np.abs(s @ s - r).max() <= 1e-9


def test_sqrt_clamps_tiny_negative():
    s = matrix_sqrt_psd(np.diag([0.5, 0.5, 0.0, -5e-11]))
    assert s[3, 3] == 0


def test_sqrt_rejects_negative():
    with pytest.raises(NotPSDError) as exc:
        matrix_sqrt_psd(np.diag([1.0, 0.2, 0.0, -1e-3]))
    assert exc.value.eigenvalue == pytest.approx(-1e-3)


def test_kron_examples():
    np.testing.assert_array_equal(kron(IDENTITY2, IDENTITY2), np.eye(4))
    np.testing.assert_array_equal(kron(SIGMA_Z, IDENTITY2), np.diag([1, 1, -1, -1]))
    np.testing.assert_array_equal(kron(SIGMA_X, SIGMA_X), np.fliplr(np.eye(4)))


def test_kron_rejects_bad_dims():
    with pytest.raises(ValidationError):
        kron(np.eye(4), np.eye(2))


_entries = st.floats(-1, 1, allow_nan=False)


@settings(max_examples=200, deadline=None)
@given(arrays(float, (3, 2, 2), elements=_entries), arrays(float, (3, 2, 2), elements=_entries))
def test_kron_bilinear(re, im):
    a, a2, b = re + 1j * im
    assert np.abs(kron(a + a2, b) - kron(a, b) - kron(a2, b)).max() <= 1e-14


def test_exp_zero_scale_is_identity(rng):
    np.testing.assert_array_equal(matrix_exp_scaled(_random_hermitian(rng), 0.0), np.eye(4))


def test_exp_diagonal():
    d = np.array([0.1, -2.0, 3.0, 0.5])
    np.testing.assert_allclose(matrix_exp_scaled(np.diag(d), 0.7), np.diag(np.exp(0.7 * d)), rtol=1e-14)


def test_exp_trace_matches_closed_partition():
    p = ZModelParams(1, 0.5, 1)
    z = np.trace(matrix_exp_scaled(hamiltonian_z(p), -1.0)).real
    assert z == pytest.approx(partition_z(p, 1.0).value, rel=1e-12)


def test_exp_overflow_guard():
    with pytest.raises(ExponentOverflowError, match="gibbs_state_numeric"):
        matrix_exp_scaled(np.diag([1.0, 0, 0, 0]), 800.0)


def test_constants_are_read_only():
    with pytest.raises(ValueError):
        linalg.SIGMA_X[0, 0] = 5
