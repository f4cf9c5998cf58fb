"""Small dense complex linear algebra for 2x2 and 4x4 matrices.

Everything here is a pure function of its arguments. Two-qubit operators use
the computational basis ordering |00>, |01>, |10>, |11>, so ``kron(A, B)``
acts with ``A`` on the first qubit.
"""

from typing import NamedTuple

import numpy as np

from .exceptions import ExponentOverflowError, NotHermitianError, NotPSDError, ValidationError

__all__ = [
    "IDENTITY2",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "PAULIS",
    "HADAMARD",
    "EigenDecomposition",
    "as_matrix",
    "check_hermitian",
    "hermitian_eigendecomposition",
    "matrix_sqrt_psd",
    "kron",
    "matrix_exp_scaled",
]

HERMITIAN_TOL = 1e-12
PSD_CLAMP = 1e-10
EXP_LIMIT = 700.0

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
#: sigma_0 .. sigma_3, indexed the way Fano-Bloch coefficients are.
PAULIS = (IDENTITY2, SIGMA_X, SIGMA_Y, SIGMA_Z)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0)

for _m in (IDENTITY2, SIGMA_X, SIGMA_Y, SIGMA_Z, HADAMARD):
    _m.setflags(write=False)


class EigenDecomposition(NamedTuple):
    """Eigenvalues in ascending order and the matching eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_matrix(m, dims=(2, 4)):
    """Return ``m`` as a square complex array, checking its dimension."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in dims:
        raise ValidationError(f"expected a square matrix of dimension {dims}, got shape {a.shape}")
    return a


def check_hermitian(m, tol=HERMITIAN_TOL):
    """Raise :class:`NotHermitianError` naming the worst entry pair if ``m`` is not Hermitian."""
    a = as_matrix(m)
    dev = np.abs(a - a.conj().T)
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix contains non-finite entries")
    i, j = np.unravel_index(np.argmax(dev), dev.shape)
    if dev[i, j] > tol:
        raise NotHermitianError(int(min(i, j)), int(max(i, j)), float(dev[i, j]))
    return a


def _fix_phases(vecs):
    # make the first non-negligible component of every column real and positive
    out = vecs.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        idx = np.flatnonzero(np.abs(col) > 1e-10)
        if idx.size:
            z = col[idx[0]]
            out[:, k] = col * (abs(z) / z)
    return out


def hermitian_eigendecomposition(m):
    """Diagonalize a Hermitian matrix.

    Parameters
    ----------
    m : array_like, shape (n, n)
        Hermitian matrix with n = 2 or 4.

    Returns
    -------
    EigenDecomposition
        Ascending real eigenvalues and orthonormal eigenvectors (as columns)
        whose first non-negligible component is real and positive.
    """
    a = check_hermitian(m)
    a = 0.5 * (a + a.conj().T)
    w, v = np.linalg.eigh(a)
    return EigenDecomposition(w, _fix_phases(v))


def matrix_sqrt_psd(m):
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues in ``[-1e-10, 0)`` are treated as zero; anything more
    negative raises :class:`NotPSDError`. Positive eigenvalues below the
    eigensolver's rounding floor (``16 eps max|lambda|``) are zeroed too, so
    a rank-deficient state keeps its rank under the square root.
    """
    w, v = hermitian_eigendecomposition(m)
    if w[0] < -PSD_CLAMP:
        raise NotPSDError(float(w[0]))
    floor = 16.0 * np.finfo(float).eps * np.abs(w).max()
    w = np.where(w <= floor, 0.0, w)
    s = (v * np.sqrt(w)) @ v.conj().T
    return 0.5 * (s + s.conj().T)


def kron(a, b):
    """Kronecker product of two 2x2 matrices (``a`` acts on the first qubit)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValidationError(f"kron expects two 2x2 matrices, got {a.shape} and {b.shape}")
    return np.kron(a, b)


def matrix_exp_scaled(m, s):
    """Return ``exp(s * m)`` for Hermitian ``m`` via its eigendecomposition.

    Raises :class:`ExponentOverflowError` when ``s * lambda`` exceeds 700 for
    some eigenvalue; thermal states should go through
    :func:`dmlqu.thermal.gibbs_state_numeric`, which shifts the exponent.
    """
    w, v = hermitian_eigendecomposition(m)
    x = s * w
    if np.max(x) > EXP_LIMIT:
        raise ExponentOverflowError(
            f"exp argument {np.max(x):.1f} exceeds {EXP_LIMIT}; "
            "use dmlqu.thermal.gibbs_state_numeric for shifted thermal weights"
        )
    if s == 0:
        return np.eye(len(w), dtype=complex)
    e = (v * np.exp(x)) @ v.conj().T
    return 0.5 * (e + e.conj().T)
