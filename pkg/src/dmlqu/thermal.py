"""Thermal (Gibbs) states, partition functions and X-form reduction.

Closed forms are evaluated with every Boltzmann weight shifted by the largest
exponent present, so they stay finite down to ``T = 1e-6`` where a naive
``cosh(beta * E)`` would overflow.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .exceptions import NotCentrosymmetricError, ValidationError
from .linalg import HADAMARD, as_matrix, hermitian_eigendecomposition
from .models import XModelParams, ZModelParams

__all__ = [
    "T_MIN",
    "XState",
    "Partition",
    "beta_of",
    "check_density_matrix",
    "gibbs_state_numeric",
    "partition_z",
    "partition_x",
    "thermal_state_z_closed",
    "thermal_state_x_closed",
    "thermal_state_x_hadamard_closed",
    "hadamard_x_form",
    "phase_normalize_x",
]

T_MIN = 1e-6
X_LEAK_TOL = 1e-10
_X_PATTERN = np.array(
    [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]], dtype=bool
)
_HH = np.kron(HADAMARD, HADAMARD)


def beta_of(temp):
    """Inverse temperature, refusing temperatures below :data:`T_MIN`."""
    t = float(temp)
    if not math.isfinite(t) or t < T_MIN:
        raise ValidationError(
            f"temperature must be >= {T_MIN:g} (use models.ground_state for T = 0), got {temp!r}"
        )
    return 1.0 / t


@dataclass(frozen=True)
class Partition:
    """Partition function and its logarithm; ``value`` is ``inf`` past float range."""

    value: float
    log: float

    @classmethod
    def from_log(cls, log_z):
        return cls(math.exp(log_z) if log_z < 709.0 else math.inf, float(log_z))


@dataclass(frozen=True)
class XState:
    """Two-qubit X state: four populations and the two anti-diagonal coherences.

    ``r14`` is the <00|rho|11> entry and ``r23`` the <01|rho|10> entry; the
    lower-triangle entries are their conjugates.
    """

    p11: float
    p22: float
    p33: float
    p44: float
    r14: complex = 0j
    r23: complex = 0j

    def __post_init__(self):
        pops = (self.p11, self.p22, self.p33, self.p44)
        if min(pops) < -1e-12:
            raise ValidationError(f"negative population in X state: {pops}")
        if abs(sum(pops) - 1.0) > 1e-12:
            raise ValidationError(f"X-state populations sum to {sum(pops)!r}, not 1")
        if abs(self.r14) > math.sqrt(max(self.p11 * self.p44, 0.0)) + 1e-12:
            raise ValidationError("|r14| exceeds sqrt(p11 p44): state is not positive")
        if abs(self.r23) > math.sqrt(max(self.p22 * self.p33, 0.0)) + 1e-12:
            raise ValidationError("|r23| exceeds sqrt(p22 p33): state is not positive")

    @property
    def populations(self):
        return np.array([self.p11, self.p22, self.p33, self.p44])

    def to_matrix(self):
        m = np.diag(self.populations).astype(complex)
        m[0, 3] = self.r14
        m[3, 0] = np.conj(self.r14)
        m[1, 2] = self.r23
        m[2, 1] = np.conj(self.r23)
        return m

    @classmethod
    def from_matrix(cls, rho, tol=X_LEAK_TOL):
        """Read an X state off a 4x4 matrix, rejecting entries outside the X pattern."""
        rho = as_matrix(rho, dims=(4,))
        leak = np.where(_X_PATTERN, 0.0, np.abs(rho))
        i, j = np.unravel_index(np.argmax(leak), leak.shape)
        if leak[i, j] > tol:
            raise NotCentrosymmetricError(int(i), int(j), float(leak[i, j]))
        p = rho.diagonal().real
        return cls(float(p[0]), float(p[1]), float(p[2]), float(p[3]), complex(rho[0, 3]), complex(rho[1, 2]))


def check_density_matrix(rho, tol=1e-10):
    """Validate a 4x4 density matrix (Hermitian, unit trace, PSD) and return it as an array."""
    rho = as_matrix(rho, dims=(4,))
    w, _ = hermitian_eigendecomposition(rho)
    if abs(np.trace(rho).real - 1.0) > 1e-10:
        raise ValidationError(f"density matrix trace is {np.trace(rho).real!r}, not 1")
    if w[0] < -tol:
        raise ValidationError(f"density matrix has negative eigenvalue {w[0]:.3e}")
    return rho


def gibbs_state_numeric(h, temp):
    """``exp(-beta H) / Tr exp(-beta H)`` by numeric diagonalization.

    The weights are shifted by the ground energy before exponentiation, so
    any ``beta`` up to ``1 / T_MIN`` is safe.
    """
    beta = beta_of(temp)
    w, v = hermitian_eigendecomposition(h)
    weights = np.exp(-beta * (w - w[0]))
    rho = (v * (weights / weights.sum())) @ v.conj().T
    return 0.5 * (rho + rho.conj().T)


def partition_z(p: ZModelParams, temp) -> Partition:
    """``Z = 2 cosh(beta Omega) + 2 cosh(beta J (Delta - 1))``."""
    beta = beta_of(temp)
    a = beta * p.j * (p.delta - 1.0)
    b = beta * p.omega
    return Partition.from_log(float(logsumexp([b, -b, a, -a])))


def partition_x(p: XModelParams, temp) -> Partition:
    """``Z' = 2 (exp(-beta J) cosh(beta Delta J) + exp(beta J) cosh(beta Omega1))``."""
    beta = beta_of(temp)
    return Partition.from_log(float(logsumexp(_x_exponents(p, beta))))


def thermal_state_z_closed(p: ZModelParams, temp) -> XState:
    """Closed-form thermal state of the z-axis DM model.

    Populations are ``cosh(beta J (Delta-1)) / Z`` on |00>, |11> and
    ``cosh(beta Omega) / Z`` on |01>, |10>; the coherences are
    ``sinh(beta J (Delta-1)) / Z`` and ``-exp(i theta) sinh(beta Omega) / Z``.
    """
    beta = beta_of(temp)
    a = beta * p.j * (p.delta - 1.0)
    b = beta * p.omega
    m = max(abs(a), b)
    ea_p, ea_m = math.exp(a - m), math.exp(-a - m)
    eb_p, eb_m = math.exp(b - m), math.exp(-b - m)
    z = ea_p + ea_m + eb_p + eb_m  # 2 (cosh + cosh) exp(-m)
    p_even = 0.5 * (ea_p + ea_m) / z
    p_odd = 0.5 * (eb_p + eb_m) / z
    r14 = 0.5 * (ea_p - ea_m) / z
    r23 = -np.exp(1j * p.theta) * 0.5 * (eb_p - eb_m) / z
    # rounding-level renormalization keeps the sum exactly 1 for validation
    s = 2.0 * (p_even + p_odd)
    return XState(p_even / s, p_odd / s, p_odd / s, p_even / s, complex(r14 / s), complex(r23 / s))


def _x_exponents(p: XModelParams, beta):
    # -beta * energy for levels x1..x4
    j, dl, om1 = p.j, p.delta, p.omega1
    return np.array(
        [-beta * j * (1.0 + dl), -beta * j * (1.0 - dl), beta * (j - om1), beta * (j + om1)]
    )


def _x_weights(p: XModelParams, beta):
    """Shifted building blocks shared by the x-model closed forms.

    Returns ``(E, C, S, w1, w2, z)`` where, up to a common factor
    ``exp(-m)``, ``E C = exp(beta J) cosh(beta Omega1)``,
    ``E S = exp(beta J) sinh(beta Omega1) / Omega1``, ``w1 = exp(-beta J (1+Delta))``,
    ``w2 = exp(beta J (Delta-1))`` and ``z`` is ``Z'``.
    """
    x = _x_exponents(p, beta)
    m = float(np.max(x))
    w1, w2, w3, w4 = np.exp(x - m)
    om1 = p.omega1
    ec = 0.5 * (w4 + w3)
    if om1 > 0:
        es = 0.5 * (w4 - w3) / om1
    else:
        es = beta * w4
    return ec, es, w1, w2, w1 + w2 + w3 + w4


def thermal_state_x_closed(p: XModelParams, temp) -> np.ndarray:
    """Closed-form centrosymmetric thermal state of the x-axis DM model.

    The matrix has the pattern::

        a   mu  nu  b
        nu  c   d   mu
        mu  d   c   nu
        b   nu  mu  a

    with ``mu = -nu`` purely imaginary and proportional to ``Dx``.
    """
    beta = beta_of(temp)
    ec, es, w1, w2, z = _x_weights(p, beta)
    dj = p.delta * p.j
    a = (ec - dj * es + w2) / (2.0 * z)
    b = (w2 - ec + dj * es) / (2.0 * z)
    c = (ec + dj * es + w1) / (2.0 * z)
    d = (w1 - ec - dj * es) / (2.0 * z)
    mu = -1j * p.dx * es / z
    nu = -mu
    return np.array(
        [
            [a, mu, nu, b],
            [nu, c, d, mu],
            [mu, d, c, nu],
            [b, nu, mu, a],
        ],
        dtype=complex,
    )


def thermal_state_x_hadamard_closed(p: XModelParams, temp) -> XState:
    """Closed form of ``(H x H) rho' (H x H)`` for the x-axis DM thermal state.

    Populations ``exp(-beta J) cosh(beta Delta J) / Z'`` and
    ``exp(beta J) cosh(beta Omega1) / Z'``; coherences
    ``exp(-beta J) sinh(beta Delta J) / Z'`` and
    ``-exp(beta J) sinh(beta Omega1) (Delta J + 2i Dx) / (Omega1 Z')``.
    """
    beta = beta_of(temp)
    ec, es, w1, w2, z = _x_weights(p, beta)
    even = 0.5 * (w2 + w1) / z  # exp(-beta J) cosh(beta Delta J) / Z'
    r14 = 0.5 * (w2 - w1) / z  # exp(-beta J) sinh(beta Delta J) / Z'
    odd = ec / z
    r23 = -es * complex(p.delta * p.j, 2.0 * p.dx) / z
    s = 2.0 * (even + odd)
    return XState(even / s, odd / s, odd / s, even / s, complex(r14 / s), complex(r23 / s))


def hadamard_x_form(rho) -> XState:
    """Conjugate a centrosymmetric state by ``H x H`` and read off the X state.

    Raises :class:`NotCentrosymmetricError` if any entry outside the X
    pattern exceeds 1e-10 after the transform.
    """
    rho = as_matrix(rho, dims=(4,))
    return XState.from_matrix(_HH @ rho @ _HH)


def double_hadamard(rho):
    """``(H x H) rho (H x H)`` as a full matrix."""
    return _HH @ as_matrix(rho, dims=(4,)) @ _HH


def phase_normalize_x(x: XState) -> XState:
    """Remove the coherence phases with a local diagonal unitary."""
    return XState(x.p11, x.p22, x.p33, x.p44, complex(abs(x.r14)), complex(abs(x.r23)))
