r"""Local quantum uncertainty (LQU) of two-qubit states, measured on qubit A.

Three independent routes are provided:

* :func:`lqu_closed` -- analytic eigenvalues ``omega1, omega2, omega3`` of the
  W matrix for X states, ``U = 1 - max(omega1, omega3)``;
* :func:`lqu_w` -- numeric W matrix
  ``W_lk = Tr(sqrt(rho) (s_l x 1) sqrt(rho) (s_k x 1))`` for any state,
  ``U = 1 - lambda_max(W)``;
* :func:`lqu_bruteforce` -- direct minimization of the Wigner-Yanase skew
  information over unit Bloch vectors ``n`` of the observable ``n.sigma x 1``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import RankDeficiencyError, ValidationError
from .linalg import IDENTITY2, PAULIS, SIGMA_X, SIGMA_Y, SIGMA_Z, as_matrix, matrix_sqrt_psd
from .models import XModelParams, ZModelParams
from .thermal import (
    Partition,
    XState,
    hadamard_x_form,
    partition_x,
    partition_z,
    phase_normalize_x,
    thermal_state_x_closed,
    thermal_state_z_closed,
)

__all__ = [
    "FanoBloch",
    "OmegaTriple",
    "LquResult",
    "LocalObservable",
    "ThermalLqu",
    "fano_bloch",
    "correlation_matrix",
    "omega_eigenvalues",
    "lqu_closed",
    "skew_information",
    "variance_observable",
    "w_matrix",
    "lqu_w",
    "lqu_bruteforce",
    "fibonacci_sphere",
    "thermal_lqu",
    "model_params",
    "threshold_temperature",
]

DENOMINATOR_FLOOR = 1e-9
_LOCAL_PAULIS = tuple(np.kron(s, IDENTITY2) for s in (SIGMA_X, SIGMA_Y, SIGMA_Z))


@dataclass(frozen=True)
class FanoBloch:
    r00: float
    r11: float
    r22: float
    r33: float
    r03: float
    r30: float


@dataclass(frozen=True)
class OmegaTriple:
    omega1: float
    omega2: float
    omega3: float
    t1: float
    t2: float
    d1: float
    d2: float


@dataclass(frozen=True)
class LquResult:
    """LQU value with the two competing W eigenvalues.

    ``omega1`` is the largest transverse (x/y) eigenvalue of W and ``omega3``
    the longitudinal (z) one; ``branch`` names whichever set the maximum.
    """

    value: float
    omega1: float
    omega3: float
    branch: str
    method: str


@dataclass(frozen=True)
class LocalObservable:
    """Observable ``(n . sigma) x 1`` on qubit A, ``n`` a unit vector."""

    nx: float
    ny: float
    nz: float

    def __post_init__(self):
        if abs(self.nx**2 + self.ny**2 + self.nz**2 - 1.0) > 1e-12:
            raise ValidationError("LocalObservable needs a unit Bloch vector")

    @classmethod
    def from_vector(cls, v):
        v = np.asarray(v, dtype=float)
        norm = np.linalg.norm(v)
        if v.shape != (3,) or norm == 0:
            raise ValidationError("Bloch vector must be a nonzero 3-vector")
        v = v / norm
        return cls(float(v[0]), float(v[1]), float(v[2]))

    @classmethod
    def from_angles(cls, theta, phi):
        return cls.from_vector(
            [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
        )

    @property
    def vector(self):
        return np.array([self.nx, self.ny, self.nz])

    def operator(self):
        return self.nx * _LOCAL_PAULIS[0] + self.ny * _LOCAL_PAULIS[1] + self.nz * _LOCAL_PAULIS[2]


@dataclass(frozen=True)
class ThermalLqu:
    model: str
    params: object
    temp: float
    lqu: LquResult
    partition: Partition


def fano_bloch(x: XState) -> FanoBloch:
    """Nonzero Fano-Bloch coefficients ``R_ab = Tr(rho s_a x s_b)`` of a phase-normalized X state."""
    a14, a23 = abs(x.r14), abs(x.r23)
    return FanoBloch(
        r00=1.0,
        r11=2.0 * (a23 + a14),
        r22=2.0 * (a23 - a14),
        r33=1.0 - 2.0 * (x.p22 + x.p33),
        r03=1.0 - 2.0 * (x.p22 + x.p44),
        r30=1.0 - 2.0 * (x.p33 + x.p44),
    )


def correlation_matrix(rho):
    """Full 4x4 table ``R[a, b] = Re Tr(rho s_a x s_b)`` for any two-qubit state."""
    rho = as_matrix(rho, dims=(4,))
    return np.array([[np.trace(rho @ np.kron(sa, sb)).real for sb in PAULIS] for sa in PAULIS])


def omega_eigenvalues(x: XState) -> OmegaTriple:
    """Closed-form eigenvalues of W for an X state.

    With ``t1 = p11 + p44``, ``t2 = p22 + p33``, ``d1 = p11 p44 - |r14|^2``,
    ``d2 = p22 p33 - |r23|^2`` and ``s = sqrt((2 sqrt(d1) + t1)(2 sqrt(d2) + t2))``::

        omega1 = s + (R03^2 + R11^2 - R22^2 - R30^2) / (4 s)
        omega2 = s + (R03^2 - R11^2 + R22^2 - R30^2) / (4 s)
        omega3 = (2 (sqrt(d1) + sqrt(d2)) + 1) / 2
                 + ((R03 + R30)^2 - (R22 - R11)^2) / (8 (2 sqrt(d1) + t1))
                 + ((R03 - R30)^2 - (R11 + R22)^2) / (8 (2 sqrt(d2) + t2))

    Raises
    ------
    RankDeficiencyError
        If either ``2 sqrt(d) + t`` falls below 1e-9.
    """
    x = phase_normalize_x(x)
    r = fano_bloch(x)
    t1 = x.p11 + x.p44
    t2 = x.p22 + x.p33
    d1 = max(x.p11 * x.p44 - abs(x.r14) ** 2, 0.0)
    d2 = max(x.p22 * x.p33 - abs(x.r23) ** 2, 0.0)
    s1, s2 = math.sqrt(d1), math.sqrt(d2)
    den1 = 2.0 * s1 + t1
    den2 = 2.0 * s2 + t2
    if den1 < DENOMINATOR_FLOOR:
        raise RankDeficiencyError("|00>,|11>", den1)
    if den2 < DENOMINATOR_FLOOR:
        raise RankDeficiencyError("|01>,|10>", den2)
    s = math.sqrt(den1 * den2)
    omega1 = s + (r.r03**2 + r.r11**2 - r.r22**2 - r.r30**2) / (4.0 * s)
    omega2 = s + (r.r03**2 - r.r11**2 + r.r22**2 - r.r30**2) / (4.0 * s)
    omega3 = 0.5 * (2.0 * (s1 + s2) + 1.0) + 0.125 * (
        ((r.r03 + r.r30) ** 2 - (r.r22 - r.r11) ** 2) / den1
        + ((r.r03 - r.r30) ** 2 - (r.r11 + r.r22) ** 2) / den2
    )
    return OmegaTriple(omega1, omega2, omega3, t1, t2, d1, d2)


def _result(omega1, omega3, method):
    top = max(omega1, omega3)
    branch = "omega1" if omega1 >= omega3 else "omega3"
    return LquResult(min(max(1.0 - top, 0.0), 1.0), omega1, omega3, branch, method)


def lqu_closed(x: XState) -> LquResult:
    """LQU of an X state from the analytic omega eigenvalues.

    Rank-deficient states (a vanishing X block, e.g. Bell states) fall back
    to :func:`lqu_w`, which is reported in ``method``.
    """
    try:
        om = omega_eigenvalues(x)
    except RankDeficiencyError:
        return lqu_w(x.to_matrix())
    return _result(om.omega1, om.omega3, "closed-form")


def skew_information(rho, obs: LocalObservable) -> float:
    """Wigner-Yanase skew information ``-1/2 Tr([sqrt(rho), K]^2)``."""
    s = matrix_sqrt_psd(rho)
    k = obs.operator()
    c = s @ k - k @ s
    val = -0.5 * np.trace(c @ c).real
    return max(float(val), 0.0)


def variance_observable(rho, obs: LocalObservable) -> float:
    rho = as_matrix(rho, dims=(4,))
    k = obs.operator()
    mean = np.trace(rho @ k).real
    return max(float(np.trace(rho @ k @ k).real - mean**2), 0.0)


def w_matrix(rho):
    """The real symmetric 3x3 matrix whose top eigenvalue fixes the LQU."""
    s = matrix_sqrt_psd(rho)
    left = [s @ p for p in _LOCAL_PAULIS]
    w = np.array([[np.trace(a @ b) for b in left] for a in left])
    if np.max(np.abs(w.imag)) > 1e-10:
        raise ValidationError(f"W matrix has imaginary residue {np.max(np.abs(w.imag)):.3e}")
    w = w.real
    return 0.5 * (w + w.T)


def lqu_w(rho) -> LquResult:
    """``1 - lambda_max(W)`` for an arbitrary two-qubit state."""
    w = w_matrix(rho)
    vals, vecs = np.linalg.eigh(w)
    # longitudinal eigenvalue: the eigenvector leaning most on z
    kz = int(np.argmax(np.abs(vecs[2, :])))
    omega3 = float(vals[kz])
    omega1 = float(max(vals[k] for k in range(3) if k != kz))
    return _result(omega1, omega3, "w-matrix")


def fibonacci_sphere(n):
    """``n`` nearly uniform unit vectors on the sphere (golden-angle spiral)."""
    k = np.arange(n) + 0.5
    z = 1.0 - 2.0 * k / n
    r = np.sqrt(1.0 - z * z)
    phi = np.pi * (3.0 - math.sqrt(5.0)) * k
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def _skew_batch(s, dirs):
    # -1/2 Tr([s, K]^2) for K = n.sigma x 1, one value per row of dirs
    k = np.einsum("ni,iab->nab", dirs, np.array(_LOCAL_PAULIS))
    c = s @ k - k @ s
    return -0.5 * np.einsum("nab,nba->n", c, c).real


def _tangent_basis(n):
    a = np.array([1.0, 0.0, 0.0]) if abs(n[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(n, a)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(n, e1)


_PATTERN = np.array(
    [[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1], [1, -1], [-1, 1], [-1, -1]], dtype=float
)


def _refine(s, n0, f0, step, refine_iters, tol):
    """Compass search on the sphere: try 8 tangent moves, halve the step on failure."""
    n, f = n0, f0
    halvings = 0
    while step > tol and halvings < refine_iters:
        e1, e2 = _tangent_basis(n)
        cand = n + step * (_PATTERN[:, :1] * e1 + _PATTERN[:, 1:] * e2)
        cand /= np.linalg.norm(cand, axis=1, keepdims=True)
        vals = _skew_batch(s, cand)
        k = int(np.argmin(vals))
        if vals[k] < f:
            n, f = cand[k], float(vals[k])
        else:
            step *= 0.5
            halvings += 1
    return n, f


def lqu_bruteforce(rho, coarse_grid=4096, refine_iters=60, tol=1e-7, seeds=4) -> LquResult:
    """Minimize the skew information directly over local observables on A.

    A Fibonacci grid of ``coarse_grid`` directions is scanned, then the best
    ``seeds`` directions are polished by a compass search whose step is
    halved (at most ``refine_iters`` times) until it drops below ``tol``.
    ``omega1``/``omega3`` are ``1 - I`` along the best transverse
    (``n = x`` or ``y``) and longitudinal (``n = z``) axes.
    """
    s = matrix_sqrt_psd(rho)
    dirs = fibonacci_sphere(int(coarse_grid))
    vals = _skew_batch(s, dirs)
    order = np.argsort(vals, kind="stable")[: max(1, int(seeds))]
    step = math.sqrt(4.0 * math.pi / len(dirs))
    best_f = math.inf
    for idx in order:
        _, f = _refine(s, dirs[idx], float(vals[idx]), step, refine_iters, tol)
        best_f = min(best_f, f)
    axes = _skew_batch(s, np.eye(3))
    omega1 = 1.0 - float(min(axes[0], axes[1]))
    omega3 = 1.0 - float(axes[2])
    value = min(max(best_f, 0.0), 1.0)
    branch = "omega1" if omega1 >= omega3 else "omega3"
    return LquResult(value, omega1, omega3, branch, "brute-force")


_MODEL_ALIASES = {"z": "z-dm", "z-dm": "z-dm", "x": "x-dm", "x-dm": "x-dm"}


def model_params(model, j, delta, dm, allow_any_delta=False):
    """Build the parameter object for ``model`` ('z-dm' or 'x-dm')."""
    name = _MODEL_ALIASES.get(model)
    if name is None:
        raise ValidationError(f"unknown model {model!r}; expected 'z-dm' or 'x-dm'")
    if name == "z-dm":
        return ZModelParams(j, delta, dm, allow_any_delta)
    return XModelParams(j, delta, dm, allow_any_delta)


def thermal_lqu(model, params, temp) -> ThermalLqu:
    """LQU of a model's thermal state at temperature ``temp``.

    z-dm: closed-form X state -> phase removal -> closed-form LQU.
    x-dm: closed-form centrosymmetric state -> double Hadamard -> phase
    removal -> closed-form LQU.
    """
    name = _MODEL_ALIASES.get(model)
    if name == "z-dm" and isinstance(params, ZModelParams):
        x = thermal_state_z_closed(params, temp)
        part = partition_z(params, temp)
    elif name == "x-dm" and isinstance(params, XModelParams):
        x = hadamard_x_form(thermal_state_x_closed(params, temp))
        part = partition_x(params, temp)
    else:
        raise ValidationError(f"model {model!r} does not match parameters {type(params).__name__}")
    res = lqu_closed(phase_normalize_x(x))
    return ThermalLqu(name, params, float(temp), res, part)


def threshold_temperature(model, params, eps=0.01, t_lo=1e-3, t_hi=1e4, rtol=1e-9):
    """Smallest temperature where the thermal LQU drops below ``eps``.

    Bisects in ``log10(T)`` assuming LQU decreases with T on
    ``[t_lo, t_hi]``. Returns ``None`` if LQU is still ``>= eps`` at ``t_hi``
    and ``t_lo`` if it is already below at ``t_lo``.
    """
    def f(t):
        return thermal_lqu(model, params, t).lqu.value

    if f(t_hi) >= eps:
        return None
    if f(t_lo) < eps:
        return t_lo
    lo, hi = math.log10(t_lo), math.log10(t_hi)
    while hi - lo > rtol:
        mid = 0.5 * (lo + hi)
        if f(10.0**mid) < eps:
            hi = mid
        else:
            lo = mid
    return 10.0**hi
