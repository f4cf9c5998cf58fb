r"""Two-qubit Heisenberg XY Hamiltonians with a Dzyaloshinskii-Moriya term.

z-axis DM model::

    H = J (sx sx + Delta sy sy) + Dz (sx sy - sy sx)

x-axis DM model::

    H' = J (sx sx + Delta sy sy) + Dx (sy sz - sz sy)

Both are written in the basis |00>, |01>, |10>, |11> with k_B = 1. Levels are
labelled ``z1``..``z4`` and ``x1``..``x4`` following the usual numbering of
the analytic eigenpairs:

=====  ===================  =====  ===================
label  energy               label  energy
=====  ===================  =====  ===================
z1     J (Delta - 1)        x1     J (1 + Delta)
z2     -J (Delta - 1)       x2     J (1 - Delta)
z3     +Omega               x3     -J + Omega1
z4     -Omega               x4     -J - Omega1
=====  ===================  =====  ===================
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ValidationError
from .linalg import hermitian_eigendecomposition

__all__ = [
    "ZModelParams",
    "XModelParams",
    "Level",
    "Spectrum",
    "GroundStateReport",
    "hamiltonian_z",
    "hamiltonian_x",
    "spectrum_z",
    "spectrum_x",
    "ground_state",
    "DEGENERACY_GAP",
]

DEGENERACY_GAP = 1e-9
_SQRT_HALF = 1.0 / math.sqrt(2.0)


def _validate_common(j, delta, dm, allow_any_delta, dm_name):
    for name, v in (("j", j), ("delta", delta), (dm_name, dm)):
        if not math.isfinite(v):
            raise ValidationError(f"{name} must be finite, got {v!r}")
    if j == 0:
        raise ValidationError("coupling j must be nonzero")
    if not allow_any_delta and not 0.0 <= delta <= 1.0:
        raise ValidationError(
            f"anisotropy delta must lie in [0, 1], got {delta!r} (pass allow_any_delta=True to override)"
        )


@dataclass(frozen=True)
class ZModelParams:
    """Coupling ``j``, anisotropy ``delta`` and z-axis DM strength ``dz``."""

    j: float
    delta: float
    dz: float
    allow_any_delta: bool = False

    def __post_init__(self):
        _validate_common(self.j, self.delta, self.dz, self.allow_any_delta, "dz")

    @property
    def omega(self):
        return math.hypot(2.0 * self.dz, (self.delta + 1.0) * self.j)

    @property
    def theta(self):
        # phase of the |01><10| element J(1+Delta) + 2i Dz, so quadrant-aware
        return math.atan2(2.0 * self.dz, self.j * (self.delta + 1.0))

    @property
    def dm(self):
        return self.dz


@dataclass(frozen=True)
class XModelParams:
    """Coupling ``j``, anisotropy ``delta`` and x-axis DM strength ``dx``."""

    j: float
    delta: float
    dx: float
    allow_any_delta: bool = False

    def __post_init__(self):
        _validate_common(self.j, self.delta, self.dx, self.allow_any_delta, "dx")

    @property
    def omega1(self):
        return math.hypot(2.0 * self.dx, self.delta * self.j)

    @property
    def zeta(self):
        """``(zeta1, zeta2) = ((Omega1 - Delta J)/Dx, (Omega1 + Delta J)/Dx)``.

        Evaluated without cancellation; undefined for ``dx == 0``.
        """
        if self.dx == 0:
            raise ValidationError("zeta1, zeta2 are undefined for dx = 0")
        o, dj, d = self.omega1, self.delta * self.j, self.dx
        if dj >= 0:
            return 4.0 * d / (o + dj), (o + dj) / d
        return (o - dj) / d, 4.0 * d / (o - dj)

    @property
    def dm(self):
        return self.dx


@dataclass(frozen=True)
class Level:
    label: str
    energy: float
    vector: np.ndarray


@dataclass(frozen=True)
class Spectrum:
    """Four labelled eigenpairs of a two-qubit Hamiltonian (in label order)."""

    levels: tuple

    @property
    def energies(self):
        return np.array([lv.energy for lv in self.levels])

    @property
    def labels(self):
        return [lv.label for lv in self.levels]

    def sorted(self):
        return sorted(self.levels, key=lambda lv: lv.energy)

    def __getitem__(self, label):
        for lv in self.levels:
            if lv.label == label:
                return lv
        raise KeyError(label)


@dataclass(frozen=True)
class GroundStateReport:
    ground_label: str
    ground_energy: float
    degenerate: bool
    maximally_entangled: bool
    gap: float


def hamiltonian_z(p: ZModelParams) -> np.ndarray:
    """Matrix of the z-axis DM Hamiltonian."""
    corner = p.j * (1.0 - p.delta)
    inner = p.j * (p.delta + 1.0)
    h = np.zeros((4, 4), dtype=complex)
    h[0, 3] = h[3, 0] = corner
    h[1, 2] = inner + 2j * p.dz
    h[2, 1] = inner - 2j * p.dz
    return h


def hamiltonian_x(p: XModelParams) -> np.ndarray:
    """Matrix of the x-axis DM Hamiltonian.

    The DM term only couples the even-parity pair (|00>, |11>) to the
    odd-parity pair (|01>, |10>), with entries +-i Dx.
    """
    c = p.j * (1.0 - p.delta)
    r = p.j * (p.delta + 1.0)
    d = 1j * p.dx
    return np.array(
        [
            [0, d, -d, c],
            [-d, 0, r, d],
            [d, r, 0, -d],
            [c, -d, d, 0],
        ],
        dtype=complex,
    )


def spectrum_z(p: ZModelParams) -> Spectrum:
    s = _SQRT_HALF
    ph = np.exp(1j * p.theta)
    a = p.j * (p.delta - 1.0)
    om = p.omega
    levels = (
        Level("z1", a, np.array([-s, 0, 0, s], dtype=complex)),
        Level("z2", -a, np.array([s, 0, 0, s], dtype=complex)),
        Level("z3", om, np.array([0, ph * s, s, 0], dtype=complex)),
        Level("z4", -om, np.array([0, -ph * s, s, 0], dtype=complex)),
    )
    return Spectrum(levels)


def _x_mixed_pair(p: XModelParams):
    """Eigenvectors for -J +- Omega1 inside span{|00>-|11>, |01>-|10>}."""
    if p.dx != 0:
        z1, z2 = p.zeta
        v3 = np.array([-2.0, 1j * z1, -1j * z1, 2.0], dtype=complex)
        v4 = np.array([-2.0, -1j * z2, 1j * z2, 2.0], dtype=complex)
        return v3 / np.linalg.norm(v3), v4 / np.linalg.norm(v4)
    # dx = 0: zeta is singular, so diagonalize the 2x2 block numerically
    s = _SQRT_HALF
    basis = np.array([[s, 0, 0, -s], [0, s, -s, 0]], dtype=complex).T
    block = basis.conj().T @ hamiltonian_x(p) @ basis
    w, v = hermitian_eigendecomposition(block)
    low, high = basis @ v[:, 0], basis @ v[:, 1]
    return high, low


def spectrum_x(p: XModelParams) -> Spectrum:
    s = _SQRT_HALF
    om1 = p.omega1
    v3, v4 = _x_mixed_pair(p)
    levels = (
        Level("x1", p.j * (1.0 + p.delta), np.array([0, s, s, 0], dtype=complex)),
        Level("x2", p.j * (1.0 - p.delta), np.array([s, 0, 0, s], dtype=complex)),
        Level("x3", -p.j + om1, v3),
        Level("x4", -p.j - om1, v4),
    )
    return Spectrum(levels)


def _reduced_first_qubit(vec):
    psi = np.asarray(vec, dtype=complex).reshape(2, 2)
    return psi @ psi.conj().T


def ground_state(s: Spectrum) -> GroundStateReport:
    """Pick the lowest of the four analytic levels by direct comparison.

    Exact ties go to the higher-numbered label (z4/x4 at zero anisotropy and
    zero DM); ``degenerate`` is set when the next level lies within
    :data:`DEGENERACY_GAP`.
    """
    order = sorted(range(4), key=lambda k: (s.levels[k].energy, -k))
    g = s.levels[order[0]]
    gap = s.levels[order[1]].energy - g.energy
    red = _reduced_first_qubit(g.vector)
    maximal = bool(np.max(np.abs(red - 0.5 * np.eye(2))) <= 1e-10)
    return GroundStateReport(g.label, g.energy, bool(gap < DEGENERACY_GAP), maximal, gap)
