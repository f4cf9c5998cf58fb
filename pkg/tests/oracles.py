"""Reference computations that share no code path with dmlqu.

Hamiltonians are assembled from Pauli operator sums, Gibbs states use
scipy's Pade ``expm``, square roots use ``scipy.linalg.sqrtm``.
"""

import numpy as np
from scipy.linalg import expm, sqrtm

I2 = np.eye(2)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def h_z_operator(j, delta, dz):
    return j * (np.kron(SX, SX) + delta * np.kron(SY, SY)) + dz * (np.kron(SX, SY) - np.kron(SY, SX))


def h_x_operator(j, delta, dx):
    return j * (np.kron(SX, SX) + delta * np.kron(SY, SY)) + dx * (np.kron(SY, SZ) - np.kron(SZ, SY))


def gibbs_expm(h, t):
    r = expm(-h / t)
    return r / np.trace(r).real, np.trace(expm(-h / t)).real


def w_trace(rho):
    s = sqrtm(rho)
    ops = [np.kron(p, I2) for p in (SX, SY, SZ)]
    return np.array([[np.trace(s @ a @ s @ b).real for b in ops] for a in ops])


def lqu_trace(rho):
    return 1.0 - np.linalg.eigvalsh(w_trace(rho)).max()


def random_density(rng, rank=4):
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    r = g @ g.conj().T
    return r / np.trace(r).real


def random_pure(rng):
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    v /= np.linalg.norm(v)
    return np.outer(v, v.conj())


def random_qubit_state(rng, pure=False):
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    if not pure:
        v *= rng.uniform() ** (1 / 3)
    return 0.5 * (I2 + v[0] * SX + v[1] * SY + v[2] * SZ)


def random_unitary(rng, n=2):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_x_state(rng, normalized=False):
    """Entries of a random X state: (p11, p22, p33, p44, r14, r23)."""
    p = rng.dirichlet(np.ones(4))
    r14 = rng.uniform() * np.sqrt(p[0] * p[3])
    r23 = rng.uniform() * np.sqrt(p[1] * p[2])
    if not normalized:
        r14 *= np.exp(1j * rng.uniform(0, 2 * np.pi))
        r23 *= np.exp(1j * rng.uniform(0, 2 * np.pi))
    return (*p, complex(r14), complex(r23))


def bell_states():
    s = 1 / np.sqrt(2)
    vecs = {
        "phi+": [s, 0, 0, s],
        "phi-": [s, 0, 0, -s],
        "psi+": [0, s, s, 0],
        "psi-": [0, s, -s, 0],
    }
    return {k: np.outer(v, np.conj(v)).astype(complex) for k, v in vecs.items()}


def random_model_draw(rng, j_range=(-2, 2), d_range=(-2, 2), t_range=(0.1, 5)):
    j = 0.0
    while abs(j) < 1e-3:
        j = rng.uniform(*j_range)
    return j, rng.uniform(0, 1), rng.uniform(*d_range), rng.uniform(*t_range)
