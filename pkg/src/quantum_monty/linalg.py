"""Fixed-dimension complex linear algebra for the three-qutrit game engine.

Basis convention, fixed repo-wide: the product ket |o b a> (o = opened box,
b = Bob's choice, a = Alice's choice, each in {0, 1, 2}) maps to the flat
index 9*o + 3*b + a.  o is the most significant digit, a the least.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateSample, ExpNotConverged

# Tolerance for user-supplied matrices (survives a JSON round-trip).
UNITARY_TOL = 1e-9
# Tolerance for internally constructed states.
STATE_TOL = 1e-12

N_BOXES = 3
N_STATES = 27

_I3 = np.eye(3, dtype=complex)


def ket_index(o: int, b: int, a: int) -> int:
    """Flat index of the basis ket |o b a>."""
    return 9 * o + 3 * b + a


def index_to_ket(idx: int) -> tuple[int, int, int]:
    """Inverse of ket_index."""
    return idx // 9, (idx // 3) % 3, idx % 3


def basis_ket(o: int, b: int, a: int) -> np.ndarray:
    """Unit state vector on the basis ket |o b a>."""
    v = np.zeros(N_STATES, dtype=complex)
    v[ket_index(o, b, a)] = 1.0
    return v


def _build_gellmann() -> np.ndarray:
    lam = np.zeros((8, 3, 3), dtype=complex)
    lam[0][0, 1] = lam[0][1, 0] = 1
    lam[1][0, 1] = -1j
    lam[1][1, 0] = 1j
    lam[2][0, 0] = 1
    lam[2][1, 1] = -1
    lam[3][0, 2] = lam[3][2, 0] = 1
    lam[4][0, 2] = -1j
    lam[4][2, 0] = 1j
    lam[5][1, 2] = lam[5][2, 1] = 1
    lam[6][1, 2] = -1j
    lam[6][2, 1] = 1j
    lam[7] = np.diag([1, 1, -2]) / np.sqrt(3)
    lam.flags.writeable = False
    return lam


_GELLMANN = _build_gellmann()


def gellmann_generators() -> list[np.ndarray]:
    """The 8 traceless Hermitian generators with tr(g_a g_b) = 2 delta_ab."""
    return [g for g in _GELLMANN]


def matexp3(m: np.ndarray) -> np.ndarray:
    """Matrix exponential of a 3x3 complex matrix.

    Scaling-and-squaring with a truncated Taylor series; the last retained
    term is checked against a hard bound so a silent accuracy loss raises
    ExpNotConverged instead.
    """
    m = np.asarray(m, dtype=complex)
    nrm = float(np.max(np.sum(np.abs(m), axis=1)))
    if not np.isfinite(nrm):
        raise ExpNotConverged("non-finite input matrix")
    s = 0 if nrm <= 0.5 else int(np.ceil(np.log2(nrm / 0.5)))
    x = m / (2.0**s)
    term = np.eye(3, dtype=complex)
    acc = np.eye(3, dtype=complex)
    for k in range(1, 18):
        term = term @ x / k
        acc = acc + term
    if float(np.max(np.abs(term))) > 1e-15:
        raise ExpNotConverged("series tail above bound after scaling")
    for _ in range(s):
        acc = acc @ acc
    return acc


def su3_from_params(theta) -> np.ndarray:
    """exp(i * sum_a theta_a g_a) over the 8 generators; lands in SU(3)."""
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (8,):
        raise ValueError(f"expected 8 generator coordinates, got {theta.shape}")
    if not np.all(np.isfinite(theta)):
        raise ValueError("non-finite generator coordinates")
    h = np.tensordot(theta, _GELLMANN, axes=1)
    return matexp3(1j * h)


def unitarity_defect(u: np.ndarray) -> float:
    """Max-abs entry of u^dagger u - I."""
    u = np.asarray(u, dtype=complex)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def det_defect(u: np.ndarray) -> float:
    """|det(u) - 1|."""
    return float(abs(np.linalg.det(np.asarray(u, dtype=complex)) - 1.0))


def is_special_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.shape != (3, 3) or not np.all(np.isfinite(u)):
        return False
    return unitarity_defect(u) <= tol and det_defect(u) <= tol


def random_su3(seed=None, rng: np.random.Generator | None = None) -> np.ndarray:
    """Random SU(3) matrix, deterministic for a fixed seed.

    Draws a complex-Gaussian 3x3 matrix, orthonormalizes it (QR with the
    usual phase fix), then removes the residual determinant phase.
    """
    if rng is None:
        rng = np.random.default_rng(seed)
    for _ in range(8):
        z = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        q, r = np.linalg.qr(z)
        d = np.diagonal(r)
        if float(np.min(np.abs(d))) < 1e-12:
            continue  # retry on the next substream draw
        q = q * (d / np.abs(d)).conj()
        q = q * np.exp(-1j * np.angle(np.linalg.det(q)) / 3.0)
        return q
    raise DegenerateSample("orthonormalization kept hitting a near-zero column")


def embed_bob(op: np.ndarray) -> np.ndarray:
    """27x27 operator acting as `op` on the b qutrit, identity elsewhere."""
    return np.kron(_I3, np.kron(np.asarray(op, dtype=complex), _I3))


def embed_alice(op: np.ndarray) -> np.ndarray:
    """27x27 operator acting as `op` on the a qutrit, identity elsewhere."""
    return np.kron(np.eye(9, dtype=complex), np.asarray(op, dtype=complex))


def apply(op: np.ndarray, state: np.ndarray) -> np.ndarray:
    return np.asarray(op, dtype=complex) @ np.asarray(state, dtype=complex)


def norm2(state: np.ndarray) -> float:
    return float(np.vdot(state, state).real)


def inner(x: np.ndarray, y: np.ndarray) -> complex:
    return complex(np.vdot(x, y))


def permutation_table(op: np.ndarray, tol: float = STATE_TOL) -> np.ndarray | None:
    """If `op` is a unit-weight basis permutation, return perm with
    op @ e_i = e_perm[i]; otherwise None."""
    op = np.asarray(op, dtype=complex)
    n = op.shape[0]
    perm = np.full(n, -1, dtype=int)
    for col in range(n):
        rows = np.nonzero(np.abs(op[:, col]) > tol)[0]
        if len(rows) != 1 or abs(op[rows[0], col] - 1.0) > tol:
            return None
        perm[col] = rows[0]
    if len(set(perm.tolist())) != n:
        return None
    return perm
