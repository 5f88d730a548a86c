"""Maximal overlap with decomposable states and the geometric measure of entanglement.

For a 3-vector psi, ``mu(psi) = max |<a ^ b ^ c | psi>|`` over orthonormal
triples.  With the sign-extended amplitude tensor T this overlap is
``sum conj(a_i) conj(b_j) conj(c_k) T_ijk``, and because T is antisymmetric
the best single-vector update ``a ~ T(., conj b, conj c)`` is automatically
orthogonal to b and c.  Alternating these updates is monotone.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from . import precision as P
from .errors import OptimizerFailed, ZeroState
from .exterior import ThreeFermionState, ThreeQubitState, W6Point, embed_to_tensor, sov_isometry
from .rdm import rdm1

DEFAULT_STARTS = 32
GAIN_TOL = 1e-12
MAX_SWEEPS = 500


@dataclass(frozen=True)
class MuResult:
    mu: float
    maximizer: tuple
    starts_used: int
    iterations: int
    converged: bool
    stationarity: float = 0.0

    @property
    def gme(self) -> float:
        return 1.0 - self.mu**2


def _normalize(v: np.ndarray) -> np.ndarray:
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    return v / np.where(n == 0, 1, n)


def _contract(T, B, C):
    """``v[n, s, i] = sum_jk T[n, i, j, k] conj(B[n, s, j]) conj(C[n, s, k])``."""
    n, d1, d2, d3 = T.shape
    s = B.shape[1]
    W = (T.reshape(n, d1 * d2, d3) @ C.conj().transpose(0, 2, 1)).reshape(n, d1, d2, s)
    return (W.transpose(0, 3, 1, 2) @ B.conj()[..., None])[..., 0]


def alternating_rank_one(T: np.ndarray, A, B, C, tol: float = GAIN_TOL, max_sweeps: int = MAX_SWEEPS):
    """Batched alternating maximization of ``|sum conj(a) conj(b) conj(c) T|``.

    ``T`` has shape (n, d1, d2, d3) and the start vectors (n, s, d_k).
    Returns the final vectors, per-start overlaps, sweep count and a
    convergence flag.  The overlap never decreases from one sweep to the next.
    Items whose overlaps all stopped improving are dropped from the batch.
    """
    Tb = np.ascontiguousarray(np.transpose(T, (0, 2, 1, 3)))
    Tc = np.ascontiguousarray(np.transpose(T, (0, 3, 1, 2)))
    A, B, C = _normalize(A), _normalize(B), _normalize(C)
    prev = np.abs(np.einsum("nsi,nsi->ns", A.conj(), _contract(T, B, C)))
    active = np.arange(T.shape[0])
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        t, tb, tc = T[active], Tb[active], Tc[active]
        a = _normalize(_contract(t, B[active], C[active]))
        b = _normalize(_contract(tb, a, C[active]))
        vc = _contract(tc, a, b)
        val = np.linalg.norm(vc, axis=-1)
        old = prev[active]
        if np.any(val < old - 1e-12 * np.maximum(1.0, old)):
            raise OptimizerFailed("alternating sweep decreased the overlap")
        A[active], B[active], C[active] = a, b, _normalize(vc)
        prev[active] = val
        still = np.max(val - old, axis=1) >= tol
        active = active[still]
        if active.size == 0:
            break
    return A, B, C, prev, sweeps, active.size == 0


def _random_unit(rng: np.random.Generator, shape) -> np.ndarray:
    return _normalize(rng.normal(size=shape) + 1j * rng.normal(size=shape))


def _fermion_starts(psi_tensors: np.ndarray, rho1s: np.ndarray, starts: int, seed: int):
    """Natural-orbital start followed by seeded random orthonormal triples."""
    n = psi_tensors.shape[0]
    A = np.empty((n, starts, 6), complex)
    B = np.empty_like(A)
    C = np.empty_like(A)
    _, vecs = np.linalg.eigh(rho1s)
    A[:, 0], B[:, 0], C[:, 0] = vecs[:, :, 5], vecs[:, :, 4], vecs[:, :, 3]
    for s in range(1, starts):
        rng = np.random.default_rng([seed, s])
        q, _ = np.linalg.qr(rng.normal(size=(n, 6, 3)) + 1j * rng.normal(size=(n, 6, 3)))
        A[:, s], B[:, s], C[:, s] = q[:, :, 0], q[:, :, 1], q[:, :, 2]
    return A, B, C


def _fix_phase(a, b, c, overlap):
    ph = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return a * ph, b, c


def mu_many(states: list[ThreeFermionState], starts: int = DEFAULT_STARTS, seed: int = 0,
            tol: float = GAIN_TOL, max_sweeps: int = MAX_SWEEPS, chunk: int = 512) -> np.ndarray:
    """mu for many states at once (values only)."""
    out = []
    for lo in range(0, len(states), chunk):
        batch = states[lo : lo + chunk]
        T = np.stack([P.to_float(s.tensor()).astype(complex) for s in batch])
        R = np.stack([P.to_float(rdm1(s)) for s in batch])
        A, B, C = _fermion_starts(T, R, starts, seed)
        *_, vals, _, _ = alternating_rank_one(T, A, B, C, tol, max_sweeps)
        out.append(vals.max(axis=1))
    return np.concatenate(out) if out else np.empty(0)


def mu_general(psi: ThreeFermionState, starts: int = DEFAULT_STARTS, tol: float = GAIN_TOL,
               seed: int = 0, max_sweeps: int = MAX_SWEEPS) -> MuResult:
    if float(P.to_float(psi.norm2())) == 0:
        raise ZeroState("mu of the zero state")
    T = P.to_float(psi.tensor()).astype(complex)[None]
    R = P.to_float(rdm1(psi))[None]
    A, B, C = _fermion_starts(T, R, starts, seed)
    A, B, C, vals, sweeps, conv = alternating_rank_one(T, A, B, C, tol, max_sweeps)
    k = int(np.argmax(vals[0]))
    a, b, c = A[0, k], B[0, k], C[0, k]
    overlap = np.einsum("ijk,i,j,k->", T[0], a.conj(), b.conj(), c.conj())
    a, b, c = _fix_phase(a, b, c, overlap)
    stat = _stationarity(T[0], a, b, c)
    return MuResult(float(abs(overlap)), (a, b, c), starts, sweeps, conv, stat)


def _stationarity(T, a, b, c) -> float:
    """Largest component of the single-vector updates orthogonal to the current vectors."""
    res = 0.0
    for v, u in (
        (np.einsum("ijk,j,k->i", T, b.conj(), c.conj()), a),
        (np.einsum("ijk,i,k->j", T, a.conj(), c.conj()), b),
        (np.einsum("ijk,i,j->k", T, a.conj(), b.conj()), c),
    ):
        res = max(res, float(np.linalg.norm(v - np.vdot(u, v) * u)))
    return res


def decomposable_overlap(psi: ThreeFermionState, a, b, c) -> complex:
    """``<a ^ b ^ c | psi>`` computed through the amplitude tensor."""
    T = P.to_float(psi.tensor())
    return complex(np.einsum("ijk,i,j,k->", T, np.conj(a), np.conj(b), np.conj(c)))


# ------------------------------------------------------------ qubits


def _sov_sweep(t, U3):
    """One cycle of closed-form pair updates: (1,2)|3, (2,3)|1, (1,3)|2."""
    # pair (1,2) with u3 fixed: largest singular value of M_ij = sum_k conj(u3_k) t_ijk
    M = np.einsum("ijk,sk->sij", t, U3.conj())
    U, S, Vh = np.linalg.svd(M)
    U1, U2 = U[:, :, 0], Vh[:, 0, :]
    M = np.einsum("ijk,si->sjk", t, U1.conj())
    U, S, Vh = np.linalg.svd(M)
    U2, U3 = U[:, :, 0], Vh[:, 0, :]
    M = np.einsum("ijk,sj->sik", t, U2.conj())
    U, S, Vh = np.linalg.svd(M)
    U1, U3 = U[:, :, 0], Vh[:, 0, :]
    return U1, U2, U3, S[:, 0]


def mu_sov(phi: ThreeQubitState, starts: int = DEFAULT_STARTS, tol: float = GAIN_TOL,
           seed: int = 0, max_sweeps: int = MAX_SWEEPS) -> MuResult:
    """Maximal overlap with product states ``u1 (x) u2 (x) u3``.

    ``u1^dag M conj(u2)`` is maximized in closed form by the top singular
    pair of M, so each step optimizes two sites exactly.
    """
    t = P.to_float(phi.amplitudes).astype(complex)
    if np.allclose(t, 0):
        raise ZeroState("mu of the zero state")
    rng = np.random.default_rng([seed, 1])
    U3 = _random_unit(rng, (starts, 2))
    U3[0] = [1, 0]
    if starts > 1:
        U3[1] = [0, 1]
    U1 = U2 = None
    prev = np.zeros(starts)
    conv = False
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        U1, U2, U3, val = _sov_sweep(t, U3)
        gain = np.max(val - prev)
        prev = val
        if gain < tol:
            conv = True
            break
    k = int(np.argmax(prev))
    u1, u2, u3 = U1[k], U2[k], U3[k]
    overlap = np.einsum("ijk,i,j,k->", t, u1.conj(), u2.conj(), u3.conj())
    u1 = u1 * (overlap / abs(overlap)) if abs(overlap) > 0 else u1
    return MuResult(float(abs(overlap)), (u1, u2, u3), starts, sweeps, conv, 0.0)


def _w6_objective(p: W6Point, theta, phase):
    """``mu^2`` after optimizing the first two qubits, for ``u3 = (cos t, e^{i f} sin t)``."""
    a, b, c, d = float(p.a), float(p.b), float(p.c), float(p.d)
    z = complex(p.z)
    xi = np.cos(theta)
    eta = np.exp(1j * phase) * np.sin(theta)
    Pv = np.abs(np.conj(z) * xi + c * eta) ** 2 + (a * a + b * b) * np.abs(xi) ** 2 + d * d * np.abs(eta) ** 2
    Q = a * b * xi**2 - d * np.conj(z) * xi * eta - c * d * eta**2
    return 0.5 * (Pv + np.sqrt(np.maximum(Pv * Pv - 4 * np.abs(Q) ** 2, 0.0)))


def mu_w6(p: W6Point, grid: int = 64) -> float:
    """mu of the five-term state by a grid over u3 followed by local refinement."""
    th = np.linspace(0, np.pi / 2, grid)
    ph = np.linspace(0, 2 * np.pi, grid, endpoint=False)
    TH, PH = np.meshgrid(th, ph, indexing="ij")
    vals = _w6_objective(p, TH, PH)
    best = float(vals.max())
    order = np.argsort(vals, axis=None)[::-1][:4]
    for idx in order:
        i, j = np.unravel_index(idx, vals.shape)
        res = minimize(
            lambda v: -_w6_objective(p, v[0], v[1]),
            x0=[TH[i, j], PH[i, j]],
            method="Nelder-Mead",
            options={"xatol": 1e-13, "fatol": 1e-16, "maxiter": 4000},
        )
        best = max(best, float(-res.fun))
    return float(np.sqrt(best))


# ------------------------------------------------------------ measures


def gme(state, starts: int = DEFAULT_STARTS, seed: int = 0) -> dict:
    """Geometric measure ``1 - Lambda^2`` of the normalized input."""
    norm = float(P.to_float(state.norm()))
    if norm == 0:
        raise ZeroState("GME of the zero state")
    unit = state / norm
    if isinstance(state, ThreeQubitState):
        r = mu_sov(unit, starts=starts, seed=seed)
        return {"kind": "qubit", "Lambda": r.mu, "G": 1 - r.mu**2, "input_norm": norm, "result": r}
    r = mu_general(unit, starts=starts, seed=seed)
    return {"kind": "fermion", "Lambda_f": r.mu, "G_f": 1 - r.mu**2, "input_norm": norm, "result": r}


def product_overlap_of_embedding(psi: ThreeFermionState, starts: int = DEFAULT_STARTS, seed: int = 0) -> float:
    """Best overlap of the antisymmetric 216-tensor with unconstrained product states."""
    T = P.to_float(embed_to_tensor(psi)).astype(complex)[None]
    rng = np.random.default_rng([seed, 2])
    A, B, C = (_random_unit(rng, (1, starts, 6)) for _ in range(3))
    *_, vals, _, _ = alternating_rank_one(T, A, B, C)
    return float(vals.max())


def qubit_product_overlap_of_embedding(phi: ThreeQubitState, starts: int = DEFAULT_STARTS, seed: int = 0) -> float:
    return product_overlap_of_embedding(sov_isometry(phi), starts, seed)
