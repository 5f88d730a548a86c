"""Reduced density matrices of three-fermion and three-qubit pure states.

All fermionic RDMs use the convention that every trace equals ``||psi||^2``.
The chemists' trace-3 one-body matrix appears only in the spectrum check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import mpmath
import numpy as np

from . import precision as P
from .exterior import ThreeFermionState, ThreeQubitState, W6Point

PAIRS: list[tuple[int, int]] = list(itertools.combinations(range(6), 2))

# pair-basis positions of the three 4x4 blocks for W6 states
W6_PAIR_BLOCKS = {
    1: [(0, 2), (0, 3), (1, 2), (1, 3)],
    2: [(0, 4), (0, 5), (1, 4), (1, 5)],
    3: [(2, 4), (2, 5), (3, 4), (3, 5)],
}
W6_ZERO_PAIRS = [(0, 1), (2, 3), (4, 5)]


def _gram(X: np.ndarray) -> np.ndarray:
    """``X @ X^dagger``; works on object arrays too."""
    return X @ P.conj(X).T


def rdm1(psi: ThreeFermionState) -> np.ndarray:
    """One-body RDM ``rho1[a, a'] = (1/6) sum_bc T_abc conj(T_a'bc)``; trace ``||psi||^2``."""
    T = psi.tensor()
    return _gram(T.reshape(6, 36)) / 6


def rdm2_full(psi: ThreeFermionState) -> np.ndarray:
    """Two-body RDM on C^6 (x) C^6 as a 36x36 matrix, row index ``6*a + b``."""
    T = psi.tensor()
    return _gram(T.reshape(36, 6)) / 6


def rdm2(psi: ThreeFermionState) -> np.ndarray:
    """Two-body RDM in the 15-dimensional basis of pairs ``a < b`` (lexicographic)."""
    T = psi.tensor()
    rows = np.stack([T[a, b, :] for a, b in PAIRS])
    return _gram(rows) / 3


def partial_trace_second(rho12_full: np.ndarray) -> np.ndarray:
    """Trace out the second slot of a 36x36 two-body matrix."""
    r = rho12_full.reshape(6, 6, 6, 6)
    return sum(r[:, b, :, b] for b in range(6))


def eigvalsh(m: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix (mpmath for object arrays)."""
    if P.is_mp_array(m):
        ev = mpmath.eighe(mpmath.matrix(m.tolist()), eigvals_only=True)
        return np.array(sorted(ev[i] for i in range(m.shape[0])), dtype=object)
    return np.linalg.eigvalsh(m)


def spectrum_pairing_check(psi: ThreeFermionState) -> float:
    """``max_i |l_i + l_{7-i} - ||psi||^2|`` for the decreasing spectrum of ``3 rho1``."""
    lam = eigvalsh(3 * rdm1(psi))[::-1]
    n2 = psi.norm2()
    return float(max(abs(P.to_float(lam[i] + lam[5 - i] - n2)) for i in range(3)))


@dataclass(frozen=True)
class W6Blocks:
    R_a: np.ndarray
    R_b: np.ndarray
    R_c: np.ndarray
    D_a: float
    D_b: float
    D_c: float
    rho12_blocks: tuple[np.ndarray, np.ndarray, np.ndarray]

    @property
    def lambdas(self) -> tuple[float, float, float]:
        """Larger eigenvalue ``(1 + sqrt(1 - 4 D_x)) / 2`` of each block (unit points)."""
        return tuple(
            (1 + np.sqrt(max(0.0, 1 - 4 * float(D)))) / 2 for D in (self.D_a, self.D_b, self.D_c)
        )


def w6_blocks(p: W6Point) -> W6Blocks:
    """Closed-form blocks of ``3 rho1`` and of the two-body RDM (block sums to 3 for unit p)."""
    a, b, c, d, z = p.a, p.b, p.c, p.d, p.z
    zc = P.conj(z)
    zz = p.z2

    def R(u, v, w):
        return np.array([[v * v + w * w + zz, u * z], [u * zc, u * u + d * d]])

    R_a, R_b, R_c = R(a, b, c), R(b, c, a), R(c, a, b)

    def D(u, v, w):
        return (v * v + w * w) * (u * u + d * d) + d * d * zz

    def block(u, v, w):
        # u multiplies d in the corner; v, w are the other two
        return np.array(
            [
                [u * u + zz, w * z, v * z, u * d],
                [w * zc, w * w, v * w, 0],
                [v * zc, v * w, v * v, 0],
                [u * d, 0, 0, d * d],
            ]
        )

    return W6Blocks(
        R_a, R_b, R_c,
        D(a, b, c), D(b, c, a), D(c, a, b),
        (block(c, a, b), block(b, a, c), block(a, b, c)),
    )


def w6_blocks_from_rdm(psi: ThreeFermionState) -> dict:
    """Extract the 2x2 blocks of ``3 rho1`` and the 4x4 blocks of ``3 rho12`` numerically."""
    r1 = 3 * rdm1(psi)
    r2 = 3 * rdm2(psi)
    idx = {pq: n for n, pq in enumerate(PAIRS)}
    out = {
        "R": [r1[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] for k in range(3)],
        "rho12": [],
    }
    for k in (1, 2, 3):
        sel = [idx[pq] for pq in W6_PAIR_BLOCKS[k]]
        out["rho12"].append(r2[np.ix_(sel, sel)])
    return out


def qubit_rdms(phi: ThreeQubitState) -> dict[str, np.ndarray]:
    """Single- and two-qubit marginals of ``|phi><phi|``; two-qubit ones in |00>,|01>,|10>,|11> order."""
    t = phi.amplitudes
    A = t.reshape(2, 4)
    B = np.transpose(t, (1, 0, 2)).reshape(2, 4)
    C = np.transpose(t, (2, 0, 1)).reshape(2, 4)
    AB = t.reshape(4, 2)
    AC = np.transpose(t, (0, 2, 1)).reshape(4, 2)
    BC = np.transpose(t, (1, 2, 0)).reshape(4, 2)
    return {
        "A": _gram(A),
        "B": _gram(B),
        "C": _gram(C),
        "AB": _gram(AB),
        "AC": _gram(AC),
        "BC": _gram(BC),
    }
