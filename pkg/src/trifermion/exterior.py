"""Three-vectors in the exterior cube of C^6 and the unitary action on them.

Amplitudes are stored densely in lexicographic order of the 20 increasing
index triples.  Index triples in the public API are 1-based, as in the
physics literature (``e_246`` is ``basis(2, 4, 6)``); everything internal
is 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import precision as P
from .errors import NotSOV, NotUnitary

TRIPLES: list[tuple[int, int, int]] = list(itertools.combinations(range(6), 3))
TRIPLE_INDEX = {t: n for n, t in enumerate(TRIPLES)}


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


# sign-extended lookup: amplitude(i,j,k) = _SIGN[i,j,k] * amp[_SLOT[i,j,k]]
_SLOT = np.full((6, 6, 6), -1, dtype=int)
_SIGN = np.zeros((6, 6, 6), dtype=int)
for _n, _t in enumerate(TRIPLES):
    for _p in itertools.permutations(range(3)):
        _idx = tuple(_t[q] for q in _p)
        _SLOT[_idx] = _n
        _SIGN[_idx] = _perm_sign(_p)
_FLAT_SLOT = np.where(_SLOT.ravel() < 0, 0, _SLOT.ravel())
_FLAT_SIGN = _SIGN.ravel()

# Levi-Civita pattern restricted to j | a<b | c<d<e; the remaining 11 of every
# 12 orderings contribute identically.
_EPS_TERMS = np.array(
    [p for p in itertools.permutations(range(6)) if p[1] < p[2] and p[3] < p[4] < p[5]]
)
_EPS_SIGNS = np.array([_perm_sign(p) for p in _EPS_TERMS])
_EPS_ONEHOT = np.zeros((len(_EPS_TERMS), 6), dtype=int)
_EPS_ONEHOT[np.arange(len(_EPS_TERMS)), _EPS_TERMS[:, 0]] = 1

# SOV triples: {1,2} x {3,4} x {5,6}, i.e. qubit |ijk> <-> e_{i+1, j+3, k+5}
SOV_SLOTS = np.array(
    [TRIPLE_INDEX[(i, 2 + j, 4 + k)] for i in (0, 1) for j in (0, 1) for k in (0, 1)]
)
NON_SOV_SLOTS = np.array(sorted(set(range(20)) - set(SOV_SLOTS.tolist())))


def _as_amp_array(values) -> np.ndarray:
    arr = np.asarray(values)
    if arr.dtype != object:
        arr = arr.astype(complex)
    return arr


@dataclass(frozen=True, eq=False)
class ThreeFermionState:
    """A (not necessarily normalized) 3-vector ``sum xi_ijk e_ijk`` in the exterior cube of C^6."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amp = _as_amp_array(self.amplitudes)
        if amp.shape != (20,):
            raise ValueError(f"expected 20 amplitudes, got shape {amp.shape}")
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    # construction
    @classmethod
    def zero(cls) -> "ThreeFermionState":
        return cls(np.zeros(20, complex))

    @classmethod
    def basis(cls, i: int, j: int, k: int) -> "ThreeFermionState":
        """``e_ijk`` for 1-based indices; a permuted triple carries its sign."""
        amp = np.zeros(20, complex)
        idx = (i - 1, j - 1, k - 1)
        if _SLOT[idx] < 0:
            return cls(amp)
        amp[_SLOT[idx]] = _SIGN[idx]
        return cls(amp)

    @classmethod
    def from_dict(cls, entries: dict[tuple[int, int, int], complex]) -> "ThreeFermionState":
        out = np.zeros(20, complex)
        for (i, j, k), v in entries.items():
            idx = (i - 1, j - 1, k - 1)
            if _SLOT[idx] < 0:
                raise ValueError(f"repeated index in triple {(i, j, k)}")
            out[_SLOT[idx]] += _SIGN[idx] * v
        return cls(out)

    # access
    def amplitude(self, i: int, j: int, k: int):
        idx = (i - 1, j - 1, k - 1)
        if _SLOT[idx] < 0:
            return 0
        return _SIGN[idx] * self.amplitudes[_SLOT[idx]]

    def tensor(self) -> np.ndarray:
        """Fully antisymmetric 6x6x6 array of sign-extended amplitudes (no 1/sqrt(6))."""
        flat = self.amplitudes[_FLAT_SLOT] * _FLAT_SIGN
        return flat.reshape(6, 6, 6)

    def to_dict(self) -> dict[tuple[int, int, int], complex]:
        return {tuple(x + 1 for x in t): self.amplitudes[n] for n, t in enumerate(TRIPLES)}

    # algebra
    def norm2(self):
        return P.sum_abs2(self.amplitudes)

    def norm(self):
        return P.sqrt(self.norm2())

    def normalized(self) -> "ThreeFermionState":
        return ThreeFermionState(self.amplitudes / self.norm())

    def conj(self) -> "ThreeFermionState":
        return ThreeFermionState(P.conj(self.amplitudes))

    @property
    def is_extended(self) -> bool:
        return self.amplitudes.dtype == object

    def to_extended(self) -> "ThreeFermionState":
        return ThreeFermionState(P.to_mp(self.amplitudes))

    def to_binary64(self) -> "ThreeFermionState":
        return ThreeFermionState(P.to_float(self.amplitudes))

    def __add__(self, other: "ThreeFermionState") -> "ThreeFermionState":
        return ThreeFermionState(self.amplitudes + other.amplitudes)

    def __sub__(self, other: "ThreeFermionState") -> "ThreeFermionState":
        return ThreeFermionState(self.amplitudes - other.amplitudes)

    def __mul__(self, scalar) -> "ThreeFermionState":
        return ThreeFermionState(self.amplitudes * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "ThreeFermionState":
        return ThreeFermionState(self.amplitudes / scalar)

    def __neg__(self) -> "ThreeFermionState":
        return ThreeFermionState(-self.amplitudes)

    def __repr__(self) -> str:
        nz = [
            f"{v:.6g}*e{''.join(str(x + 1) for x in t)}"
            for t, v in zip(TRIPLES, P.to_float(self.amplitudes))
            if abs(v) > 1e-14
        ]
        return "ThreeFermionState(" + (" + ".join(nz) or "0") + ")"


@dataclass(frozen=True, eq=False)
class ThreeQubitState:
    """Three-qubit amplitudes ``amplitudes[i, j, k]`` for basis state ``|ijk>``."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amp = _as_amp_array(self.amplitudes)
        if amp.size != 8:
            raise ValueError(f"expected 8 amplitudes, got shape {amp.shape}")
        amp = amp.reshape(2, 2, 2)
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @classmethod
    def basis(cls, bits: str) -> "ThreeQubitState":
        amp = np.zeros((2, 2, 2), complex)
        amp[tuple(int(b) for b in bits)] = 1
        return cls(amp)

    def norm2(self):
        return P.sum_abs2(self.amplitudes)

    def norm(self):
        return P.sqrt(self.norm2())

    def normalized(self) -> "ThreeQubitState":
        return ThreeQubitState(self.amplitudes / self.norm())

    def conj(self) -> "ThreeQubitState":
        return ThreeQubitState(P.conj(self.amplitudes))

    def __add__(self, other: "ThreeQubitState") -> "ThreeQubitState":
        return ThreeQubitState(self.amplitudes + other.amplitudes)

    def __sub__(self, other: "ThreeQubitState") -> "ThreeQubitState":
        return ThreeQubitState(self.amplitudes - other.amplitudes)

    def __mul__(self, scalar) -> "ThreeQubitState":
        return ThreeQubitState(self.amplitudes * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "ThreeQubitState":
        return ThreeQubitState(self.amplitudes / scalar)

    def __repr__(self) -> str:
        flat = P.to_float(self.amplitudes).ravel()
        nz = [f"{v:.6g}|{n:03b}>" for n, v in enumerate(flat) if abs(v) > 1e-14]
        return "ThreeQubitState(" + (" + ".join(nz) or "0") + ")"


@dataclass(frozen=True)
class W6Point:
    """Coordinates of ``a e235 + b e145 + c e136 + d e246 + (x+iy) e135``."""

    a: float
    b: float
    c: float
    d: float
    x: float
    y: float

    @classmethod
    def from_z(cls, a, b, c, d, z) -> "W6Point":
        z = complex(z) if not P.is_mp(z) else z
        return cls(a, b, c, d, P.real(z), P.imag(z))

    @property
    def z(self):
        if P.is_mp(self.x) or P.is_mp(self.y):
            import mpmath

            return mpmath.mpc(self.x, self.y)
        return complex(self.x, self.y)

    @property
    def z2(self):
        return self.x * self.x + self.y * self.y

    @property
    def s1(self):
        return self.a**2 + self.b**2 + self.c**2

    @property
    def s2(self):
        a2, b2, c2 = self.a**2, self.b**2, self.c**2
        return a2 * b2 + a2 * c2 + b2 * c2

    @property
    def s3(self):
        return (self.a * self.b * self.c) ** 2

    def norm2(self):
        return self.s1 + self.d**2 + self.z2

    def normalized(self) -> "W6Point":
        n = P.sqrt(self.norm2())
        return W6Point(*(v / n for v in self.as_tuple()))

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.x, self.y)

    def to_float(self) -> "W6Point":
        return W6Point(*(float(v) for v in self.as_tuple()))

    def conj(self) -> "W6Point":
        return W6Point(self.a, self.b, self.c, self.d, self.x, -self.y)

    def permuted(self, perm: Sequence[int]) -> "W6Point":
        """Coordinates after the block permutation ``perm`` (images of 1,2,3)."""
        old = (self.a, self.b, self.c)
        new = [None, None, None]
        for i, target in enumerate(perm):
            new[target - 1] = old[i]
        return W6Point(new[0], new[1], new[2], self.d, self.x, self.y)

    def state(self) -> ThreeFermionState:
        amp = np.zeros(20, dtype=object if P.is_mp(self.a + self.x) else complex)
        if amp.dtype == object:
            amp[:] = 0
        amp[TRIPLE_INDEX[(1, 2, 4)]] = self.a
        amp[TRIPLE_INDEX[(0, 3, 4)]] = self.b
        amp[TRIPLE_INDEX[(0, 2, 5)]] = self.c
        amp[TRIPLE_INDEX[(1, 3, 5)]] = self.d
        amp[TRIPLE_INDEX[(0, 2, 4)]] = self.z
        return ThreeFermionState(amp)

    def qubit_state(self) -> ThreeQubitState:
        return sov_inverse(self.state())


def w6_from_state(psi: ThreeFermionState, tol: float = 1e-12) -> W6Point:
    """Read back W6 coordinates; other amplitudes must vanish and a,b,c,d must be real."""
    slots = {
        "a": TRIPLE_INDEX[(1, 2, 4)],
        "b": TRIPLE_INDEX[(0, 3, 4)],
        "c": TRIPLE_INDEX[(0, 2, 5)],
        "d": TRIPLE_INDEX[(1, 3, 5)],
        "z": TRIPLE_INDEX[(0, 2, 4)],
    }
    amp = psi.amplitudes
    others = [n for n in range(20) if n not in slots.values()]
    scale = max(1.0, float(P.to_float(psi.norm())))
    if any(abs(P.to_float(amp[n])) > tol * scale for n in others):
        raise ValueError("state is not supported on the W6 coordinates")
    for key in "abcd":
        if abs(float(P.imag(amp[slots[key]]))) > tol * scale:
            raise ValueError(f"coordinate {key} is not real")
    z = amp[slots["z"]]
    return W6Point(
        *(P.real(amp[slots[k]]) for k in "abcd"), P.real(z), P.imag(z)
    )


def wedge3(v1, v2, v3) -> ThreeFermionState:
    """``v1 ^ v2 ^ v3``: amplitude at (i,j,k) is the 3x3 minor of rows i,j,k."""
    m = np.stack([np.asarray(v) for v in (v1, v2, v3)], axis=1)
    amp = [_det3(m[list(t), :]) for t in TRIPLES]
    return ThreeFermionState(np.array(amp, dtype=m.dtype if m.dtype == object else complex))


def _det3(m):
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def inner(phi: ThreeFermionState, psi: ThreeFermionState):
    """Hermitian pairing, conjugate-linear in ``phi``."""
    return (P.conj(phi.amplitudes) * psi.amplitudes).sum()


def compound_matrix(A: np.ndarray) -> np.ndarray:
    """20x20 matrix of 3x3 minors representing the induced action on 3-vectors."""
    A = np.asarray(A)
    out = np.empty((20, 20), dtype=object if A.dtype == object else complex)
    for m, rows in enumerate(TRIPLES):
        sub = A[list(rows), :]
        for n, cols in enumerate(TRIPLES):
            out[m, n] = _det3(sub[:, list(cols)])
    return out


def unitarity_defect(U: np.ndarray) -> float:
    U = np.asarray(U)
    d = P.conj(U).T @ U - np.eye(U.shape[0])
    return float(np.sqrt(P.to_float(P.sum_abs2(d))))


def apply_linear(A: np.ndarray, psi: ThreeFermionState) -> ThreeFermionState:
    """Induced action of any 6x6 matrix (no unitarity check)."""
    return ThreeFermionState(compound_matrix(A) @ psi.amplitudes)


def apply_unitary(U: np.ndarray, psi: ThreeFermionState, tol: float = 1e-10) -> ThreeFermionState:
    U = np.asarray(U)
    if U.shape != (6, 6):
        raise ValueError("expected a 6x6 matrix")
    defect = unitarity_defect(U)
    if defect > tol:
        raise NotUnitary(f"||U^dag U - I|| = {defect:.3e} exceeds {tol:.1e}")
    return apply_linear(U, psi)


def sov_isometry(phi: ThreeQubitState) -> ThreeFermionState:
    """Map ``|ijk>`` to ``e_{i+1, j+3, k+5}``."""
    dtype = object if phi.amplitudes.dtype == object else complex
    amp = np.zeros(20, dtype=dtype)
    if dtype == object:
        amp[:] = P.zero_like(phi.amplitudes.ravel()[0]) * 0
    amp[SOV_SLOTS] = phi.amplitudes.ravel()
    return ThreeFermionState(amp)


def sov_inverse(psi: ThreeFermionState, tol: float = 1e-12) -> ThreeQubitState:
    leak = P.sqrt(P.sum_abs2(psi.amplitudes[NON_SOV_SLOTS]))
    scale = max(float(P.to_float(psi.norm())), 1e-300)
    if float(P.to_float(leak)) > tol * max(scale, 1.0):
        raise NotSOV(f"weight {float(P.to_float(leak)):.3e} outside the single-occupancy subspace")
    return ThreeQubitState(psi.amplitudes[SOV_SLOTS].reshape(2, 2, 2))


def embed_to_tensor(psi: ThreeFermionState) -> np.ndarray:
    """Isometric antisymmetric embedding into (C^6)^{x3}; norm is preserved."""
    if psi.is_extended:
        import mpmath

        return psi.tensor() / mpmath.sqrt(6)
    return psi.tensor() / np.sqrt(6.0)


SIGMA = (2, 3, 1)
TAU = (2, 1, 3)
IDENTITY = (1, 2, 3)


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, int, int]:
    """Permutation ``p o q`` (apply q first), images of 1,2,3."""
    return tuple(p[q[i] - 1] for i in range(3))


def inverse_perm(p: Sequence[int]) -> tuple[int, int, int]:
    out = [0, 0, 0]
    for i, t in enumerate(p):
        out[t - 1] = i + 1
    return tuple(out)


def s3_matrix(perm: Sequence[int]) -> np.ndarray:
    """Signed block permutation moving V_i = span{|2i-1>,|2i>} onto V_perm(i).

    The sign of the permutation is folded in so that the induced action on
    W6 coordinates is a plain relabelling of (a, b, c).
    """
    perm = tuple(perm)
    if sorted(perm) != [1, 2, 3]:
        raise ValueError(f"not a permutation of (1,2,3): {perm}")
    m = np.zeros((6, 6))
    sgn = _perm_sign([p - 1 for p in perm])
    for i, t in enumerate(perm):
        m[2 * (t - 1) : 2 * t, 2 * i : 2 * i + 2] = sgn * np.eye(2)
    return m


def permute_qubits(phi: ThreeQubitState, perm: Sequence[int]) -> ThreeQubitState:
    """Move qubit i to position perm(i); matches ``s3_matrix`` under the SOV isometry."""
    src = phi.amplitudes
    out = np.empty_like(src)
    for idx in itertools.product((0, 1), repeat=3):
        new = [0, 0, 0]
        for i, t in enumerate(perm):
            new[t - 1] = idx[i]
        out[tuple(new)] = src[idx]
    return ThreeQubitState(out)


def apply_local_unitaries(phi: ThreeQubitState, us: Iterable[np.ndarray]) -> ThreeQubitState:
    ua, ub, uc = (np.asarray(u) for u in us)
    t = np.einsum("ai,bj,ck,ijk->abc", ua, ub, uc, phi.amplitudes)
    return ThreeQubitState(t)


def epsilon_contract_K(psi: ThreeFermionState) -> np.ndarray:
    """``K[i, j] = sum psi_iab psi_cde eps_jabcde`` over sign-extended amplitudes.

    Quadratic in psi; the quartic relative invariant is ``tr(K @ K) / 864``.
    """
    T = psi.tensor()
    t = _EPS_TERMS
    X = T[:, t[:, 1], t[:, 2]]
    y = T[t[:, 3], t[:, 4], t[:, 5]] * (12 * _EPS_SIGNS)
    return X @ (y[:, None] * _EPS_ONEHOT)


def random_state(seed: int) -> ThreeFermionState:
    """Unit state with i.i.d. complex Gaussian amplitudes (uniform on the sphere)."""
    rng = np.random.default_rng(seed)
    v = rng.normal(size=20) + 1j * rng.normal(size=20)
    return ThreeFermionState(v / np.linalg.norm(v))


def random_real_state(seed: int) -> ThreeFermionState:
    rng = np.random.default_rng(seed)
    v = rng.normal(size=20)
    return ThreeFermionState(v / np.linalg.norm(v))


def random_qubit_state(seed: int) -> ThreeQubitState:
    rng = np.random.default_rng(seed)
    v = rng.normal(size=8) + 1j * rng.normal(size=8)
    return ThreeQubitState(v / np.linalg.norm(v))


def haar_unitary(rng: np.random.Generator, n: int = 6) -> np.ndarray:
    z = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_haar_unitary(seed: int, n: int = 6) -> np.ndarray:
    """Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal phases fixed."""
    return haar_unitary(np.random.default_rng(seed), n)


def orthonormalize_mp(U: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt on the columns at the current mpmath precision."""
    import mpmath

    A = P.to_mp(np.asarray(U))
    n = A.shape[1]
    cols = [A[:, k].copy() for k in range(n)]
    for k in range(n):
        for j in range(k):
            cols[k] = cols[k] - (P.conj(cols[j]) * cols[k]).sum() * cols[j]
        nrm = mpmath.sqrt(P.sum_abs2(cols[k]))
        cols[k] = cols[k] / nrm
    return np.stack(cols, axis=1)
