"""Polynomial unitary invariants of three fermions in six modes and of three qubits.

The seven fermionic generators M1..M7 are real.  Degrees below are counted in
``|psi|^2``, so ``M_k(lam psi) = |lam|^(2 deg_k) M_k(psi)``.

F is the quartic relative invariant ``F(U psi) = det(U)^2 F(psi)``, and J the
invariant of bidegree (1, 3), ``J(U psi) = J(psi) / det(U)``.  Both are fixed
contractions with the Levi-Civita symbol, scaled so that on the five-term
normal form ``a e235 + b e145 + c e136 + d e246 + z e135``

    F = d (4abc + d z^2),     J = 2abcz + conj(d) conj(z) (M1 - 2|d|^2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from . import precision as P
from .errors import CalibrationFailed, ZeroState
from .exterior import (
    TRIPLE_INDEX,
    ThreeFermionState,
    ThreeQubitState,
    W6Point,
    epsilon_contract_K,
    sov_isometry,
)
from .rdm import partial_trace_second, qubit_rdms, rdm1, rdm2_full

DEGREES = (1, 2, 3, 4, 4, 6, 6)
QUBIT_SYM_DEGREES = (1, 2, 3, 4, 4, 6, 6)

# F = KAPPA_F tr(K^2); J = KAPPA_J sum T_abc D_abc (see invariant_J)
KAPPA_F = Fraction(1, 864)
KAPPA_J = Fraction(-1, 216)

ZERO_THRESHOLD = 1e-8


@dataclass(frozen=True)
class FermionInvariants:
    M: tuple
    F: complex
    J: complex
    phi: Optional[float] = None

    def __getattr__(self, name):
        if len(name) == 2 and name[0] == "M" and name[1] in "1234567":
            return self.M[int(name[1]) - 1]
        raise AttributeError(name)

    @property
    def abs_J2(self):
        return P.abs2(self.J)

    @property
    def h(self):
        return self.F * self.J * self.J

    @property
    def re_h(self):
        return P.real(self.h)

    @property
    def abs_h2(self):
        return P.abs2(self.h)

    def as_array(self) -> np.ndarray:
        return np.array([float(m) for m in self.M])


# ---------------------------------------------------------------- F and J


def invariant_F(psi: ThreeFermionState):
    K = epsilon_contract_K(psi)
    return P.trace(K @ K) / 864


def invariant_J(psi: ThreeFermionState):
    """``-(1/216) sum_abc T_abc D_abc`` where ``D = K(conj psi)`` acts as a derivation on ``conj psi``.

    The three derivation terms contribute equally, which collapses the sum
    to ``-(1/12) sum_ad K(conj psi)_ad rho1_ad``.
    """
    Kc = epsilon_contract_K(psi.conj())
    r1 = rdm1(psi)
    return -(Kc * r1).sum() / 12


def invariant_J_derivation(psi: ThreeFermionState):
    """Unsimplified derivation form of J (test oracle for ``invariant_J``)."""
    T = psi.tensor()
    Tc = P.conj(T)
    Kc = epsilon_contract_K(psi.conj())
    D = (
        np.einsum("ad,dbc->abc", Kc, Tc)
        + np.einsum("bd,adc->abc", Kc, Tc)
        + np.einsum("cd,abd->abc", Kc, Tc)
    )
    return -(T * D).sum() / 216


def candidate_J_contraction(psi: ThreeFermionState):
    """``sum T_abc conj(T)_ade conj(T)_bfg conj(T)_chi eps_defghi``.

    This is the most direct (1,3) contraction; it vanishes identically by
    antisymmetry, which is why ``invariant_J`` uses the derivation form.
    """
    import itertools

    from .exterior import _perm_sign

    T = psi.tensor()
    Tc = P.conj(T)
    total = 0
    for p in itertools.permutations(range(6)):
        d, e, f, g, h, i = p
        # sum over a, b, c of T_abc conj(T)_ade conj(T)_bfg conj(T)_chi
        A = Tc[:, d, e]
        B = Tc[:, f, g]
        C = Tc[:, h, i]
        total = total + _perm_sign(p) * np.einsum("abc,a,b,c->", T, A, B, C)
    return total


def w6_F(p: W6Point):
    return p.d * (4 * p.a * p.b * p.c + p.d * p.z * p.z)


def w7_J(a, b, c, w, z):
    """Closed form of J on the normal form with complex ``d = w``."""
    m1 = a * a + b * b + c * c + P.abs2(w) + P.abs2(z)
    return 2 * a * b * c * z + P.conj(w) * P.conj(z) * (m1 - 2 * P.abs2(w))


def w7_state(a, b, c, w, z) -> ThreeFermionState:
    amp = np.zeros(20, complex)
    amp[TRIPLE_INDEX[(1, 2, 4)]] = a
    amp[TRIPLE_INDEX[(0, 3, 4)]] = b
    amp[TRIPLE_INDEX[(0, 2, 5)]] = c
    amp[TRIPLE_INDEX[(1, 3, 5)]] = w
    amp[TRIPLE_INDEX[(0, 2, 4)]] = z
    return ThreeFermionState(amp)


def calibrate(n_points: int = 24, seed: int = 12345) -> dict:
    """Least-squares fit of the F and J scale factors on deterministic sample points.

    Returns the fitted constants and the maximum relative residual of each fit.
    Raises CalibrationFailed if either contraction does not match its closed
    form up to a single scalar.
    """
    rng = np.random.default_rng(seed)
    raw_F, ref_F, raw_J, ref_J = [], [], [], []
    for _ in range(n_points):
        a, b, c, d, x, y = rng.normal(size=6)
        p = W6Point(a, b, c, d, x, y)
        K = epsilon_contract_K(p.state())
        raw_F.append(np.trace(K @ K))
        ref_F.append(w6_F(p))
        w = complex(*rng.normal(size=2))
        z = complex(x, y)
        raw_J.append(invariant_J_derivation(w7_state(a, b, c, w, z)) / float(KAPPA_J))
        ref_J.append(w7_J(a, b, c, w, z))
    out = {}
    for name, raw, ref in (("F", raw_F, ref_F), ("J", raw_J, ref_J)):
        raw, ref = np.array(raw), np.array(ref)
        if np.allclose(raw, 0):
            raise CalibrationFailed(f"contraction for {name} vanishes identically")
        kappa = np.vdot(raw, ref) / np.vdot(raw, raw)
        resid = np.max(np.abs(kappa * raw - ref) / np.maximum(np.abs(ref), 1e-300))
        if resid > 1e-9:
            raise CalibrationFailed(f"{name} is not proportional to its closed form (residual {resid:.2e})")
        out[name] = (complex(kappa), float(resid))
    return out


# ---------------------------------------------------------------- M1..M7


def _real(x):
    return P.real(x)


def _traces_rho1(r1):
    r2 = r1 @ r1
    r4 = r2 @ r2
    r6 = r4 @ r2
    return _real(P.trace(r2)), _real(P.trace(r4)), _real(P.trace(r6))


def _m1_to_m6_without_F(psi: ThreeFermionState):
    """M1, M2, M3, M4, M6 from one- and two-body RDMs."""
    M1 = psi.norm2()
    r1 = rdm1(psi)
    t2, t4, t6 = _traces_rho1(r1)
    M2 = 3 * (M1 * M1 - 3 * t2) / 2
    M4 = (3 * M1**4 + 2 * M2 * M2 - 4 * M1 * M1 * M2 - 81 * t4) / 4
    M6 = (
        3 * M1**6 - 6 * M1**4 * M2 + 9 * M1**2 * M2**2 - 18 * M1**2 * M4
        - 2 * M2**3 + 6 * M2 * M4 - 729 * t6
    ) / 6
    r12 = rdm2_full(psi)
    tr2 = partial_trace_second(r12 @ r12)
    M3 = 3 * M1 * (M1 * M1 - M2) - 27 * _real(P.trace(r1 @ tr2))
    return M1, M2, M3, M4, M6


def fermion_invariants(psi: ThreeFermionState) -> FermionInvariants:
    M1, M2, M3, M4, M6 = _m1_to_m6_without_F(psi)
    F = invariant_F(psi)
    J = invariant_J(psi)
    M5 = P.abs2(F)
    M7 = -P.imag(F * J * J) / 8
    return FermionInvariants((M1, M2, M3, M4, M5, M6, M7), F, J)


def phi_polynomial(p: W6Point):
    """``d^2 (d^2 - s1)(d^2 - s1 - |z|^2) - 2abcd (x^2 - y^2) - 4 s3``."""
    a, b, c, d, x, y = p.as_tuple()
    s1 = a * a + b * b + c * c
    z2 = x * x + y * y
    return d * d * (d * d - s1) * (d * d - s1 - z2) - 2 * a * b * c * d * (x * x - y * y) - 4 * (a * b * c) ** 2


def w6_values(a, b, c, d, x, y) -> tuple:
    """Closed-form (M1..M7) on the normal form; polynomial, so it accepts complex arguments."""
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    z2 = x * x + y * y
    s1 = a2 + b2 + c2
    s2 = a2 * b2 + a2 * c2 + b2 * c2
    s3 = a2 * b2 * c2
    abcd = a * b * c * d
    re_z2 = x * x - y * y
    M1 = s1 + d2 + z2
    M2 = 2 * (s2 + s1 * d2) + 3 * d2 * z2
    M3 = M1 * (s2 + s1 * d2) - 6 * (s3 + abcd * re_z2 + s2 * d2)
    M4 = s1 * s3 + s2 * s2 + 3 * (s1 * s2 - s3) * d2 + 4 * (s2 + s1 * d2) * d2 * z2 + (s1 * s1 + s2 + 3 * z2 * z2) * d2 * d2
    M5 = d2 * (16 * s3 + 8 * abcd * re_z2 + d2 * z2 * z2)
    M6 = (
        (s1 * s2 - s3) * (d2**3 + s1 * d2 * d2 + s2 * d2 + s3 + 3 * d2 * d2 * z2)
        + (s1 * s3 + s2 * s2) * d2 * z2
        + 2 * s2 * d2 * d2 * z2 * z2
        + (s1 * s1 + s2 + 2 * s1 * z2 + z2 * z2) * d2**3 * z2
    )
    Phi = d2 * (d2 - s1) * (d2 - s1 - z2) - 2 * abcd * re_z2 - 4 * s3
    M7 = abcd * x * y * Phi
    return (M1, M2, M3, M4, M5, M6, M7), Phi


def w6_invariants(p: W6Point) -> FermionInvariants:
    M, Phi = w6_values(*p.as_tuple())
    F = w6_F(p)
    J = 2 * p.a * p.b * p.c * p.z + p.d * P.conj(p.z) * (M[0] - 2 * p.d * p.d)
    return FermionInvariants(M, F, J, Phi)


def w6_jacobian(point=(1.0, 2.0, 3.0, 4.0, 1.0, 1.0)) -> np.ndarray:
    """6x6 Jacobian of (M1'..M6') in (a,b,c,d,x,y) by complex-step differentiation."""
    h = 1e-30
    base = np.array(point, dtype=float)
    jac = np.empty((6, 6))
    for j in range(6):
        arg = base.astype(complex)
        arg[j] += 1j * h
        M, _ = w6_values(*arg)
        jac[:, j] = [m.imag / h for m in M[:6]]
    return jac


def independence_check(point=(1.0, 2.0, 3.0, 4.0, 1.0, 1.0)) -> dict:
    """Rank test for (M1'..M6') at ``point``.

    The rows have degrees 2 to 12 in the coordinates, so the raw singular
    value ratio mostly measures units.  Each row is scaled to unit length
    before the ratio used for the rank decision is taken.
    """
    jac = w6_jacobian(point)
    raw = np.linalg.svd(jac, compute_uv=False)
    eq = np.linalg.svd(jac / np.linalg.norm(jac, axis=1, keepdims=True), compute_uv=False)
    return {
        "singular_values": eq.tolist(),
        "ratio": float(eq[-1] / eq[0]),
        "raw_ratio": float(raw[-1] / raw[0]),
        "rank": int(np.sum(eq > 1e-6 * eq[0])),
    }


# ---------------------------------------------------------------- identities


def _syzygy_parts(M):
    M1, M2, M3, M4, M5, M6, M7 = M
    u = M1 * M2 - 2 * M3
    reh9 = u * u + 18 * M2 * (M2 * M2 - 4 * M4 - M5) + 9 * M1 * M1 * M5 + 144 * M6
    absJ2 = M1 * u / 3 + M2 * M2 - 4 * M4 - M5
    lhs = 12**4 * M7 * M7
    rhs = 36 * M5 * (M1 * u + 3 * M2 * M2 - 12 * M4 - 3 * M5) ** 2 - reh9 * reh9
    return absJ2, reh9, lhs, rhs


def _stencil_gradient(fn: Callable[[np.ndarray], np.ndarray], v: np.ndarray, h: float) -> np.ndarray:
    """Central 6th-order differences; exact (to round-off) for polynomials of degree <= 6."""
    w = np.array([-1, 9, -45, 45, -9, 1]) / 60.0
    offs = np.array([-3, -2, -1, 1, 2, 3])
    f0 = np.asarray(fn(v))
    grad = np.zeros((len(v),) + f0.shape)
    for i in range(len(v)):
        acc = 0.0
        for wk, ok in zip(w, offs):
            e = v.copy()
            e[i] += ok * h
            acc = acc + wk * np.asarray(fn(e))
        grad[i] = acc / h
    return grad


def _real_vector(psi: ThreeFermionState) -> np.ndarray:
    amp = P.to_float(psi.amplitudes)
    return np.concatenate([amp.real, amp.imag])


def _from_real_vector(v: np.ndarray) -> ThreeFermionState:
    return ThreeFermionState(v[:20] + 1j * v[20:])


def gradient_crosschecks(psi: ThreeFermionState) -> dict:
    """Residuals of the gradient expressions for M3 and M5 over the 40 real coordinates."""
    v = _real_vector(psi)
    scale = float(np.linalg.norm(v))
    if scale == 0:
        return {"M3": 0.0, "M5": 0.0}

    def m2m3(u):
        M1, M2, M3, _, _ = _m1_to_m6_without_F(_from_real_vector(u))
        return np.array([M2, M3])

    grad = _stencil_gradient(m2m3, v, 0.05 * scale)
    g2, g3 = grad[:, 0], grad[:, 1]
    M1, M2, M3, M4, _ = _m1_to_m6_without_F(psi)
    M5 = abs(invariant_F(psi)) ** 2
    m3_grad = 1.5 * M1 * M2 - g2 @ g2 / 8
    m5_grad = (10 * M2 * M2 + 8 * M1 * M3 - 24 * M4 - g2 @ g3) / 18
    return {"M3": float(abs(M3 - m3_grad)), "M5": float(abs(M5 - m5_grad))}


def identity_suite(psi: ThreeFermionState, inv: Optional[FermionInvariants] = None) -> dict:
    """Relative residuals of the |J|^2, Re(h), syzygy and |F|^2 identities.

    Each residual is divided by ``M1^deg`` so the numbers are scale free.
    """
    inv = inv or fermion_invariants(psi)
    M = tuple(float(m) for m in inv.M)
    M1 = M[0]
    if M1 == 0:
        return {"InvJ2": 0.0, "Reh": 0.0, "syzygy": 0.0, "M5F": 0.0}
    absJ2, reh9, lhs, rhs = _syzygy_parts(M)
    grads = gradient_crosschecks(psi)
    return {
        "InvJ2": abs(float(inv.abs_J2) - absJ2) / M1**4,
        "Reh": abs(18 * float(inv.re_h) - reh9) / M1**6,
        "syzygy": abs(lhs - rhs) / M1**12,
        "M5F": grads["M5"] / M1**4,
        "M3grad": grads["M3"] / M1**3,
    }


def m1m2_minus_2m3_w6(p: W6Point) -> tuple:
    """Both sides of the sum-of-squares form of ``(M1 M2 - 2 M3)/3`` on a W6 point."""
    a, b, c, d, x, y = p.as_tuple()
    M, _ = w6_values(a, b, c, d, x, y)
    lhs = (M[0] * M[1] - 2 * M[2]) / 3
    rhs = (2 * a * b * c - d * y * y) ** 2 + d * d * p.z2 * (M[0] - y * y) + 4 * p.s2 * d * d + d * x * x * (4 * a * b * c + d * y * y)
    return lhs, rhs


# ---------------------------------------------------------------- decisions


def _is_zero(q, deg: int, M1, thr: float = ZERO_THRESHOLD) -> bool:
    return abs(float(q)) < thr * float(M1) ** deg


def lu_equivalent(phi: ThreeFermionState, psi: ThreeFermionState, tol: float = 1e-8) -> bool:
    """Compare M1..M7 of the normalized states; zero states are equivalent only to each other."""
    n1, n2 = float(P.to_float(phi.norm2())), float(P.to_float(psi.norm2()))
    if n1 == 0 or n2 == 0:
        return n1 == n2
    a = fermion_invariants(phi.normalized()).as_array()
    b = fermion_invariants(psi.normalized()).as_array()
    return bool(np.all(np.abs(a - b) < tol))


class SloccType(str, enum.Enum):
    SEPARABLE = "separable"
    BISEPARABLE = "biseparable"
    W = "W"
    GHZ = "GHZ"


def slocc_type(psi: ThreeFermionState, inv: Optional[FermionInvariants] = None) -> SloccType:
    inv = inv or fermion_invariants(psi)
    M1, M2, M3, _, M5, _, _ = (float(m) for m in inv.M)
    if M1 == 0:
        raise ZeroState("SLOCC type of the zero state is undefined")
    if _is_zero(M2, 2, M1):
        return SloccType.SEPARABLE
    if not _is_zero(M5, 4, M1):
        return SloccType.GHZ
    if _is_zero(M1 * M2 - 2 * M3, 3, M1):
        return SloccType.BISEPARABLE
    return SloccType.W


def quasi_real(psi: ThreeFermionState, tol: float = ZERO_THRESHOLD, inv: Optional[FermionInvariants] = None) -> bool:
    inv = inv or fermion_invariants(psi)
    return _is_zero(inv.M7, 6, inv.M1, tol)


# ---------------------------------------------------------------- qubits


@dataclass(frozen=True)
class QubitInvariants:
    Q: tuple
    Hdet: complex
    symmetric: tuple = field(default=())

    def as_array(self) -> np.ndarray:
        return np.array([float(q) for q in self.Q])


def hyperdeterminant(phi: ThreeQubitState):
    t = phi.amplitudes
    a000, a001, a010, a011 = t[0, 0, 0], t[0, 0, 1], t[0, 1, 0], t[0, 1, 1]
    a100, a101, a110, a111 = t[1, 0, 0], t[1, 0, 1], t[1, 1, 0], t[1, 1, 1]
    return (
        a000**2 * a111**2 + a001**2 * a110**2 + a010**2 * a101**2 + a100**2 * a011**2
        - 2 * (
            a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111
            + a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101
        )
        + 4 * (a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111)
    )


def _kron(x, y):
    return np.kron(x, y) if not P.is_mp_array(x) else np.array(
        [[x[i // 2, j // 2] * y[i % 2, j % 2] for j in range(4)] for i in range(4)], dtype=object
    )


def qubit_invariants(phi: ThreeQubitState) -> QubitInvariants:
    r = qubit_rdms(phi)
    Q1 = phi.norm2()
    Q2 = _real(P.trace(r["A"] @ r["A"]))
    Q3 = _real(P.trace(r["B"] @ r["B"]))
    Q4 = _real(P.trace(r["C"] @ r["C"]))
    Q5 = sum(
        _real(P.trace(_kron(r[x], r[y]) @ r[x + y])) for x, y in (("A", "B"), ("B", "C"), ("A", "C"))
    )
    H = hyperdeterminant(phi)
    Q6 = P.abs2(H)
    Q7 = 8 * fermion_invariants(sov_isometry(phi)).M7
    sym = (Q1, Q2 + Q3 + Q4, Q5, Q2 * Q3 + Q2 * Q4 + Q3 * Q4, Q6, Q2 * Q3 * Q4, Q7)
    return QubitInvariants((Q1, Q2, Q3, Q4, Q5, Q6, Q7), H, sym)


def w6_qubit_values(p: W6Point) -> tuple:
    """Closed-form (Q1..Q7) at ``a|100> + b|010> + c|001> + d|111> + z|000>``."""
    a, b, c, d, x, y = p.as_tuple()
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    z2 = p.z2
    s1, s2, s3 = p.s1, p.s2, p.s3
    tail = 2 * s1 * z2 + z2 * z2
    Q1 = s1 + d2 + z2
    Q2 = (a2 + d2) ** 2 + (b2 + c2) ** 2 + tail
    Q3 = (b2 + d2) ** 2 + (a2 + c2) ** 2 + tail
    Q4 = (c2 + d2) ** 2 + (a2 + b2) ** 2 + tail
    p4 = a2 * a2 + b2 * b2 + c2 * c2
    Q5 = (
        3 * z2**3 + 9 * s1 * z2 * z2 + (9 * p4 + 11 * s2 + 2 * s1 * d2) * z2
        + 6 * a * b * c * d * (x * x - y * y)
        + 3 * (a2**3 + b2**3 + c2**3 + d2**3) + 2 * s1 * d2 * d2 + 2 * p4 * d2 + 3 * s2 * d2
        + 2 * s1 * s2 - 3 * s3
    )
    Q6 = d2 * ((4 * a * b * c - d * z2) ** 2 + 16 * a * b * c * d * x * x)
    Q7 = 8 * a * b * c * d * x * y * phi_polynomial(p)
    return (Q1, Q2, Q3, Q4, Q5, Q6, Q7)


def g_equivalent(phi1: ThreeQubitState, phi2: ThreeQubitState, tol: float = 1e-8) -> bool:
    """Equality of the symmetric generators, each compared at its own degree."""
    s1 = qubit_invariants(phi1).symmetric
    s2 = qubit_invariants(phi2).symmetric
    scale = max(float(s1[0]), float(s2[0]))
    if scale == 0:
        return True
    return all(
        abs(float(u) - float(v)) < tol * scale**deg for u, v, deg in zip(s1, s2, QUBIT_SYM_DEGREES)
    )
