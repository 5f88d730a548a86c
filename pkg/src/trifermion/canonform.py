"""Reconstruct the canonical W6 point of a state from its invariants.

Pipeline: evaluate the degree-8 elimination polynomial ``f(t)`` at
``(M1, ..., M6)``, take ``d^2`` as its largest admissible real root
(cross-checked against the maximal decomposable overlap), recover ``|z|^2``
from a cubic, then ``s1, s2, s3``, then ``a^2, b^2, c^2`` from a second
cubic, then ``x^2 - y^2`` and the sign of ``y``.  A Gauss-Newton polish on
the closed-form invariants removes the digits lost to conditioning; if the
result still disagrees with the input invariants the whole pipeline reruns
in extended precision.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import mpmath
import numpy as np

from . import precision as P
from ._fcoeffs import F_COEFFS
from .errors import Inconsistent, OptimizerFailed, ZeroState
from .exterior import (
    IDENTITY,
    ThreeFermionState,
    ThreeQubitState,
    W6Point,
    apply_local_unitaries,
    sov_isometry,
)
from .gme import _sov_sweep, mu_general, mu_sov
from .invariants import fermion_invariants, qubit_invariants, w6_qubit_values, w6_values
from .region import OrbitCase, CaseTag, in_delta, orbit_case

MU_CROSS_TOL = 1e-4
MATCH_TOL = 1e-8
REAL_ROOT_TOL = 1e-6
PERMUTATIONS: list[tuple[int, int, int]] = [tuple(p) for p in itertools.permutations((1, 2, 3))]


class DSource(str, enum.Enum):
    LARGEST_ROOT = "LargestRoot"
    MU_CROSS_CHECK = "MuCrossCheck"


# ------------------------------------------------------------ scalar helpers


def _is_mp(*xs) -> bool:
    return any(isinstance(x, (mpmath.mpf, mpmath.mpc)) for x in xs)


def _sqrt(x):
    return mpmath.sqrt(x) if _is_mp(x) else math.sqrt(x)


def _clamp_nonneg(v, tol: float, what: str):
    if v < 0:
        if -v > tol:
            raise Inconsistent(f"{what} = {float(v):.3e} is negative beyond round-off")
        return 0 * v
    return v


def _tolerances(prec: P.Precision) -> dict:
    if prec.extended:
        eps = 10.0 ** (-prec.digits)
        return {
            "match": 10.0 ** (-(prec.digits // 2)),
            "clamp": 10.0 ** (-prec.digits // 4),
            "zero": eps * 1e6,
            "region": 1e-12,
        }
    return {"match": MATCH_TOL, "clamp": 1e-6, "zero": 1e-12, "region": 1e-7}


# ------------------------------------------------------------ f(t)


@dataclass(frozen=True)
class FPolynomial:
    """``f(t) = sum_k c_k t^k`` evaluated at one invariant vector.

    ``scale`` is the sum of absolute values of all monomial contributions;
    coefficients below round-off relative to it are indistinguishable from 0.
    """

    coeffs: tuple
    scale: float

    def __call__(self, t):
        acc = 0 * t
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self, t):
        acc = 0 * t
        for k in range(len(self.coeffs) - 1, 0, -1):
            acc = acc * t + k * self.coeffs[k]
        return acc

    @property
    def max_abs(self) -> float:
        return max(abs(float(c)) for c in self.coeffs)

    def is_zero(self, rel: float) -> bool:
        return self.max_abs <= rel * max(self.scale, 1e-300)

    def roots(self, prec: P.Precision = P.Precision()) -> list:
        return polynomial_roots(self.coeffs, prec)


def f_coefficients(M: Sequence) -> FPolynomial:
    """Evaluate c_0..c_8 at ``M = (M1, ..., M6)`` (extra entries ignored)."""
    M = list(M)[:6]
    coeffs = []
    scale = 0.0
    for k in range(9):
        pref, terms = F_COEFFS[k]
        total = 0 * M[0]
        for exps, coef in terms:
            term = coef
            for m, e in zip(M, exps):
                if e:
                    term = term * m**e
            total = total + term
            scale += abs(pref * float(term))
        coeffs.append(pref * total)
    return FPolynomial(tuple(coeffs), scale)


def polynomial_roots(coeffs: Sequence, prec: P.Precision = P.Precision()) -> list:
    """All complex roots of ``sum_k coeffs[k] t^k``.

    Companion eigenvalues of the max-normalized polynomial in a power-of-two
    rescaled variable, then Newton refinement (in mpmath when extended).
    """
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    n = len(c) - 1
    if n < 1:
        return []
    cf = np.array([complex(v) for v in c])
    cf = cf / np.max(np.abs(cf))
    bound = max(abs(cf[k] / cf[n]) ** (1.0 / (n - k)) for k in range(n) if cf[k] != 0) if np.any(cf[:n]) else 1.0
    s = 2.0 ** round(math.log2(bound)) if bound > 0 else 1.0
    scaled = cf * s ** np.arange(n + 1)
    approx = np.roots(scaled[::-1]) * s

    def newton(r, poly, dpoly, steps):
        for _ in range(steps):
            d = dpoly(r)
            if d == 0:
                break
            step = poly(r) / d
            r = r - step
            if abs(step) <= 10 * abs(r) * P.eps_of(r) + 1e-300:
                break
        return r

    def horner(cs):
        def f(t):
            acc = 0 * t
            for v in reversed(cs):
                acc = acc * t + v
            return acc
        return f

    dc = [k * c[k] for k in range(1, n + 1)]
    if prec.extended:
        with mpmath.workdps(prec.digits):
            cm = [mpmath.mpmathify(v) for v in c]
            dm = [k * cm[k] for k in range(1, n + 1)]
            f, df = horner(cm), horner(dm)
            # only near-real roots matter downstream; leave the rest at binary64 accuracy
            return [
                newton(mpmath.mpc(complex(r)), f, df, 100) if abs(r.imag) < 1e-3 else mpmath.mpc(complex(r))
                for r in approx
            ]
    cc = [complex(v) for v in c]
    f, df = horner(cc), horner([complex(v) for v in dc])
    out = []
    for r in approx:
        refined = newton(complex(r), f, df, 3)
        # keep refinement only if it did not make things worse
        out.append(refined if abs(f(refined)) <= abs(f(complex(r))) else complex(r))
    return out


def real_roots_in_unit(roots: list, tol: float = REAL_ROOT_TOL) -> list:
    """Real parts of roots that are numerically real and lie in ``(-tol, 1 + tol)``, descending."""
    out = []
    for r in roots:
        re, im = r.real, r.imag
        if abs(im) <= tol * max(1.0, abs(float(re))) and -tol < re < 1 + tol:
            out.append(re)
    return sorted(out, reverse=True)


# ------------------------------------------------------------ g, h


def g_coefficients(t, M: Sequence) -> list:
    """Coefficients of ``g(s, t)`` in ``s``, highest degree first."""
    M2, M3, M4, M5 = M[1], M[2], M[3], M[4]
    return [
        3 * t**2,
        9 * (2 * t - 1) * t**2,
        6 * (1 - 2 * M2) * t**2 + 2 * (M2 - 2 * M3) * t - 3 * M5,
        -96 * t**5 + 144 * t**4 - 48 * (1 + M2) * t**3 + 16 * (2 * M2 - M3) * t**2
        + 2 * (2 * M3 + 3 * M2**2 - M2 - 12 * M4 - 6 * M5) * t + 3 * M5,
    ]


def h_coefficients(t, M: Sequence) -> list:
    """Coefficients of ``h(s, t)`` in ``s``, highest degree first."""
    M2, M3, M5, M6 = M[1], M[2], M[4], M[5]
    return [
        27 * t**4,
        36 * t**3 * (8 * t**2 - 4 * t + M2),
        6 * t**2 * (144 * t**4 - 144 * t**3 + 6 * t**2 * (7 + 4 * M2) - 4 * t * (4 * M2 + M3) - 3 * M5),
        12 * t * (4 * t**2 - 2 * t + M2) * (6 * t**2 * (1 - 2 * M2) + 2 * t * (M2 - 2 * M3) - 3 * M5),
        -2304 * t**8 + 4608 * t**7 - 576 * (5 + 4 * M2) * t**6 + 192 * (3 + 16 * M2 - 2 * M3) * t**5
        + 96 * (4 * M3 - 11 * M2 - 6 * M2**2 - 3 * M5) * t**4
        + 48 * (M2 - 2 * M3 + 8 * M2**2 + 6 * M5 - 4 * M2 * M3) * t**3
        + 4 * (16 * M2 * M3 - 7 * M2**2 - 18 * M5 - 36 * M2 * M5 - 4 * M3**2 - 144 * M6) * t**2
        + 24 * (2 * M2 - M3) * M5 * t - 9 * M5**2,
    ]


def g_h_polynomials(M: Sequence):
    """Return evaluators ``g(s, t)`` and ``h(s, t)`` for fixed invariants."""

    def g(s, t):
        return _polyval(g_coefficients(t, M), s)

    def h(s, t):
        return _polyval(h_coefficients(t, M), s)

    return g, h


def _polyval(coeffs_high_first, s):
    acc = 0 * s
    for c in coeffs_high_first:
        acc = acc * s + c
    return acc


def sylvester_resultant(p: Sequence, q: Sequence):
    """Determinant of the Sylvester matrix of two polynomials (highest degree first)."""
    m, n = len(p) - 1, len(q) - 1
    N = m + n
    mp_mode = _is_mp(*p, *q)
    S = mpmath.matrix(N, N) if mp_mode else np.zeros((N, N))
    for i in range(n):
        for j, c in enumerate(p):
            S[i, i + j] = c
    for i in range(m):
        for j, c in enumerate(q):
            S[n + i, i + j] = c
    return mpmath.det(S) if mp_mode else float(np.linalg.det(S))


def _h_along_g(t, M):
    """``h(s(t), t)`` with ``s(t)`` the largest root of ``g(., t)``; vanishes at ``t = d^2``."""
    s = cubic_real_roots(*g_coefficients(t, M))[0]
    return _polyval(h_coefficients(t, M), s)


def refine_d2(t0, M, iterations: int = 60):
    """Secant refinement of a root of f on the unexpanded pair (g, h).

    The expanded coefficients of f cancel heavily; ``h(s(t), t)`` does not,
    so a root located on f gains most of the lost digits here.  Returns
    ``t0`` unchanged if the refinement does not reduce ``|h|``.
    """
    eps = P.eps_of(t0)
    try:
        h0 = _h_along_g(t0, M)
        step = max(abs(t0), 1) * eps ** 0.5
        t1 = t0 + step
        h1 = _h_along_g(t1, M)
        a, fa, b, fb = t0, h0, t1, h1
        for _ in range(iterations):
            if fb == fa:
                break
            c = b - fb * (b - a) / (fb - fa)
            a, fa = b, fb
            b, fb = c, _h_along_g(c, M)
            if abs(b - a) <= 4 * eps * max(abs(b), 1):
                break
    except (Inconsistent, ValueError, ZeroDivisionError):
        return t0
    if abs(b - t0) > 1e-3 or not abs(fb) <= abs(h0):
        return t0
    return b


# ------------------------------------------------------------ cubic


def cubic_real_roots(c3, c2, c1, c0, tol: float = 1e-9) -> list:
    """Three real roots (descending) of a cubic known to have only real roots.

    Trigonometric form; a slightly positive depressed coefficient from
    round-off is clamped to the triple-root limit.
    """
    mp_mode = _is_mp(c3, c2, c1, c0)
    cos, acos, pi = (mpmath.cos, mpmath.acos, mpmath.pi) if mp_mode else (math.cos, math.acos, math.pi)
    A, B, C = c2 / c3, c1 / c3, c0 / c3
    p = B - A * A / 3
    q = 2 * A**3 / 27 - A * B / 3 + C
    shift = -A / 3
    if p >= 0:
        if p > tol * (1 + abs(A) ** 2):
            raise Inconsistent("cubic has complex roots")
        return [shift] * 3
    r = 2 * _sqrt(-p / 3)
    arg = 3 * q / (p * r)
    arg = max(-1, min(1, arg))
    th = acos(arg) / 3
    roots = [shift + r * cos(th - 2 * pi * k / 3) for k in range(3)]
    return sorted(roots, reverse=True)


# ------------------------------------------------------------ results


@dataclass(frozen=True)
class CanonicalResult:
    point: W6Point
    case: OrbitCase
    d_source: DSource
    residuals: dict = field(default_factory=dict)
    precision: P.Precision = P.Precision()
    real_roots: tuple = ()
    escalated: bool = False


# ------------------------------------------------------------ polish


def _invariant_residual(v, M):
    vals, _ = w6_values(*v)
    return [vals[k] - M[k] for k in range(7)]


def _jacobian(v):
    """7x6 Jacobian of (M1'..M7') by complex-step differentiation."""
    if _is_mp(*v):
        h = mpmath.mpf(10) ** (-mpmath.mp.dps)
        J = mpmath.matrix(7, 6)
        for j in range(6):
            w = [mpmath.mpc(x) for x in v]
            w[j] += 1j * h
            vals, _ = w6_values(*w)
            for i in range(7):
                J[i, j] = vals[i].imag / h
        return J
    h = 1e-30
    J = np.zeros((7, 6))
    for j in range(6):
        w = np.array(v, dtype=complex)
        w[j] += 1j * h
        vals, _ = w6_values(*w)
        J[:, j] = np.imag(vals) / h
    return J


def _norm(r) -> float:
    return max(abs(float(x)) for x in r)


def _sq(r):
    return sum(x * x for x in r)


def _lm_step(J, r, damping, mp_mode):
    """Solve ``(J^T J + damping I) s = -J^T r``; ``damping = 0`` is a least-squares step."""
    if mp_mode:
        if damping == 0:
            try:
                s, _ = mpmath.qr_solve(J, mpmath.matrix([-x for x in r]))
                return [s[i] for i in range(6)]
            except (ValueError, ZeroDivisionError):
                # rank-deficient on degenerate orbits
                damping = mpmath.sqrt(mpmath.eps) * mpmath.mnorm(J.T * J, 1)
        A = J.T * J + damping * mpmath.eye(6)
        s = mpmath.lu_solve(A, -(J.T * mpmath.matrix(r)))
        return [s[i] for i in range(6)]
    r = np.array(r, dtype=float)
    if damping == 0:
        return np.linalg.lstsq(J, -r, rcond=1e-15)[0].tolist()
    return np.linalg.solve(J.T @ J + damping * np.eye(6), -J.T @ r).tolist()


def polish(v: list, M: Sequence, sweeps: int = 200):
    """Levenberg-Marquardt on ``w6_values(v) = M`` starting with pure Gauss-Newton steps.

    Returns the best iterate and its max-norm residual.
    """
    v = list(v)
    r = _invariant_residual(v, M)
    best = _sq(r)
    mp_mode = _is_mp(*v)
    eps = P.eps_of(v[0])
    damping = 0 * best
    for _ in range(sweeps):
        if best == 0:
            break
        J = _jacobian(v)
        accepted = False
        for _ in range(30):
            step = _lm_step(J, r, damping, mp_mode)
            trial = [x + s for x, s in zip(v, step)]
            rt = _invariant_residual(trial, M)
            if _sq(rt) < best:
                accepted = True
                break
            damping = max(damping * 10, 1e-12 * (1 + 0 * damping))
        if not accepted:
            break
        v, r, best = trial, rt, _sq(rt)
        damping = damping / 100 if damping > 1e-14 else 0 * damping
        if max(abs(float(s)) for s in step) < 10 * eps:
            break
    return v, _norm(r)


# ------------------------------------------------------------ main algorithm


def _normalized_invariants(psi: ThreeFermionState, prec: P.Precision):
    n2 = psi.norm2()
    if float(P.to_float(n2)) == 0:
        raise ZeroState("cannot canonicalize the zero state")
    unit = psi / P.sqrt(n2)
    inv = fermion_invariants(unit)
    return unit, [P.real(m) if k < 6 else m for k, m in enumerate(inv.M)]


def _reconstruct(d2, M, tol: dict):
    """Back-substitution from ``d^2`` to ``(a, b, c, d, x, y)``."""
    M1, M2, M3, M4, M5, M6, M7 = M
    d = _sqrt(d2)
    gc = g_coefficients(d2, M)
    z2 = _clamp_nonneg(cubic_real_roots(*gc)[0], tol["clamp"], "|z|^2")
    s1 = M1 - d2 - z2
    s2 = (2 * d2**2 - (2 + z2) * d2 + M2) / 2
    s3 = (
        24 * d2**4 - 12 * (2 + z2) * d2**3 + 3 * (4 * M2 + 2 * z2 - z2**2) * d2**2 + 2 * (2 * M3 - M2) * d2 + 3 * M5
    ) / (24 * d2)
    sq = cubic_real_roots(1, -s1, s2, -s3)
    a, b, c = (_sqrt(_clamp_nonneg(v, tol["clamp"], "squared coordinate")) for v in sq)
    abcd = a * b * c * d
    diff = ((M1 * (s2 + s1 * d2) - M3) / 6 - s3 - s2 * d2)
    if abs(float(abcd)) > tol["clamp"]:
        x2 = (z2 + diff / abcd) / 2
        x2 = max(0 * x2, min(z2, x2))
        x, y = _sqrt(x2), _sqrt(z2 - x2)
    else:
        x, y = _sqrt(z2), 0 * z2
    _, Phi = w6_values(a, b, c, d, x, y)
    if abs(float(M7)) > tol["zero"] and float(abcd * x * Phi * M7) < 0:
        y = -y
    return [a, b, c, d, x, y], {"z2": z2, "g": _polyval(gc, z2)}


def _apply_conventions(v, tol: float) -> W6Point:
    a, b, c, d, x, y = v
    a, b, c = sorted((abs(a), abs(b), abs(c)), reverse=True)
    x = abs(x)
    p = W6Point(a, b, c, abs(d), x, y)
    case = orbit_case(p, tol) if in_delta(p, tol).in_region else None
    if case is not None:
        if case.tag in (CaseTag.SEMICIRCLE_V, CaseTag.SINGLE_III):
            p = W6Point(a, b, c, abs(d), _sqrt(x * x + y * y), 0 * y)
        elif case.tag == CaseTag.PAIR_IV and y < 0:
            p = p.conj()
    return p


def _canonicalize_once(psi: ThreeFermionState, prec: P.Precision, mu: float) -> CanonicalResult:
    tol = _tolerances(prec)
    with P.working_precision(prec):
        if prec.extended:
            psi = psi.to_extended()
        _, M = _normalized_invariants(psi, prec)
        fpoly = f_coefficients(M)
        roots: list = []
        d_source = DSource.MU_CROSS_CHECK
        d2 = None
        if not fpoly.is_zero(1e3 * P.eps_of(M[0])):
            roots = real_roots_in_unit(fpoly.roots(prec))
            if roots:
                cand = min(max(roots[0], 0 * roots[0]), 1 + 0 * roots[0])
                if cand > 0:
                    cand = refine_d2(cand, M)
                    if abs(float(_sqrt(cand)) - mu) < MU_CROSS_TOL:
                        d2, d_source = cand, DSource.LARGEST_ROOT
        mu2 = P.to_mp(mu) ** 2 if prec.extended else mu * mu
        if prec.extended:
            # mu is only binary64-accurate
            mu2 = refine_d2(mu2, M)
        starts = [mu2] if d2 is None else [d2, mu2]
        best = None
        for t0 in starts:
            try:
                v, _ = _reconstruct(t0, M, tol)
            except Inconsistent:
                continue
            v, res = polish(v, M)
            if best is None or res < best[1]:
                best = (v, res)
        if best is None:
            raise Inconsistent("no admissible reconstruction from the root or from mu")
        p = _apply_conventions(best[0], tol["region"])
        vals, _ = w6_values(*p.as_tuple())
        match = max(abs(float(vals[k] - M[k])) for k in range(7))
        if match > tol["match"]:
            raise Inconsistent(f"reconstructed point misses the invariants by {match:.3e}")
        t = p.d * p.d
        residuals = {
            "f": abs(float(fpoly(t))) / max(fpoly.max_abs, 1e-300),
            "g": abs(float(_polyval(g_coefficients(t, M), p.z2))),
            "invariant_match": match,
            "mu_gap": abs(float(p.d) - mu),
        }
        verdict = in_delta(p.to_float() if not prec.extended else p, tol["region"])
        if not verdict.in_region:
            raise Inconsistent(f"reconstructed point lies outside the region ({verdict.violated})")
        case = orbit_case(p, tol["region"])
        return CanonicalResult(
            p, case, d_source, residuals, prec, tuple(float(r) for r in roots)
        )


def canonicalize(psi: ThreeFermionState, precision: P.Precision | None = None,
                 escalate: bool = True, mu: Optional[float] = None) -> CanonicalResult:
    """Canonical point of the orbit of ``psi`` inside the region Delta.

    With ``escalate`` a binary64 run is repeated in extended precision when
    it fails, or when it lands on a degenerate orbit (where the invariant map
    is singular and binary64 only resolves about half the digits).  The
    point is then rounded back to binary64.  ``Inconsistent`` surfaces only
    if the extended run fails too.
    """
    prec = precision or P.Precision()
    if float(P.to_float(psi.norm2())) == 0:
        raise ZeroState("cannot canonicalize the zero state")
    if mu is None:
        mu = mu_general(psi.to_binary64().normalized()).mu
    try:
        res = _canonicalize_once(psi, prec, mu)
        if prec.extended or not escalate or res.case.tag == CaseTag.SINGLE_I:
            return res
    except Inconsistent:
        if prec.extended or not escalate:
            raise
    ext = _canonicalize_once(psi, P.Precision(P.EXTENDED), mu)
    point = ext.point.to_float()
    return CanonicalResult(point, orbit_case(point, _tolerances(prec)["region"]), ext.d_source,
                           ext.residuals, ext.precision, ext.real_roots, escalated=True)


def root_census(psi: ThreeFermionState) -> dict:
    """Real roots of f for one state, with the checks the algorithm does not rely on."""
    unit, M = _normalized_invariants(psi, P.Precision())
    fpoly = f_coefficients(M)
    mu = mu_general(unit).mu
    if fpoly.is_zero(1e3 * np.finfo(float).eps):
        return {"identically_zero": True, "roots": [], "mu": mu}
    roots = real_roots_in_unit(fpoly.roots(), tol=1e-6)
    if roots:
        # the expanded f loses digits in binary64; refine on the elimination pair
        roots[0] = float(refine_d2(roots[0], M))
    all_real = [r for r in fpoly.roots() if abs(r.imag) <= 1e-6 * max(1.0, abs(r.real))]
    return {
        "identically_zero": False,
        "roots": roots,
        "count_real": len(all_real),
        "all_in_unit": all(-1e-9 <= r.real <= 1 + 1e-9 for r in all_real),
        "largest_is_d2": bool(roots) and abs(math.sqrt(max(roots[0], 0.0)) - mu) < MU_CROSS_TOL,
        "mu": mu,
    }


# ------------------------------------------------------------ qubits


def qubit_canonicalize(phi: ThreeQubitState, precision: P.Precision | None = None,
                       tol: float = 1e-8) -> tuple[W6Point, tuple[int, int, int]]:
    """Theta canonical point of a three-qubit state and the block permutation used.

    The permutation is the first one (identity first) whose Q2, Q3, Q4
    agree with the input's; near-ties therefore resolve to the identity.
    """
    if float(P.to_float(phi.norm2())) == 0:
        raise ZeroState("cannot canonicalize the zero state")
    unit = phi / P.sqrt(phi.norm2())
    res = canonicalize(sov_isometry(unit), precision)
    Q = qubit_invariants(unit.to_binary64() if hasattr(unit, "to_binary64") else unit).Q
    target = np.array([float(P.to_float(P.real(Q[k]))) for k in (1, 2, 3)])
    best, best_err = None, math.inf
    for perm in PERMUTATIONS:
        cand = res.point.permuted(perm)
        vals = w6_qubit_values(cand.to_float())
        err = float(np.max(np.abs(np.array([float(vals[k]) for k in (1, 2, 3)]) - target)))
        if err < best_err - tol:
            best, best_err = perm, err
    point = res.point.permuted(best)
    return point, best


@dataclass(frozen=True)
class QubitWitness:
    """Local unitaries and permutation with ``g . phi`` equal to the canonical state."""

    unitaries: tuple[np.ndarray, np.ndarray, np.ndarray]
    permutation: tuple[int, int, int]
    point: W6Point
    image: ThreeQubitState
    residual: float

    def apply(self, phi: ThreeQubitState) -> ThreeQubitState:
        return apply_local_unitaries(phi, self.unitaries)


def _unitary_sending_to_one(u: np.ndarray) -> np.ndarray:
    """2x2 unitary mapping ``u`` to ``|1>``."""
    perp = np.array([-np.conj(u[1]), np.conj(u[0])])
    return np.array([perp.conj(), u.conj()])


def _off_pattern(t: np.ndarray, u1, u2, u3) -> float:
    """Largest overlap with ``u_perp (x) u (x) u`` and its two siblings; zero at a stationary point."""
    perp = [np.array([-np.conj(u[1]), np.conj(u[0])]) for u in (u1, u2, u3)]
    c = np.conj
    return max(
        abs(np.einsum("ijk,i,j,k->", t, c(perp[0]), c(u2), c(u3))),
        abs(np.einsum("ijk,i,j,k->", t, c(u1), c(perp[1]), c(u3))),
        abs(np.einsum("ijk,i,j,k->", t, c(u1), c(u2), c(perp[2]))),
    )


def _refine_maximizer(t: np.ndarray, u3: np.ndarray, tol: float = 1e-14, max_sweeps: int = 20000):
    """Continue the alternating sweeps from one start until the stationarity amplitudes vanish."""
    U3 = u3[None]
    for _ in range(max_sweeps):
        U1, U2, U3, _val = _sov_sweep(t, U3)
        if _off_pattern(t, U1[0], U2[0], U3[0]) <= tol:
            break
    return U1[0], U2[0], U3[0]


def qubit_witness(phi: ThreeQubitState, starts: int = 32, seed: int = 0) -> QubitWitness:
    """Constructive canonical form: send the best product vector to ``|111>``, then fix phases."""
    t = P.to_float(phi.amplitudes).astype(complex)
    nrm = float(np.linalg.norm(t))
    if nrm == 0:
        raise ZeroState("cannot canonicalize the zero state")
    t = t / nrm
    unit = ThreeQubitState(t)
    r = mu_sov(unit, starts=starts, seed=seed)
    if not r.converged:
        r = mu_sov(unit, starts=4 * starts, seed=seed + 1)
        if not r.converged:
            raise OptimizerFailed("product-vector maximization did not converge")
    u1, u2, u3 = _refine_maximizer(t, r.maximizer[2])
    Us = [_unitary_sending_to_one(u) for u in (u1, u2, u3)]
    s = apply_local_unitaries(unit, Us).amplitudes
    # d real positive
    ph = s[1, 1, 1] / abs(s[1, 1, 1])
    Us[0] = Us[0] * np.array([[1], [1 / ph]])
    s = apply_local_unitaries(unit, Us).amplitudes
    # phases of the |0> components so that t100, t010, t001 become real nonnegative
    arg = [np.angle(s[1, 0, 0]), np.angle(s[0, 1, 0]), np.angle(s[0, 0, 1])]
    tA = (-arg[1] - arg[2] + arg[0]) / 2
    tB = (-arg[0] - arg[2] + arg[1]) / 2
    tC = (-arg[0] - arg[1] + arg[2]) / 2
    for k, th in enumerate((tA, tB, tC)):
        Us[k] = np.diag([np.exp(1j * th), 1]) @ Us[k]
    s = apply_local_unitaries(unit, Us).amplitudes
    if s[0, 0, 0].real < 0:
        for k in range(3):
            Us[k] = np.diag([-1, 1]) @ Us[k]
    image = apply_local_unitaries(unit, Us)
    residual = math.inf
    for prec in (None, P.Precision(P.EXTENDED)):
        point, _ = qubit_canonicalize(unit, prec)
        target = P.to_float(point.qubit_state().amplitudes)
        residual = float(np.linalg.norm(image.amplitudes - target))
        if residual < 1e-9:
            break
    return QubitWitness(tuple(Us), IDENTITY, point.to_float(), image, residual)
