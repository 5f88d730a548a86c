"""The canonical region Delta of normalized five-term states, its projection, and Theta.

A point ``p = (a, b, c, d, x, y)`` stands for the unit state
``a e235 + b e145 + c e136 + d e246 + (x + iy) e135``.  Delta is cut out by
the linear constraints ``a >= b >= c >= 0, x >= 0, d > 0`` and three
polynomial inequalities (named ``gap``, ``strong`` and ``arc`` below).
An equivalent, longer description uses four inequalities (``pair``,
``gap``, ``psi``, ``phi``); both are implemented so that each checks the other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import NotInDelta, NotInDeltaPrime, NotNormalized
from .exterior import W6Point

DEFAULT_TOL = 1e-9
NORM_TOL = 1e-8
D_MIN = 2.0 / 3.0


@dataclass(frozen=True)
class RegionVerdict:
    in_region: bool
    on_boundary: bool
    violated: list[str] = field(default_factory=list)
    margins: dict[str, float] = field(default_factory=dict)


class CaseTag(str, enum.Enum):
    SINGLE_I = "SinglePoint_i"
    SINGLE_II = "SinglePoint_ii"
    SINGLE_III = "SinglePoint_iii"
    PAIR_IV = "Pair_iv"
    SEMICIRCLE_V = "Semicircle_v"


@dataclass(frozen=True)
class OrbitCase:
    tag: CaseTag
    partner: Optional[W6Point] = None
    radius: Optional[float] = None

    @property
    def unique(self) -> bool:
        return self.tag in (CaseTag.SINGLE_I, CaseTag.SINGLE_II, CaseTag.SINGLE_III)


# ------------------------------------------------------------ polynomials


def gap(a, b, c, d):
    """``d (d^2 - s1) - 2abc``."""
    return d * (d * d - (a * a + b * b + c * c)) - 2 * a * b * c


def strong(a, b, c, d):
    """``2abc - d (1 - 2 d^2)``."""
    return 2 * a * b * c - d * (1 - 2 * d * d)


def arc(a, b, c, d, x):
    """``gap * strong - 4abcd x^2``; nonnegative exactly on the admissible arc of z."""
    return gap(a, b, c, d) * strong(a, b, c, d) - 4 * a * b * c * d * x * x


def phi(a, b, c, d, x, y):
    s1 = a * a + b * b + c * c
    z2 = x * x + y * y
    return d * d * (d * d - s1) * (d * d - s1 - z2) - 2 * a * b * c * d * (x * x - y * y) - 4 * (a * b * c) ** 2


def pair_bound(a, b, c, d):
    """``a^2 b^2 + c^2 d^2 + d^2 (2d^2 - 1)``."""
    return a * a * b * b + c * c * d * d + d * d * (2 * d * d - 1)


def psi_bound(a, b, c, d, x, y):
    s1 = a * a + b * b + c * c
    return 2 * pair_bound(a, b, c, d) * (d * d - s1) - x * x * (a * b + c * d) ** 2 - y * y * (a * b - c * d) ** 2


def full_phi_bound(a, b, c, d, x, y):
    s1 = a * a + b * b + c * c
    return d * d * (2 * d * d - 1) * (d * d - s1) - 2 * a * b * c * d * (x * x - y * y) - 4 * (a * b * c) ** 2


# ------------------------------------------------------------ vectorized slacks


def _cols(P: np.ndarray):
    P = np.atleast_2d(np.asarray(P, dtype=float))
    return P, tuple(P[:, k] for k in range(6))


def delta_slacks(P: np.ndarray) -> dict[str, np.ndarray]:
    """Slack of every defining inequality for an (n, 6) array of points; >= 0 means satisfied."""
    _, (a, b, c, d, x, y) = _cols(P)
    return {
        "a>=b": a - b,
        "b>=c": b - c,
        "c>=0": c,
        "x>=0": x,
        "d>0": d,
        "gap": gap(a, b, c, d),
        "strong": strong(a, b, c, d),
        "arc": arc(a, b, c, d, x),
    }


def delta_full_slacks(P: np.ndarray) -> dict[str, np.ndarray]:
    _, (a, b, c, d, x, y) = _cols(P)
    return {
        "a>=b": a - b,
        "b>=c": b - c,
        "c>=0": c,
        "x>=0": x,
        "d>0": d,
        "pair": pair_bound(a, b, c, d),
        "gap": gap(a, b, c, d),
        "psi": psi_bound(a, b, c, d, x, y),
        "phi": full_phi_bound(a, b, c, d, x, y),
    }


def theta_slacks(P: np.ndarray) -> dict[str, np.ndarray]:
    _, (a, b, c, d, x, y) = _cols(P)
    return {
        "a>=0": a,
        "b>=0": b,
        "c>=0": c,
        "x>=0": x,
        "d>0": d,
        "gap": gap(a, b, c, d),
        "strong": strong(a, b, c, d),
        "arc": arc(a, b, c, d, x),
    }


def _members(slacks: dict[str, np.ndarray], tol: float) -> np.ndarray:
    ok = np.ones_like(next(iter(slacks.values())), dtype=bool)
    for name, s in slacks.items():
        ok &= (s > tol) if name == "d>0" else (s >= -tol)
    return ok


def delta_members(P: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    return _members(delta_slacks(P), tol)


def delta_full_members(P: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    return _members(delta_full_slacks(P), tol)


def boundary_factors(P: np.ndarray) -> np.ndarray:
    """Columns c, x, a-b, b-c, Phi whose product vanishes exactly on the boundary of Delta."""
    _, (a, b, c, d, x, y) = _cols(P)
    return np.stack([c, x, a - b, b - c, phi(a, b, c, d, x, y)], axis=1)


# ------------------------------------------------------------ scalar API


def _as_point(p) -> W6Point:
    return p if isinstance(p, W6Point) else W6Point(*p)


def _check_normalized(p: W6Point) -> None:
    n2 = float(p.norm2())
    if abs(n2 - 1) > NORM_TOL:
        raise NotNormalized(f"squared norm {n2:.12g} differs from 1")


def _verdict(slacks: dict[str, np.ndarray], tol: float, boundary) -> RegionVerdict:
    margins = {k: float(v[0]) for k, v in slacks.items()}
    violated = [
        k for k, v in margins.items() if ((v <= tol) if k == "d>0" else (v < -tol))
    ]
    inside = not violated
    return RegionVerdict(inside, bool(inside and boundary()), violated, margins)


def _delta_boundary(p: W6Point, tol: float) -> bool:
    f = boundary_factors(np.array([p.as_tuple()], dtype=float))[0]
    return bool(np.any(np.abs(f) < tol))


def in_delta(p, tol: float = DEFAULT_TOL) -> RegionVerdict:
    p = _as_point(p)
    _check_normalized(p)
    arr = np.array([p.to_float().as_tuple()])
    return _verdict(delta_slacks(arr), tol, lambda: _delta_boundary(p, tol))


def in_delta_full(p, tol: float = DEFAULT_TOL) -> RegionVerdict:
    p = _as_point(p)
    _check_normalized(p)
    arr = np.array([p.to_float().as_tuple()])
    return _verdict(delta_full_slacks(arr), tol, lambda: _delta_boundary(p, tol))


def on_boundary(p, tol: float = DEFAULT_TOL) -> bool:
    """``c x (a-b) (b-c) Phi = 0``, valid only for members of Delta."""
    p = _as_point(p)
    if abs(float(p.norm2()) - 1) > NORM_TOL or not in_delta(p, tol).in_region:
        raise NotInDelta(f"{p.as_tuple()} is not in the canonical region")
    return _delta_boundary(p, tol)


def in_delta_prime(q, tol: float = DEFAULT_TOL) -> bool:
    """Membership of ``(a, b, c, d)`` in the projection of Delta."""
    a, b, c, d = (float(v) for v in q)
    return bool(
        a - b >= -tol
        and b - c >= -tol
        and c >= -tol
        and d > tol
        and a * a + b * b + c * c + d * d <= 1 + tol
        and gap(a, b, c, d) >= -tol
        and 2 * a * b * c + d * (2 * d * d - 1) >= -tol
    )


@dataclass(frozen=True)
class Fiber:
    """Admissible values of z over a point of the projection.

    ``kind`` is ``"point"`` (r = 0), ``"semicircle"`` (|z| = r, x >= 0) or
    ``"arc"`` (|z| = r, 0 <= x <= x0).
    """

    kind: str
    r: float
    x0: Optional[float] = None

    def contains_x(self, x: float, tol: float = DEFAULT_TOL) -> bool:
        if self.kind == "point":
            return abs(x) <= tol
        if self.kind == "semicircle":
            return -tol <= x <= self.r + tol
        return -tol <= x <= self.x0 + tol


def fiber(q, tol: float = DEFAULT_TOL) -> Fiber:
    if not in_delta_prime(q, tol):
        raise NotInDeltaPrime(f"{tuple(q)} is not in the projection of the canonical region")
    a, b, c, d = (float(v) for v in q)
    r = float(np.sqrt(max(0.0, 1 - a * a - b * b - c * c - d * d)))
    if r <= tol:
        return Fiber("point", 0.0, 0.0)
    if c <= tol or phi(a, b, c, d, r, 0.0) >= 0:
        return Fiber("semicircle", r)
    x0 = float(np.sqrt(max(0.0, gap(a, b, c, d) * strong(a, b, c, d) / (4 * a * b * c * d))))
    return Fiber("arc", r, min(x0, r))


def orbit_case(p, tol: float = 1e-9) -> OrbitCase:
    """Which of the five shapes the orbit of ``p`` traces inside Delta.

    Near-ties resolve most-degenerate-first: iii, v, ii, iv, i.
    """
    p = _as_point(p)
    if abs(float(p.norm2()) - 1) > NORM_TOL or not in_delta(p, tol).in_region:
        raise NotInDelta(f"{p.as_tuple()} is not in the canonical region")
    a, b, c, d, x, y = (float(v) for v in p.as_tuple())
    r = float(np.hypot(x, y))
    c0 = abs(c) < tol
    if c0 and r < tol:
        return OrbitCase(CaseTag.SINGLE_III)
    if c0:
        return OrbitCase(CaseTag.SEMICIRCLE_V, radius=r)
    xphi0 = abs(x) < tol or abs(phi(a, b, c, d, x, y)) < tol
    if xphi0 and abs(y) < tol:
        return OrbitCase(CaseTag.SINGLE_II)
    if xphi0:
        return OrbitCase(CaseTag.PAIR_IV, partner=p.conj())
    return OrbitCase(CaseTag.SINGLE_I)


def in_theta(p, tol: float = DEFAULT_TOL) -> RegionVerdict:
    """Delta without the ordering of (a, b, c); boundary where ``abcx Phi = 0``."""
    p = _as_point(p)
    _check_normalized(p)
    a, b, c, d, x, y = (float(v) for v in p.as_tuple())
    arr = np.array([[a, b, c, d, x, y]])

    def boundary():
        return any(abs(v) < tol for v in (a, b, c, x, phi(a, b, c, d, x, y)))

    return _verdict(theta_slacks(arr), tol, boundary)


# ------------------------------------------------------------ sampling


def sample_delta(
    count: int, seed: int, margin: float = 0.0, batch: int = 65536, d_floor: float = D_MIN
) -> np.ndarray:
    """``count`` members of Delta as an (n, 6) array.

    Uniform points on the unit sphere are folded into the sector
    ``a >= b >= c >= 0, x >= 0, d >= d_floor`` and filtered by membership.
    The default floor is the proven minimum of d over Delta.
    With ``margin > 0`` only points whose boundary factors and slacks all
    exceed ``margin`` are kept (strict interior, away from the boundary).
    """
    rng = np.random.default_rng(seed)
    out = []
    have = 0
    while have < count:
        v = rng.normal(size=(batch, 6))
        v /= np.linalg.norm(v, axis=1, keepdims=True)
        abc = -np.sort(-np.abs(v[:, :3]), axis=1)
        P = np.column_stack([abc, np.abs(v[:, 3]), np.abs(v[:, 4]), v[:, 5]])
        P = P[P[:, 3] >= d_floor]
        if margin > 0:
            keep = np.ones(len(P), dtype=bool)
            for s in delta_slacks(P).values():
                keep &= s > margin
            keep &= np.all(np.abs(boundary_factors(P)) > margin, axis=1)
        else:
            keep = delta_members(P, 0.0)
        P = P[keep]
        out.append(P)
        have += len(P)
    return np.concatenate(out)[:count]


def min_d_check(count: int = 100_000, seed: int = 0, tol: float = 1e-9) -> dict:
    """Smallest d over sampled members, plus membership of the two claimed minimizers."""
    # no d floor here, otherwise the check would be circular
    P = sample_delta(count, seed, d_floor=0.0)
    w = np.sqrt(2) / 3
    minimizers = [W6Point(1 / 3, 1 / 3, 1 / 3, 2 / 3, 0.0, s * w) for s in (1, -1)]
    # the y < 0 minimizer is its own conjugate partner; membership only needs x >= 0
    return {
        "count": int(len(P)),
        "min_d": float(P[:, 3].min()),
        "ok": bool(P[:, 3].min() >= D_MIN - tol),
        "minimizers_in_delta": [in_delta(m, tol).in_region for m in minimizers],
        "e246_in_delta": in_delta(W6Point(0, 0, 0, 1, 0, 0), tol).in_region,
    }
