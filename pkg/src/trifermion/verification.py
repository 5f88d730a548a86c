"""Self-verification suites shared by the CLI ``verify`` command and the test-suite.

Every check returns a JSON-friendly dict with a boolean ``passed`` and the
measured worst-case numbers; none of them records wall-clock time so that
repeated runs produce identical output.
"""

from __future__ import annotations

import math
from typing import Callable

import mpmath
import numpy as np

from . import precision as P
from .canonform import (
    canonicalize,
    f_coefficients,
    g_coefficients,
    h_coefficients,
    qubit_canonicalize,
    qubit_witness,
    sylvester_resultant,
)
from .exterior import (
    ThreeFermionState,
    W6Point,
    apply_unitary,
    orthonormalize_mp,
    random_haar_unitary,
    random_qubit_state,
    random_real_state,
    random_state,
    sov_isometry,
)
from .gme import mu_general, mu_many
from .invariants import (
    SloccType,
    fermion_invariants,
    identity_suite,
    independence_check,
    qubit_invariants,
    quasi_real,
    slocc_type,
    w6_qubit_values,
    w6_values,
)
from .rdm import spectrum_pairing_check
from .region import CaseTag, in_delta, sample_delta

W_POINT = W6Point(1 / 3, 1 / 3, 1 / 3, 2 / 3, 0.0, math.sqrt(2) / 3)
W_POINT_INVARIANTS = (1.0, 2 / 3, 1 / 9, 4 / 27, 0.0, 8 / 729, 0.0)

REGION_WITNESSES = [
    ((8, 4, 2, 11, 2, 4), 15, []),
    ((1, 1, 1, 1, 0, 0), 2, ["gap"]),
    ((1, 0, 0, 1, 1, 0), math.sqrt(3), ["strong"]),
    ((4, 2, 2, 6, 2, 3), math.sqrt(73), ["arc"]),
    ((3, 0, 0, 0, 4, 0), 5, ["d>0"]),
]

SLOCC_REPRESENTATIVES = {
    "separable": [((2, 4, 6), 1)],
    "biseparable": [((2, 3, 5), 1), ((2, 4, 6), 1)],
    "W": [((2, 3, 5), 1), ((1, 4, 5), 1), ((1, 3, 6), 1)],
    "GHZ": [((1, 3, 5), 1), ((2, 4, 6), 1)],
}


def _random_w6(rng: np.random.Generator) -> W6Point:
    v = rng.normal(size=6)
    return W6Point(*(v / np.linalg.norm(v)))


# ------------------------------------------------------------ criteria


def w_point(tol: float = 1e-10) -> dict:
    M = fermion_invariants(W_POINT.state()).M
    err = max(abs(complex(m) - e) for m, e in zip(M, W_POINT_INVARIANTS))
    return {"passed": err < tol, "max_abs_error": err, "M": [float(P.real(m)) for m in M]}


def identities(count: int = 100, seed: int = 0, tol: float = 1e-8) -> dict:
    worst = {"InvJ2": 0.0, "Reh": 0.0, "syzygy": 0.0, "M5F": 0.0, "M3grad": 0.0, "restriction": 0.0}
    rng = np.random.default_rng([seed, 11])
    for i in range(count):
        res = identity_suite(random_state(seed * 100_003 + i))
        for k, v in res.items():
            worst[k] = max(worst[k], float(v))
        p = _random_w6(rng)
        closed, _ = w6_values(*p.as_tuple())
        direct = fermion_invariants(p.state()).M
        worst["restriction"] = max(
            worst["restriction"], max(abs(complex(a) - complex(b)) for a, b in zip(closed, direct))
        )
    return {"passed": all(v < tol for v in worst.values()), "max_residuals": worst, "count": count}


def jacobian(tol: float = 1e-6) -> dict:
    res = independence_check()
    return {"passed": res["ratio"] > tol and res["rank"] == 6, **res}


def region_witnesses() -> dict:
    rows = []
    ok = True
    for (a, b, c, d, x, y), scale, expected in REGION_WITNESSES:
        p = W6Point(*(v / scale for v in (a, b, c, d, x, y)))
        verdict = in_delta(p)
        good = sorted(verdict.violated) == sorted(expected) and verdict.in_region == (not expected)
        ok &= good
        rows.append({"point": [a, b, c, d, x, y], "scale": scale, "violated": verdict.violated, "ok": good})
    return {"passed": bool(ok), "witnesses": rows}


def canonical_round_trip(count: int = 200, seed: int = 0, precision: P.Precision | None = None,
                         tol: float | None = None, match_tol: float = 1e-8, margin: float = 1e-3) -> dict:
    """Rotate sampled interior points by Haar unitaries and recover them."""
    prec = precision or P.Precision()
    tol = tol if tol is not None else (1e-20 if prec.extended else 1e-6)
    points = sample_delta(count, seed, margin=margin)
    worst_err = worst_match = 0.0
    failures = []
    sources: dict[str, int] = {}
    for i, row in enumerate(points):
        U = random_haar_unitary(seed * 100_003 + i)
        try:
            with P.working_precision(prec):
                if prec.extended:
                    p = W6Point(*(mpmath.mpf(float(v)) for v in row)).normalized()
                    psi = apply_unitary(orthonormalize_mp(U), p.state())
                else:
                    p = W6Point(*row)
                    psi = apply_unitary(U, p.state())
                res = canonicalize(psi, prec)
                err = float(max(abs(u - v) for u, v in zip(res.point.as_tuple(), p.as_tuple())))
        except Exception as exc:  # recorded as a failure, not raised
            failures.append({"index": i, "error": type(exc).__name__})
            continue
        worst_err = max(worst_err, err)
        worst_match = max(worst_match, float(res.residuals["invariant_match"]))
        sources[res.d_source.value] = sources.get(res.d_source.value, 0) + 1
        if err > tol or res.residuals["invariant_match"] > match_tol:
            failures.append({"index": i, "error": "mismatch", "componentwise": err})
    return {
        "passed": not failures,
        "count": count,
        "max_componentwise_error": worst_err,
        "max_invariant_match": worst_match,
        "d_source": sources,
        "failures": failures,
    }


def transcription(count: int = 100, seed: int = 0, resultant_states: int = 1, t_samples: int = 20,
                  digits: int = 50) -> dict:
    """f(d^2) = 0, the factorization of f'(d^2), and the resultant identity on random W6 states."""
    rng = np.random.default_rng([seed, 13])
    f_res = fact_res = res_res = 0.0
    with mpmath.workdps(digits):
        for i in range(count):
            # g and h assume M1 = 1 exactly, so normalize at working precision
            p = W6Point(*(mpmath.mpf(float(v)) for v in _random_w6(rng).as_tuple())).normalized()
            a, b, c, d, x, y = p.as_tuple()
            vals, Phi = w6_values(a, b, c, d, x, y)
            M = list(vals[:6])
            fp = f_coefficients(M)
            t0 = d * d
            f_res = max(f_res, float(abs(fp(t0)) / max(abs(cc) for cc in fp.coeffs)))
            s1 = a * a + b * b + c * c
            s3 = (a * b * c) ** 2
            rhs = (
                2**8 * 3**5 * (a * b * c * d) ** 2 * (d * d - a * a) * (d * d - b * b) * (d * d - c * c)
                * (d * d * (d * d - s1) ** 2 - 4 * s3) ** 3 * Phi
            )
            fact_res = max(fact_res, float(abs(fp.derivative(t0) - rhs) / abs(rhs)))
            if i < resultant_states:
                for k in range(t_samples):
                    t = mpmath.mpf(k + 1) / (t_samples + 1)
                    R = sylvester_resultant(g_coefficients(t, M), h_coefficients(t, M))
                    ref = -(2**4) * 3**5 * t**12 * fp(t)
                    res_res = max(res_res, float(abs(R - ref) / abs(ref)))
    return {
        "passed": f_res < 1e-8 and fact_res < 1e-6 and res_res < 1e-6,
        "f_at_d2": f_res,
        "factorization": fact_res,
        "resultant": res_res,
    }


def gme_floor(count: int = 10_000, seed: int = 0, starts: int = 32) -> dict:
    states = [random_state(seed * 100_003 + i) for i in range(count)]
    mus = mu_many(states, starts=starts, seed=seed)
    w_mu = mu_general(W_POINT.state()).mu
    ok = bool(mus.min() >= 2 / 3 - 1e-6 and abs(w_mu - 2 / 3) <= 1e-8)
    return {"passed": ok, "count": count, "min_mu": float(mus.min()), "mean_mu": float(mus.mean()),
            "w_mu": w_mu}


def delta_consistency(count: int = 100, seed: int = 0, tol: float = 1e-6) -> dict:
    points = sample_delta(count, seed)
    mus = mu_many([W6Point(*row).state() for row in points], seed=seed)
    err = float(np.max(np.abs(mus - points[:, 3])))
    return {"passed": err < tol, "count": count, "max_abs_error": err}


def spectrum(count: int = 1000, seed: int = 0, tol: float = 1e-10) -> dict:
    err = max(spectrum_pairing_check(random_state(seed * 100_003 + i)) for i in range(count))
    return {"passed": err < tol, "count": count, "max_abs_error": err}


def qubit_bridge(count: int = 100, seed: int = 0) -> dict:
    q6 = q7 = qmatch = wres = 0.0
    for i in range(count):
        phi = random_qubit_state(seed * 100_003 + i)
        Q = qubit_invariants(phi).Q
        M = fermion_invariants(sov_isometry(phi)).M
        q6 = max(q6, abs(complex(Q[5]) - complex(M[4])) / max(abs(complex(M[4])), 1e-300))
        q7 = max(q7, abs(complex(Q[6]) - 8 * complex(M[6])) / max(abs(8 * complex(M[6])), 1e-300))
        point, _perm = qubit_canonicalize(phi)
        V = w6_qubit_values(point)
        qmatch = max(qmatch, max(abs(complex(Q[k]) - complex(V[k])) for k in (1, 2, 3)))
        wres = max(wres, qubit_witness(phi).residual)
    return {
        "passed": q6 < 1e-9 and q7 < 1e-9 and qmatch < 1e-8 and wres < 1e-8,
        "Q6_vs_M5": q6,
        "Q7_vs_8M7": q7,
        "Q234_match": qmatch,
        "witness_residual": wres,
    }


def slocc(count: int = 1000, seed: int = 0) -> dict:
    labels = {}
    ok = True
    for name, terms in SLOCC_REPRESENTATIVES.items():
        psi = ThreeFermionState.from_dict({t: c for t, c in terms})
        got = slocc_type(psi).value
        labels[name] = got
        ok &= got == name
    ghz = sum(slocc_type(random_state(seed * 100_003 + i)) == SloccType.GHZ for i in range(count))
    return {"passed": bool(ok and ghz == count), "representatives": labels, "random_ghz": int(ghz),
            "count": count}


def quasi_real_states(count: int = 100, seed: int = 0) -> dict:
    worst_m7 = 0.0
    flagged = 0
    structured = 0
    for i in range(count):
        psi = random_real_state(seed * 100_003 + i)
        inv = fermion_invariants(psi)
        worst_m7 = max(worst_m7, abs(float(inv.M[6])))
        flagged += quasi_real(psi, inv=inv)
        res = canonicalize(psi)
        if abs(float(res.point.y)) < 1e-6 or res.case.tag != CaseTag.SINGLE_I:
            structured += 1
    return {
        "passed": worst_m7 < 1e-10 and flagged == count and structured == count,
        "max_abs_M7": worst_m7,
        "quasi_real": int(flagged),
        "real_canonical": int(structured),
        "count": count,
    }


SUITES: dict[str, Callable[..., dict]] = {
    "w-point": lambda count, seed: w_point(),
    "identities": lambda count, seed: identities(count, seed),
    "jacobian": lambda count, seed: jacobian(),
    "region": lambda count, seed: region_witnesses(),
    "canonical": lambda count, seed: canonical_round_trip(count, seed),
    "transcription": lambda count, seed: transcription(count, seed),
    "gme": lambda count, seed: gme_floor(count, seed),
    "delta": lambda count, seed: delta_consistency(count, seed),
    "spectrum": lambda count, seed: spectrum(count, seed),
    "qubit": lambda count, seed: qubit_bridge(count, seed),
    "slocc": lambda count, seed: slocc(count, seed),
    "quasi-real": lambda count, seed: quasi_real_states(count, seed),
}
