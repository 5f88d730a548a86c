"""Command-line front end.

Exit codes: 0 success, 1 domain error (payload names the error), 2 I/O or
parse error.  Output is JSON on stdout unless ``--format`` says otherwise.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Sequence

import numpy as np

from . import jsonio
from . import precision as P
from . import verification
from .canonform import canonicalize, qubit_canonicalize, qubit_witness
from .errors import DomainError
from .exterior import (
    ThreeFermionState,
    ThreeQubitState,
    W6Point,
    random_qubit_state,
    random_real_state,
    random_state,
    sov_inverse,
    sov_isometry,
)
from .gme import gme as gme_measure
from .invariants import (
    fermion_invariants,
    g_equivalent,
    identity_suite,
    lu_equivalent,
    quasi_real,
    qubit_invariants,
    slocc_type,
)
from .region import CaseTag, fiber, in_delta, in_theta, orbit_case, sample_delta

NAMED_STATES = {
    "e246": lambda: ThreeFermionState.basis(2, 4, 6),
    "W": lambda: sov_isometry(
        (ThreeQubitState.basis("001") + ThreeQubitState.basis("010") + ThreeQubitState.basis("100")) / np.sqrt(3)
    ),
    "GHZ": lambda: sov_isometry((ThreeQubitState.basis("000") + ThreeQubitState.basis("111")) / np.sqrt(2)),
    "w-point": lambda: verification.W_POINT,
}


class UsageError(Exception):
    """Flag combination that parses but makes no sense; exit code 2."""


# ------------------------------------------------------------ helpers


def _as_fermion(state) -> ThreeFermionState:
    if isinstance(state, ThreeQubitState):
        return sov_isometry(state)
    if isinstance(state, W6Point):
        return state.state()
    return state


def _as_qubit(state) -> ThreeQubitState:
    if isinstance(state, ThreeQubitState):
        return state
    if isinstance(state, W6Point):
        return state.qubit_state()
    return sov_inverse(state)


def _cplx(v) -> list:
    return jsonio.complex_pair(v)


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    """Order-preserving map, in worker processes when ``jobs > 1``."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _load(args, key: str = "in_path"):
    path = getattr(args, key)
    if path is None:
        raise UsageError(f"--{key.split('_')[0]} is required")
    return jsonio.load_states(path, P.Precision.parse(args.precision))


def _batch(args, work: Callable) -> Any:
    states, single = _load(args)
    out = _map(work, states, args.jobs)
    return out[0] if single else out


# ------------------------------------------------------------ workers
# Module-level so that worker processes can pickle them.


def _invariants_work(state) -> dict:
    psi = _as_fermion(state)
    inv = fermion_invariants(psi)
    out = {
        "M": [float(P.real(m)) for m in inv.M],
        "F": _cplx(inv.F),
        "J": _cplx(inv.J),
        "residuals": {k: float(v) for k, v in identity_suite(psi.to_binary64(), None).items()},
    }
    if isinstance(state, ThreeQubitState):
        q = qubit_invariants(state)
        out["Q"] = [float(P.real(v)) for v in q.Q]
        out["Hdet"] = _cplx(q.Hdet)
    return out


def _classify_work(state) -> dict:
    psi = _as_fermion(state)
    inv = fermion_invariants(psi)
    return {"type": slocc_type(psi, inv).value, "quasi_real": bool(quasi_real(psi, inv=inv))}


def _gme_work(state, starts: int, seed: int) -> dict:
    if isinstance(state, W6Point):
        state = state.state()
    if isinstance(state, ThreeFermionState):
        state = state.to_binary64()
    r = gme_measure(state, starts=starts, seed=seed)
    res = r["result"]
    return {
        "mu": res.mu,
        "gme": r["G"] if "G" in r else r["G_f"],
        "maximizer": [[_cplx(c) for c in v] for v in res.maximizer],
        "converged": bool(res.converged),
    }


def _canonical_work(state, precision: str, qubit: bool, witness: bool) -> dict:
    prec = P.Precision.parse(precision)
    if qubit or witness:
        phi = _as_qubit(state)
        point, perm = qubit_canonicalize(phi, prec)
        out = {
            "point": jsonio.point_to_json(point),
            "case": orbit_case(_sorted(point)).tag.value,
            "permutation": list(perm),
            "residuals": {},
        }
        if witness:
            w = qubit_witness(phi)
            out["residuals"]["witness"] = w.residual
            out["witness"] = {
                "unitaries": [jsonio.matrix_to_json(u) for u in w.unitaries],
                "permutation": list(w.permutation),
                "residual": w.residual,
            }
        return out
    res = canonicalize(_as_fermion(state), prec)
    out = {
        "point": jsonio.point_to_json(res.point),
        "case": res.case.tag.value,
        "d_source": res.d_source.value,
        "precision": res.precision.mode,
        "escalated": res.escalated,
        "residuals": {k: float(v) for k, v in res.residuals.items()},
    }
    if res.case.tag == CaseTag.PAIR_IV:
        out["partner"] = jsonio.point_to_json(res.point.conj())
    return out


def _sorted(p: W6Point) -> W6Point:
    a, b, c = sorted((p.a, p.b, p.c), reverse=True)
    return W6Point(a, b, c, p.d, p.x, p.y)


class _Partial:
    """Picklable ``functools.partial`` stand-in with keyword arguments."""

    def __init__(self, fn, **kw):
        self.fn, self.kw = fn, kw

    def __call__(self, x):
        return self.fn(x, **self.kw)


# ------------------------------------------------------------ commands


def cmd_gen(args) -> Any:
    if args.name:
        states = [NAMED_STATES[args.name]()]
    else:
        makers = {"fermion20": random_real_state if args.real else random_state,
                  "qubit8": random_qubit_state}
        if args.kind == "w6":
            rows = sample_delta(args.count, args.seed)
            states = [W6Point(*r) for r in rows]
        else:
            states = [makers[args.kind](args.seed * 100_003 + i) for i in range(args.count)]
    docs = [jsonio.state_to_json(s) for s in states]
    return docs[0] if len(docs) == 1 else {"states": docs}


def cmd_invariants(args) -> Any:
    return _batch(args, _Partial(_invariants_work))


def cmd_classify(args) -> Any:
    return _batch(args, _classify_work)


def cmd_gme(args) -> Any:
    return _batch(args, _Partial(_gme_work, starts=args.starts, seed=args.seed))


def cmd_canonicalize(args) -> Any:
    return _batch(args, _Partial(_canonical_work, precision=args.precision, qubit=args.qubit,
                                 witness=args.witness))


def cmd_equiv(args) -> Any:
    a = _load(args, "a_path")[0][0]
    b = _load(args, "b_path")[0][0]
    tol = args.tol if args.tol is not None else 1e-8
    out = {"equivalent": bool(lu_equivalent(_as_fermion(a).to_binary64(), _as_fermion(b).to_binary64(), tol))}
    if isinstance(a, ThreeQubitState) and isinstance(b, ThreeQubitState):
        out["g_equivalent"] = bool(g_equivalent(a, b, tol))
    return out


def cmd_region(args) -> Any:
    tol = args.tol if args.tol is not None else 1e-9
    if args.action == "sample":
        rows = sample_delta(args.count, args.seed)
        table = []
        for r in rows:
            p = W6Point(*r)
            case = orbit_case(p, tol).tag.value
            table.append([*map(float, r), int(case == CaseTag.SINGLE_I.value), case])
        if args.format == "csv":
            return jsonio.rows_to_csv(table, jsonio.REGION_CSV_COLUMNS)
        return [dict(zip(jsonio.REGION_CSV_COLUMNS, row)) for row in table]
    states, single = _load(args)
    out = []
    for s in states:
        if not isinstance(s, W6Point):
            raise UsageError("region check expects w6 points")
        v = in_delta(s, tol)
        entry = {"in_delta": v.in_region, "on_boundary": v.on_boundary, "violated": v.violated,
                 "margins": v.margins, "in_theta": in_theta(s, tol).in_region}
        if v.in_region:
            entry["case"] = orbit_case(s, tol).tag.value
            fb = fiber((s.a, s.b, s.c, s.d), tol)
            entry["fiber"] = {"kind": fb.kind, "r": fb.r, "x0": fb.x0}
        out.append(entry)
    return out[0] if single else out


def cmd_qubit_map(args) -> Any:
    states, single = _load(args)
    out = []
    for s in states:
        if isinstance(s, ThreeQubitState):
            out.append(jsonio.state_to_json(sov_isometry(s)))
        else:
            out.append(jsonio.state_to_json(sov_inverse(_as_fermion(s))))
    return out[0] if single else out


def cmd_verify(args) -> Any:
    names = list(verification.SUITES) if args.suite == "all" else [args.suite]
    report = {}
    for name in names:
        report[name] = verification.SUITES[name](args.count, args.seed)
    report["passed"] = all(r["passed"] for r in report.values())
    return report


COMMANDS = {
    "gen": cmd_gen,
    "invariants": cmd_invariants,
    "canonicalize": cmd_canonicalize,
    "equiv": cmd_equiv,
    "classify": cmd_classify,
    "gme": cmd_gme,
    "region": cmd_region,
    "qubit-map": cmd_qubit_map,
    "verify": cmd_verify,
}


# ------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="in_path", help="input JSON file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--precision", default="binary64", help="binary64 | extended | extended:DIGITS")
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--starts", type=int, default=32)
    common.add_argument("--count", type=int, default=1)
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="trifermion", description="Three-fermion and three-qubit LU invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate random or named states")
    p.add_argument("--kind", choices=("fermion20", "qubit8", "w6"), default="fermion20")
    p.add_argument("--name", choices=sorted(NAMED_STATES))
    p.add_argument("--real", action="store_true", help="real Gaussian amplitudes (fermion20 only)")

    sub.add_parser("invariants", parents=[common], help="M1..M7, F, J and identity residuals")

    p = sub.add_parser("canonicalize", parents=[common], help="canonical point in Delta (or Theta with --qubit)")
    p.add_argument("--qubit", action="store_true")
    p.add_argument("--witness", action="store_true", help="also return local unitaries (qubit input)")

    p = sub.add_parser("equiv", parents=[common], help="LU-equivalence of two states")
    p.add_argument("--a", dest="a_path", required=True)
    p.add_argument("--b", dest="b_path", required=True)

    sub.add_parser("classify", parents=[common], help="SLOCC type and quasi-reality")
    sub.add_parser("gme", parents=[common], help="maximal product overlap and geometric measure")

    p = sub.add_parser("region", parents=[common], help="sample or test the canonical region")
    p.add_argument("action", choices=("sample", "check"))

    sub.add_parser("qubit-map", parents=[common], help="embed qubits into fermions or back")

    p = sub.add_parser("verify", parents=[common], help="run a self-verification suite")
    p.add_argument("--suite", choices=("all", *verification.SUITES), default="identities")
    return parser


def _text(obj: Any, prefix: str = "") -> str:
    if isinstance(obj, dict):
        return "\n".join(_text(v, f"{prefix}{k}.") if isinstance(v, (dict, list)) else f"{prefix}{k}: {v}"
                         for k, v in obj.items())
    if isinstance(obj, list):
        return "\n".join(_text(v, f"{prefix}{i}.") if isinstance(v, (dict, list)) else f"{prefix}{i}: {v}"
                         for i, v in enumerate(obj))
    return f"{prefix.rstrip('.')}: {obj}" if prefix else str(obj)


def _emit(result: Any, fmt: str) -> None:
    if isinstance(result, str):
        sys.stdout.write(result)
    elif fmt == "text":
        sys.stdout.write(_text(result) + "\n")
    else:
        sys.stdout.write(jsonio.dumps(result) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        P.Precision.parse(args.precision)
        if args.jobs < 1 or args.count < 1 or args.starts < 1:
            raise UsageError("--jobs, --count and --starts must be positive")
        if args.tol is not None and args.tol <= 0:
            raise UsageError("--tol must be positive")
        result = COMMANDS[args.command](args)
    except DomainError as exc:
        sys.stdout.write(jsonio.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    except (jsonio.InputError, UsageError, ValueError, OSError) as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2
    _emit(result, args.format)
    if args.command == "verify" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
