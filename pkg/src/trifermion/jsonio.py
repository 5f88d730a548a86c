"""JSON and CSV serialization of states, points and matrices.

State documents::

    {"kind": "fermion20", "amplitudes": [{"index": [i, j, k], "re": .., "im": ..}, ...]}
    {"kind": "qubit8",    "amplitudes": [{"index": [i, j, k], "re": .., "im": ..}, ...]}
    {"kind": "w6", "a": .., "b": .., "c": .., "d": .., "x": .., "y": ..}

Fermion indices are 1-based orbitals (any order, antisymmetry applied);
qubit indices are bits.  Numbers may be JSON numbers or decimal strings;
strings keep every digit when read in extended precision.  Readers accept
unnormalized states.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Union

import mpmath
import numpy as np

from . import precision as P
from .exterior import TRIPLE_INDEX, ThreeFermionState, ThreeQubitState, W6Point, _perm_sign

State = Union[ThreeFermionState, ThreeQubitState, W6Point]


class InputError(ValueError):
    """Malformed input document (reported by the CLI as an I/O error)."""


# ------------------------------------------------------------ numbers


def _read_number(v, extended: bool):
    if isinstance(v, bool) or not isinstance(v, (int, float, str)):
        raise InputError(f"expected a number, got {v!r}")
    if extended:
        return mpmath.mpf(v)
    try:
        return float(v)
    except ValueError as exc:
        raise InputError(f"bad number {v!r}") from exc


def _write_number(v) -> Any:
    """Full-precision representation: floats as JSON numbers, mpmath values as strings."""
    if isinstance(v, mpmath.mpf):
        return mpmath.nstr(v, mpmath.mp.dps, min_fixed=-mpmath.inf, max_fixed=mpmath.inf) if v else 0.0
    return float(v)


def complex_pair(v) -> list:
    return [_write_number(P.real(v)), _write_number(P.imag(v))]


# ------------------------------------------------------------ states


def _amplitude_entries(doc: dict, extended: bool):
    entries = doc.get("amplitudes")
    if not isinstance(entries, list):
        raise InputError("'amplitudes' must be a list")
    for e in entries:
        if not isinstance(e, dict) or "index" not in e:
            raise InputError(f"bad amplitude entry {e!r}")
        idx = e["index"]
        if not (isinstance(idx, list) and len(idx) == 3 and all(isinstance(i, int) for i in idx)):
            raise InputError(f"index must be three integers, got {idx!r}")
        re = _read_number(e.get("re", 0), extended)
        im = _read_number(e.get("im", 0), extended)
        yield tuple(idx), (mpmath.mpc(re, im) if extended else complex(re, im))


def state_from_json(doc: dict, precision: P.Precision | None = None) -> State:
    """Parse one state document."""
    prec = precision or P.Precision()
    if not isinstance(doc, dict):
        raise InputError("state document must be a JSON object")
    kind = doc.get("kind")
    with P.working_precision(prec):
        if kind == "fermion20":
            amp = np.zeros(20, dtype=object if prec.extended else complex)
            if prec.extended:
                amp[:] = mpmath.mpc(0)
            for idx, val in _amplitude_entries(doc, prec.extended):
                if not all(1 <= i <= 6 for i in idx) or len(set(idx)) != 3:
                    raise InputError(f"fermion index must be three distinct orbitals in 1..6, got {list(idx)}")
                order = sorted(range(3), key=lambda n: idx[n])
                key = tuple(idx[n] - 1 for n in order)
                amp[TRIPLE_INDEX[key]] += _perm_sign(order) * val
            return ThreeFermionState(amp)
        if kind == "qubit8":
            t = np.zeros((2, 2, 2), dtype=object if prec.extended else complex)
            if prec.extended:
                t[...] = mpmath.mpc(0)
            for idx, val in _amplitude_entries(doc, prec.extended):
                if not all(i in (0, 1) for i in idx):
                    raise InputError(f"qubit index must be bits, got {list(idx)}")
                t[idx] += val
            return ThreeQubitState(t)
        if kind == "w6":
            return W6Point(*(_read_number(doc.get(k, 0), prec.extended) for k in "abcdxy"))
    raise InputError(f"unknown state kind {kind!r}")


def state_to_json(state: State) -> dict:
    if isinstance(state, W6Point):
        doc = {"kind": "w6"}
        doc.update({k: _write_number(v) for k, v in zip("abcdxy", state.as_tuple())})
        return doc
    if isinstance(state, ThreeQubitState):
        entries = []
        for idx in np.ndindex(2, 2, 2):
            v = state.amplitudes[idx]
            entries.append({"index": list(idx), "re": _write_number(P.real(v)), "im": _write_number(P.imag(v))})
        return {"kind": "qubit8", "amplitudes": entries}
    if isinstance(state, ThreeFermionState):
        entries = []
        for (i, j, k), n in sorted(TRIPLE_INDEX.items(), key=lambda kv: kv[1]):
            v = state.amplitudes[n]
            entries.append({"index": [i + 1, j + 1, k + 1], "re": _write_number(P.real(v)), "im": _write_number(P.imag(v))})
        return {"kind": "fermion20", "amplitudes": entries}
    raise TypeError(f"cannot serialize {type(state).__name__}")


def point_to_json(p: W6Point) -> dict:
    return {k: _write_number(v) for k, v in zip("abcdxy", p.as_tuple())}


def load_states(path: str, precision: P.Precision | None = None) -> tuple[list[State], bool]:
    """Read a file holding one state, a JSON list of states, or ``{"states": [...]}``.

    Returns the states and whether the file held a single state.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if isinstance(doc, dict) and "states" in doc:
        doc = doc["states"]
    if isinstance(doc, list):
        return [state_from_json(d, precision) for d in doc], False
    return [state_from_json(doc, precision)], True


# ------------------------------------------------------------ matrices


def matrix_to_json(m: np.ndarray) -> dict:
    """``{"rows": n, "cols": m, "data": [[re, im], ...]}`` in row-major order."""
    m = np.asarray(m)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "data": [complex_pair(v) for v in m.ravel()],
    }


def matrix_from_json(doc: dict) -> np.ndarray:
    try:
        rows = int(doc["rows"])
        data = doc["data"]
        cols = int(doc.get("cols", len(data) // rows))
        m = np.array([complex(float(re), float(im)) for re, im in data])
        return m.reshape(rows, cols)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad matrix document: {exc}") from exc


# ------------------------------------------------------------ output


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, allow_nan=False)


REGION_CSV_COLUMNS = ("a", "b", "c", "d", "x", "y", "interior_flag", "case_tag")


def rows_to_csv(rows: Iterable[Iterable[Any]], header: Iterable[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(header))
    for row in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()
