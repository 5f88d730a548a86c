import json

import mpmath
import numpy as np
import pytest

from trifermion import precision as P
from trifermion.exterior import ThreeFermionState, ThreeQubitState, W6Point, random_qubit_state, random_state
from trifermion.jsonio import (
    InputError,
    dumps,
    load_states,
    matrix_from_json,
    matrix_to_json,
    rows_to_csv,
    state_from_json,
    state_to_json,
)


def test_fermion_roundtrip_is_exact():
    psi = random_state(0)
    back = state_from_json(json.loads(dumps(state_to_json(psi))))
    np.testing.assert_array_equal(back.amplitudes, psi.amplitudes)


def test_qubit_and_w6_roundtrip():
    phi = random_qubit_state(1)
    np.testing.assert_array_equal(state_from_json(state_to_json(phi)).amplitudes, phi.amplitudes)
    p = W6Point(0.1, 0.2, 0.3, 0.4, 0.5, -0.6)
    assert state_from_json(state_to_json(p)).as_tuple() == p.as_tuple()


def test_index_order_applies_sign():
    doc = {"kind": "fermion20", "amplitudes": [{"index": [2, 1, 3], "re": 1.0}, {"index": [4, 5, 6], "im": "0.5"}]}
    psi = state_from_json(doc)
    assert psi.amplitude(1, 2, 3) == -1
    assert psi.amplitude(4, 5, 6) == 0.5j


def test_extended_keeps_digits():
    digits = "0.1234567890123456789012345678901234567891"
    prec = P.Precision(P.EXTENDED, 50)
    psi = state_from_json({"kind": "fermion20", "amplitudes": [{"index": [1, 2, 3], "re": digits}]}, prec)
    assert psi.is_extended
    with mpmath.workdps(50):
        assert abs(psi.amplitude(1, 2, 3) - mpmath.mpf(digits)) < mpmath.mpf(10) ** -45
        out = state_to_json(psi)["amplitudes"][0]["re"]
        assert isinstance(out, str) and out.startswith(digits)


@pytest.mark.parametrize(
    "doc",
    [
        {"kind": "fermion20", "amplitudes": [{"index": [1, 1, 2], "re": 1}]},
        {"kind": "fermion20", "amplitudes": [{"index": [0, 1, 2], "re": 1}]},
        {"kind": "qubit8", "amplitudes": [{"index": [0, 2, 1], "re": 1}]},
        {"kind": "qubit8", "amplitudes": [{"index": [0, 1], "re": 1}]},
        {"kind": "fermion20", "amplitudes": [{"index": [1, 2, 3], "re": "abc"}]},
        {"kind": "fermion20", "amplitudes": [{"index": [1, 2, 3], "re": True}]},
        {"kind": "fermion20", "amplitudes": {}},
        {"kind": "spin"},
        [1, 2, 3],
    ],
)
def test_malformed_documents(doc):
    with pytest.raises(InputError):
        state_from_json(doc)


def test_load_states_shapes(tmp_path):
    one = state_to_json(ThreeFermionState.basis(1, 2, 3))
    two = state_to_json(ThreeQubitState.basis("101"))
    for content, n, single in ((one, 1, True), ([one, two], 2, False), ({"states": [one]}, 1, False)):
        f = tmp_path / "s.json"
        f.write_text(json.dumps(content))
        states, is_single = load_states(str(f))
        assert len(states) == n and is_single == single
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        load_states(str(bad))
    with pytest.raises(InputError):
        load_states(str(tmp_path / "missing.json"))


def test_matrix_roundtrip():
    m = np.arange(6).reshape(2, 3) + 1j
    doc = matrix_to_json(m)
    assert doc["rows"] == 2 and doc["cols"] == 3
    np.testing.assert_array_equal(matrix_from_json(doc), m)
    with pytest.raises(InputError):
        matrix_from_json({"data": []})


def test_csv_uses_full_precision():
    text = rows_to_csv([(1 / 3, "SinglePoint_i")], ("a", "case"))
    assert text == "a,case\n0.3333333333333333,SinglePoint_i\n"


def test_dumps_rejects_nan():
    with pytest.raises(ValueError):
        dumps({"x": float("nan")})
