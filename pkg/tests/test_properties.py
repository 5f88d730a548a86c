"""Property-based checks over arbitrary states, unitaries and W6 coordinates."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from trifermion.exterior import (
    ThreeFermionState,
    ThreeQubitState,
    W6Point,
    apply_unitary,
    haar_unitary,
    sov_inverse,
    sov_isometry,
)
from trifermion.invariants import fermion_invariants, identity_suite, lu_equivalent, w6_values
from trifermion.rdm import spectrum_pairing_check

finite = st.floats(-2, 2, allow_nan=False, allow_infinity=False)
seeds = st.integers(0, 2**32 - 1)


@st.composite
def states(draw):
    re = np.array(draw(st.lists(finite, min_size=20, max_size=20)))
    im = np.array(draw(st.lists(finite, min_size=20, max_size=20)))
    amp = re + 1j * im
    if np.linalg.norm(amp) < 1e-3:
        amp[0] += 1
    return ThreeFermionState(amp)


@settings(max_examples=40, deadline=None)
@given(states(), seeds)
def test_invariants_are_lu_invariant(psi, seed):
    U = haar_unitary(np.random.default_rng(seed))
    a = fermion_invariants(psi).as_array()
    b = fermion_invariants(apply_unitary(U, psi)).as_array()
    scale = float(psi.norm2()) ** np.array([1, 2, 3, 4, 4, 6, 6])
    assert np.all(np.abs(a - b) <= 1e-10 * scale)
    assert lu_equivalent(psi, apply_unitary(U, psi))


@settings(max_examples=40, deadline=None)
@given(states())
def test_spectrum_pairs_up(psi):
    assert spectrum_pairing_check(psi) < 1e-10 * float(psi.norm2())


@settings(max_examples=25, deadline=None)
@given(states())
def test_identities_hold(psi):
    res = identity_suite(psi)
    for k in ("InvJ2", "Reh", "syzygy"):
        assert res[k] < 1e-9


@settings(max_examples=60, deadline=None)
@given(st.lists(finite, min_size=6, max_size=6))
def test_w6_closed_form_matches_contraction(v):
    p = W6Point(*v)
    closed, _ = w6_values(*v)
    direct = fermion_invariants(p.state()).M
    scale = max(1.0, float(p.norm2())) ** np.array([1, 2, 3, 4, 4, 6, 6])
    assert np.all(np.abs(np.array(closed, float) - np.array([float(m) for m in direct])) <= 1e-10 * scale)


@settings(max_examples=40, deadline=None)
@given(st.lists(finite, min_size=16, max_size=16))
def test_sov_roundtrip(v):
    t = (np.array(v[:8]) + 1j * np.array(v[8:])).reshape(2, 2, 2)
    phi = ThreeQubitState(t)
    np.testing.assert_array_equal(sov_inverse(sov_isometry(phi)).amplitudes, t)
