import math

import numpy as np
import pytest

from trifermion.errors import ZeroState
from trifermion.exterior import (
    ThreeFermionState,
    ThreeQubitState,
    W6Point,
    apply_unitary,
    random_haar_unitary,
    random_qubit_state,
    random_state,
    sov_isometry,
    wedge3,
)
from trifermion.gme import (
    decomposable_overlap,
    gme,
    mu_general,
    mu_many,
    mu_sov,
    mu_w6,
    product_overlap_of_embedding,
    qubit_product_overlap_of_embedding,
)
from trifermion.region import sample_delta

W = W6Point(1 / 3, 1 / 3, 1 / 3, 2 / 3, 0.0, math.sqrt(2) / 3)


def brute_qubit_mu(phi, n=120):
    """Grid search over u3 on the Bloch sphere; the first two sites are solved by an SVD."""
    t = phi.amplitudes
    best = 0.0
    for th in np.linspace(0, np.pi, n):
        for ph in np.linspace(0, 2 * np.pi, n, endpoint=False):
            u = np.array([np.cos(th / 2), np.exp(1j * ph) * np.sin(th / 2)])
            best = max(best, np.linalg.svd(np.einsum("ijk,k->ij", t, u.conj()), compute_uv=False)[0])
    return best


def test_slater_determinant_has_unit_overlap():
    rng = np.random.default_rng(0)
    q, _ = np.linalg.qr(rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3)))
    r = mu_general(wedge3(*q.T))
    assert r.mu == pytest.approx(1.0, abs=1e-12)
    assert r.gme == pytest.approx(0.0, abs=1e-11)


def test_w_point_value():
    assert mu_general(W.state()).mu == pytest.approx(2 / 3, abs=1e-8)
    assert mu_w6(W) == pytest.approx(2 / 3, abs=1e-8)


def test_maximizer_reproduces_overlap():
    psi = random_state(1)
    r = mu_general(psi)
    a, b, c = r.maximizer
    ov = decomposable_overlap(psi, a, b, c)
    assert abs(ov) == pytest.approx(r.mu, rel=1e-12)
    assert r.converged and r.stationarity < 1e-5
    for v in (a, b, c):
        assert np.linalg.norm(v) == pytest.approx(1.0)


def test_mu_is_lu_invariant_and_bounded():
    psi = random_state(2)
    m1 = mu_general(psi).mu
    m2 = mu_general(apply_unitary(random_haar_unitary(2), psi)).mu
    assert m1 == pytest.approx(m2, abs=1e-8)
    assert 2 / 3 - 1e-6 <= m1 <= 1


def test_batched_matches_single():
    states = [random_state(i) for i in range(6)]
    batched = mu_many(states)
    single = [mu_general(s).mu for s in states]
    np.testing.assert_allclose(batched, single, atol=1e-9)


def test_delta_points_have_mu_equal_to_d():
    P = sample_delta(10, 3)
    mus = mu_many([W6Point(*row).state() for row in P])
    np.testing.assert_allclose(mus, P[:, 3], atol=1e-6)
    for row in P[:3]:
        assert mu_w6(W6Point(*row)) == pytest.approx(row[3], abs=1e-7)


def test_qubit_mu_matches_grid_search():
    phi = random_qubit_state(4)
    mu = mu_sov(phi).mu
    assert mu >= brute_qubit_mu(phi) - 1e-12
    assert mu == pytest.approx(brute_qubit_mu(phi), abs=1e-3)


def test_qubit_reference_states():
    ghz = (ThreeQubitState.basis("000") + ThreeQubitState.basis("111")) / math.sqrt(2)
    w = (ThreeQubitState.basis("100") + ThreeQubitState.basis("010") + ThreeQubitState.basis("001")) / math.sqrt(3)
    assert mu_sov(ghz).mu == pytest.approx(1 / math.sqrt(2), abs=1e-10)
    assert mu_sov(w).mu == pytest.approx(2 / 3, abs=1e-10)


def test_sov_states_fermionic_mu_equals_qubit_mu():
    phi = random_qubit_state(5)
    assert mu_general(sov_isometry(phi)).mu == pytest.approx(mu_sov(phi).mu, abs=1e-8)


def test_gme_wrapper_normalizes():
    psi = random_state(6)
    out = gme(3 * psi)
    assert out["kind"] == "fermion"
    assert out["input_norm"] == pytest.approx(3 * math.sqrt(psi.norm2()))
    assert out["G_f"] == pytest.approx(1 - mu_general(psi).mu ** 2, abs=1e-10)
    q = gme(random_qubit_state(6))
    assert q["kind"] == "qubit" and 0 <= q["G"] <= 1


def test_zero_state_raises():
    with pytest.raises(ZeroState):
        gme(ThreeFermionState.zero())
    with pytest.raises(ZeroState):
        mu_general(ThreeFermionState.zero())


def test_embedding_product_overlap():
    # best unconstrained product overlap of the normalized 216-tensor is mu / sqrt(6)
    assert product_overlap_of_embedding(ThreeFermionState.basis(1, 2, 3)) == pytest.approx(1 / math.sqrt(6))
    phi = random_qubit_state(7)
    assert qubit_product_overlap_of_embedding(phi) == pytest.approx(mu_sov(phi).mu / math.sqrt(6), abs=1e-8)
