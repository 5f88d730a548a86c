import numpy as np
import pytest

from trifermion.exterior import (
    TRIPLES,
    W6Point,
    apply_local_unitaries,
    apply_unitary,
    random_haar_unitary,
    random_qubit_state,
    random_state,
    wedge3,
)
from trifermion.rdm import (
    eigvalsh,
    partial_trace_second,
    qubit_rdms,
    rdm1,
    rdm2,
    rdm2_full,
    spectrum_pairing_check,
    w6_blocks,
    w6_blocks_from_rdm,
)


def rho1_by_pairs(psi):
    """(1/3) sum_{b<c} psi(a,b,c) conj psi(a',b,c), summing over sorted pairs only."""
    out = np.zeros((6, 6), complex)
    for a in range(6):
        for ap in range(6):
            for b in range(6):
                for c in range(b + 1, 6):
                    if len({a, b, c}) == 3 and len({ap, b, c}) == 3:
                        out[a, ap] += psi.amplitude(a + 1, b + 1, c + 1) * np.conj(psi.amplitude(ap + 1, b + 1, c + 1))
    return out / 3


def test_rho1_matches_pair_sum():
    psi = random_state(0)
    np.testing.assert_allclose(rdm1(psi), rho1_by_pairs(psi), atol=1e-14)


def test_traces_equal_squared_norm():
    psi = 1.7 * random_state(1)
    n2 = psi.norm2()
    assert np.trace(rdm1(psi)).real == pytest.approx(n2)
    assert np.trace(rdm2(psi)).real == pytest.approx(n2)
    assert np.trace(rdm2_full(psi)).real == pytest.approx(n2)


def test_partial_trace_of_two_body_gives_one_body():
    psi = random_state(2)
    np.testing.assert_allclose(partial_trace_second(rdm2_full(psi)), rdm1(psi), atol=1e-14)


def test_rho1_is_unitarily_covariant():
    psi, U = random_state(3), random_haar_unitary(3)
    np.testing.assert_allclose(rdm1(apply_unitary(U, psi)), U @ rdm1(psi) @ U.conj().T, atol=1e-13)


def test_slater_determinant_has_projector_rdm():
    rng = np.random.default_rng(4)
    q, _ = np.linalg.qr(rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3)))
    r = 3 * rdm1(wedge3(*q.T))
    np.testing.assert_allclose(r @ r, r, atol=1e-13)
    np.testing.assert_allclose(eigvalsh(r), [0, 0, 0, 1, 1, 1], atol=1e-13)


def test_spectrum_pairing_on_random_states():
    assert max(spectrum_pairing_check(random_state(i)) for i in range(50)) < 1e-12


def test_w6_blocks_match_numerical_blocks():
    p = W6Point(0.5, 0.3, 0.2, 0.7, 0.25, -0.2).normalized()
    closed = w6_blocks(p)
    num = w6_blocks_from_rdm(p.state())
    for R, Rn in zip((closed.R_a, closed.R_b, closed.R_c), num["R"]):
        np.testing.assert_allclose(np.array(R, complex), Rn, atol=1e-14)
    for B, Bn in zip(closed.rho12_blocks, num["rho12"]):
        np.testing.assert_allclose(np.array(B, complex), Bn, atol=1e-14)
    for R, D in zip((closed.R_a, closed.R_b, closed.R_c), (closed.D_a, closed.D_b, closed.D_c)):
        assert np.linalg.det(np.array(R, complex)).real == pytest.approx(D)


def test_qubit_marginals_match_einsum():
    phi = random_qubit_state(5)
    t = phi.amplitudes
    r = qubit_rdms(phi)
    np.testing.assert_allclose(r["A"], np.einsum("ijk,ljk->il", t, t.conj()), atol=1e-15)
    np.testing.assert_allclose(r["B"], np.einsum("jik,jlk->il", t, t.conj()), atol=1e-15)
    np.testing.assert_allclose(r["C"], np.einsum("jki,jkl->il", t, t.conj()), atol=1e-15)
    AB = np.einsum("ijk,lmk->ijlm", t, t.conj()).reshape(4, 4)
    np.testing.assert_allclose(r["AB"], AB, atol=1e-15)
    BC = np.einsum("kij,klm->ijlm", t, t.conj()).reshape(4, 4)
    np.testing.assert_allclose(r["BC"], BC, atol=1e-15)


def test_qubit_marginal_spectra_are_local_invariants():
    phi = random_qubit_state(6)
    us = [random_haar_unitary(k)[:2, :2] for k in range(3)]
    us = [np.linalg.qr(u)[0] for u in us]
    moved = apply_local_unitaries(phi, us)
    for k in ("A", "B", "C", "AB"):
        np.testing.assert_allclose(eigvalsh(qubit_rdms(phi)[k]), eigvalsh(qubit_rdms(moved)[k]), atol=1e-14)


def test_pair_basis_has_fifteen_rows():
    assert rdm2(random_state(0)).shape == (15, 15)
    assert len(TRIPLES) == 20
