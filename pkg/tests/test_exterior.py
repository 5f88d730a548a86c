import itertools

import mpmath
import numpy as np
import pytest

from trifermion import precision as P
from trifermion.errors import NotSOV, NotUnitary
from trifermion.exterior import (
    IDENTITY,
    SIGMA,
    TAU,
    TRIPLES,
    ThreeFermionState,
    ThreeQubitState,
    W6Point,
    apply_linear,
    apply_local_unitaries,
    apply_unitary,
    compose,
    embed_to_tensor,
    inner,
    inverse_perm,
    orthonormalize_mp,
    permute_qubits,
    random_haar_unitary,
    random_qubit_state,
    random_state,
    s3_matrix,
    sov_inverse,
    sov_isometry,
    w6_from_state,
    wedge3,
)


def _sign(p):
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def brute_wedge(v1, v2, v3):
    """Amplitudes of v1 ^ v2 ^ v3 by the Leibniz sum."""
    out = []
    for t in TRIPLES:
        acc = 0
        for perm in itertools.permutations(range(3)):
            acc += _sign(perm) * v1[t[perm[0]]] * v2[t[perm[1]]] * v3[t[perm[2]]]
        out.append(acc)
    return np.array(out)


def test_triples_are_lexicographic():
    assert len(TRIPLES) == 20
    assert list(TRIPLES) == sorted(itertools.combinations(range(6), 3))


def test_basis_and_amplitude_signs():
    psi = ThreeFermionState.basis(2, 4, 6)
    assert psi.amplitude(2, 4, 6) == 1
    assert psi.amplitude(4, 2, 6) == -1
    assert psi.amplitude(6, 4, 2) == -1
    assert psi.amplitude(4, 6, 2) == 1
    assert psi.amplitude(1, 2, 3) == 0


def test_from_dict_applies_antisymmetry():
    psi = ThreeFermionState.from_dict({(2, 1, 3): 1.0, (1, 2, 4): 2.0})
    assert psi.amplitude(1, 2, 3) == -1.0
    assert psi.amplitude(1, 2, 4) == 2.0
    with pytest.raises(ValueError):
        ThreeFermionState.from_dict({(1, 1, 2): 1.0})


def test_tensor_is_antisymmetric():
    T = random_state(3).tensor()
    np.testing.assert_allclose(T, -np.transpose(T, (1, 0, 2)))
    np.testing.assert_allclose(T, -np.transpose(T, (0, 2, 1)))
    np.testing.assert_allclose(T, np.transpose(T, (1, 2, 0)))


def test_wedge_matches_leibniz_sum():
    rng = np.random.default_rng(0)
    vs = [rng.normal(size=6) + 1j * rng.normal(size=6) for _ in range(3)]
    np.testing.assert_allclose(wedge3(*vs).amplitudes, brute_wedge(*vs), atol=1e-13)


def test_wedge_of_orthonormal_triple_has_unit_norm():
    rng = np.random.default_rng(1)
    q, _ = np.linalg.qr(rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3)))
    psi = wedge3(q[:, 0], q[:, 1], q[:, 2])
    assert abs(psi.norm2() - 1) < 1e-13
    # general vectors: squared norm equals the Gram determinant
    vs = rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3))
    gram = vs.conj().T @ vs
    assert abs(wedge3(*vs.T).norm2() - np.linalg.det(gram).real) < 1e-10


def test_unitary_action_matches_tensor_action():
    U = random_haar_unitary(5)
    psi = random_state(5)
    lhs = apply_unitary(U, psi).tensor()
    rhs = np.einsum("ai,bj,ck,ijk->abc", U, U, U, psi.tensor())
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)
    assert abs(apply_unitary(U, psi).norm2() - psi.norm2()) < 1e-12


def test_linear_action_is_a_homomorphism():
    rng = np.random.default_rng(2)
    A, B = (rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6)) for _ in range(2))
    psi = random_state(2)
    np.testing.assert_allclose(
        apply_linear(A @ B, psi).amplitudes, apply_linear(A, apply_linear(B, psi)).amplitudes, atol=1e-9
    )


def test_non_unitary_rejected():
    with pytest.raises(NotUnitary):
        apply_unitary(2 * np.eye(6), random_state(0))


def test_haar_unitary_is_unitary_and_seeded():
    U = random_haar_unitary(9)
    np.testing.assert_allclose(U.conj().T @ U, np.eye(6), atol=1e-13)
    np.testing.assert_array_equal(U, random_haar_unitary(9))


def test_embedding_preserves_norm_and_inner_product():
    phi, psi = random_state(1), random_state(2)
    T1, T2 = embed_to_tensor(phi), embed_to_tensor(psi)
    assert abs(np.vdot(T1, T2) - inner(phi, psi)) < 1e-13


def test_w6_point_state_roundtrip():
    p = W6Point(0.5, 0.3, 0.1, 0.7, 0.2, -0.4)
    q = w6_from_state(p.state())
    np.testing.assert_allclose(q.as_tuple(), p.as_tuple())
    assert abs(p.state().norm2() - p.norm2()) < 1e-15
    with pytest.raises(ValueError):
        w6_from_state(random_state(0))


def test_sov_isometry_roundtrip_and_leak():
    phi = random_qubit_state(4)
    psi = sov_isometry(phi)
    assert abs(psi.norm2() - phi.norm2()) < 1e-14
    assert psi.amplitude(1, 3, 5) == phi.amplitudes[0, 0, 0]
    assert psi.amplitude(2, 4, 6) == phi.amplitudes[1, 1, 1]
    np.testing.assert_allclose(sov_inverse(psi).amplitudes, phi.amplitudes)
    with pytest.raises(NotSOV):
        sov_inverse(ThreeFermionState.basis(1, 2, 3))


def test_w6_point_maps_to_five_qubit_amplitudes():
    p = W6Point(0.1, 0.2, 0.3, 0.4, 0.5, 0.6)
    t = p.qubit_state().amplitudes
    assert t[1, 0, 0] == pytest.approx(0.1)
    assert t[0, 1, 0] == pytest.approx(0.2)
    assert t[0, 0, 1] == pytest.approx(0.3)
    assert t[1, 1, 1] == pytest.approx(0.4)
    assert t[0, 0, 0] == pytest.approx(0.5 + 0.6j)


@pytest.mark.parametrize("perm", list(itertools.permutations((1, 2, 3))))
def test_block_permutation_relabels_abc(perm):
    p = W6Point(0.5, 0.3, 0.1, 0.7, 0.2, -0.4)
    moved = apply_unitary(s3_matrix(perm), p.state())
    np.testing.assert_allclose(moved.amplitudes, p.permuted(perm).state().amplitudes, atol=1e-15)


@pytest.mark.parametrize("perm", list(itertools.permutations((1, 2, 3))))
def test_qubit_permutation_matches_block_permutation(perm):
    phi = random_qubit_state(7)
    lhs = sov_isometry(permute_qubits(phi, perm))
    rhs = apply_unitary(s3_matrix(perm), sov_isometry(phi))
    np.testing.assert_allclose(lhs.amplitudes, rhs.amplitudes, atol=1e-15)


def test_permutation_group_helpers():
    assert compose(SIGMA, inverse_perm(SIGMA)) == IDENTITY
    assert compose(TAU, TAU) == IDENTITY
    assert compose(SIGMA, compose(SIGMA, SIGMA)) == IDENTITY


def test_local_unitaries_act_per_qubit():
    phi = ThreeQubitState.basis("000")
    X = np.array([[0, 1], [1, 0]])
    out = apply_local_unitaries(phi, (X, np.eye(2), X))
    assert out.amplitudes[1, 0, 1] == 1


def test_extended_precision_state_arithmetic():
    with mpmath.workdps(40):
        U = orthonormalize_mp(random_haar_unitary(3))
        defect = max(abs(v) for v in (U.conj().T @ U - np.eye(6)).ravel())
        assert defect < mpmath.mpf(10) ** -35
        psi = random_state(3).to_extended()
        out = apply_unitary(U, psi)
        assert out.is_extended
        assert abs(out.norm2() - psi.norm2()) < mpmath.mpf(10) ** -30
    assert P.is_mp(out.amplitudes)
