import math

import mpmath
import numpy as np
import pytest

from trifermion import precision as P
from trifermion.canonform import (
    DSource,
    canonicalize,
    cubic_real_roots,
    f_coefficients,
    g_coefficients,
    h_coefficients,
    polynomial_roots,
    qubit_canonicalize,
    qubit_witness,
    real_roots_in_unit,
    refine_d2,
    root_census,
    sylvester_resultant,
)
from trifermion.errors import Inconsistent, ZeroState
from trifermion.exterior import (
    ThreeFermionState,
    ThreeQubitState,
    W6Point,
    apply_local_unitaries,
    apply_unitary,
    haar_unitary,
    random_haar_unitary,
    random_qubit_state,
    random_state,
)
from trifermion.invariants import fermion_invariants, qubit_invariants, w6_values
from trifermion.region import CaseTag, in_delta, phi, sample_delta
from trifermion.verification import canonical_round_trip, transcription

EXT = P.Precision(P.EXTENDED)


def _max_diff(p, q):
    return max(abs(float(u) - float(v)) for u, v in zip(p.as_tuple(), q.as_tuple()))


# ------------------------------------------------------------ root finding


def test_polynomial_roots_recover_known_roots():
    roots = np.array([0.9, 0.7, 0.5 + 0.2j, 0.5 - 0.2j, 0.1, -0.3, 0.05, 0.8])
    coeffs = np.poly(roots)[::-1]  # low degree first
    got = polynomial_roots(coeffs)
    assert len(got) == 8
    for r in roots:
        assert min(abs(g - r) for g in got) < 1e-10


def test_polynomial_roots_extended():
    with mpmath.workdps(50):
        roots = [mpmath.mpf(1) / 3, mpmath.mpf(2) / 7, mpmath.mpf(-1) / 5]
        coeffs = [-roots[0] * roots[1] * roots[2], roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2],
                  -(roots[0] + roots[1] + roots[2]), 1]
        got = polynomial_roots(coeffs, EXT)
        for r in roots:
            assert min(abs(g - r) for g in got) < mpmath.mpf(10) ** -40


def test_real_roots_filter():
    roots = [0.5 + 1e-9j, 0.2 + 0.3j, 1.5, -0.1, 0.9]
    assert real_roots_in_unit(roots) == pytest.approx([0.9, 0.5])


@pytest.mark.parametrize("roots", [(3.0, 1.0, -2.0), (0.5, 0.5, 0.1), (1.0, 1.0, 1.0)])
def test_cubic_real_roots(roots):
    c3, c2, c1, c0 = 2 * np.poly(roots)
    got = cubic_real_roots(c3, c2, c1, c0)
    np.testing.assert_allclose(got, sorted(roots, reverse=True), atol=1e-7)


def test_cubic_with_complex_roots_is_inconsistent():
    with pytest.raises(Inconsistent):
        cubic_real_roots(1.0, 0.0, 1.0, 0.0)


# ------------------------------------------------------------ elimination polynomials


def test_transcription_identities():
    res = transcription(count=10, seed=1, resultant_states=1, t_samples=5)
    assert res["passed"], res


def test_resultant_of_known_polynomials():
    # Res((s-1)(s-2), s-3) = (1-3)(2-3) = 2
    assert sylvester_resultant([1.0, -3.0, 2.0], [1.0, -3.0]) == pytest.approx(2.0)


def test_d2_is_a_root_at_several_points():
    for row in sample_delta(5, 2):
        p = W6Point(*row)
        M = fermion_invariants(p.state()).M
        f = f_coefficients(M)
        assert abs(f(row[3] ** 2)) < 1e-8 * f.max_abs


def test_boundary_points_give_multiple_roots():
    # f'(d^2) carries the factors (abcd)^2 and Phi, so d^2 is a multiple root where they vanish
    with mpmath.workdps(40):
        for a, b, c, d, x, y in [(0.5, 0.3, 0.0, 0.8, 0.1, 0.2), (0.0, 0.3, 0.2, 0.8, 0.1, 0.2)]:
            p = W6Point(*(mpmath.mpf(v) for v in (a, b, c, d, x, y))).normalized()
            M, _ = w6_values(*p.as_tuple())
            f = f_coefficients(M)
            t = p.d**2
            assert abs(f(t)) < mpmath.mpf(10) ** -30
            assert abs(f.derivative(t)) < mpmath.mpf(10) ** -30
        # Phi = 0: solve for y at fixed (a, b, c, d, x) and renormalize the d-free part
        a, b, c, d, x = (mpmath.mpf(v) for v in (0.3, 0.25, 0.2, 0.85, 0.1))
        y = mpmath.findroot(lambda y: phi(a, b, c, d, x, y), 0.3)
        p = W6Point(a, b, c, d, x, y)
        M, _ = w6_values(*p.as_tuple())
        assert abs(f_coefficients(M).derivative(d * d)) < mpmath.mpf(10) ** -30 * (1 + f_coefficients(M).max_abs)


def test_refine_d2_improves_root():
    p = W6Point(*sample_delta(1, 3, margin=1e-3)[0])
    M = fermion_invariants(p.state()).M
    t = refine_d2(p.d**2 + 1e-7, M)
    assert abs(t - p.d**2) < 1e-12


def test_g_and_h_share_the_point():
    # at t = d^2 both elimination polynomials vanish at a common s
    with mpmath.workdps(40):
        p = W6Point(*(mpmath.mpf(float(v)) for v in sample_delta(1, 4)[0])).normalized()
        M, _ = w6_values(*p.as_tuple())
        t = p.d**2
        R = sylvester_resultant(g_coefficients(t, M), h_coefficients(t, M))
        assert abs(R) < mpmath.mpf(10) ** -25


def test_root_census():
    res = root_census(random_state(5))
    assert not res["identically_zero"]
    assert res["largest_is_d2"] and res["all_in_unit"]


# ------------------------------------------------------------ canonicalization


def test_round_trip_binary64():
    res = canonical_round_trip(count=20, seed=7)
    assert res["passed"], res
    assert res["max_componentwise_error"] < 1e-6


def test_round_trip_extended():
    res = canonical_round_trip(count=1, seed=8, precision=EXT, tol=1e-20)
    assert res["passed"], res


def test_idempotent_and_invariant():
    psi = random_state(9)
    first = canonicalize(psi)
    second = canonicalize(first.point.state())
    assert _max_diff(first.point, second.point) < 1e-8
    rotated = canonicalize(apply_unitary(random_haar_unitary(9), psi))
    assert _max_diff(first.point, rotated.point) < 1e-8
    assert in_delta(first.point).in_region
    a = fermion_invariants(psi).as_array()
    b = fermion_invariants(first.point.state()).as_array()
    np.testing.assert_allclose(a, b, atol=1e-9)


def test_scale_is_ignored():
    psi = random_state(10)
    assert _max_diff(canonicalize(psi).point, canonicalize(3.0 * psi).point) < 1e-9


def test_residuals_reported():
    res = canonicalize(random_state(11))
    assert res.residuals["invariant_match"] < 1e-8
    assert res.d_source in (DSource.LARGEST_ROOT, DSource.MU_CROSS_CHECK)
    assert res.case.tag == CaseTag.SINGLE_I and not res.escalated


def test_special_states():
    w = W6Point(1 / 3, 1 / 3, 1 / 3, 2 / 3, 0.0, math.sqrt(2) / 3)
    res = canonicalize(apply_unitary(random_haar_unitary(12), w.state()))
    assert _max_diff(res.point, w) < 1e-8 and res.case.tag == CaseTag.PAIR_IV
    e246 = canonicalize(ThreeFermionState.basis(2, 4, 6))
    assert _max_diff(e246.point, W6Point(0, 0, 0, 1, 0, 0)) < 1e-8 and e246.case.tag == CaseTag.SINGLE_III
    ghz = canonicalize(ThreeFermionState.from_dict({(1, 3, 5): 1, (2, 4, 6): 1}))
    s = 1 / math.sqrt(2)
    assert _max_diff(ghz.point, W6Point(0, 0, 0, s, s, 0)) < 1e-8
    assert ghz.case.tag == CaseTag.SEMICIRCLE_V and ghz.escalated


def test_zero_state_raises():
    with pytest.raises(ZeroState):
        canonicalize(ThreeFermionState.zero())


# ------------------------------------------------------------ qubits


def test_qubit_canonical_point_reproduces_marginal_purities():
    phi = random_qubit_state(13)
    point, perm = qubit_canonicalize(phi)
    Q = qubit_invariants(phi).Q
    R = qubit_invariants(point.qubit_state()).Q
    np.testing.assert_allclose([float(R[k]) for k in (1, 2, 3)], [float(Q[k]) for k in (1, 2, 3)], atol=1e-8)
    assert len(perm) == 3


def test_qubit_canonicalize_is_local_unitary_invariant():
    phi = random_qubit_state(14)
    rng = np.random.default_rng(14)
    moved = apply_local_unitaries(phi, [haar_unitary(rng, 2) for _ in range(3)])
    assert _max_diff(qubit_canonicalize(phi)[0], qubit_canonicalize(moved)[0]) < 1e-8


def test_qubit_witness():
    phi = random_qubit_state(15)
    wit = qubit_witness(phi)
    assert wit.residual < 1e-8
    for u in wit.unitaries:
        np.testing.assert_allclose(u.conj().T @ u, np.eye(2), atol=1e-12)
    image = wit.apply(phi)
    np.testing.assert_allclose(image.amplitudes, wit.image.amplitudes, atol=1e-12)
    np.testing.assert_allclose(image.amplitudes, wit.point.qubit_state().amplitudes, atol=1e-8)


def test_witness_of_canonical_state_is_trivial():
    point, _ = qubit_canonicalize(random_qubit_state(16))
    wit = qubit_witness(point.qubit_state())
    for u in wit.unitaries:
        np.testing.assert_allclose(np.abs(u), np.eye(2), atol=1e-7)


def test_qubit_zero_state_raises():
    with pytest.raises(ZeroState):
        qubit_canonicalize(ThreeQubitState(np.zeros((2, 2, 2))))
