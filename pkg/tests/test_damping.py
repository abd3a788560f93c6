"""Level-damping family: construction, closed forms, and the certificate."""

import numpy as np
import pytest

from helpers import (
    damping_kraus_oracle,
    negativity_oracle,
    one_sided_oracle,
    phi_plus_vector,
    random_strict_params,
)
from quditshare import (
    DampingParams,
    ParameterError,
    advantage_certificate,
    damping_channel,
    damping_gap,
    damping_lambda_max,
    damping_negativity,
    damping_pt_spectrum,
    schmidt,
)


def test_channel_reference_point_operators():
    ch = damping_channel(DampingParams(3, [0.5, 0.9]))
    a0, a1, a2 = ch.kraus_ops
    assert np.abs(a0 - np.diag([1.0, 0.5, 0.9])).max() < 1e-15
    expected1 = np.zeros((3, 3))
    expected1[0, 1] = np.sqrt(0.75)
    assert np.abs(a1 - expected1).max() < 1e-15
    expected2 = np.zeros((3, 3))
    expected2[0, 2] = np.sqrt(0.19)
    assert np.abs(a2 - expected2).max() < 1e-15


def test_params_reject_equal_entries():
    with pytest.raises(ParameterError, match="distinctness"):
        DampingParams(3, [0.5, 0.5])


def test_params_reject_near_equal_below_threshold():
    with pytest.raises(ParameterError, match="distinctness"):
        DampingParams(3, [0.5 + 1e-13, 0.5])


def test_params_reject_boundary_values():
    with pytest.raises(ParameterError, match="open-interval"):
        DampingParams(3, [0.0, 0.5])
    with pytest.raises(ParameterError, match="open-interval"):
        DampingParams(3, [1.0, 0.5])


def test_params_reject_wrong_length_and_dim():
    with pytest.raises(ParameterError, match="length"):
        DampingParams(3, [0.5])
    with pytest.raises(ParameterError, match="dimension"):
        DampingParams(2, [0.5])


def test_relaxed_params_accept_cube():
    p = DampingParams(3, [1.0, 1.0], relaxed=True)
    assert abs(damping_lambda_max(p) - 1.0) < 1e-15
    assert abs(damping_negativity(p) - 1.0) < 1e-15  # (d-1)/2 at the identity limit
    with pytest.raises(ParameterError):
        damping_channel(p)


def test_channel_completeness_d4():
    ch = damping_channel(DampingParams(4, [0.3, 0.6, 0.9]))
    assert len(ch.kraus_ops) == 4
    acc = sum(a.conj().T @ a for a in ch.kraus_ops)
    assert np.abs(acc - np.eye(4)).max() < 1e-12


def test_lambda_max_reference_values():
    assert abs(damping_lambda_max(DampingParams(3, [0.5, 0.9])) - 2.06 / 3) < 1e-15
    p4 = DampingParams(4, [0.3, 0.6, 0.9])
    assert abs(damping_lambda_max(p4) - (1 + 0.09 + 0.36 + 0.81) / 4) < 1e-15


def test_negativity_reference_values():
    assert abs(damping_negativity(DampingParams(3, [0.5, 0.9])) - 1.51 / 3) < 1e-15
    p4 = DampingParams(4, [0.3, 0.6, 0.9])
    expected = (1.26 + 0.18 + 0.27 + 0.54) / 4
    assert abs(damping_negativity(p4) - expected) < 1e-15


def test_pt_spectrum_reference_point():
    spec = damping_pt_spectrum(DampingParams(3, [0.5, 0.9]))
    expected = np.sort(
        [1 / 3] * 3 + [0.25 / 3, -0.25 / 3, 0.81 / 3, -0.81 / 3, 0.45 / 3, -0.45 / 3]
    )
    assert np.abs(spec - expected).max() < 1e-15
    assert abs(spec.sum() - 1.0) < 1e-12


def test_pt_spectrum_sums_to_one():
    rng = np.random.default_rng(61)
    for d in (3, 4, 5):
        p = random_strict_params(d, rng)
        assert abs(damping_pt_spectrum(p).sum() - 1.0) < 1e-12


def test_pt_spectrum_near_ppt_at_small_x():
    eps = 1e-3
    p = DampingParams(3, [eps, 2 * eps])
    neg_part = damping_pt_spectrum(p)
    neg_part = -neg_part[neg_part < 0].sum()
    assert neg_part < 10 * eps**2
    assert abs(neg_part - (eps**2 + 4 * eps**2 + 2 * eps**2) / 3) < 1e-15


def test_gap_values():
    assert abs(damping_gap(DampingParams(3, [0.5, 0.9])) - 0.16) < 1e-12
    assert abs(damping_gap(DampingParams(3, [0.1, 0.9])) - 0.64) < 1e-12
    for d in (3, 4, 5):
        equal = DampingParams(d, [0.4] * (d - 1), relaxed=True)
        assert damping_gap(equal) == 0.0


def test_gap_positive_iff_distinct():
    rng = np.random.default_rng(63)
    for d in (3, 4, 5, 6):
        for _ in range(20):
            p = random_strict_params(d, rng)
            assert damping_gap(p) > 0.0


def test_choi_spectrum_closed_form():
    # the Choi state is rank d with eigenvalues (1 + sum x^2)/d and (1 - x_m^2)/d
    p = DampingParams(3, [0.5, 0.9])
    ops = damping_kraus_oracle(3, p.x)
    rho = one_sided_oracle(ops, phi_plus_vector(3), 3)
    eigs = np.sort(np.linalg.eigvalsh(rho))[::-1]
    expected = np.sort([2.06 / 3, 0.75 / 3, 0.19 / 3] + [0.0] * 6)[::-1]
    assert np.abs(eigs - expected).max() < 1e-12


def test_closed_forms_match_dense_oracles():
    rng = np.random.default_rng(65)
    for d in (3, 4, 5):
        for _ in range(10):
            p = random_strict_params(d, rng)
            ops = damping_kraus_oracle(d, p.x)
            rho = one_sided_oracle(ops, phi_plus_vector(d), d)
            lam = np.linalg.eigvalsh(rho)[-1]
            assert abs(damping_lambda_max(p) - lam) < 1e-10
            assert abs(damping_negativity(p) - negativity_oracle(rho, d)) < 1e-10


def test_monotone_limit_toward_identity():
    d = 4
    x0 = np.array([0.2, 0.5, 0.7])
    lams, negs = [], []
    for t in np.linspace(0.0, 1.0, 11):
        p = DampingParams(d, x0 + t * (1.0 - x0), relaxed=True)
        lams.append(damping_lambda_max(p))
        negs.append(damping_negativity(p))
    assert all(b >= a for a, b in zip(lams, lams[1:]))
    assert all(b >= a for a, b in zip(negs, negs[1:]))
    assert abs(lams[-1] - 1.0) < 1e-12
    assert abs(negs[-1] - (d - 1) / 2) < 1e-12


def test_certificate_reference_point():
    cert = advantage_certificate(DampingParams(3, [0.5, 0.9]), restarts=8)
    assert abs(cert.lambda_max_closed - 0.6866666666666666) < 1e-12
    assert abs(cert.fstar_bound_phiplus - 0.6688888888888889) < 1e-12
    assert abs(cert.gap - 0.16) < 1e-12
    expected = np.zeros(9)
    expected[0], expected[4], expected[8] = 1.0, 0.5, 0.9
    expected /= np.sqrt(2.06)
    overlap = abs(np.vdot(cert.psi_prime.amplitudes, expected))
    assert abs(overlap - 1.0) < 1e-10
    assert cert.psi_prime_schmidt_spread > 1e-8
    assert cert.verdict_ceiling
    assert cert.verdict_advantage
    assert cert.verdict_negativity_advantage
    assert cert.all_verdicts_true


def test_certificate_closed_numeric_agreement():
    rng = np.random.default_rng(67)
    for d in (3, 5):
        cert = advantage_certificate(random_strict_params(d, rng), restarts=4)
        assert abs(cert.lambda_max_closed - cert.lambda_max_numeric) < 1e-10
        assert abs(cert.negativity_phiplus_closed - cert.negativity_phiplus_numeric) < 1e-10


def test_certificate_d5_sample():
    cert = advantage_certificate(DampingParams(5, [0.2, 0.4, 0.6, 0.8]), restarts=8)
    assert abs(cert.gap - 0.8) < 1e-12
    assert cert.all_verdicts_true


def test_psi_prime_not_maximally_entangled():
    rng = np.random.default_rng(69)
    for d in (3, 4):
        cert = advantage_certificate(random_strict_params(d, rng), restarts=4)
        dec = schmidt(cert.psi_prime)
        assert not dec.is_maximally_entangled()
        assert dec.spread > 1e-8
