"""Kraus-channel algebra: validation, duals, one-sided action, Choi states."""

import numpy as np
import pytest

from helpers import (
    damping_kraus_oracle,
    one_sided_oracle,
    phi_plus_vector,
    random_unitary_oracle,
)
from quditshare import (
    ChannelCompletenessError,
    DimensionError,
    KrausChannel,
    PureBipartiteState,
    apply_one_sided,
    channel_from_dict,
    channel_to_dict,
    choi_state,
    dual,
    haar_unitary,
    is_unital,
    kraus_validate,
    load_channel,
    max_entangled,
    partial_trace,
    pure_density,
    random_channel,
    random_pure_state,
    save_channel,
    top_choi_eigenpair,
)

X = np.array([[0, 1], [1, 0]], dtype=complex)


def test_identity_channel_valid_and_unital():
    ch = kraus_validate([np.eye(3)])
    assert ch.dim == 3
    assert is_unital(ch)


def test_damping_family_kraus_valid():
    ch = kraus_validate(damping_kraus_oracle(3, [0.5, 0.9]))
    assert ch.dim == 3
    assert not is_unital(ch)


def test_incomplete_kraus_reports_residual():
    with pytest.raises(ChannelCompletenessError) as err:
        kraus_validate([np.diag([1.0, 0.8])])
    assert abs(err.value.residual - 0.36) < 1e-12
    assert err.value.position == (1, 1)


def test_bit_flip_channel_unital():
    p = 0.3
    ch = kraus_validate([np.sqrt(p) * np.eye(2), np.sqrt(1 - p) * X])
    assert is_unital(ch)


def test_damping_family_not_unital_direction():
    # sum A A^dag = diag(1 + sum(1 - x_i^2), x_1^2, x_2^2)
    ops = damping_kraus_oracle(3, [0.5, 0.9])
    acc = sum(a @ a.conj().T for a in ops)
    expected = np.diag([1 + 0.75 + 0.19, 0.25, 0.81])
    assert np.abs(acc - expected).max() < 1e-14


def test_dual_of_identity_and_unitary():
    ch = kraus_validate([np.eye(3)])
    assert np.abs(dual(ch).kraus_ops[0] - np.eye(3)).max() == 0.0
    rng = np.random.default_rng(2)
    u = random_unitary_oracle(3, rng)
    du = dual(kraus_validate([u]))
    assert np.abs(du.kraus_ops[0] - u.conj().T).max() == 0.0
    assert du.trace_preserving


def test_dual_dual_roundtrip():
    rng = np.random.default_rng(4)
    ch = random_channel(3, 3, rng)
    back = dual(dual(ch))
    for a, b in zip(ch.kraus_ops, back.kraus_ops):
        assert np.array_equal(a, b)


def test_dual_flagged_nonpreserving_for_nonunital():
    ch = kraus_validate(damping_kraus_oracle(3, [0.5, 0.9]))
    d = dual(ch)
    assert not d.trace_preserving
    assert np.abs(d.kraus_ops[1] - np.sqrt(0.75) * np.outer([0, 1, 0], [1, 0, 0])).max() < 1e-14


def test_identity_channel_preserves_phi_plus():
    ch = kraus_validate([np.eye(3)])
    rho = apply_one_sided(ch, max_entangled(3))
    assert np.abs(rho.matrix - pure_density(max_entangled(3)).matrix).max() < 1e-14


def test_one_sided_action_matches_kron_oracle():
    rng = np.random.default_rng(8)
    for d in (2, 3, 4):
        ch = random_channel(d, d, rng)
        psi = random_pure_state(d, rng)
        rho = apply_one_sided(ch, psi)
        oracle = one_sided_oracle(ch.kraus_ops, psi.amplitudes, d)
        assert np.abs(rho.matrix - oracle).max() < 1e-12


def test_one_sided_action_trace_one():
    rng = np.random.default_rng(12)
    for d in (2, 3, 5):
        ch = random_channel(d, 2, rng)
        psi = random_pure_state(d, rng)
        rho = apply_one_sided(ch, psi)
        assert abs(rho.matrix.trace().real - 1.0) < 1e-12


def test_one_sided_dimension_mismatch():
    ch = kraus_validate([np.eye(2)])
    with pytest.raises(DimensionError):
        apply_one_sided(ch, max_entangled(3))


def test_product_input_stays_separable():
    # one-sided maps cannot create entanglement from |00>
    from quditshare import negativity

    rng = np.random.default_rng(14)
    v = np.zeros(9, dtype=complex)
    v[0] = 1.0
    psi = PureBipartiteState(3, v)
    for _ in range(5):
        ch = random_channel(3, 3, rng)
        assert negativity(apply_one_sided(ch, psi)) < 1e-12


def test_local_unitary_covariance():
    rng = np.random.default_rng(16)
    d = 3
    ch = random_channel(d, 2, rng)
    psi = random_pure_state(d, rng)
    w = random_unitary_oracle(d, rng)
    rotated = PureBipartiteState(d, (w @ psi.coefficient_matrix()).reshape(-1))
    lhs = apply_one_sided(ch, rotated).matrix
    wi = np.kron(w, np.eye(d))
    rhs = wi @ apply_one_sided(ch, psi).matrix @ wi.conj().T
    assert np.abs(lhs - rhs).max() < 1e-12


def test_choi_state_marginal_and_hash():
    ch = kraus_validate(damping_kraus_oracle(3, [0.5, 0.9]))
    choi = choi_state(ch)
    red = partial_trace(choi.rho, keep="first")
    assert np.abs(red - np.eye(3) / 3).max() < 1e-10
    assert len(choi.channel_hash) == 16
    assert choi.channel_hash == choi_state(ch).channel_hash


def test_top_choi_eigenpair_identity():
    ch = kraus_validate([np.eye(3)])
    top = top_choi_eigenpair(ch)
    assert abs(top.value - 1.0) < 1e-12
    assert abs(abs(np.vdot(top.state.amplitudes, phi_plus_vector(3))) - 1.0) < 1e-10


def test_top_choi_eigenpair_damping_family():
    ch = kraus_validate(damping_kraus_oracle(3, [0.5, 0.9]))
    top = top_choi_eigenpair(dual(ch))
    assert abs(top.value - 2.06 / 3) < 1e-12
    expected = np.zeros(9)
    expected[0], expected[4], expected[8] = 1.0, 0.5, 0.9
    expected /= np.sqrt(2.06)
    assert abs(abs(np.vdot(top.state.amplitudes, expected)) - 1.0) < 1e-10
    assert not top.degenerate


def test_top_choi_eigenpair_depolarizing_degenerate():
    # fully depolarizing qubit channel: Choi state is maximally mixed
    paulis = [np.eye(2), X, np.array([[0, -1j], [1j, 0]]), np.diag([1, -1])]
    ch = kraus_validate([0.5 * p for p in paulis])
    top = top_choi_eigenpair(ch)
    assert abs(top.value - 0.25) < 1e-12
    assert top.degenerate


def test_dual_primal_lambda_max_identity():
    rng = np.random.default_rng(20)
    worst = 0.0
    for d in (2, 3, 4, 5):
        for _ in range(10):
            k = int(rng.integers(2, d + 1))
            ch = random_channel(d, k, rng)
            a = top_choi_eigenpair(ch).value
            b = top_choi_eigenpair(dual(ch)).value
            worst = max(worst, abs(a - b))
    assert worst < 1e-9


def test_haar_unitary_is_unitary():
    rng = np.random.default_rng(22)
    for d in (2, 3, 6):
        u = haar_unitary(d, rng)
        assert np.abs(u.conj().T @ u - np.eye(d)).max() < 1e-12


def test_random_channel_completeness():
    rng = np.random.default_rng(24)
    for d in (2, 4):
        for k in (2, d):
            ch = random_channel(d, k, rng)
            acc = sum(a.conj().T @ a for a in ch.kraus_ops)
            assert np.abs(acc - np.eye(d)).max() < 1e-12


def test_channel_json_roundtrip(tmp_path):
    rng = np.random.default_rng(26)
    ch = random_channel(3, 2, rng)
    path = tmp_path / "ch.json"
    save_channel(ch, path)
    loaded = load_channel(path)
    assert loaded.dim == 3
    for a, b in zip(ch.kraus_ops, loaded.kraus_ops):
        assert np.abs(a - b).max() == 0.0  # 17 significant digits round-trip exactly


def test_channel_dict_rejects_incomplete():
    data = channel_to_dict(kraus_validate([np.eye(2)]))
    data["kraus"][0][1][1] = [0.5, 0.0]
    with pytest.raises(ChannelCompletenessError):
        channel_from_dict(data)


def test_channel_needs_trace_preservation_flag():
    with pytest.raises(ChannelCompletenessError):
        KrausChannel(dim=2, kraus_ops=(np.diag([1.0, 0.8]),))
    # same operators pass with the relaxed flag used for dual maps
    KrausChannel(dim=2, kraus_ops=(np.diag([1.0, 0.8]),), trace_preserving=False)
