"""Shared test utilities: independent oracles and seeded samplers.

Oracle functions here are written directly against numpy so they stay
independent of the library code paths they check.
"""

import numpy as np

from quditshare import DampingParams


def phi_plus_vector(d):
    v = np.zeros(d * d, dtype=complex)
    v[:: d + 1] = 1.0 / np.sqrt(d)
    return v


def one_sided_oracle(ops, psi_vec, d):
    """sum_i (I (x) K_i) |psi><psi| (I (x) K_i^dag), built from Kronecker products."""
    rho = np.zeros((d * d, d * d), dtype=complex)
    for k in ops:
        big = np.kron(np.eye(d), k)
        w = big @ psi_vec
        rho += np.outer(w, w.conj())
    return rho


def pt_second_oracle(mat, d):
    """Partial transpose on the second subsystem by explicit index swap."""
    out = np.zeros_like(mat)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    out[i * d + j, k * d + l] = mat[i * d + l, k * d + j]
    return out


def negativity_oracle(mat, d):
    eigs = np.linalg.eigvalsh(pt_second_oracle(mat, d))
    return float(-eigs[eigs < 0].sum())


def damping_kraus_oracle(d, x):
    """The family's Kraus operators written out directly."""
    ops = [np.diag(np.concatenate([[1.0], np.asarray(x, dtype=float)])).astype(complex)]
    for m in range(1, d):
        a = np.zeros((d, d), dtype=complex)
        a[0, m] = np.sqrt(1.0 - float(x[m - 1]) ** 2)
        ops.append(a)
    return ops


def random_strict_params(d, rng):
    """Strict parameter point with x_i drawn from (0.02, 0.98)."""
    while True:
        x = rng.uniform(0.02, 0.98, size=d - 1)
        if x.max() - x.min() > 1e-6:
            return DampingParams(d=d, x=x)


def random_unitary_oracle(d, rng):
    """Haar unitary via QR, independent of the library implementation."""
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))
