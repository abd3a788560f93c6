"""Bipartite state algebra: pure/mixed state containers, Schmidt decomposition,
partial transpose, partial trace, and fidelity overlaps.

Index convention used everywhere in this package: a bipartite basis label
(i, j), with i on the first (retained) subsystem and j on the second
(transmitted) subsystem, maps to the flat index i * dim_b + j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, InvalidOperatorError

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_FLOOR = -1e-10
EIG_CLAMP = 1e-12
UNITARY_TOL = 1e-10
MES_COEFF_TOL = 1e-8


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class PureBipartiteState:
    """Unit vector on C^d (x) C^d; amplitudes flat in (i, j) -> i*d + j order."""

    dim: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.dim < 2:
            raise DimensionError(f"bipartite dimension must be >= 2, got {self.dim}")
        amps = _readonly(np.asarray(self.amplitudes).reshape(-1))
        if amps.size != self.dim * self.dim:
            raise DimensionError(
                f"amplitude vector has length {amps.size}, expected {self.dim ** 2}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise InvalidOperatorError(f"state norm {norm} deviates from 1 beyond {NORM_TOL}")
        object.__setattr__(self, "amplitudes", amps)

    def coefficient_matrix(self) -> np.ndarray:
        """d x d matrix M with M[i, j] = amplitude at basis label (i, j)."""
        return self.amplitudes.reshape(self.dim, self.dim)


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian PSD operator on C^{dim_a} (x) C^{dim_b}.

    ``unit_trace`` is False for outputs of non-trace-preserving maps (duals of
    nonunital channels), where the trace requirement is deliberately relaxed.
    """

    dim_a: int
    dim_b: int
    matrix: np.ndarray
    unit_trace: bool = True

    def __post_init__(self):
        n = self.dim_a * self.dim_b
        mat = _readonly(np.asarray(self.matrix))
        if mat.shape != (n, n):
            raise DimensionError(f"matrix shape {mat.shape} does not match dims ({n}, {n})")
        if np.abs(mat - mat.conj().T).max() > HERMITIAN_TOL:
            raise InvalidOperatorError("matrix is not Hermitian within tolerance")
        if self.unit_trace and abs(mat.trace().real - 1.0) > TRACE_TOL:
            raise InvalidOperatorError(f"trace {mat.trace().real} deviates from 1")
        eigs = np.linalg.eigvalsh(mat)
        if eigs[0] < PSD_FLOOR:
            raise InvalidOperatorError(f"minimum eigenvalue {eigs[0]} below PSD floor")
        object.__setattr__(self, "matrix", mat)


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    """Schmidt data of a pure bipartite state.

    ``coefficients`` sorted non-increasing; ``left_basis[k]`` / ``right_basis[k]``
    are the k-th orthonormal vectors, so the coefficient matrix reconstructs as
    sum_k c_k outer(left_basis[k], right_basis[k]).
    """

    coefficients: np.ndarray
    left_basis: np.ndarray
    right_basis: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _readonly(self.coefficients).real)
        object.__setattr__(self, "left_basis", _readonly(self.left_basis))
        object.__setattr__(self, "right_basis", _readonly(self.right_basis))

    @property
    def spread(self) -> float:
        """Max minus min Schmidt coefficient; zero exactly for maximal entanglement."""
        return float(self.coefficients.max() - self.coefficients.min())

    def is_maximally_entangled(self) -> bool:
        d = self.coefficients.size
        return bool(np.abs(self.coefficients - 1.0 / np.sqrt(d)).max() < MES_COEFF_TOL)


def max_entangled(d: int) -> PureBipartiteState:
    """The canonical maximally entangled state (1/sqrt(d)) sum_i |ii>."""
    if d < 2:
        raise DimensionError(f"dimension must be >= 2, got {d}")
    amps = np.zeros(d * d, dtype=complex)
    amps[:: d + 1] = 1.0 / np.sqrt(d)
    return PureBipartiteState(d, amps)


def mes_from_unitary(w: np.ndarray) -> PureBipartiteState:
    """(W (x) I) applied to the canonical maximally entangled state.

    Every maximally entangled state arises this way; the coefficient matrix is
    W / sqrt(d).
    """
    w = np.asarray(w, dtype=complex)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise InvalidOperatorError(f"expected a square matrix, got shape {w.shape}")
    d = w.shape[0]
    if np.abs(w.conj().T @ w - np.eye(d)).max() > UNITARY_TOL:
        raise InvalidOperatorError("matrix is not unitary within tolerance")
    return PureBipartiteState(d, (w / np.sqrt(d)).reshape(-1))


def pure_density(state: PureBipartiteState) -> DensityOperator:
    """|psi><psi| as a DensityOperator."""
    v = state.amplitudes
    return DensityOperator(state.dim, state.dim, np.outer(v, v.conj()))


def random_pure_state(d: int, rng: np.random.Generator) -> PureBipartiteState:
    """Haar-random pure state on C^d (x) C^d (normalized complex Gaussian)."""
    v = rng.standard_normal(d * d) + 1j * rng.standard_normal(d * d)
    return PureBipartiteState(d, v / np.linalg.norm(v))


def schmidt(state: PureBipartiteState) -> SchmidtDecomposition:
    """Schmidt decomposition via SVD of the coefficient matrix."""
    u, s, vh = np.linalg.svd(state.coefficient_matrix())
    return SchmidtDecomposition(coefficients=s, left_basis=u.T, right_basis=vh)


def partial_transpose_matrix(
    matrix: np.ndarray, dim_a: int, dim_b: int, subsystem: str = "second"
) -> np.ndarray:
    """Index swap on a raw bipartite matrix (result may be non-PSD)."""
    t = np.asarray(matrix).reshape(dim_a, dim_b, dim_a, dim_b)
    if subsystem == "second":
        t = t.transpose(0, 3, 2, 1)
    elif subsystem == "first":
        t = t.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem must be 'first' or 'second', got {subsystem!r}")
    return t.reshape(dim_a * dim_b, dim_a * dim_b)


def partial_transpose(rho: DensityOperator, subsystem: str = "second") -> np.ndarray:
    """Transpose the chosen subsystem's indices; Hermitian but possibly non-PSD.

    Applying twice returns the input entrywise exactly.
    """
    return partial_transpose_matrix(rho.matrix, rho.dim_a, rho.dim_b, subsystem)


def partial_trace(rho: DensityOperator, keep: str = "first") -> np.ndarray:
    """Reduced matrix on the kept subsystem."""
    da, db = rho.dim_a, rho.dim_b
    t = rho.matrix.reshape(da, db, da, db)
    if keep == "first":
        return np.einsum("ijkj->ik", t)
    if keep == "second":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")


def fidelity_with(rho: DensityOperator, phi: PureBipartiteState) -> float:
    """<phi| rho |phi>, clamped to [0, 1]."""
    if rho.dim_a != phi.dim or rho.dim_b != phi.dim:
        raise DimensionError(
            f"state dimension {phi.dim} does not match operator dims "
            f"({rho.dim_a}, {rho.dim_b})"
        )
    v = phi.amplitudes
    val = np.vdot(v, rho.matrix @ v)
    return float(min(1.0, max(0.0, val.real)))
