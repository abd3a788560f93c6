"""Optimization over transmitted input states.

The best input for the Phi+ overlap of the channel output is exact: it is the
top eigenvector of the dual-map Choi state, with value equal to that state's
largest eigenvalue. Negativity maximization over pure inputs has no such
shortcut; it runs a seeded multi-start coordinate ascent on the real
parameterization of the input amplitudes (gradient-free, since the negativity
is not smooth at partial-transpose eigenvalue crossings) and reports a lower
bound, never a claimed optimum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import KrausChannel, choi_state, dual, top_choi_eigenpair
from .errors import DimensionError
from .measures import negativity, negativity_of_matrix
from .states import PureBipartiteState, max_entangled

NEG_DEFAULT_RESTARTS = 64
NEG_DEFAULT_MAX_ITER = 2000
NEG_DEFAULT_TOL = 1e-9
_MIN_STEP = 1e-5


@dataclass(frozen=True, eq=False)
class SearchResult:
    """Outcome of an input-state search."""

    best_state: PureBipartiteState
    best_value: float
    restarts: int
    seed: int
    converged: bool = True
    trace: tuple | None = None


def best_phiplus_fidelity_input(ch: KrausChannel) -> SearchResult:
    """Exact maximizer of <Phi+| rho_{psi,ch} |Phi+> over pure inputs psi.

    The overlap equals <psi| rho_{Phi+, dual} |psi>, so the maximum is the top
    dual-Choi eigenpair; no heuristics involved.
    """
    top = top_choi_eigenpair(dual(ch))
    return SearchResult(
        best_state=top.state,
        best_value=top.value,
        restarts=0,
        seed=0,
        converged=True,
    )


def qubit_optimal_fidelity(ch: KrausChannel) -> float:
    """(1 + 2 * negativity(Choi)) / 2, exact for qubit channels only.

    The identity behind it is specific to d = 2; higher dimensions are
    rejected because the analogue fails there.
    """
    if ch.dim != 2:
        raise DimensionError(f"exact formula applies to qubit channels only, got d={ch.dim}")
    return (1.0 + 2.0 * negativity(choi_state(ch).rho)) / 2.0


def _output_negativity(ops, d, theta):
    """Negativity of the channel output for the state encoded by theta."""
    v = theta[: d * d] + 1j * theta[d * d :]
    v = v / np.linalg.norm(v)
    m = v.reshape(d, d)
    out = np.zeros((d * d, d * d), dtype=complex)
    for k in ops:
        w = (m @ k.T).reshape(-1)
        out += np.outer(w, w.conj())
    return negativity_of_matrix(out, d, d)


def _coordinate_ascent(objective, theta0, max_iter, tol):
    """Coordinate-wise quadratic probes with step annealing.

    For each coordinate, evaluates the objective at +-h, fits a parabola, and
    moves to the best of {vertex, +h, -h} when it improves. The step shrinks
    when a full sweep stalls; convergence means stalling at the smallest step.
    """
    theta = np.array(theta0, dtype=float)
    theta /= np.linalg.norm(theta)
    f = objective(theta)
    h = 0.25
    history = [(0, f)]
    converged = False
    for sweep in range(1, max_iter + 1):
        f_start = f
        for j in range(theta.size):
            base = theta[j]
            theta[j] = base + h
            f_plus = objective(theta)
            theta[j] = base - h
            f_minus = objective(theta)
            theta[j] = base
            candidates = [(f_plus, base + h), (f_minus, base - h)]
            curv = f_plus + f_minus - 2.0 * f
            if curv < 0.0:
                step = -h * (f_plus - f_minus) / (2.0 * curv)
                if abs(step) <= 2.0 * h:
                    theta[j] = base + step
                    candidates.append((objective(theta), base + step))
                    theta[j] = base
            f_best, x_best = max(candidates, key=lambda c: c[0])
            if f_best > f:
                theta[j] = x_best
                f = f_best
                theta /= np.linalg.norm(theta)
        history.append((sweep, f))
        if f - f_start < tol:
            if h <= _MIN_STEP:
                converged = True
                break
            h /= 5.0
    return theta / np.linalg.norm(theta), f, converged, history


def maximize_negativity_input(
    ch: KrausChannel,
    restarts: int = NEG_DEFAULT_RESTARTS,
    max_iter: int = NEG_DEFAULT_MAX_ITER,
    tol: float = NEG_DEFAULT_TOL,
    seed: int = 0,
    record_trace: bool = False,
) -> SearchResult:
    """Heuristic lower bound on the best output negativity over pure inputs.

    Restart states are Phi+, the exact best-fidelity input, and Haar-random
    kets with counter-derived seeds, so the reported value is monotone in the
    restart count for a fixed seed and never below the Phi+ baseline.
    """
    d = ch.dim
    ops = ch.kraus_ops
    if restarts < 1:
        raise ValueError("need at least one restart")

    def objective(theta):
        return _output_negativity(ops, d, theta)

    def encode(state):
        v = state.amplitudes
        return np.concatenate([v.real, v.imag])

    starts = [encode(max_entangled(d)), encode(best_phiplus_fidelity_input(ch).best_state)]
    for k in range(max(0, restarts - 2)):
        rng = np.random.default_rng([seed, k])
        v = rng.standard_normal(2 * d * d)
        starts.append(v / np.linalg.norm(v))
    starts = starts[:restarts]

    best = None
    for theta0 in starts:
        theta, val, conv, history = _coordinate_ascent(objective, theta0, max_iter, tol)
        if best is None or val > best[1]:
            best = (theta, val, conv, history)

    theta, val, conv, history = best
    v = theta[: d * d] + 1j * theta[d * d :]
    v = v / np.linalg.norm(v)
    state = PureBipartiteState(d, v)
    return SearchResult(
        best_state=state,
        best_value=val,
        restarts=restarts,
        seed=seed,
        converged=conv,
        trace=tuple(history) if record_trace else None,
    )
