"""Signless Laplacian construction and certified computation of the Q-index.

Every estimate carries an explicitly computed residual ||Qx - qx||_2, and
threshold tests go through :func:`certified_compare`, which refuses to
classify a comparison when the threshold falls inside the residual
interval.  Two independent engines are available: deterministic power
iteration, and a dense symmetric eigensolver used by default at desk scale
(n <= 64) and as the cross-check oracle in tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

DENSE_MAX = 64


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """Q-index estimate with unit eigenvector and certified residual."""

    q: float
    vector: np.ndarray
    residual: float
    iterations: int
    method: str


@dataclass(frozen=True)
class Comparison:
    """Outcome of a certified threshold test; margin is q - threshold."""

    verdict: str  # "ge" | "lt" | "indeterminate"
    margin: float


class ConvergenceError(RuntimeError):
    """Iteration budget exhausted; carries the best estimate so far."""

    def __init__(self, message: str, best: SpectralResult):
        super().__init__(message)
        self.best = best


def signless_laplacian(g: Graph) -> np.ndarray:
    """Degree diagonal plus adjacency; row sum at u equals 2 * degree(u)."""
    if g.n == 0:
        raise ValueError("signless Laplacian undefined for the empty graph")
    q = g.adjacency_matrix()
    q[np.diag_indices(g.n)] = g.degrees
    return q


def _start_vector(n: int) -> np.ndarray:
    # all-ones with a deterministic per-index perturbation, normalized
    x = 1.0 + np.arange(n) / (10.0 * n)
    return x / np.linalg.norm(x)


def _power(q: np.ndarray, tol: float, max_iterations: int) -> SpectralResult:
    n = q.shape[0]
    x = _start_vector(n)
    rho = 0.0
    res = 0.0
    for it in range(1, max_iterations + 1):
        y = q @ x
        rho = float(x @ y)
        # y = 0 (edgeless graph) passes this test with rho = res = 0
        res = float(np.linalg.norm(y - rho * x))
        if res <= tol * max(1.0, rho):
            return SpectralResult(rho, x, res, it, "power")
        x = y / float(np.linalg.norm(y))
    raise ConvergenceError(
        f"power iteration did not reach tol={tol} in {max_iterations} iterations"
        f" (residual {res:.3e})",
        SpectralResult(rho, x, res, max_iterations, "power"),
    )


def _dense(q: np.ndarray) -> SpectralResult:
    values, vectors = np.linalg.eigh(q)
    top = float(values[-1])
    x = vectors[:, -1]
    if x[int(np.argmax(np.abs(x)))] < 0:
        x = -x
    res = float(np.linalg.norm(q @ x - top * x))
    return SpectralResult(top, x, res, 0, "dense")


def q_index(
    g: Graph,
    tol: float = 1e-10,
    method: str = "auto",
    max_iterations: int | None = None,
) -> SpectralResult:
    """Largest signless-Laplacian eigenvalue with residual certificate.

    ``method`` is "auto" (dense for n <= 64, else power iteration),
    "dense", or "power".  The power engine stops once
    ||Qx - qx|| <= tol * max(1, q) and fails loudly with the best estimate
    when its iteration cap (default 100n + 10000) runs out.
    """
    if g.n == 0:
        raise ValueError("Q-index undefined for the empty graph")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if method == "auto":
        method = "dense" if g.n <= DENSE_MAX else "power"
    mat = signless_laplacian(g)
    if method == "dense":
        result = _dense(mat)
        if result.residual > tol * max(1.0, result.q):
            raise ConvergenceError(
                f"dense solve residual {result.residual:.3e} exceeds tol={tol}",
                result,
            )
        return result
    if method == "power":
        cap = max_iterations if max_iterations is not None else 100 * g.n + 10000
        return _power(mat, tol, cap)
    raise ValueError(f"unknown method {method!r}")


def certified_compare(result: SpectralResult, threshold: float) -> Comparison:
    """Compare q against a threshold using the residual as interval radius.

    "ge" when q - residual >= threshold, "lt" when q + residual < threshold,
    otherwise "indeterminate" (the threshold lies inside the interval).
    """
    margin = result.q - threshold
    if result.q - result.residual >= threshold:
        return Comparison("ge", margin)
    if result.q + result.residual < threshold:
        return Comparison("lt", margin)
    return Comparison("indeterminate", margin)
