"""Reduced density matrices, Schmidt decompositions, entanglement entropy
and variational maximization of the leading Schmidt coefficient over a
projector-defined subspace."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .tensor_space import TensorState

# Tolerance for declaring a supplied basis orthonormal.
BASIS_TOL = 1e-8


@dataclass
class SchmidtResult:
    """Schmidt data across the cut between factors 1..k and k+1..n.

    Coefficients are the descending singular values of the d^k x d^(n-k)
    amplitude matrix; left and right vectors are the paired orthonormal
    states on the two sides.
    """

    cut: int
    coefficients: np.ndarray
    left_vectors: tuple[TensorState, ...]
    right_vectors: tuple[TensorState, ...]


def schmidt_decompose(psi: TensorState, k: int) -> SchmidtResult:
    """Singular value decomposition of a state across the cut after factor k."""
    n = psi.n_factors
    if not 1 <= k <= n - 1:
        raise ValueError(f"cut must be in 1..{n - 1}")
    d = psi.local_dim
    matrix = psi.amplitudes.reshape(d**k, d ** (n - k))
    u, s, vh = np.linalg.svd(matrix, full_matrices=False)
    left = tuple(TensorState(d, k, u[:, i]) for i in range(s.shape[0]))
    right = tuple(TensorState(d, n - k, vh[i, :]) for i in range(s.shape[0]))
    return SchmidtResult(k, s, left, right)


def reduced_density_matrix(psi: TensorState, keep) -> np.ndarray:
    """Partial trace onto the listed factor positions (1-based).

    Returns a hermitian positive-semidefinite matrix of size d^|keep|, with
    unit trace for a normalized input; the kept factors appear in increasing
    position order.
    """
    n = psi.n_factors
    positions = sorted(set(int(k) for k in keep))
    if not positions:
        raise ValueError("keep set must be nonempty")
    if any(not 1 <= k <= n for k in positions):
        raise ValueError(f"factor positions must lie in 1..{n}")
    if len(positions) == n:
        raise ValueError("keep set must be a proper subset of the factors")
    traced = [ax for ax in range(n) if ax + 1 not in positions]
    nd = psi.nd()
    rho = np.tensordot(nd, nd.conj(), axes=(traced, traced))
    m = psi.local_dim ** len(positions)
    return rho.reshape(m, m)


def entanglement_entropy(psi: TensorState, k: int) -> float:
    """Von Neumann entropy of either side of the cut, in nats."""
    s = schmidt_decompose(psi, k).coefficients
    p = s[s > 0] ** 2
    if p.size == 0:
        return 0.0
    out = float(-(p * np.log(p)).sum())
    return 0.0 if out <= 0 else out


@dataclass
class MaximizeConfig:
    """Knobs for the alternating-ascent maximization."""

    restarts: int = 32
    max_iterations: int = 500
    tol: float = 1e-10
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.restarts < 0:
            raise ValueError("restarts must be nonnegative")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")


@dataclass
class MaximizationReport:
    """Outcome of maximizing the leading squared Schmidt coefficient."""

    best_lambda1_sq: float
    restarts: int
    iterations: tuple[int, ...]
    converged: tuple[bool, ...]
    maximizer: TensorState
    cut: int
    analytic_bound: Fraction | None = None
    seed: int | None = None
    objective_traces: tuple[tuple[float, ...], ...] = field(default=(), repr=False)

    def to_json_dict(self, include_trace: bool = False) -> dict:
        out = {
            "best_lambda1_sq": self.best_lambda1_sq,
            "restarts": self.restarts,
            "iterations": list(self.iterations),
            "converged": list(self.converged),
            "cut": self.cut,
            "analytic_bound": None if self.analytic_bound is None else str(self.analytic_bound),
            "seed": self.seed,
            "maximizer": self.maximizer.to_json_dict(),
        }
        if include_trace:
            out["objective_traces"] = [list(tr) for tr in self.objective_traces]
        return out


def _basis_matrix(basis: Sequence[TensorState]) -> np.ndarray:
    if not basis:
        raise ValueError("empty basis")
    d, n = basis[0].local_dim, basis[0].n_factors
    for b in basis:
        if b.local_dim != d or b.n_factors != n:
            raise ValueError("basis states live on different spaces")
    mat = np.column_stack([b.amplitudes for b in basis])
    gram = mat.conj().T @ mat
    if np.abs(gram - np.eye(len(basis))).max() > BASIS_TOL:
        raise ValueError("basis is not orthonormal")
    return mat


def max_lambda1_over_subspace(
    basis: Sequence[TensorState],
    k: int,
    config: MaximizeConfig | None = None,
    *,
    analytic_bound: Fraction | None = None,
    initial_pairs: Sequence[tuple[TensorState, TensorState]] = (),
) -> MaximizationReport:
    """Maximize the leading squared Schmidt coefficient over a subspace.

    Alternating ascent: starting from a product state alpha x beta on the two
    sides of the cut, project onto the subspace, normalize, replace the pair
    by the top Schmidt pair of the result and repeat until the squared
    projection norm stops increasing.  Every iteration is monotonically
    non-decreasing in that objective, so each restart converges to a fixed
    point; the report keeps the best over all restarts.  ``initial_pairs``
    prepends deterministic restarts (e.g. a pair taken from a known
    saturating state) to the random ones.
    """
    config = config or MaximizeConfig()
    mat = _basis_matrix(basis)
    d, n = basis[0].local_dim, basis[0].n_factors
    if not 1 <= k <= n - 1:
        raise ValueError(f"cut must be in 1..{n - 1}")
    dim_a, dim_b = d**k, d ** (n - k)
    rng = np.random.default_rng(config.seed)

    def random_side(dim: int) -> np.ndarray:
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        return v / np.linalg.norm(v)

    starts: list[tuple[np.ndarray, np.ndarray] | None] = []
    for a, b in initial_pairs:
        if a.local_dim != d or a.n_factors != k or b.n_factors != n - k:
            raise ValueError("initial pair does not match the cut")
        starts.append((a.normalized().amplitudes, b.normalized().amplitudes))
    starts.extend([None] * config.restarts)
    if not starts:
        raise ValueError("need at least one restart or initial pair")

    iterations = []
    converged = []
    traces = []
    best_obj = -1.0
    best_psi: np.ndarray | None = None
    for start in starts:
        alpha, beta = start if start is not None else (random_side(dim_a), random_side(dim_b))
        prev = None
        trace: list[float] = []
        done = False
        it = 0
        for it in range(1, config.max_iterations + 1):
            prod = np.multiply.outer(alpha, beta).reshape(-1)
            proj = mat @ (mat.conj().T @ prod)
            obj = float(np.real(np.vdot(proj, proj)))
            if prev is not None and obj < prev - 1e-12:
                raise RuntimeError(
                    f"ascent objective decreased from {prev} to {obj}"
                )
            trace.append(obj)
            if obj < 1e-24:
                # product state (numerically) orthogonal to the subspace
                alpha, beta = random_side(dim_a), random_side(dim_b)
                prev = None
                continue
            psi = proj / math.sqrt(obj)
            if prev is not None and obj - prev < config.tol:
                done = True
                break
            prev = obj
            u, _, vh = np.linalg.svd(psi.reshape(dim_a, dim_b), full_matrices=False)
            alpha = u[:, 0]
            beta = vh[0, :]
        iterations.append(it)
        converged.append(done)
        traces.append(tuple(trace))
        if trace and trace[-1] > best_obj:
            best_obj = trace[-1]
            best_psi = psi
    if best_psi is None:
        raise RuntimeError("no restart produced a state inside the subspace")
    return MaximizationReport(
        best_lambda1_sq=best_obj,
        restarts=len(starts),
        iterations=tuple(iterations),
        converged=tuple(converged),
        maximizer=TensorState(d, n, best_psi),
        cut=k,
        analytic_bound=analytic_bound,
        seed=config.seed,
        objective_traces=tuple(traces),
    )


def verify_fixed_point(
    psi: TensorState, basis: Sequence[TensorState], k: int
) -> float:
    """Residual of the maximizer fixed-point equation.

    A maximizer equals the normalized subspace projection of its own top
    Schmidt pair; the returned norm distance is near zero exactly for such
    states.  Raises when psi is not (numerically) inside the span.
    """
    mat = _basis_matrix(basis)
    vec = psi.amplitudes
    inside = mat @ (mat.conj().T @ vec)
    if np.linalg.norm(inside - vec) > 1e-6:
        raise ValueError("state lies outside the span of the basis")
    sr = schmidt_decompose(psi, k)
    pair = np.multiply.outer(
        sr.left_vectors[0].amplitudes, sr.right_vectors[0].amplitudes
    ).reshape(-1)
    proj = mat @ (mat.conj().T @ pair)
    nrm = np.linalg.norm(proj)
    if nrm == 0:
        return float(np.linalg.norm(vec))
    return float(np.linalg.norm(vec - proj / nrm))
