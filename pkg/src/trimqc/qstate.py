"""Quantum-state algebra: reduced density matrices, partial transpose, negativity.

States are pure vectors or low-rank mixtures (weights plus orthonormal
vectors); mixtures are never expanded to a dense 2^N x 2^N matrix except
transiently inside mixed_one_vs_rest_negativity. Everything is real:
the Hamiltonian is real symmetric, so its eigenvectors and every density
matrix derived from them are too, and the partial transpose of a real
symmetric matrix stays real symmetric.

Negativity follows the trace-norm form: sum of |eigenvalues| of the
partially transposed matrix, minus one. A Bell pair gives 1, any product
state gives 0.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgumentError, ResourceLimitError

MIXED_NEGATIVITY_CAP = 12
CLAMP_TOL = 1e-10


@dataclass
class QuantumState:
    n_sites: int
    vector: np.ndarray | None = None        # pure form
    weights: np.ndarray | None = None       # mixed form
    vectors: np.ndarray | None = None       # mixed form, orthonormal columns

    @property
    def is_pure(self) -> bool:
        return self.vector is not None

    @classmethod
    def pure(cls, vector: np.ndarray, n_sites: int) -> "QuantumState":
        vector = np.asarray(vector, dtype=np.float64)
        if vector.shape != (1 << n_sites,):
            raise InvalidArgumentError("pure state vector has wrong length")
        if abs(np.linalg.norm(vector) - 1.0) > 1e-10:
            raise InvalidArgumentError("pure state vector must be normalized")
        return cls(n_sites=n_sites, vector=vector)

    @classmethod
    def mixed(cls, weights: np.ndarray, vectors: np.ndarray, n_sites: int) -> "QuantumState":
        weights = np.asarray(weights, dtype=np.float64)
        vectors = np.asarray(vectors, dtype=np.float64)
        if vectors.shape != (1 << n_sites, len(weights)):
            raise InvalidArgumentError("mixed state vectors have wrong shape")
        if np.any(weights <= 0):
            raise InvalidArgumentError("mixed state weights must be positive")
        if abs(weights.sum() - 1.0) > 1e-10:
            raise InvalidArgumentError("mixed state weights must sum to 1")
        gram = vectors.T @ vectors
        if np.max(np.abs(gram - np.eye(len(weights)))) > 1e-10:
            raise InvalidArgumentError("mixed state vectors must be orthonormal")
        return cls(n_sites=n_sites, weights=weights, vectors=vectors)


@dataclass
class DensityMatrix:
    subset: tuple[int, ...]
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = self.matrix
        if np.max(np.abs(m - m.T)) > 1e-12:
            raise InvalidArgumentError("density matrix must be symmetric")
        if abs(np.trace(m) - 1.0) > 1e-10:
            raise InvalidArgumentError("density matrix must have unit trace")
        if np.linalg.eigvalsh(m)[0] < -1e-10:
            raise InvalidArgumentError("density matrix must be positive semidefinite")


def _reduce_pure_vector(vector: np.ndarray, n_sites: int, keep: list[int]) -> np.ndarray:
    t = vector.reshape((2,) * n_sites)
    kept_axes = [s - 1 for s in keep]
    rest = [a for a in range(n_sites) if a not in kept_axes]
    M = np.transpose(t, kept_axes + rest).reshape(1 << len(keep), -1)
    return M @ M.T


def reduce(state: QuantumState, keep: list[int]) -> DensityMatrix:
    """Partial trace onto `keep` (ordered site list, 1-based).

    The first kept site becomes the most significant bit of the reduced
    index, matching the global convention.
    """
    keep = list(keep)
    if not keep or len(set(keep)) != len(keep) or \
            any(s < 1 or s > state.n_sites for s in keep):
        raise InvalidArgumentError(f"bad site subset {keep}")
    if state.is_pure:
        rho = _reduce_pure_vector(state.vector, state.n_sites, keep)
    else:
        rho = np.zeros((1 << len(keep),) * 2)
        for w, col in zip(state.weights, state.vectors.T):
            rho += w * _reduce_pure_vector(col, state.n_sites, keep)
    return DensityMatrix(subset=tuple(keep), matrix=rho)


def _partial_transpose(matrix: np.ndarray, n_qubits: int, positions: list[int]) -> np.ndarray:
    """Transpose the row/column tensor indices at the given qubit positions."""
    t = matrix.reshape((2,) * (2 * n_qubits))
    perm = list(range(2 * n_qubits))
    for p in positions:
        perm[p], perm[n_qubits + p] = perm[n_qubits + p], perm[p]
    return np.transpose(t, perm).reshape(matrix.shape)


def _trace_norm_minus_one(pt: np.ndarray) -> float:
    if np.max(np.abs(pt - pt.T)) > 1e-10 * max(1.0, np.max(np.abs(pt))):
        # symmetric inputs keep a symmetric partial transpose; reaching this
        # means a non-symmetric source, so fall back to general eigenvalues
        mu = np.real(np.linalg.eigvals(pt))
    else:
        mu = np.linalg.eigvalsh(pt)
    val = float(np.abs(mu).sum() - 1.0)
    if val < 0.0:
        if val < -CLAMP_TOL:
            warnings.warn(f"negativity clamped from suspiciously low {val:.3e}")
        val = 0.0
    return val


def negativity(rho: DensityMatrix, part_a: list[int]) -> float:
    """Trace-norm negativity of rho across the partition (part_a | rest)."""
    part_a = list(part_a)
    subset = rho.subset
    if not part_a or any(s not in subset for s in part_a) or \
            len(set(part_a)) != len(part_a) or len(part_a) >= len(subset):
        raise InvalidArgumentError(
            f"partition {part_a} must be a proper nonempty subset of {subset}")
    positions = [subset.index(s) for s in part_a]
    pt = _partial_transpose(rho.matrix, len(subset), positions)
    return _trace_norm_minus_one(pt)


def pure_one_vs_rest_negativity(state: QuantumState, site: int) -> float:
    """One-site-vs-rest negativity of a pure state via its Schmidt split.

    With single-site reduced eigenvalues (lam, 1-lam) the value is
    2*sqrt(lam*(1-lam)), sidestepping the 2^N partial transpose.
    """
    if not state.is_pure:
        raise InvalidArgumentError(
            "pure shortcut requires a pure state; use mixed_one_vs_rest_negativity")
    rho = reduce(state, [site]).matrix
    lam = float(np.clip(np.linalg.eigvalsh(rho)[0], 0.0, 1.0))
    return 2.0 * np.sqrt(lam * (1.0 - lam))


def mixed_one_vs_rest_negativity(state: QuantumState, site: int,
                                 max_sites: int = MIXED_NEGATIVITY_CAP) -> float:
    """One-site-vs-rest negativity of a mixed state via a dense 2^N solve."""
    if state.is_pure:
        raise InvalidArgumentError("state is pure; use pure_one_vs_rest_negativity")
    if not 1 <= site <= state.n_sites:
        raise InvalidArgumentError(f"site {site} out of range")
    if state.n_sites > max_sites:
        raise ResourceLimitError(
            f"mixed one-vs-rest negativity capped at {max_sites} sites "
            f"(requested {state.n_sites})")
    rho = (state.vectors * state.weights) @ state.vectors.T
    pt = _partial_transpose(rho, state.n_sites, [site - 1])
    return _trace_norm_minus_one(pt)
