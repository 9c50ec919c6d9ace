"""Implicit transverse-field Ising operator on the 2^N computational basis.

H = sum_{<i,j>} J_ij Sx_i Sx_j + h sum_i Sz_i with spin-1/2 operators
S = sigma/2, so Sz|0> = +1/2|0>, Sz|1> = -1/2|1> and Sx flips a bit with
amplitude 1/2. Per-bond couplings are J_ij = J * {omega, eta, 1} by bond
class. Bit i of a basis index corresponds to site i with site 1 as the
most significant bit, which keeps row-major partial traces contiguous.

The operator is real symmetric and commutes with the global parity
P = prod_i sigma^z_i, which multiplies basis state b by (-1)^popcount(b).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, ResourceLimitError
from .lattice import BondClass, Lattice

MATERIALIZE_CAP = 14


@dataclass(frozen=True)
class CouplingParams:
    J: float
    omega: float
    eta: float
    h: float = 1.0

    def __post_init__(self):
        for name in ("J", "omega", "eta", "h"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidArgumentError(f"{name} must be finite")
        if self.omega < 0 or self.eta < 0:
            raise InvalidArgumentError("omega and eta must be nonnegative")


class HamiltonianOp:
    """Matrix-free H with precomputed diagonal and per-bond flip permutations."""

    def __init__(self, lattice: Lattice, params: CouplingParams,
                 class_factors: dict[BondClass, float] | None = None):
        self.lattice = lattice
        self.params = params
        self.n_sites = lattice.n_sites
        self.dim = 1 << self.n_sites
        if class_factors is None:
            class_factors = {
                BondClass.OMEGA: params.omega,
                BondClass.ETA: params.eta,
                BondClass.UNIT: 1.0,
            }
        self._class_factors = dict(class_factors)

        basis = np.arange(self.dim, dtype=np.int64)
        pop = np.bitwise_count(basis).astype(np.int64)
        # h * (n_up - n_down) / 2 per basis state; bit value 1 means spin down
        self._diag = 0.5 * params.h * (self.n_sites - 2 * pop).astype(np.float64)
        self._flips = []  # (xor permutation of the basis, J_ij / 4)
        for (i, j, cls) in lattice.bonds:
            mask = (1 << (self.n_sites - i)) | (1 << (self.n_sites - j))
            strength = 0.25 * params.J * self._class_factors[cls]
            self._flips.append(((basis ^ mask).astype(np.int64), strength))

    def bond_strength(self, cls: BondClass) -> float:
        return self.params.J * self._class_factors[cls]

    def apply(self, v: np.ndarray) -> np.ndarray:
        """Return H @ v for a state vector of length 2^N."""
        v = np.asarray(v, dtype=np.float64)
        if v.shape != (self.dim,):
            raise InvalidArgumentError(
                f"state vector must have shape ({self.dim},), got {v.shape}")
        out = self._diag * v
        for idx, s in self._flips:
            out += s * v[idx]
        return out

    def materialize(self, max_sites: int = MATERIALIZE_CAP) -> np.ndarray:
        """Dense symmetric matrix M[a, b] = <a|H|b>; refused above the cap."""
        if self.n_sites > max_sites:
            raise ResourceLimitError(
                f"dense materialization capped at {max_sites} sites "
                f"(requested {self.n_sites}); use the iterative low_spectrum path")
        M = np.zeros((self.dim, self.dim))
        basis = np.arange(self.dim)
        M[basis, basis] = self._diag
        for idx, s in self._flips:
            M[basis, idx] += s
        return M


def parity_vector(n_sites: int) -> np.ndarray:
    """Diagonal of P = prod_i sigma^z_i: (-1)^popcount(b)."""
    pop = np.bitwise_count(np.arange(1 << n_sites, dtype=np.int64))
    return 1.0 - 2.0 * (pop % 2).astype(np.float64)


def mirror_swapped(op: HamiltonianOp) -> HamiltonianOp:
    """Operator with omega- and unit-class coupling factors exchanged.

    Relabeling sites by the left-right mirror permutation turns this into
    the original operator, so the two share a spectrum.
    """
    swapped = {
        BondClass.OMEGA: op._class_factors[BondClass.UNIT],
        BondClass.ETA: op._class_factors[BondClass.ETA],
        BondClass.UNIT: op._class_factors[BondClass.OMEGA],
    }
    return HamiltonianOp(op.lattice, op.params, class_factors=swapped)


def permute_sites(v: np.ndarray, n_sites: int, perm: tuple[int, ...]) -> np.ndarray:
    """Relabel the sites of a pure state: site i carries what site perm[i-1] had.

    Used to verify mirror covariance: if U is this relabeling for the mirror
    permutation, then U H_swapped U^T = H.
    """
    t = np.asarray(v).reshape((2,) * n_sites)
    axes = [perm[i] - 1 for i in range(n_sites)]
    return np.transpose(t, axes).reshape(-1)
