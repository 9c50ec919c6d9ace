"""Gibbs states from spectra, with stability shift and principled truncation.

Weights are exp(-(E_i - E_0)/T) normalized over the retained levels plus
a rigorous bound on everything a truncated spectrum leaves out, so the
kept weights and the recorded truncation weight always sum to one. At
T = 0 the state is the equal mixture over the near-degenerate ground
manifold (the pure ground state when nondegenerate). k_B = 1 throughout.
"""

from dataclasses import dataclass

import numpy as np

from .eigen import DEGENERACY_RTOL, Spectrum
from .errors import InvalidArgumentError, TruncationError
from .qstate import QuantumState

TRUNCATION_BOUND = 1e-10
WEIGHT_DROP_RTOL = 1e-12


@dataclass
class ThermalState:
    temperature: float
    weights: np.ndarray          # kept weights, nonincreasing
    truncation_weight: float     # bound on total discarded probability
    state: QuantumState          # mixed form over the kept eigenvectors


def gibbs(spec: Spectrum, temperature: float) -> ThermalState:
    """Thermal mixture at the given temperature from a (possibly truncated) spectrum."""
    if temperature < 0:
        raise InvalidArgumentError(f"temperature must be >= 0, got {temperature}")
    if len(spec.energies) == 0:
        raise InvalidArgumentError("empty spectrum")
    E = spec.energies
    e0 = E[0]
    dim = 1 << spec.n_sites
    n_missing = dim - len(E)

    if temperature == 0.0:
        kept = np.abs(E - e0) <= DEGENERACY_RTOL * max(1.0, abs(e0))
        u = kept.astype(np.float64)
        bound = 0.0
    else:
        u = np.exp(-(E - e0) / temperature)
        bound = n_missing * np.exp(-(E[-1] - e0) / temperature)
        if not spec.complete and bound > TRUNCATION_BOUND:
            need = temperature * np.log(max(n_missing, 1) / TRUNCATION_BOUND)
            raise TruncationError(
                f"truncated spectrum ({len(E)} of {dim} levels) cannot support "
                f"T={temperature:g}: discarded-weight bound {bound:.3e} exceeds "
                f"{TRUNCATION_BOUND:g}; retain levels up to E_0 + {need:.4g} "
                f"(larger k)")

    Z = u.sum() + bound
    w = u / Z
    keep = w >= WEIGHT_DROP_RTOL * w.max()
    truncation_weight = float(w[~keep].sum() + bound / Z)
    w = w[keep]
    vectors = spec.vectors[:, keep]

    # kept weights plus truncation_weight sum to one exactly; the state
    # itself carries them renormalized (relative shift <= the bound)
    state = QuantumState.mixed(w / w.sum(), vectors, spec.n_sites)
    return ThermalState(
        temperature=temperature,
        weights=w,
        truncation_weight=truncation_weight,
        state=state,
    )
