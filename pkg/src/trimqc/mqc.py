"""Monogamy-residual multipartite correlation around a central site.

For a central site c the measure is

    T_N(c) = sqrt( N_{c|rest}^2 - sum_{j != c} N_{cj}^2 )

with the one-vs-rest negativity taken from the pure-state Schmidt
shortcut (pure inputs) or the dense partial transpose (mixed inputs),
and the two-site negativities from two-site reductions. Monogamy of
squared negativities guarantees a nonnegative radicand for pure states;
thermal states carry no such guarantee, so a negative radicand is
clamped to zero and flagged.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .qstate import (QuantumState, mixed_one_vs_rest_negativity, negativity,
                     pure_one_vs_rest_negativity, reduce)
from .errors import InvalidArgumentError

RADICAND_WARN = -1e-6


@dataclass
class MqcResult:
    center: int
    one_vs_rest: float
    pairwise: dict[int, float]
    radicand: float
    t_n: float
    clamped: bool

    def to_json_dict(self) -> dict:
        return {
            "center": self.center,
            "one_vs_rest": self.one_vs_rest,
            "pairwise": {str(j): v for j, v in sorted(self.pairwise.items())},
            "radicand": self.radicand,
            "t_n": self.t_n,
            "clamped": self.clamped,
        }


def _pairwise_negativities(state: QuantumState, center: int) -> dict[int, float]:
    out = {}
    for j in range(1, state.n_sites + 1):
        if j == center:
            continue
        rho = reduce(state, [center, j])
        out[j] = negativity(rho, [center])
    return out


def mqc(state: QuantumState, center: int, max_sites_mixed: int | None = None) -> MqcResult:
    """T_N and its ingredients for the given central site."""
    if not 1 <= center <= state.n_sites:
        raise InvalidArgumentError(f"center {center} out of range")
    if state.is_pure:
        one_vs_rest = pure_one_vs_rest_negativity(state, center)
    elif max_sites_mixed is None:
        one_vs_rest = mixed_one_vs_rest_negativity(state, center)
    else:
        one_vs_rest = mixed_one_vs_rest_negativity(state, center, max_sites=max_sites_mixed)
    pairwise = {j: float(v) for j, v in _pairwise_negativities(state, center).items()}
    radicand = float(one_vs_rest ** 2 - sum(v ** 2 for v in pairwise.values()))
    if radicand < RADICAND_WARN:
        warnings.warn(
            f"monogamy radicand {radicand:.3e} at center {center} clamped to 0")
    return MqcResult(
        center=center,
        one_vs_rest=float(one_vs_rest),
        pairwise=pairwise,
        radicand=radicand,
        t_n=float(np.sqrt(max(radicand, 0.0))),
        clamped=bool(radicand < 0.0),
    )


def pairwise_sum(state: QuantumState, center: int) -> float:
    """Plain sum (not squares) of the two-site negativities around `center`."""
    if not 1 <= center <= state.n_sites:
        raise InvalidArgumentError(f"center {center} out of range")
    return sum(_pairwise_negativities(state, center).values())
