"""trimqc: multipartite quantum correlation in tunable triangular Ising patches.

Builds finite triangular transverse-field Ising lattices with three
independently scaled bond-direction classes, diagonalizes them exactly
(dense or matrix-free Lanczos), forms Gibbs states, and computes
negativity-based correlation measures over parameter sweeps.
"""

from ._version import __version__
from .errors import (ConvergenceError, InvalidArgumentError, ResourceLimitError,
                     TrimqcError, TruncationError)
from .lattice import BondClass, Lattice, build_lattice, mirror_permutation
from .hamiltonian import CouplingParams, HamiltonianOp
from .eigen import Spectrum, full_spectrum, gap, low_spectrum
from .qstate import (DensityMatrix, QuantumState, mixed_one_vs_rest_negativity,
                     negativity, pure_one_vs_rest_negativity, reduce)
from .mqc import MqcResult, mqc, pairwise_sum
from .thermal import ThermalState, gibbs
from .sweep import Axis, SweepSpec, SweepResult, linear_axis, run_sweep
from .presets import PRESET_NAMES, Preset, preset

__all__ = [
    "__version__",
    "TrimqcError", "InvalidArgumentError", "ResourceLimitError",
    "TruncationError", "ConvergenceError",
    "BondClass", "Lattice", "build_lattice", "mirror_permutation",
    "CouplingParams", "HamiltonianOp",
    "Spectrum", "full_spectrum", "low_spectrum", "gap",
    "QuantumState", "DensityMatrix", "reduce", "negativity",
    "pure_one_vs_rest_negativity", "mixed_one_vs_rest_negativity",
    "MqcResult", "mqc", "pairwise_sum",
    "ThermalState", "gibbs",
    "Axis", "SweepSpec", "SweepResult", "linear_axis", "run_sweep",
    "Preset", "PRESET_NAMES", "preset",
]
