"""Sweep recipes reproducing the reference figure protocols.

Each preset bundles one or more SweepSpec grids (some figures span several
panels: lattice sizes, temperatures, or parameter curves). Axis ranges use
eta, omega in [0, 3] and J in [-6, 6]; grid resolutions default to 61x61
for heatmaps and are overridable since the source resolution is not
published. Temperatures of record are {0, 0.05, 0.1}.
"""

from dataclasses import dataclass

from .errors import InvalidArgumentError
from .sweep import Axis, SweepSpec, linear_axis

HEATMAP_POINTS = 61
LINE_POINTS = 61
TEMP_POINTS = 51
TEMPERATURES = (0.0, 0.05, 0.1)

# (label, J, omega, eta): ferromagnetic isotropic plus three antiferromagnetic
# anisotropy settings, all at |J| = 6
TEMP_CURVES = (
    ("ferro", -6.0, 1.0, 1.0),
    ("strong_aniso", 6.0, 1.5, 0.5),
    ("weak_aniso", 6.0, 1.0, 0.9),
    ("iso", 6.0, 1.0, 1.0),
)

PRESET_NAMES = ("fig2a", "fig2b", "fig2c", "fig4", "fig5a", "fig5b", "fig5c",
                "fig6", "fig7", "fig8a", "fig8b", "fig8c", "fig8d")


@dataclass
class Preset:
    name: str
    specs: list[tuple[str, SweepSpec]]  # (suffix, spec); suffix "" if single


def preset(name: str, heatmap_points: int = HEATMAP_POINTS,
           line_points: int = LINE_POINTS, temp_points: int = TEMP_POINTS) -> Preset:
    """Build the named preset; raises InvalidArgumentError for unknown names."""
    if name not in PRESET_NAMES:
        raise InvalidArgumentError(
            f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}")

    if name in ("fig2a", "fig2b", "fig2c"):
        L = {"fig2a": 2, "fig2b": 3, "fig2c": 4}[name]
        spec = SweepSpec(
            side_length=L,
            axes=(linear_axis("eta", 0.0, 3.0, heatmap_points),
                  linear_axis("J", -6.0, 6.0, heatmap_points)),
            fixed={"omega": 1.0, "h": 1.0},
            observables=("N_pair(1,2)", "one_vs_rest(2)", "T_N(2)"),
        )
        return Preset(name=name, specs=[("", spec)])

    if name == "fig4":
        specs = []
        for L in (2, 3, 4, 5):
            n = L * (L + 1) // 2
            spec = SweepSpec(
                side_length=L,
                axes=(Axis("eta", (0.2, 1.0, 2.5)),
                      linear_axis("J", -6.0, 6.0, line_points)),
                fixed={"omega": 1.0, "h": 1.0},
                observables=("T_N(2)",),
            )
            specs.append((f"N{n}", spec))
        return Preset(name=name, specs=specs)

    if name in ("fig5a", "fig5b", "fig5c"):
        L = {"fig5a": 2, "fig5b": 3, "fig5c": 4}[name]
        specs = []
        for T in TEMPERATURES:
            spec = SweepSpec(
                side_length=L,
                axes=(linear_axis("omega", 0.0, 3.0, heatmap_points),
                      linear_axis("eta", 0.0, 3.0, heatmap_points)),
                fixed={"J": 6.0, "h": 1.0, "T": T},
                observables=("T_N(1)",),
            )
            specs.append((f"T{T:g}", spec))
        return Preset(name=name, specs=specs)

    if name == "fig6":
        specs = []
        for (suffix, L, omega, eta) in (("N3_iso", 2, 1.0, 1.0),
                                        ("N3_aniso", 2, 1.5, 0.5),
                                        ("N10_iso", 4, 1.0, 1.0),
                                        ("N10_aniso", 4, 1.5, 0.5)):
            n_levels = min(10, 1 << (L * (L + 1) // 2))
            spec = SweepSpec(
                side_length=L,
                axes=(linear_axis("J", -6.0, 6.0, line_points),),
                fixed={"omega": omega, "eta": eta, "h": 1.0},
                observables=(f"energies({n_levels})", "gap"),
            )
            specs.append((suffix, spec))
        return Preset(name=name, specs=specs)

    if name == "fig7":
        specs = []
        for T in TEMPERATURES:
            spec = SweepSpec(
                side_length=4,
                axes=(linear_axis("omega", 0.0, 3.0, heatmap_points),
                      linear_axis("eta", 0.0, 3.0, heatmap_points)),
                fixed={"J": 6.0, "h": 1.0, "T": T},
                observables=("pairwise_sum(5)",),
            )
            specs.append((f"T{T:g}", spec))
        return Preset(name=name, specs=specs)

    # fig8a-d: T_N(2) against temperature for the four coupling settings
    L = {"fig8a": 2, "fig8b": 3, "fig8c": 4, "fig8d": 5}[name]
    specs = []
    for (label, J, omega, eta) in TEMP_CURVES:
        spec = SweepSpec(
            side_length=L,
            axes=(linear_axis("T", 0.0, 0.5, temp_points),),
            fixed={"J": J, "omega": omega, "eta": eta, "h": 1.0},
            observables=("T_N(2)",),
        )
        specs.append((label, spec))
    return Preset(name=name, specs=specs)
