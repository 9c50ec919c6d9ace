"""Parameter-grid sweeps: independent per-point solves gathered into CSV.

A sweep evaluates every grid point of one or two axes drawn from
{J, omega, eta, T}. Points with a temperature (T fixed or swept) go
through the dense-spectrum Gibbs path; points without one use the Krylov
ground state. Grid points are independent pure computations, so they can
run on a process pool; results are always emitted in row-major order over
the lexicographically sorted axes, and a rerun with the same seed
produces byte-identical CSV.

CSV schema (fixed header): axis columns first (lexicographic), then one
column per observable, then the diagnostics columns residual, clamped,
truncation_weight. Per-point failures leave NaN cells and are recorded in
the manifest's error list; they never abort the sweep.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._version import __version__
from .errors import InvalidArgumentError, ResourceLimitError
from .eigen import LANCZOS_SEED, full_spectrum, gap, low_spectrum, residuals
from .hamiltonian import CouplingParams, HamiltonianOp
from .lattice import build_lattice
from .mqc import mqc, pairwise_sum
from .qstate import (MIXED_NEGATIVITY_CAP, QuantumState, negativity,
                     pure_one_vs_rest_negativity, reduce)
from .thermal import gibbs

AXIS_NAMES = ("J", "omega", "eta", "T")
THERMAL_DENSE_CAP = 10
EXPENSIVE_DENSE_CAP = 12
TRUNCATED_SPECTRUM_K = 64
DIAG_COLUMNS = ("residual", "clamped", "truncation_weight")


@dataclass(frozen=True)
class Axis:
    name: str
    values: tuple[float, ...]


def linear_axis(name: str, lo: float, hi: float, n_points: int) -> Axis:
    return Axis(name=name, values=tuple(np.linspace(lo, hi, n_points)))


@dataclass
class SweepSpec:
    side_length: int
    axes: tuple[Axis, ...]
    fixed: dict[str, float]
    observables: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "L": self.side_length,
            "axes": {a.name: list(a.values) for a in self.axes},
            "fixed": dict(self.fixed),
            "observables": list(self.observables),
        }


@dataclass
class SweepResult:
    spec: SweepSpec
    columns: list[str]
    rows: list[list[float]]
    errors: list[dict]
    manifest: dict = field(default_factory=dict)


def _parse_observable(desc: str, n_sites: int) -> list[str]:
    """Expand one observable descriptor into its CSV column names."""
    desc = desc.strip()
    name, args = (desc, ())
    if "(" in desc:
        if not desc.endswith(")"):
            raise InvalidArgumentError(f"malformed observable {desc!r}")
        name, inner = desc[:-1].split("(", 1)
        args = tuple(int(x) for x in inner.split(",")) if inner else ()
    if name == "gap" and not args:
        return ["gap"]
    if name == "energies" and len(args) == 1 and 1 <= args[0] <= (1 << n_sites):
        return [f"E{m}" for m in range(args[0])]
    site_ok = all(1 <= a <= n_sites for a in args)
    if name == "N_pair" and len(args) == 2 and site_ok and args[0] != args[1]:
        return [f"N_pair_{args[0]}_{args[1]}"]
    if name in ("one_vs_rest", "T_N", "pairwise_sum") and len(args) == 1 and site_ok:
        return [f"{name}_{args[0]}"]
    raise InvalidArgumentError(f"bad observable {desc!r} for {n_sites} sites")


def validate_spec(spec: SweepSpec) -> None:
    if spec.side_length < 2:
        raise InvalidArgumentError("side length must be >= 2")
    if not 1 <= len(spec.axes) <= 2:
        raise InvalidArgumentError("a sweep takes 1 or 2 axes")
    names = [a.name for a in spec.axes]
    if len(set(names)) != len(names):
        raise InvalidArgumentError("duplicate axis")
    for a in spec.axes:
        if a.name not in AXIS_NAMES:
            raise InvalidArgumentError(f"unknown axis {a.name!r}")
        if len(a.values) < 2:
            raise InvalidArgumentError(f"axis {a.name} needs >= 2 points")
        if a.name in spec.fixed:
            raise InvalidArgumentError(f"axis {a.name} also appears in fixed")
    for key in spec.fixed:
        if key not in AXIS_NAMES + ("h",):
            raise InvalidArgumentError(f"unknown fixed parameter {key!r}")
    for key in ("J", "omega", "eta"):
        if key not in names and key not in spec.fixed:
            raise InvalidArgumentError(f"parameter {key} is neither swept nor fixed")
    n_sites = spec.side_length * (spec.side_length + 1) // 2
    if not spec.observables:
        raise InvalidArgumentError("no observables requested")
    for desc in spec.observables:
        _parse_observable(desc, n_sites)


def _columns(spec: SweepSpec) -> list[str]:
    n_sites = spec.side_length * (spec.side_length + 1) // 2
    cols = [a.name for a in sorted(spec.axes, key=lambda a: a.name)]
    for desc in spec.observables:
        cols.extend(_parse_observable(desc, n_sites))
    cols.extend(DIAG_COLUMNS)
    return cols


def _evaluate_point(task: tuple) -> tuple[int, list[float], str | None]:
    """Solve one grid point; returns (index, data cells, error message)."""
    (index, L, params, observables, allow_expensive, seed) = task
    lattice = build_lattice(L)
    n_sites = lattice.n_sites
    n_cells = sum(len(_parse_observable(d, n_sites)) for d in observables) + len(DIAG_COLUMNS)
    try:
        coupling = CouplingParams(J=params["J"], omega=params["omega"],
                                  eta=params["eta"], h=params.get("h", 1.0))
        op = HamiltonianOp(lattice, coupling)
        temperature = params.get("T")
        n_low = 1
        for desc in observables:
            if desc.startswith("energies"):
                n_low = max(n_low, int(desc[9:-1]))
            elif desc == "gap":
                n_low = max(n_low, 2)

        truncation_weight = 0.0
        mixed_cap = n_sites if allow_expensive else MIXED_NEGATIVITY_CAP
        if temperature is not None:
            if n_sites <= THERMAL_DENSE_CAP or \
                    (allow_expensive and n_sites <= EXPENSIVE_DENSE_CAP):
                spectrum = full_spectrum(op, max_sites=n_sites)
            elif allow_expensive:
                spectrum = low_spectrum(op, min(TRUNCATED_SPECTRUM_K, op.dim), seed=seed)
            else:
                raise ResourceLimitError(
                    f"thermal sweep point refused at {n_sites} sites "
                    f"(cap {THERMAL_DENSE_CAP}); pass allow_expensive to force")
            ts = gibbs(spectrum, temperature)
            state = ts.state
            truncation_weight = ts.truncation_weight
            diag_idx = list(range(min(len(ts.weights), 16)))
        else:
            spectrum = low_spectrum(op, n_low, seed=seed)
            state = QuantumState.pure(spectrum.vectors[:, 0], n_sites)
            diag_idx = list(range(len(spectrum.energies)))
        residual = float(residuals(op, spectrum, diag_idx).max())

        cells = []
        clamped = False
        for desc in observables:
            name = desc.split("(", 1)[0]
            args = [int(x) for x in desc[len(name) + 1:-1].split(",")] if "(" in desc else []
            if name == "N_pair":
                cells.append(negativity(reduce(state, args), [args[0]]))
            elif name == "one_vs_rest":
                if state.is_pure:
                    cells.append(pure_one_vs_rest_negativity(state, args[0]))
                else:
                    cells.append(mqc(state, args[0], max_sites_mixed=mixed_cap).one_vs_rest)
            elif name == "T_N":
                res = mqc(state, args[0], max_sites_mixed=mixed_cap)
                clamped = clamped or res.clamped
                cells.append(res.t_n)
            elif name == "pairwise_sum":
                cells.append(pairwise_sum(state, args[0]))
            elif name == "energies":
                cells.extend(float(e) for e in spectrum.energies[:args[0]])
            elif name == "gap":
                cells.append(gap(spectrum))
        cells.extend([residual, 1.0 if clamped else 0.0, truncation_weight])
        return index, cells, None
    except Exception as exc:  # per-point isolation: record, never abort
        return index, [float("nan")] * n_cells, f"{type(exc).__name__}: {exc}"


def run_sweep(spec: SweepSpec, threads: int = 1, allow_expensive: bool = False,
              seed: int = LANCZOS_SEED) -> SweepResult:
    """Evaluate every grid point; failures are recorded, never raised."""
    validate_spec(spec)
    axes = sorted(spec.axes, key=lambda a: a.name)
    grids = [a.values for a in axes]
    shape = [len(g) for g in grids]
    n_points = int(np.prod(shape))

    tasks = []
    for index in range(n_points):
        rem, coords = index, []
        for n in reversed(shape):
            rem, c = divmod(rem, n)
            coords.insert(0, c)
        params = dict(spec.fixed)
        for a, c in zip(axes, coords):
            params[a.name] = float(a.values[c])
        tasks.append((index, spec.side_length, params, tuple(spec.observables),
                      allow_expensive, seed))

    started = time.time()
    if threads <= 1:
        outcomes = [_evaluate_point(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunk = max(1, n_points // (threads * 8))
            outcomes = list(pool.map(_evaluate_point, tasks, chunksize=chunk))
    outcomes.sort(key=lambda o: o[0])

    rows, errors = [], []
    for (index, cells, err), task in zip(outcomes, tasks):
        axis_vals = [task[2][a.name] for a in axes]
        rows.append(axis_vals + cells)
        if err is not None:
            errors.append({"index": index, "params": task[2], "message": err})

    manifest = {
        "spec": spec.to_json_dict(),
        "version": __version__,
        "seed": seed,
        "started": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(started)),
        "elapsed_s": round(time.time() - started, 3),
        "errors": errors,
    }
    return SweepResult(spec=spec, columns=_columns(spec), rows=rows,
                       errors=errors, manifest=manifest)


def format_number(x: float) -> str:
    return f"{x:.12g}"


def to_csv(result: SweepResult) -> str:
    lines = [",".join(result.columns)]
    for row in result.rows:
        lines.append(",".join(format_number(x) for x in row))
    return "\n".join(lines) + "\n"
