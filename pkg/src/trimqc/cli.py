"""Command-line entry point: lattice, spectrum, thermal, mqc, sweep.

Exit codes: 0 success, 1 usage or invalid-argument error, 2 resource-limit
refusal, 3 solver non-convergence. Numeric output uses 12 significant
digits everywhere. A JSON config file supplies flag defaults; explicit
flags win. Every file written gets a manifest recording the invocation.
"""

import argparse
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from ._version import __version__
from .errors import (ConvergenceError, InvalidArgumentError, ResourceLimitError,
                     TrimqcError)
from .eigen import LANCZOS_SEED, full_spectrum, low_spectrum
from .hamiltonian import CouplingParams, HamiltonianOp
from .lattice import build_lattice, to_json_dict
from .mqc import mqc
from .presets import preset
from .qstate import QuantumState
from .sweep import (Axis, SweepSpec, format_number, run_sweep, to_csv,
                    validate_spec)
from .thermal import gibbs

FULL_CAP = 12


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage errors are exit 1
        raise _UsageError(message)


def _round12(obj):
    if isinstance(obj, float):
        return float(format_number(obj))
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _emit_json(obj, out: str | None, invocation: list[str]):
    text = json.dumps(_round12(obj), indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        _write_manifest(path, invocation)


def _emit_text(text: str, out: str | None, invocation: list[str]):
    if out is None:
        sys.stdout.write(text)
    else:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        _write_manifest(path, invocation)


def _write_manifest(path: Path, invocation: list[str], extra: dict | None = None):
    manifest = {"invocation": invocation, "version": __version__,
                "written": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())}
    if extra:
        manifest.update(extra)
    side = path.with_name(path.name + ".manifest.json")
    side.write_text(json.dumps(manifest, indent=2) + "\n")


def _merge_config(args: argparse.Namespace, keys: list[str]):
    """Fill unset flags from the JSON config file, if any."""
    if getattr(args, "config", None) is None:
        return
    try:
        cfg = json.loads(Path(args.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidArgumentError(f"cannot read config {args.config}: {exc}")
    if not isinstance(cfg, dict):
        raise InvalidArgumentError("config file must hold a JSON object")
    for key in keys:
        if getattr(args, key, None) is None and key in cfg:
            setattr(args, key, cfg[key])


def _require(args, *keys):
    for key in keys:
        if getattr(args, key) is None:
            raise _UsageError(f"missing required flag --{key}")


def _coupling(args) -> CouplingParams:
    return CouplingParams(J=float(args.J), omega=float(args.omega),
                          eta=float(args.eta), h=float(args.h if args.h is not None else 1.0))


def _threads(args) -> int:
    if args.threads is not None:
        return int(args.threads)
    env = os.environ.get("TRIMQC_THREADS")
    return int(env) if env else 1


def _cmd_lattice(args, invocation):
    _require(args, "L")
    lat = build_lattice(int(args.L))
    _emit_json(to_json_dict(lat), args.out, invocation)
    return 0


def _solve(args):
    lat = build_lattice(int(args.L))
    op = HamiltonianOp(lat, _coupling(args))
    k = int(args.k) if args.k is not None else None
    seed = int(args.seed) if args.seed is not None else LANCZOS_SEED
    if k is not None and k < op.dim:
        return op, low_spectrum(op, k, seed=seed)
    cap = op.n_sites if args.allow_expensive else FULL_CAP
    return op, full_spectrum(op, max_sites=cap)


def _cmd_spectrum(args, invocation):
    _require(args, "L", "J", "omega", "eta")
    op, spec = _solve(args)
    lines = ["index,energy"]
    for m, e in enumerate(spec.energies):
        lines.append(f"{m},{format_number(float(e))}")
    _emit_text("\n".join(lines) + "\n", args.out, invocation)
    if args.vectors is not None:
        np.save(args.vectors, spec.vectors)
    return 0


def _cmd_thermal(args, invocation):
    _require(args, "L", "J", "omega", "eta", "T")
    op, spec = _solve(args)
    ts = gibbs(spec, float(args.T))
    lines = ["index,energy,weight"]
    for m, w in enumerate(ts.weights):
        lines.append(f"{m},{format_number(float(spec.energies[m]))},{format_number(float(w))}")
    _emit_text("\n".join(lines) + "\n", args.out, invocation)
    return 0


def _cmd_mqc(args, invocation):
    _require(args, "L", "J", "omega", "eta")
    lat = build_lattice(int(args.L))
    center = int(args.center) if args.center is not None else 2
    op = HamiltonianOp(lat, _coupling(args))
    seed = int(args.seed) if args.seed is not None else LANCZOS_SEED
    if args.T is not None:
        cap = op.n_sites if args.allow_expensive else FULL_CAP
        spec = full_spectrum(op, max_sites=cap)
        state = gibbs(spec, float(args.T)).state
        mixed_cap = op.n_sites if args.allow_expensive else None
        result = mqc(state, center, max_sites_mixed=mixed_cap)
    else:
        spec = low_spectrum(op, 1, seed=seed)
        state = QuantumState.pure(spec.vectors[:, 0], op.n_sites)
        result = mqc(state, center)
    _emit_json(result.to_json_dict(), args.out, invocation)
    return 0


def _spec_from_json(path: str) -> SweepSpec:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidArgumentError(f"cannot read sweep spec {path}: {exc}")
    try:
        axes = tuple(Axis(name, tuple(float(v) for v in values))
                     for name, values in raw["axes"].items())
        spec = SweepSpec(side_length=int(raw["L"]), axes=axes,
                         fixed={k: float(v) for k, v in raw.get("fixed", {}).items()},
                         observables=tuple(raw["observables"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidArgumentError(f"malformed sweep spec: {exc}")
    validate_spec(spec)
    return spec


def _cmd_sweep(args, invocation):
    if (args.preset is None) == (args.spec is None):
        raise _UsageError("pass exactly one of --preset or --spec")
    if args.out is None:
        raise _UsageError("missing required flag --out")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    seed = int(args.seed) if args.seed is not None else LANCZOS_SEED
    threads = _threads(args)

    if args.preset is not None:
        points = int(args.points) if args.points is not None else 0
        kwargs = {}
        if points:
            kwargs = {"heatmap_points": points, "line_points": points,
                      "temp_points": points}
        bundle = preset(args.preset, **kwargs)
        named = [(f"{bundle.name}_{suffix}" if suffix else bundle.name, spec)
                 for suffix, spec in bundle.specs]
        label = {"preset": args.preset}
    else:
        spec = _spec_from_json(args.spec)
        named = [(Path(args.spec).stem, spec)]
        label = {"spec_file": args.spec}

    manifests = []
    for stem, spec in named:
        result = run_sweep(spec, threads=threads,
                           allow_expensive=bool(args.allow_expensive), seed=seed)
        csv_path = out_dir / f"{stem}.csv"
        csv_path.write_text(to_csv(result))
        result.manifest.update(label)
        result.manifest["invocation"] = invocation
        result.manifest["csv"] = csv_path.name
        manifests.append(result.manifest)
        for err in result.errors:
            sys.stderr.write(f"{stem}[{err['index']}]: {err['message']}\n")
    (out_dir / "manifest.json").write_text(
        json.dumps(_round12(manifests), indent=2) + "\n")
    return 0


COMMON_KEYS = ["L", "J", "omega", "eta", "h", "T", "k", "center", "seed",
               "threads", "out", "allow_expensive"]


def _add_common(sub, *, with_T=True):
    sub.add_argument("--L", type=int, help="lattice side length (N = L(L+1)/2 spins)")
    sub.add_argument("--J", type=float, help="global coupling scale (sign: <0 ferro, >0 antiferro)")
    sub.add_argument("--omega", type=float, help="down-left diagonal bond factor")
    sub.add_argument("--eta", type=float, help="within-row bond factor")
    sub.add_argument("--h", type=float, help="transverse field (default 1)")
    if with_T:
        sub.add_argument("--T", type=float, help="temperature (k_B = 1)")
    sub.add_argument("--k", type=int, help="number of low eigenpairs (default: full spectrum)")
    sub.add_argument("--seed", type=int, help="Lanczos start-vector seed")
    sub.add_argument("--out", help="output file (default: stdout)")
    sub.add_argument("--allow-expensive", dest="allow_expensive", action="store_true",
                     default=None, help="lift size caps for large lattices")
    sub.add_argument("--config", help="JSON file with flag defaults")


def build_parser() -> _Parser:
    parser = _Parser(prog="trimqc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"trimqc {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("lattice", help="dump the triangular patch as JSON")
    p.add_argument("--L", type=int)
    p.add_argument("--out")
    p.add_argument("--config")

    p = subs.add_parser("spectrum", help="eigenvalues as CSV (index,energy)")
    _add_common(p, with_T=False)
    p.add_argument("--vectors", help="also dump eigenvectors to this .npy file")

    p = subs.add_parser("thermal", help="Gibbs weights as CSV (index,energy,weight)")
    _add_common(p)

    p = subs.add_parser("mqc", help="monogamy-residual correlation as JSON")
    _add_common(p)
    p.add_argument("--center", type=int, help="central site (default 2)")

    p = subs.add_parser("sweep", help="run a parameter sweep to CSV + manifest")
    p.add_argument("--preset", help="figure preset name")
    p.add_argument("--spec", help="sweep spec JSON file")
    p.add_argument("--out", help="output directory")
    p.add_argument("--points", type=int, help="override per-axis grid resolution")
    p.add_argument("--threads", type=int, help="worker pool size (default 1 or TRIMQC_THREADS)")
    p.add_argument("--seed", type=int)
    p.add_argument("--allow-expensive", dest="allow_expensive", action="store_true",
                   default=None)
    p.add_argument("--config", help="JSON file with flag defaults")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        keys = [k for k in COMMON_KEYS + ["preset", "spec", "points", "center", "vectors"]
                if hasattr(args, k)]
        _merge_config(args, keys)
        invocation = ["trimqc"] + argv
        handler = {
            "lattice": _cmd_lattice,
            "spectrum": _cmd_spectrum,
            "thermal": _cmd_thermal,
            "mqc": _cmd_mqc,
            "sweep": _cmd_sweep,
        }[args.command]
        return handler(args, invocation)
    except (_UsageError, InvalidArgumentError) as exc:
        sys.stderr.write(f"trimqc: error: {exc}\n")
        return 1
    except ResourceLimitError as exc:
        sys.stderr.write(f"trimqc: resource limit: {exc}\n")
        return 2
    except ConvergenceError as exc:
        sys.stderr.write(f"trimqc: no convergence: {exc}\n")
        return 3
    except TrimqcError as exc:
        sys.stderr.write(f"trimqc: error: {exc}\n")
        return 1


def entrypoint():
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
