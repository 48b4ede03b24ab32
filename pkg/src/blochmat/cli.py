"""Command-line interface.

Exit codes: 0 success, 1 domain error (unphysical input, failed check),
2 usage or parse error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import families
from .analysis import analyze
from .bloch import Bell, bell_state, bloch_to_density, check_density, components_to_density, density_to_bloch, join, product_state, split
from .canonical import canonical_decompose, sphere_geometry
from .errors import BlochError, InvalidMatrixError
from .formats import FormatError, bloch_from_csv, bloch_to_csv, density_to_json, read_density
from .positivity import POSITIVITY_TOL, positivity_lhs
from .scan import ScanSpecError, export_scan, load_scan_spec, run_scan
from .unitary import singular_value_curve

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2
TOL_RANGE = (1e-14, 1e-4)

log = logging.getLogger("blochmat")


class UsageError(Exception):
    pass


def _tolerance(value):
    tol = float(value)
    if not TOL_RANGE[0] <= tol <= TOL_RANGE[1]:
        raise argparse.ArgumentTypeError(f"--tol must lie in [{TOL_RANGE[0]:g}, {TOL_RANGE[1]:g}]")
    return tol


def _vector(text):
    try:
        vec = [float(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}") from None
    if len(vec) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    return np.array(vec)


def _emit(text, output):
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _dump(doc):
    return json.dumps(doc, indent=2) + "\n"


def _load_state(path):
    """Density matrix from density JSON, or from a Bloch-matrix CSV when the suffix is .csv."""
    if path is None:
        raise UsageError("--input is required")
    try:
        if str(path).endswith(".csv"):
            return bloch_to_density(bloch_from_csv(Path(path).read_text(), source=str(path)))
        return read_density(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def cmd_analyze(args):
    rho = check_density(_load_state(args.input))
    report, physical = analyze(rho, args.tol)
    if args.format == "csv":
        _emit(bloch_to_csv(density_to_bloch(rho)), args.output)
    else:
        _emit(_dump(report), args.output)
    if args.plot:
        from .plotting import plot_sphere_pair

        plot_sphere_pair(sphere_geometry(split(density_to_bloch(rho))), args.plot)
    if not physical:
        log.error("input is not a physical state: %s", report["positivity"])
        return EXIT_DOMAIN
    return EXIT_OK


def _make_components(args):
    fam = args.family
    p = args.params
    rng = np.random.Generator(np.random.PCG64(args.seed))

    def one_float(name):
        if len(p) != 1:
            raise UsageError(f"'{fam}' takes exactly one parameter: {name}")
        try:
            return float(p[0])
        except ValueError:
            raise UsageError(f"{name} must be a number, got {p[0]!r}") from None

    if fam == "bell":
        if len(p) != 1 or p[0] not in {b.value for b in Bell}:
            raise UsageError(f"bell takes one of: {', '.join(b.value for b in Bell)}")
        return bell_state(p[0]), {"which": p[0]}
    if fam == "werner":
        z = one_float("z")
        return families.werner(z), {"z": z}
    if fam == "isotropic":
        z = one_float("z")
        return families.isotropic(z), {"z": z}
    if fam == "gen-isotropic":
        z = one_float("z")
        O = families.random_reflection(rng)
        return families.generalized_isotropic(z, O), {"z": z, "O": O.tolist()}
    if fam == "pure":
        if p:
            raise UsageError("pure takes --theta and --seed, no positional parameters")
        if args.theta is None:
            raise UsageError("pure needs --theta")
        M = families.random_rotation(rng)
        N = families.random_reflection(rng)
        return families.pure_family(args.theta, M, N), {"theta": args.theta, "M": M.tolist(), "N": N.tolist()}
    if fam == "product":
        if args.u is None or args.v is None:
            raise UsageError("product needs --u and --v")
        try:
            return product_state(args.u, args.v), {"u": args.u.tolist(), "v": args.v.tolist()}
        except ValueError as exc:
            raise BlochError(str(exc)) from None
    if fam == "maxmixed":
        return families.werner(0.0), {}
    if fam == "random":
        ens = p[0] if p else "ginibre"
        try:
            ensemble = families.Ensemble(ens)
        except ValueError:
            raise UsageError(f"unknown ensemble {ens!r}; choose from {[e.value for e in families.Ensemble]}") from None
        return split(density_to_bloch(families.random_density(ensemble, rng))), {"ensemble": ens}
    raise UsageError(f"unknown family {fam!r}")


def cmd_make(args):
    c, params = _make_components(args)
    report = positivity_lhs(c, args.tol)
    if not report.is_positive:
        names = [f"lhs{k}" for k, val in enumerate(report.lhs, start=1) if val < -args.tol]
        raise BlochError(f"{args.family} {params} is not a state: {', '.join(names)} negative {report.lhs}")
    rho = components_to_density(c)
    meta = {"family": args.family, "params": params, "seed": args.seed, "prng": families.PRNG_ALGORITHM}
    if args.format == "csv":
        _emit(bloch_to_csv(join(c)), args.output)
    else:
        _emit(density_to_json(rho, meta), args.output)
    return EXIT_OK


def cmd_scan(args):
    if args.config is None:
        raise UsageError("scan needs --config")
    try:
        spec = load_scan_spec(args.config)
    except OSError as exc:
        raise UsageError(f"cannot read {args.config}: {exc.strerror or exc}") from None
    except ScanSpecError as exc:
        raise UsageError(f"invalid scan config: {exc}") from None
    if args.tol != POSITIVITY_TOL:
        spec = type(spec)(**{**spec.__dict__, "tol": args.tol})
    if args.output is None:
        raise UsageError("scan needs --output")
    fmt = "csv" if args.format == "csv" else "jsonl"
    result = run_scan(spec)
    n = export_scan(result.points(), args.output, fmt)
    summary = {"records": n, "counts": result.counts(), "single_inequality_witnesses": result.witnesses}
    if args.plot:
        from .plotting import plot_scan

        plot_scan(result, args.plot)
    log.info("scan: %s", summary)
    sys.stderr.write(json.dumps(summary) + "\n")
    return EXIT_OK


def cmd_spheres(args):
    rho = check_density(_load_state(args.input))
    c = split(density_to_bloch(rho))
    first, second = sphere_geometry(c, canonical_decompose(c))
    _emit(_dump({"first": first.to_dict(), "second": second.to_dict()}), args.output)
    if args.plot:
        from .plotting import plot_sphere_pair

        plot_sphere_pair((first, second), args.plot)
    return EXIT_OK


def cmd_svcurve(args):
    rho = check_density(_load_state(args.input))
    c = split(density_to_bloch(rho))
    thetas = np.linspace(-np.pi, np.pi, args.points)
    values = singular_value_curve(c, thetas, j=args.j)
    lines = ["theta,x1,x2,x3\n"] + [",".join(repr(float(t)) for t in (th, *x)) + "\n" for th, x in zip(thetas, values)]
    _emit("".join(lines), args.output)
    if args.plot:
        from .plotting import plot_singular_value_curve

        plot_singular_value_curve(thetas, values, args.plot)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="density JSON (or Bloch-matrix CSV with a .csv suffix)")
    common.add_argument("--output", help="output path (default: stdout)")
    common.add_argument("--format", choices=("json", "csv", "jsonl"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=_tolerance, default=POSITIVITY_TOL, help="positivity slack tolerance")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="blochmat", description="Two-qubit Bloch-matrix analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report for a density matrix")
    p.add_argument("--plot", help="also render the Bloch-sphere pair to this image file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("make", parents=[common], help="construct a state from a named family")
    p.add_argument("family", choices=("bell", "werner", "isotropic", "gen-isotropic", "pure", "product", "maxmixed", "random"))
    p.add_argument("params", nargs="*")
    p.add_argument("--theta", type=float)
    p.add_argument("--u", type=_vector)
    p.add_argument("--v", type=_vector)
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("scan", parents=[common], help="classify a grid of canonical coordinates")
    p.add_argument("--config", help="scan spec JSON {mode, fixed, ranges, resolution, orientations}")
    p.add_argument("--plot", help="also render the regions to this image file")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("spheres", parents=[common], help="Bloch-sphere pair geometry")
    p.add_argument("--plot", help="also render the sphere pair to this image file")
    p.set_defaults(func=cmd_spheres)

    p = sub.add_parser("svcurve", parents=[common], help="singular values under an irreducible nonlocal gate")
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--j", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--plot", help="also render the curves to this image file")
    p.set_defaults(func=cmd_svcurve)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (FormatError, InvalidMatrixError) as exc:
        sys.stderr.write(f"blochmat: {exc}\n")
        return EXIT_USAGE
    except BlochError as exc:
        sys.stderr.write(f"blochmat: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
