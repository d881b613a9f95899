"""
zetabench command line

    zetabench eval --re 2 --im 0
    zetabench zeros --tmax 40 --step 0.1
    zetabench grid --re-min 0 --re-max 1 --im-min 12 --im-max 16 --svg fig.svg

Exit codes: 0 success, 1 usage error, 2 numeric or domain error.
"""

import os
import sys
import json
import time
import argparse
from typing import Dict, List, Optional

import numpy as np

from zetabench.config import *
from zetabench.errors import ZetaBenchError, ConfigError
from zetabench.records import (
    ScanConfig, EVAL_METHODS, METHOD_AUTO, BRANCH_FAMILIES, FAMILY_C_POW_X,
    XI_CONVENTIONS, CONVENTION_HALF, complex_json
)
from zetabench.plots.contour import extract_zero_curves
from zetabench.plots.emit import emit_csv, emit_svg
from zetabench.plots.grid_field import grid_eval
from zetabench.plots.profile import line_profiles
from zetabench.primes.prime_side import pnt_curve, rh_bound_probe, table13
from zetabench.symmetry.functional_symmetry import xi, xi_symmetry_residual, eq12_check, branch_curves
from zetabench.utils.format_util import dump_json
from zetabench.zeros.zero_locator import scan_zeros, compare_counts
from zetabench.zeros.zero_table import ingest_zero_table, cross_check
from zetabench.zeta.coefficients import laurent_coeffs
from zetabench.zeta.zeta_engine import zeta

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2


class UsageError(Exception):
    pass


class ZetaArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises on bad flags instead of exiting with status 2"""
    def error(self, message):
        raise UsageError(message)


def load_config(path: Optional[str]) -> Dict:
    """
    Merge a JSON config file over the default scan and grid settings
    :param path: JSON file or None
    :return: flat dict of settings
    """
    config = dict(DEFAULT_SCAN_CONFIG)
    config.update(DEFAULT_GRID_CONFIG)
    if not path:
        return config
    if not os.path.exists(path):
        raise FileNotFoundError(f"{path} doesn't exist")
    with open(path, 'r') as f:
        try:
            overrides = json.load(f)
        except ValueError as e:
            raise ConfigError(f"{path} is not valid JSON: {e}")
    if not isinstance(overrides, dict):
        raise ConfigError(f"{path} must hold a JSON object")
    unknown = sorted(set(overrides) - set(config))
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    for key, value in overrides.items():
        expected = type(config[key])
        # ints are accepted where floats are expected
        if expected is float and isinstance(value, int) and not isinstance(value, bool):
            continue
        if type(value) is not expected:
            raise ConfigError(f"config key {key!r} must be {expected.__name__}, got {value!r}")
    config.update(overrides)
    return config


def _pick(value, config: Dict, key: str):
    return config[key] if value is None else value


def _scan_config(args, config: Dict) -> ScanConfig:
    flags = {
        "t_max": getattr(args, 'tmax', None),
        "step": getattr(args, 'step', None),
        "refine_tol": getattr(args, 'refine_tol', None),
    }
    merged = dict(config)
    merged.update({key: value for key, value in flags.items() if value is not None})
    merged["progress"] = args.progress or config["progress"]
    return ScanConfig.from_dict(merged)


def cmd_eval(args, config: Dict) -> bytes:
    result = zeta(complex(args.re, args.im), args.tol, method=args.method)
    return dump_json(result.as_json()).encode('utf-8')


def cmd_zeros(args, config: Dict) -> bytes:
    records = scan_zeros(_scan_config(args, config))
    if args.table:
        rows = cross_check(records, ingest_zero_table(args.table))
        return emit_csv(rows, ["index", "t", "table_t", "delta"])
    return emit_csv([(r.index, r.t, r.residual) for r in records], ["index", "t", "residual"])


def cmd_primes(args, config: Dict) -> bytes:
    progress = args.progress or config['progress']
    output = {"stats": [stats.as_json() for stats in pnt_curve(args.x, progress=progress)]}
    if args.rh_eps is not None:
        c_min, argmax_x, gap_positive = rh_bound_probe(args.rh_xmax, args.rh_eps, progress=progress)
        output["rh_bound"] = {
            "x_max": args.rh_xmax,
            "eps": args.rh_eps,
            "c_min": c_min,
            "argmax_x": argmax_x,
            "gap_positive": gap_positive
        }
    return dump_json(output).encode('utf-8')


def cmd_xi_check(args, config: Dict) -> bytes:
    nx = _pick(args.nx, config, 'nx')
    ny = _pick(args.ny, config, 'ny')
    xs = np.linspace(args.re_min, args.re_max, nx)
    ys = np.linspace(args.im_min, args.im_max, ny)
    residuals = []
    worst, worst_at = -1.0, None
    for y in ys:
        for x in xs:
            r = xi_symmetry_residual(complex(x, y), tol=args.tol)
            if r > worst:
                worst, worst_at = r, complex(x, y)
            residuals.append(r)
    xi_0 = xi(0.0, args.convention).value
    xi_1 = xi(1.0, args.convention).value
    return dump_json({
        "points": len(residuals),
        "max_residual": worst,
        "mean_residual": float(np.mean(residuals)),
        "argmax": complex_json(worst_at),
        "convention": args.convention,
        "xi_0": complex_json(xi_0),
        "xi_1": complex_json(xi_1),
    }).encode('utf-8')


def cmd_symmetry(args, config: Dict) -> bytes:
    curve = branch_curves(args.family, args.c, args.n_phase, args.xmin, args.xmax, args.samples)
    return emit_csv(curve.rows(), ["x", "re", "im"])


def cmd_grid(args, config: Dict) -> bytes:
    field = grid_eval(
        (args.re_min, args.re_max, args.im_min, args.im_max),
        nx=_pick(args.nx, config, 'nx'),
        ny=_pick(args.ny, config, 'ny'),
        tol=_pick(args.tol, config, 'tol'),
        progress=args.progress or config['progress']
    )
    if args.svg:
        with open(args.svg, 'wb') as outf:
            outf.write(emit_svg(field, extract_zero_curves(field)))
    return emit_csv(field.rows(), ["x", "y", "re", "im", "masked"])


def cmd_profile(args, config: Dict) -> bytes:
    profiles = line_profiles(
        args.x or DEFAULT_PROFILE_CONFIG["xs"],
        args.tmin,
        args.tmax,
        args.samples,
        tol=_pick(args.tol, config, 'tol'),
        progress=args.progress or config['progress']
    )
    rows = [row for profile in profiles for row in profile.rows()]
    return emit_csv(rows, ["x", "t", "re", "im", "masked"])


def cmd_table13(args, config: Dict) -> bytes:
    rows = table13(args.kmax, _scan_config(args, config))
    return emit_csv(rows, ["k", "primes_up_to_t_k", "t_k"])


def cmd_eq12(args, config: Dict) -> bytes:
    lhs, rhs, residual = eq12_check(args.f, args.k, args.n_phase)
    return dump_json({
        "f": args.f,
        "k": args.k,
        "n_phase": args.n_phase,
        "lhs": complex_json(lhs),
        "rhs": complex_json(rhs),
        "residual": residual
    }).encode('utf-8')


def cmd_laurent(args, config: Dict) -> bytes:
    coeffs = laurent_coeffs(complex(args.re, args.im), args.radius, args.n_min, args.n_max, args.nodes)
    return emit_csv([(n, a.real, a.imag) for n, a in coeffs], ["n", "re", "im"])


def cmd_counts(args, config: Dict) -> bytes:
    counted, estimated, gap = compare_counts(args.T, _scan_config(args, config).with_t_max(args.T))
    return dump_json({"T": args.T, "counted": counted, "estimated": estimated, "gap": gap}).encode('utf-8')


def build_parser() -> ZetaArgumentParser:
    parser = ZetaArgumentParser(prog=ZETABENCH_NAME_STRING, description="Riemann zeta numerical workbench")
    parser.add_argument("--version", action="version", version=f"{ZETABENCH_NAME_STRING} {ZETABENCH_VERSION_STRING}")
    parser.add_argument("-o", "--output", default=None, help="write output here instead of stdout")
    parser.add_argument("-c", "--config", default=None, help="JSON file overriding scan and grid defaults")
    parser.add_argument("-l", "--log", default=None, help="append failures to LOG/failed.log")
    parser.add_argument("--progress", action="store_true", help="show progress bars")
    sub = parser.add_subparsers(dest="command", parser_class=ZetaArgumentParser)
    sub.required = True

    p = sub.add_parser("eval", help="evaluate zeta at one point")
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--method", choices=sorted(EVAL_METHODS), default=METHOD_AUTO)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("zeros", help="scan the critical line for zeros")
    p.add_argument("--tmax", type=float, default=None)
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--refine-tol", dest="refine_tol", type=float, default=None)
    p.add_argument("--table", default=None, help="zero table path or URL to cross-check against")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("primes", help="prime counts against li(x)")
    p.add_argument("--x", type=float, action="append", required=True)
    p.add_argument("--rh-eps", dest="rh_eps", type=float, default=None)
    p.add_argument("--rh-xmax", dest="rh_xmax", type=float, default=1e6)
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("xi-check", help="xi(s) - xi(1 - s) over a grid")
    p.add_argument("--re-min", dest="re_min", type=float, default=-4.0)
    p.add_argument("--re-max", dest="re_max", type=float, default=5.0)
    p.add_argument("--im-min", dest="im_min", type=float, default=0.0)
    p.add_argument("--im-max", dest="im_max", type=float, default=30.0)
    p.add_argument("--nx", type=int, default=None)
    p.add_argument("--ny", type=int, default=None)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--convention", choices=sorted(XI_CONVENTIONS), default=CONVENTION_HALF)
    p.set_defaults(func=cmd_xi_check)

    p = sub.add_parser("symmetry", help="sample x^x or c^x on a branch")
    p.add_argument("--family", choices=sorted(BRANCH_FAMILIES), default=FAMILY_C_POW_X)
    p.add_argument("--c", type=float, default=-4.0)
    p.add_argument("--n-phase", dest="n_phase", type=float, default=1.0)
    p.add_argument("--xmin", type=float, default=-2.0)
    p.add_argument("--xmax", type=float, default=2.0)
    p.add_argument("--samples", type=int, default=401)
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("grid", help="Re and Im zeta over a rectangle")
    p.add_argument("--re-min", dest="re_min", type=float, required=True)
    p.add_argument("--re-max", dest="re_max", type=float, required=True)
    p.add_argument("--im-min", dest="im_min", type=float, required=True)
    p.add_argument("--im-max", dest="im_max", type=float, required=True)
    p.add_argument("--nx", type=int, default=None)
    p.add_argument("--ny", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--svg", default=None, help="also draw the zero curves to this file")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("profile", help="Re and Im zeta against t along lines re(s) = x")
    p.add_argument("--x", type=float, action="append", default=None, help="repeat for several lines")
    p.add_argument("--tmin", type=float, default=DEFAULT_PROFILE_CONFIG["t_min"])
    p.add_argument("--tmax", type=float, default=DEFAULT_PROFILE_CONFIG["t_max"])
    p.add_argument("--samples", type=int, default=DEFAULT_PROFILE_CONFIG["samples"])
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("table13", help="zero ordinates joined with prime counts")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--tmax", type=float, default=None)
    p.add_argument("--step", type=float, default=None)
    p.set_defaults(func=cmd_table13)

    p = sub.add_parser("eq12", help="compare f^k with (-f)^k e^{-i pi k}")
    p.add_argument("--f", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--n-phase", dest="n_phase", type=float, default=1.0)
    p.set_defaults(func=cmd_eq12)

    p = sub.add_parser("laurent", help="Laurent coefficients of zeta on a circle")
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--n-min", dest="n_min", type=int, default=-2)
    p.add_argument("--n-max", dest="n_max", type=int, default=5)
    p.add_argument("--nodes", type=int, default=LAURENT_MIN_NODES)
    p.set_defaults(func=cmd_laurent)

    p = sub.add_parser("counts", help="scanned zero count against the closed-form estimate")
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--step", type=float, default=None)
    p.set_defaults(func=cmd_counts)

    return parser


def _log_failure(log_dir: Optional[str], argv: List[str], message: str):
    if not log_dir:
        return
    os.makedirs(log_dir, exist_ok=True)
    with open(os.path.join(log_dir, 'failed.log'), 'a+') as failed:
        failed.write(f"{' '.join(argv)}\t{message}\n")


def cli_dispatch(argv: List[str]) -> int:
    """
    Run one subcommand
    :param argv: arguments without the program name
    :return: exit code
    """
    parser = build_parser()
    start_time = time.time()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help and --version
        return EXIT_OK if not e.code else EXIT_USAGE

    try:
        config = load_config(args.config)
    except (ConfigError, FileNotFoundError) as e:
        sys.stderr.write(f"usage error: --config: {e}\n")
        _log_failure(args.log, argv, str(e))
        return EXIT_USAGE

    try:
        output = args.func(args, config)
    except (ZetaBenchError, OverflowError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        _log_failure(args.log, argv, str(e))
        return EXIT_NUMERIC
    except FileNotFoundError as e:
        sys.stderr.write(f"usage error: {e}\n")
        _log_failure(args.log, argv, str(e))
        return EXIT_USAGE

    if args.output:
        with open(args.output, 'wb') as outf:
            outf.write(output)
    else:
        sys.stdout.write(output.decode('utf-8'))
        sys.stdout.flush()

    runtime = round(time.time() - start_time, 3)
    sys.stderr.write(f"runtime: {runtime} seconds\n")
    sys.stderr.write("done.\n")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    return cli_dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == '__main__':
    sys.exit(main())
