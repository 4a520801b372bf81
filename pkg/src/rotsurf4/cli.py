"""Command-line interface: generate, verify, solve-meridian.

Every flag can also come from a JSON document passed with ``--config``;
keys mirror the flag names (``"u-min"`` or ``"u_min"``, ``"class"``, ...)
and explicit flags win over the config.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from .builder import build_sr2, build_surface, complete_meridian
from .errors import SurfaceError
from .export import export_grid
from .geometry import Family
from .meridian_ode import integrate_phi, quadrature_phi
from .profiles import CurvatureClass, ProfileSpec
from .verify import verify_constant_curvature

log = logging.getLogger("rotsurf4")

DEFAULTS = {
    "C": 1.0, "C1": 0.0, "C2": 1.0, "eps": 1,
    "alpha": 1.0, "beta": 1.0, "phi0": 0.0, "branch": "+", "method": "ode", "step": 1e-3,
    "nu": 20, "nv": 20, "format": "csv", "projection": None,
    "target_K": None, "tol": 1e-3, "fd_step": 1e-4, "tangents": "auto",
    "v_min": None, "v_max": None,
}

REQUIRED = {
    "generate": ("family", "curvature_class", "u_min", "u_max", "out"),
    "verify": ("family", "curvature_class", "u_min", "u_max"),
    "solve-meridian": ("curvature_class", "u_min", "u_max", "out"),
}


def _profile_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--class", dest="curvature_class", choices=[c.value for c in CurvatureClass])
    p.add_argument("--C", type=float)
    p.add_argument("--C1", type=float)
    p.add_argument("--C2", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--phi0", type=float)
    p.add_argument("--branch", choices=["+", "-"])
    p.add_argument("--method", choices=["ode", "quadrature"])
    p.add_argument("--step", type=float, help="RK4 step / sample spacing for SR2 meridians")
    p.add_argument("--u-min", type=float)
    p.add_argument("--u-max", type=float)


def _surface_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["sr1", "sr2", "sr3", "sr4"])
    _profile_flags(p)
    p.add_argument("--eps", type=int, choices=[1, -1])
    p.add_argument("--v-min", type=float)
    p.add_argument("--v-max", type=float)
    p.add_argument("--nu", type=int)
    p.add_argument("--nv", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rotsurf4", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="sample a surface and write CSV/OBJ/PLY")
    _surface_flags(gen)
    gen.add_argument("--format", choices=["csv", "obj", "ply"])
    gen.add_argument("--projection", choices=["x1", "x2", "x3", "x4", "stereo"])
    gen.add_argument("--out")
    gen.add_argument("--config")

    ver = sub.add_parser("verify", help="check that K is constant; exit 0 on PASS")
    _surface_flags(ver)
    ver.add_argument("--target-K", dest="target_K", type=float)
    ver.add_argument("--tol", type=float)
    ver.add_argument("--fd-step", type=float, help="finite-difference step")
    ver.add_argument("--tangents", choices=["auto", "fd", "analytic"])
    ver.add_argument("--report")
    ver.add_argument("--config")

    sol = sub.add_parser("solve-meridian", help="solve for phi(u) and write u,phi,f,g")
    _profile_flags(sol)
    sol.add_argument("--out")
    sol.add_argument("--config")
    return parser


def _config_key(key: str) -> str:
    key = key.lstrip("-").replace("-", "_")
    return "curvature_class" if key == "class" else key


def merge_config(args: argparse.Namespace) -> dict:
    """Flags over config over defaults."""
    opts = {k: v for k, v in vars(args).items()}
    cfg_path = opts.pop("config", None)
    if cfg_path:
        cfg = json.loads(Path(cfg_path).read_text())
        for key, value in cfg.items():
            k = _config_key(key)
            if opts.get(k) is None:
                opts[k] = value
    for k, v in DEFAULTS.items():
        if opts.get(k) is None:
            opts[k] = v
    return opts


def profile_from(opts: dict) -> ProfileSpec:
    return ProfileSpec(CurvatureClass(opts["curvature_class"]), float(opts["C"]),
                       float(opts["C1"]), float(opts["C2"]), int(opts.get("eps", 1)))


def solve_from(opts: dict):
    spec = profile_from({**opts, "eps": 1})
    u_range = (float(opts["u_min"]), float(opts["u_max"]))
    if opts["method"] == "quadrature":
        if float(opts["alpha"]) != float(opts["beta"]):
            raise ValueError("the quadrature method needs alpha == beta")
        return quadrature_phi(spec, float(opts["alpha"]), u_range, float(opts["phi0"]),
                              step=float(opts["step"]))
    return integrate_phi(spec, float(opts["alpha"]), float(opts["beta"]), u_range,
                         float(opts["phi0"]), opts["branch"], step=float(opts["step"]))


def surface_from(opts: dict):
    family = Family(opts["family"])
    v_range = None
    if opts["v_min"] is not None or opts["v_max"] is not None:
        if opts["v_min"] is None or opts["v_max"] is None:
            raise ValueError("give both --v-min and --v-max")
        v_range = (float(opts["v_min"]), float(opts["v_max"]))
    if family is Family.SR2:
        sol = solve_from(opts)
        return build_sr2(sol, v_range) if v_range else build_sr2(sol), sol.spec
    spec = profile_from(opts)
    meridian = complete_meridian(spec, family, (float(opts["u_min"]), float(opts["u_max"])))
    return build_surface(family, meridian, v_range), spec


def _cmd_generate(opts: dict) -> int:
    patch, _ = surface_from(opts)
    data = export_grid(patch, int(opts["nu"]), int(opts["nv"]), opts["format"], opts["projection"])
    Path(opts["out"]).write_bytes(data)
    log.info("wrote %d bytes to %s", len(data), opts["out"])
    return 0


def _cmd_verify(opts: dict) -> int:
    patch, spec = surface_from(opts)
    target = spec.target_K if opts["target_K"] is None else float(opts["target_K"])
    report = verify_constant_curvature(patch, target, int(opts["nu"]), int(opts["nv"]),
                                       float(opts["tol"]), step=float(opts["fd_step"]),
                                       tangents=opts["tangents"])
    if opts.get("report"):
        Path(opts["report"]).write_text(report.to_json(indent=2))
    print(f"{'PASS' if report.passed else 'FAIL'} family={report.family} target_K={report.target_K:g} "
          f"max_abs_deviation={report.max_abs_deviation:.3e} tol={report.tolerance:g} "
          f"samples={report.n_samples} degenerate={len(report.degenerate_points)}")
    return 0 if report.passed else 1


def _cmd_solve(opts: dict) -> int:
    sol = solve_from(opts)
    rows = np.column_stack([sol.u, sol.phi, sol.f, sol.g])
    with open(opts["out"], "w") as fh:
        fh.write("u,phi,f,g\n")
        for r in rows:
            fh.write(",".join(format(float(x), ".17g") for x in r) + "\n")
    log.info("wrote %d samples to %s", len(rows), opts["out"])
    return 0


COMMANDS = {"generate": _cmd_generate, "verify": _cmd_verify, "solve-meridian": _cmd_solve}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    opts = merge_config(args)
    missing = [k for k in REQUIRED[args.command] if opts.get(k) is None]
    if missing:
        parser.error("missing required option(s): " + ", ".join(missing))
    if args.command == "generate" and opts["format"] != "csv" and not opts["projection"]:
        parser.error(f"--format {opts['format']} needs --projection")
    try:
        return COMMANDS[args.command](opts)
    except (SurfaceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
