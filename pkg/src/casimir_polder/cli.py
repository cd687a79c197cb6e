"""Command-line front end.

Subcommands
-----------
eval       closed-form energy (and force for eccentric cylinders)
integrate  brute-force pairwise integration of the same configuration
sweep      one parameter over a range, one row per step (CSV or JSON)
verify     the oracle suite; exit 0 iff every check passes

Exit codes: 0 success, 1 usage/config error, 2 domain-constraint violation,
3 integration non-convergence, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import integrate as sp_integrate

from . import closed_forms as cf
from .cubature import METHODS, QuadratureConfig
from .errors import DomainError, NotConvergedError
from .geometry import GEOMETRIES, dimension_names, make_geometry
from .kernel import MaterialPair
from .pairwise import energy_pair_2d, energy_pair_3d, self_energy_integral_regulated
from .regions import Ball, Disk, ExteriorDisk, HalfPlane, HalfSpace
from .results import EnergyResult, UnitKind
from .verification import PROFILES, run_checks

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NOT_CONVERGED, EXIT_VERIFY = 0, 1, 2, 3, 4
MODES = ("closed-form", "integrate", "both")


class ConfigError(Exception):
    """Malformed configuration (exit code 1)."""


# ------------------------------------------------------------------ config


@dataclass
class SweepSpec:
    parameter: str
    start: float
    stop: float
    steps: int
    spacing: str = "linear"

    def values(self):
        if self.spacing == "log":
            return np.geomspace(self.start, self.stop, self.steps)
        return np.linspace(self.start, self.stop, self.steps)


@dataclass
class SceneConfig:
    geometry: dict
    material: dict = field(default_factory=lambda: {"n": 1.0})
    computation: str = "closed-form"
    quadrature: dict = field(default_factory=dict)
    sweep: SweepSpec | None = None

    @property
    def kind(self):
        return self.geometry["kind"]

    @property
    def dims(self):
        return {k: v for k, v in self.geometry.items() if k != "kind"}

    def material_pair(self) -> MaterialPair:
        if "n" in self.material:
            return MaterialPair.from_coupling(self.material["n"])
        return MaterialPair.from_permittivities(self.material["eps1"], self.material["eps2"])

    def quadrature_config(self) -> QuadratureConfig:
        return QuadratureConfig(**self.quadrature)

    def build_geometry(self, **override):
        return make_geometry(self.kind, **{**self.dims, **override})

    def to_dict(self):
        out = {"geometry": dict(self.geometry), "material": dict(self.material),
               "computation": self.computation, "quadrature": dict(self.quadrature)}
        if self.sweep is not None:
            out["sweep"] = asdict(self.sweep)
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _number(path, value):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ConfigError(f"{path}: must be finite")
    return float(value)


def _only(path, mapping, allowed):
    if not isinstance(mapping, dict):
        raise ConfigError(f"{path}: expected an object")
    extra = sorted(set(mapping) - set(allowed))
    if extra:
        raise ConfigError(f"{path}: unknown key(s) {extra}; allowed {sorted(allowed)}")


def parse_config(data: dict) -> SceneConfig:
    """Validate a config mapping.  Structural problems raise :class:`ConfigError`
    with a dotted field path; geometric constraint violations raise
    :class:`~casimir_polder.errors.GeometryError`."""
    _only("config", data, ("geometry", "material", "computation", "quadrature", "sweep"))
    if "geometry" not in data:
        raise ConfigError("config.geometry: missing")
    geom = data["geometry"]
    if not isinstance(geom, dict) or "kind" not in geom:
        raise ConfigError("config.geometry.kind: missing")
    kind = geom["kind"]
    if kind not in GEOMETRIES:
        raise ConfigError(f"config.geometry.kind: unknown {kind!r}; expected one of {sorted(GEOMETRIES)}")
    names = dimension_names(kind)
    _only("config.geometry", geom, ("kind",) + names)
    dims = {k: _number(f"config.geometry.{k}", v) for k, v in geom.items() if k != "kind"}
    required = [f.name for f in dataclasses.fields(GEOMETRIES[kind])
                if f.default is dataclasses.MISSING]
    missing = [k for k in required if k not in dims]

    material = data.get("material", {"n": 1.0})
    _only("config.material", material, ("n", "eps1", "eps2"))
    if "n" in material and ("eps1" in material or "eps2" in material):
        raise ConfigError("config.material: give either n or eps1/eps2, not both")
    if "n" not in material and not ("eps1" in material and "eps2" in material):
        raise ConfigError("config.material: need n, or both eps1 and eps2")
    material = {k: _number(f"config.material.{k}", v) for k, v in material.items()}

    computation = data.get("computation", "closed-form")
    if computation not in MODES:
        raise ConfigError(f"config.computation: {computation!r} not in {MODES}")

    quad = data.get("quadrature", {})
    _only("config.quadrature", quad, ("rel_tol", "abs_tol", "max_evaluations", "method", "seed"))
    quad = dict(quad)
    for key in ("rel_tol", "abs_tol"):
        if key in quad:
            quad[key] = _number(f"config.quadrature.{key}", quad[key])
    for key in ("max_evaluations", "seed"):
        if key in quad:
            quad[key] = int(_number(f"config.quadrature.{key}", quad[key]))
    if "method" in quad and quad["method"] not in METHODS:
        raise ConfigError(f"config.quadrature.method: {quad['method']!r} not in {METHODS}")
    try:
        QuadratureConfig(**quad)
    except ValueError as exc:
        raise ConfigError(f"config.quadrature: {exc}") from None

    sweep = None
    if data.get("sweep") is not None:
        sw = data["sweep"]
        _only("config.sweep", sw, ("parameter", "start", "stop", "steps", "spacing"))
        for key in ("parameter", "start", "stop", "steps"):
            if key not in sw:
                raise ConfigError(f"config.sweep.{key}: missing")
        if sw["parameter"] not in names:
            raise ConfigError(f"config.sweep.parameter: {sw['parameter']!r} is not a dimension "
                              f"of {kind} {names}")
        steps = int(_number("config.sweep.steps", sw["steps"]))
        if steps < 1:
            raise ConfigError("config.sweep.steps: must be >= 1")
        spacing = sw.get("spacing", "linear")
        if spacing not in ("linear", "log"):
            raise ConfigError(f"config.sweep.spacing: {spacing!r} not in ('linear', 'log')")
        start = _number("config.sweep.start", sw["start"])
        stop = _number("config.sweep.stop", sw["stop"])
        if spacing == "log" and not (start > 0 and stop > 0):
            raise ConfigError("config.sweep: log spacing needs positive start and stop")
        sweep = SweepSpec(sw["parameter"], start, stop, steps, spacing)
        missing = [k for k in missing if k != sweep.parameter]
    if missing:
        raise ConfigError(f"config.geometry: missing dimension(s) {missing} for {kind}")
    cfg = SceneConfig({"kind": kind, **dims}, material, computation, quad, sweep)
    if sweep is None:
        cfg.build_geometry()
    return cfg


def load_config(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


# ------------------------------------------------------------------ compute


def integrate_geometry(geom, mat: MaterialPair, qcfg: QuadratureConfig) -> EnergyResult:
    """Brute-force counterpart of ``geom.energy``."""
    kind = geom.kind
    if kind == "cyl-cyl":
        return energy_pair_2d(Disk(geom.a), Disk(geom.b, (geom.r_axes, 0.0)), mat, qcfg)
    if kind == "cyl-plane":
        return energy_pair_2d(Disk(geom.a, (geom.z, 0.0)), HalfPlane(0.0, -1), mat, qcfg)
    if kind == "sphere-plane":
        return energy_pair_3d(Ball(geom.a, (0.0, 0.0, geom.z)), HalfSpace(0.0, -1), mat, qcfg)
    if kind == "coaxial":
        return energy_pair_2d(Disk(geom.a), ExteriorDisk(geom.b), mat, qcfg)
    if kind == "eccentric":
        return energy_pair_2d(Disk(geom.a, (geom.offset, 0.0)), ExteriorDisk(geom.b), mat, qcfg)
    if kind == "plates":
        value, err = sp_integrate.quad(lambda z: cf.slab_element(z, mat.n), geom.d, math.inf,
                                       epsabs=0.0, epsrel=max(qcfg.rel_tol, 1e-12))
        return EnergyResult(value, UnitKind.ENERGY_PER_AREA, err, 0, "slab-sum/quadpack")
    if kind == "self-cylinder":
        return self_energy_integral_regulated(geom.a, mat.n, geom.beta, qcfg)
    raise DomainError(f"no integration route for {kind}")


def _energy_header(unit_kind):
    return f"[{unit_kind.dimension}]"


def columns(kind: str, mode: str, swept: str | None = None):
    """Column names; a pure function of geometry kind, mode and swept parameter."""
    unit = _energy_header(GEOMETRIES[kind].unit_kind)
    cols = [swept] if swept else []
    if mode == "both":
        cols += [f"energy_closed_form{unit}", f"energy_integrated{unit}", "rel_deviation"]
    else:
        cols += [f"energy{unit}"]
    if kind == "eccentric":
        cols.append("force[L^-3]")
    cols += ["method", "error_estimate", "evaluations"]
    if swept:
        cols.append("status")
    return cols


def compute_row(geom, mat, mode, qcfg):
    """One result row as a list of values (no swept/status columns)."""
    closed = integrated = None
    if mode in ("closed-form", "both"):
        closed = geom.energy(mat.n)
    if mode in ("integrate", "both"):
        integrated = integrate_geometry(geom, mat, qcfg)
    row = []
    if mode == "both":
        ref = closed
        dev = abs(integrated.value - ref) / abs(ref) if ref != 0 else abs(integrated.value)
        row += [closed, integrated.value, dev]
    else:
        row.append(closed if mode == "closed-form" else integrated.value)
    if geom.kind == "eccentric":
        row.append(geom.force(mat.n))
    if integrated is None:
        row += ["closed-form", 0.0, 0]
    else:
        tag = "both:" + integrated.method if mode == "both" else integrated.method
        row += [tag, integrated.error_estimate, integrated.evaluations_used]
    return row


def _fmt(value, digits):
    if isinstance(value, float):
        return format(value, f".{digits}g")
    return "" if value is None else str(value)


def render(header, rows, fmt):
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for r in rows:
            writer.writerow([_fmt(v, 17) for v in r])
        return buf.getvalue()
    cells = [header] + [[_fmt(v, 6) for v in r] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    lines = ["  ".join(c[i].rjust(widths[i]) for i in range(len(header))) for c in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "units: hbar = c = 1, lengths in the input unit L\n" + "\n".join(lines) + "\n"


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------------ commands


def cmd_eval(cfg: SceneConfig, fmt="table", out=None):
    geom = cfg.build_geometry()
    mat = cfg.material_pair()
    header = columns(cfg.kind, cfg.computation)
    try:
        row = compute_row(geom, mat, cfg.computation, cfg.quadrature_config())
    except NotConvergedError as exc:
        res = exc.result
        row = [res.value]
        if cfg.computation == "both":
            closed = geom.energy(mat.n)
            row = [closed, res.value, abs(res.value - closed) / abs(closed)]
        if cfg.kind == "eccentric":
            row.append(geom.force(mat.n))
        row += [res.method + ":not-converged", res.error_estimate, res.evaluations_used]
        _emit(render(header, [row], fmt), out)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    _emit(render(header, [row], fmt), out)
    return EXIT_OK


def cmd_sweep(cfg: SceneConfig, fmt="csv", out=None):
    if cfg.sweep is None:
        raise ConfigError("sweep: no sweep specification (config.sweep or --sweep-* flags)")
    mat = cfg.material_pair()
    qcfg = cfg.quadrature_config()
    param = cfg.sweep.parameter
    header = columns(cfg.kind, cfg.computation, swept=param)
    width = len(header) - 2
    rows = []
    code = EXIT_OK
    for value in cfg.sweep.values():
        value = float(value)
        try:
            geom = cfg.build_geometry(**{param: value})
            rows.append([value] + compute_row(geom, mat, cfg.computation, qcfg) + ["ok"])
        except DomainError as exc:
            rows.append([value] + [None] * width + [f"domain-error: {exc}"])
            code = EXIT_DOMAIN
        except NotConvergedError as exc:
            res = exc.result
            rows.append([value] + [None] * (width - 3)
                        + [res.method, res.error_estimate, res.evaluations_used, "not-converged"])
            if code == EXIT_OK:
                code = EXIT_NOT_CONVERGED
    _emit(render(header, rows, fmt), out)
    return code


def cmd_verify(profile="fast", fmt="table", out=None):
    results = run_checks(profile)
    ok = all(r.passed for r in results)
    if fmt == "json":
        text = json.dumps({"profile": profile, "passed": ok,
                           "checks": [r.as_dict() for r in results]}, indent=2) + "\n"
    else:
        color = sys.stdout.isatty() and "NO_COLOR" not in os.environ and out is None
        lines = []
        for r in results:
            tag = "PASS" if r.passed else "FAIL"
            if color:
                tag = f"\033[{32 if r.passed else 31}m{tag}\033[0m"
            lines.append(f"{tag}  {r.name:<44} dev={r.deviation:.3e}  tol={r.tolerance:.0e}  "
                         f"{r.seconds:6.2f}s  {r.detail}")
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
        text = "\n".join(lines) + "\n"
    _emit(text, out)
    return EXIT_OK if ok else EXIT_VERIFY


# ------------------------------------------------------------------ argparse


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _scene_flags(p):
    p.add_argument("--config", help="JSON scene configuration file")
    p.add_argument("--geometry", choices=sorted(GEOMETRIES))
    for dim in ("a", "b", "offset", "z", "d", "r-axes", "beta"):
        p.add_argument(f"--{dim}", type=float, dest=dim.replace("-", "_"))
    p.add_argument("--eps1", type=float)
    p.add_argument("--eps2", type=float)
    p.add_argument("--n", type=float, help="coupling N directly (instead of eps1/eps2)")
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--rel-tol", type=float)
    p.add_argument("--abs-tol", type=float)
    p.add_argument("--max-evals", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--method", choices=METHODS)
    p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser():
    parser = _Parser(prog="casimir-polder", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, default_mode, fmts, default_fmt in (
            ("eval", "closed-form", ("table", "csv", "json"), "table"),
            ("integrate", "integrate", ("table", "csv", "json"), "table"),
            ("sweep", "closed-form", ("csv", "json"), "csv")):
        p = sub.add_parser(name)
        _scene_flags(p)
        p.add_argument("--format", choices=fmts, default=default_fmt)
        p.set_defaults(default_mode=default_mode)
        if name == "sweep":
            p.add_argument("--sweep-param")
            p.add_argument("--start", type=float)
            p.add_argument("--stop", type=float)
            p.add_argument("--steps", type=int)
            p.add_argument("--spacing", choices=("linear", "log"))
    v = sub.add_parser("verify")
    v.add_argument("--profile", choices=PROFILES, default="fast")
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.add_argument("--out")
    return parser


def scene_from_args(args) -> SceneConfig:
    data = load_config(args.config) if args.config else {}
    if not isinstance(data, dict):
        raise ConfigError("config: top level must be an object")
    data = json.loads(json.dumps(data))  # private copy
    geom = data.setdefault("geometry", {})
    if args.geometry:
        if geom.get("kind") not in (None, args.geometry):
            geom.clear()
        geom["kind"] = args.geometry
    for dim in ("a", "b", "offset", "z", "d", "r_axes", "beta"):
        if getattr(args, dim) is not None:
            geom[dim] = getattr(args, dim)
    if args.n is not None or args.eps1 is not None or args.eps2 is not None:
        mat = {}
        if args.n is not None:
            mat["n"] = args.n
        else:
            old = data.get("material", {})
            mat["eps1"] = args.eps1 if args.eps1 is not None else old.get("eps1")
            mat["eps2"] = args.eps2 if args.eps2 is not None else old.get("eps2")
            if mat["eps2"] is None:
                mat["eps2"] = mat["eps1"]
            if mat["eps1"] is None:
                mat["eps1"] = mat["eps2"]
        data["material"] = mat
    if args.mode:
        data["computation"] = args.mode
    elif args.default_mode == "integrate" and data.get("computation") != "both":
        data["computation"] = "integrate"
    quad = data.setdefault("quadrature", {})
    for flag, key in (("rel_tol", "rel_tol"), ("abs_tol", "abs_tol"),
                      ("max_evals", "max_evaluations"), ("seed", "seed"), ("method", "method")):
        if getattr(args, flag) is not None:
            quad[key] = getattr(args, flag)
    if getattr(args, "sweep_param", None) is not None:
        data["sweep"] = {"parameter": args.sweep_param, "start": args.start,
                         "stop": args.stop, "steps": args.steps,
                         "spacing": args.spacing or "linear"}
        if None in data["sweep"].values():
            raise ConfigError("sweep: --sweep-param needs --start, --stop and --steps")
    return parse_config(data)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args.profile, args.format, args.out)
        cfg = scene_from_args(args)
        if args.command == "sweep":
            return cmd_sweep(cfg, args.format, args.out)
        return cmd_eval(cfg, args.format, args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
