"""Command-line interface: ``dmlqu {spectrum,state,lqu,sweep,figure}``.

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .exceptions import DmlquError, ValidationError
from .lqu import lqu_bruteforce, lqu_w, model_params, thermal_lqu
from .models import XModelParams, ground_state, hamiltonian_x, hamiltonian_z, spectrum_x, spectrum_z
from .sweeps import PRESETS, EmitError, config_from_mapping, format_rows, run_figure, run_sweep
from .thermal import (
    gibbs_state_numeric,
    hadamard_x_form,
    partition_x,
    partition_z,
    thermal_state_x_closed,
    thermal_state_z_closed,
)

EXIT_OK, EXIT_VALIDATION, EXIT_IO = 0, 1, 2

DEFAULTS = {
    "model": "z-dm",
    "j": 1.0,
    "delta": 0.5,
    "dm": 1.0,
    "temp": 1.0,
    "axis": "temperature",
    "min": 0.1,
    "max": 10.0,
    "steps": 200,
    "spacing": "linear",
    "format": "csv",
    "out": None,
    "method": "closed",
    "workers": 1,
    "allow_any_delta": False,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ValidationError(message)


def read_config(path):
    """Parse a ``key = value`` (or ``key: value``) file; ``#`` starts a comment."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise EmitError(f"cannot read config {path}: {exc}") from exc
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        sep = "=" if "=" in line else ":"
        if sep not in line:
            raise ValidationError(f"{path}:{lineno}: expected 'key = value'")
        key, val = (s.strip() for s in line.split(sep, 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in DEFAULTS:
            raise ValidationError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = val
    return out


def _resolve(args):
    """Merge built-in defaults < config file < command-line flags."""
    vals = dict(DEFAULTS)
    if args.config:
        vals.update(read_config(args.config))
    for k in DEFAULTS:
        v = getattr(args, k, None)
        if v is not None and v is not False:
            vals[k] = v
    for k in ("j", "delta", "dm", "temp", "min", "max"):
        try:
            vals[k] = float(vals[k])
        except (TypeError, ValueError):
            raise ValidationError(f"--{k} must be a number, got {vals[k]!r}") from None
    for k in ("steps", "workers"):
        try:
            vals[k] = int(vals[k])
        except (TypeError, ValueError):
            raise ValidationError(f"--{k} must be an integer, got {vals[k]!r}") from None
    if isinstance(vals["allow_any_delta"], str):
        vals["allow_any_delta"] = vals["allow_any_delta"].lower() in ("1", "true", "yes")
    return vals


def _cvec(v):
    return [[float(z.real), float(z.imag)] for z in np.asarray(v).ravel()]


def _cmat(m):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def _params(vals):
    if vals["model"] not in ("z-dm", "x-dm", "z", "x"):
        raise ValidationError(f"--model must be z-dm or x-dm here, got {vals['model']!r}")
    return model_params(vals["model"], vals["j"], vals["delta"], vals["dm"], vals["allow_any_delta"])


def cmd_spectrum(vals):
    p = _params(vals)
    spec = spectrum_x(p) if isinstance(p, XModelParams) else spectrum_z(p)
    g = ground_state(spec)
    return {
        "model": "x-dm" if isinstance(p, XModelParams) else "z-dm",
        "levels": [{"label": lv.label, "energy": lv.energy, "vector": _cvec(lv.vector)} for lv in spec.levels],
        "ground_state": {
            "label": g.ground_label,
            "energy": g.ground_energy,
            "degenerate": g.degenerate,
            "maximally_entangled": g.maximally_entangled,
        },
    }


def cmd_state(vals):
    p = _params(vals)
    t = vals["temp"]
    out = {"model": None, "temp": t}
    if isinstance(p, XModelParams):
        rho = thermal_state_x_closed(p, t)
        x = hadamard_x_form(rho)
        part = partition_x(p, t)
        out.update(model="x-dm", density_matrix=_cmat(rho), hadamard_x_form=_cmat(x.to_matrix()))
    else:
        x = thermal_state_z_closed(p, t)
        part = partition_z(p, t)
        out.update(model="z-dm", density_matrix=_cmat(x.to_matrix()))
    out["partition"] = part.value
    out["log_partition"] = part.log
    return out


def cmd_lqu(vals):
    p = _params(vals)
    r = thermal_lqu(vals["model"], p, vals["temp"])
    out = {
        "model": r.model,
        "j": vals["j"],
        "delta": vals["delta"],
        "dm": vals["dm"],
        "t": vals["temp"],
        "lqu": r.lqu.value,
        "omega1": r.lqu.omega1,
        "omega3": r.lqu.omega3,
        "branch": r.lqu.branch,
        "method": r.lqu.method,
        "partition": r.partition.value,
        "log_partition": r.partition.log,
    }
    if vals["method"] in ("w", "brute", "all"):
        h = hamiltonian_x(p) if isinstance(p, XModelParams) else hamiltonian_z(p)
        rho = gibbs_state_numeric(h, vals["temp"])
        if vals["method"] in ("w", "all"):
            out["lqu_w"] = lqu_w(rho).value
        if vals["method"] in ("brute", "all"):
            out["lqu_bruteforce"] = lqu_bruteforce(rho).value
    return out


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise EmitError(f"cannot write {path}: {exc}") from exc


def cmd_sweep(vals):
    cfg = config_from_mapping(
        {
            "model": vals["model"],
            "j": vals["j"],
            "delta": vals["delta"],
            "dm": vals["dm"],
            "temp": vals["temp"],
            "axis": vals["axis"],
            "vmin": vals["min"],
            "vmax": vals["max"],
            "steps": vals["steps"],
            "spacing": vals["spacing"],
            "fmt": vals["format"],
            "out": vals["out"],
            "allow_any_delta": vals["allow_any_delta"],
        }
    ).validate()
    rows = run_sweep(cfg, workers=vals["workers"])
    _write(format_rows(rows, cfg.fmt), cfg.out)
    failed = sum(r.failed for r in rows)
    if failed:
        print(f"warning: {failed} of {len(rows)} points failed", file=sys.stderr)
    return None


def cmd_figure(vals, name):
    if name not in PRESETS:
        raise ValidationError(f"unknown preset {name!r}; available: {', '.join(PRESETS)}")
    fmt = vals["format"]
    if fmt not in ("csv", "json"):
        raise ValidationError(f"--format must be csv or json, got {fmt!r}")
    if vals["out"] is None:
        data = run_figure(name, None, fmt, workers=vals["workers"])
        sys.stdout.write(format_rows(data.rows, fmt))
    else:
        run_figure(name, vals["out"], fmt, workers=vals["workers"])
        print(f"wrote {Path(vals['out']) / (name + '.' + fmt)}", file=sys.stderr)
    return None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key = value file; flags override it")
    common.add_argument("--model", help="z-dm or x-dm (sweep also accepts both)")
    common.add_argument("--j", type=float, help="exchange coupling J (nonzero)")
    common.add_argument("--delta", type=float, help="anisotropy Delta in [0, 1]")
    common.add_argument("--dm", type=float, help="DM strength Dz or Dx")
    common.add_argument("--temp", type=float, help="temperature T (k_B = 1)")
    common.add_argument("--out", help="output path (directory for figure)")
    common.add_argument("--allow-any-delta", action="store_true", default=None, help="skip the Delta in [0, 1] check")

    parser = _Parser(prog="dmlqu", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("spectrum", parents=[common], help="analytic levels and ground state")
    sub.add_parser("state", parents=[common], help="closed-form thermal density matrix")
    p_lqu = sub.add_parser("lqu", parents=[common], help="thermal LQU at one point")
    p_lqu.add_argument("--method", choices=("closed", "w", "brute", "all"), help="extra numeric cross-checks")

    p_sweep = sub.add_parser("sweep", parents=[common], help="sweep one axis")
    p_sweep.add_argument("--axis", help="temperature, dm or j")
    p_sweep.add_argument("--min", type=float)
    p_sweep.add_argument("--max", type=float)
    p_sweep.add_argument("--steps", type=int)
    p_sweep.add_argument("--spacing", help="linear or log10")
    p_sweep.add_argument("--format", help="csv or json")
    p_sweep.add_argument("--workers", type=int)

    p_fig = sub.add_parser("figure", parents=[common], help="figure preset data: " + ", ".join(PRESETS))
    p_fig.add_argument("name")
    p_fig.add_argument("--format", help="csv or json")
    p_fig.add_argument("--workers", type=int)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        vals = _resolve(args)
        if args.command == "figure":
            result = cmd_figure(vals, args.name)
        else:
            handler = {"spectrum": cmd_spectrum, "state": cmd_state, "lqu": cmd_lqu, "sweep": cmd_sweep}
            result = handler[args.command](vals)
        if result is not None:
            _write(json.dumps(result, indent=1) + "\n", vals["out"])
    except EmitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValidationError, DmlquError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
