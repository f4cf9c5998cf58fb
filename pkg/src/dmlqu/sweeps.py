"""Parameter sweeps, figure presets and CSV/JSON output."""

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path

import numpy as np

from .exceptions import DmlquError, ValidationError
from .lqu import model_params, thermal_lqu

__all__ = [
    "CSV_HEADER",
    "SweepConfig",
    "SweepRow",
    "FigureData",
    "EmitError",
    "run_sweep",
    "figure_preset",
    "run_figure",
    "emit",
    "format_rows",
    "read_rows",
    "threshold_from_rows",
    "PRESETS",
]

CSV_HEADER = ("model", "j", "delta", "dm", "t", "lqu", "omega1", "omega3", "log_partition", "branch", "method")
AXES = ("temperature", "dm", "j")
DEFAULT_STEPS = 200


class EmitError(DmlquError, OSError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: a model, fixed parameters and a single axis to vary.

    ``temp`` is the fixed temperature for ``dm``/``j`` sweeps and is ignored
    for temperature sweeps. ``model='both'`` evaluates z-dm and x-dm at every
    grid point.
    """

    model: str = "z-dm"
    j: float = 1.0
    delta: float = 0.5
    dm: float = 1.0
    temp: float = 1.0
    axis: str = "temperature"
    vmin: float = 0.1
    vmax: float = 10.0
    steps: int = DEFAULT_STEPS
    spacing: str = "linear"
    fmt: str = "csv"
    out: str = None
    allow_any_delta: bool = False

    def validate(self):
        if self.model not in ("z-dm", "x-dm", "both"):
            raise ValidationError(f"model must be z-dm, x-dm or both, got {self.model!r}")
        if self.axis not in AXES:
            raise ValidationError(f"axis must be one of {', '.join(AXES)}, got {self.axis!r}")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValidationError(f"steps must be an integer >= 2, got {self.steps!r}")
        if not self.vmin < self.vmax:
            raise ValidationError(f"need min < max, got {self.vmin!r} >= {self.vmax!r}")
        if self.spacing not in ("linear", "log10"):
            raise ValidationError(f"spacing must be linear or log10, got {self.spacing!r}")
        if self.spacing == "log10" and self.vmin <= 0:
            raise ValidationError("log10 spacing requires min > 0")
        if self.fmt not in ("csv", "json"):
            raise ValidationError(f"format must be csv or json, got {self.fmt!r}")
        return self

    def grid(self):
        n = int(self.steps)
        if self.spacing == "log10":
            return np.logspace(math.log10(self.vmin), math.log10(self.vmax), n)
        return np.linspace(self.vmin, self.vmax, n)

    @property
    def models(self):
        return ("z-dm", "x-dm") if self.model == "both" else (self.model,)


@dataclass(frozen=True)
class SweepRow:
    model: str
    j: float
    delta: float
    dm: float
    t: float
    lqu: float
    omega1: float
    omega3: float
    log_partition: float
    branch: str
    method: str
    error: str = field(default=None, compare=False)

    @property
    def failed(self):
        return self.method == "failed"


def _point(cfg, x):
    j, dm, t = cfg.j, cfg.dm, cfg.temp
    if cfg.axis == "temperature":
        t = x
    elif cfg.axis == "dm":
        dm = x
    else:
        j = x
    return float(j), float(dm), float(t)


def _evaluate(model, j, delta, dm, t, allow_any_delta):
    try:
        p = model_params(model, j, delta, dm, allow_any_delta)
        r = thermal_lqu(model, p, t)
    except DmlquError as exc:
        nan = math.nan
        return SweepRow(model, j, delta, dm, t, nan, nan, nan, nan, type(exc).__name__, "failed", str(exc))
    res = r.lqu
    return SweepRow(model, j, delta, dm, t, res.value, res.omega1, res.omega3, r.partition.log, res.branch, res.method)


def run_sweep(cfg: SweepConfig, workers=1):
    """Evaluate the thermal LQU at every grid point, in grid order.

    Points that raise are kept as rows with ``method='failed'``. With
    ``workers > 1`` points are evaluated by a thread pool; the output order
    does not depend on it.
    """
    cfg.validate()
    tasks = []
    for x in cfg.grid():
        j, dm, t = _point(cfg, x)
        for model in cfg.models:
            tasks.append((model, j, cfg.delta, dm, t, cfg.allow_any_delta))
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=int(workers)) as pool:
            return list(pool.map(lambda a: _evaluate(*a), tasks))
    return [_evaluate(*a) for a in tasks]


def _fmt(v):
    if isinstance(v, str):
        return v
    return f"{v:.12g}"


def format_rows(rows, fmt="csv"):
    """Render rows as CSV or JSON text (always ending in a newline)."""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in rows:
            w.writerow([_fmt(getattr(r, k)) for k in CSV_HEADER])
        return buf.getvalue()
    if fmt == "json":
        objs = []
        for r in rows:
            obj = {}
            for k in CSV_HEADER:
                v = getattr(r, k)
                obj[k] = None if isinstance(v, float) and math.isnan(v) else v
            objs.append(obj)
        return json.dumps(objs, indent=1) + "\n"
    raise ValidationError(f"format must be csv or json, got {fmt!r}")


def emit(rows, fmt, path):
    """Write rows to ``path`` as UTF-8 CSV or JSON.

    CSV carries the fixed header ``model,j,delta,dm,t,lqu,omega1,omega3,
    log_partition,branch,method`` and floats at 12 significant digits; JSON
    is an array of objects with the same keys and full-precision floats.
    """
    text = format_rows(rows, fmt)
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise EmitError(f"cannot write {path}: {exc}") from exc
    return Path(path)


_FLOAT_KEYS = ("j", "delta", "dm", "t", "lqu", "omega1", "omega3", "log_partition")


def read_rows(path):
    """Load rows written by :func:`emit` (format picked from the suffix)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        records = json.loads(text)
    else:
        records = list(csv.DictReader(io.StringIO(text)))
    rows = []
    for rec in records:
        vals = {k: rec[k] for k in CSV_HEADER}
        for k in _FLOAT_KEYS:
            vals[k] = math.nan if vals[k] is None else float(vals[k])
        rows.append(SweepRow(**vals))
    return rows


def threshold_from_rows(rows, eps=0.01):
    """First grid temperature with ``lqu < eps`` (``None`` if never reached)."""
    for r in rows:
        if not r.failed and r.lqu < eps:
            return r.t
    return None


# -- figure presets ---------------------------------------------------------

_BASE = dict(delta=0.5, fmt="csv")
_LOG_T = dict(axis="temperature", vmin=0.2, vmax=50.0, steps=100, spacing="log10")


def _curves(model, key, values, **kw):
    return [SweepConfig(model=model, **{**_BASE, **kw, key: v}) for v in values]


PRESETS = {
    "fig1a": dict(
        title="LQU vs log10(T), z-axis DM, curves over Dz (J=1, Delta=0.5)",
        curve_key="dm",
        configs=_curves("z-dm", "dm", (0.5, 1.0, 2.0, 3.0), j=1.0, **_LOG_T),
    ),
    "fig1b": dict(
        title="LQU vs log10(T), z-axis DM, curves over J (Dz=1, Delta=0.5)",
        curve_key="j",
        configs=_curves("z-dm", "j", (0.5, 1.0, 2.0), dm=1.0, **_LOG_T),
    ),
    "fig3": dict(
        title="LQU vs Dz, curves over T (J=1, Delta=0.5)",
        curve_key="temp",
        configs=_curves(
            "z-dm", "temp", (1.0, 2.0, 3.0), j=1.0, axis="dm", vmin=-6.0, vmax=6.0, steps=201
        ),
    ),
    "fig4a": dict(
        title="LQU' vs log10(T), x-axis DM, curves over Dx (J=1, Delta=0.5)",
        curve_key="dm",
        configs=_curves("x-dm", "dm", (0.5, 1.0, 2.0, 3.0), j=1.0, **_LOG_T),
    ),
    "fig4b": dict(
        title="LQU' vs log10(T), x-axis DM, curves over J (Dx=1, Delta=0.5)",
        curve_key="j",
        configs=_curves("x-dm", "j", (0.5, 1.0, 2.0), dm=1.0, **_LOG_T),
    ),
    "fig6": dict(
        title="LQU' vs J, curves over T (Dx=1, Delta=0.5)",
        curve_key="temp",
        # an even step count keeps J = 0 off the grid
        configs=_curves(
            "x-dm", "temp", (1.0, 2.0, 3.0), dm=1.0, axis="j", vmin=-4.0, vmax=4.0, steps=200
        ),
    ),
    "fig7": dict(
        title="LQU (z-axis DM) and LQU' (x-axis DM) vs log10(T), D=2 (J=1, Delta=0.5)",
        curve_key=None,
        configs=[
            SweepConfig(
                model="both", j=1.0, dm=2.0, axis="temperature", vmin=0.1, vmax=1000.0,
                steps=DEFAULT_STEPS, spacing="log10", **_BASE,
            )
        ],
    ),
}


@dataclass
class FigureData:
    name: str
    configs: list
    curves: list
    meta: dict

    @property
    def rows(self):
        return [r for c in self.curves for r in c]


def figure_preset(name):
    """Sweep configs for a named figure preset."""
    if name not in PRESETS:
        raise ValidationError(f"unknown preset {name!r}; available: {', '.join(PRESETS)}")
    return list(PRESETS[name]["configs"])


def run_figure(name, out_dir=None, fmt="csv", workers=1):
    """Run every curve of a preset; optionally write ``<name>.<fmt>`` and ``<name>.meta.json``."""
    configs = figure_preset(name)
    preset = PRESETS[name]
    curves = [run_sweep(c, workers=workers) for c in configs]
    cfg0 = configs[0]
    meta = {
        "preset": name,
        "title": preset["title"],
        "axis": cfg0.axis,
        "axis_scale": "log10" if cfg0.spacing == "log10" else "linear",
        "log_base": 10,
        "curve_key": preset["curve_key"],
        "curves": [],
    }
    for c, rows in zip(configs, curves):
        entry = {"model": c.model, "j": c.j, "delta": c.delta, "dm": c.dm}
        if c.axis != "temperature":
            entry["temp"] = c.temp
        else:
            for model in c.models:
                sub = [r for r in rows if r.model == model]
                entry.setdefault("threshold_t_lqu_below_0.01", {})[model] = threshold_from_rows(sub)
        meta["curves"].append(entry)
    data = FigureData(name, configs, curves, meta)
    if out_dir is not None:
        out = Path(out_dir)
        try:
            out.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise EmitError(f"cannot create {out}: {exc}") from exc
        emit(data.rows, fmt, out / f"{name}.{fmt}")
        try:
            (out / f"{name}.meta.json").write_text(json.dumps(meta, indent=1) + "\n", encoding="utf-8")
        except OSError as exc:
            raise EmitError(f"cannot write metadata: {exc}") from exc
    return data


def config_from_mapping(mapping):
    """Build a :class:`SweepConfig` from string-or-typed values keyed like its fields."""
    names = {f.name for f in fields(SweepConfig)}
    cfg = SweepConfig()
    updates = {}
    for k, v in mapping.items():
        if v is None or k not in names:
            continue
        default = getattr(cfg, k)
        if isinstance(default, bool):
            updates[k] = v if isinstance(v, bool) else str(v).lower() in ("1", "true", "yes")
        elif isinstance(default, int):
            updates[k] = int(v)
        elif isinstance(default, float):
            updates[k] = float(v)
        else:
            updates[k] = v
    return replace(cfg, **updates)


def row_dict(row):
    d = asdict(row)
    d.pop("error")
    return d
