"""Command-line interface: one subcommand per analysis.

Runs are driven by a JSON config file plus flag overrides (flags win),
write CSV files with a fixed column order and 17-significant-digit
floats, and always emit a manifest echoing the fully resolved
configuration so any run can be reproduced byte for byte from its
manifest. Exit codes: 0 success, 2 configuration error, 3 domain error
from a module, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import classifier, evolution, geometry, induction
from .eigenmodes import RadialProfile, bessel_j0, bessel_j0_zero, solve_toroidal_mode
from .errors import ConfigError, DomainError
from .frenet import CurveGeometry, FrenetFrame, transport_frame
from .geometry import CoordPoint
from .induction import FieldDecomposition
from .profiles import ConstantProfile, Profile, ShearFlowCurvature

SUBCOMMANDS = (
    "curvature",
    "frenet",
    "constraints",
    "modes",
    "evolve",
    "classify",
    "sweep",
)

_TWO_PI = 2.0 * math.pi


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def _write_csv(path: Path, header, rows) -> None:
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for cell in row:
            if isinstance(cell, str):
                cells.append(cell)
            elif isinstance(cell, (int, np.integer)):
                cells.append(str(int(cell)))
            else:
                cells.append(_fmt(cell))
        lines.append(",".join(cells))
    path.write_text("\n".join(lines) + "\n", newline="\n")


def _write_manifest(outdir: Path, subcommand: str, seed: int, params: dict) -> None:
    manifest = {"subcommand": subcommand, "seed": seed, "parameters": params}
    text = json.dumps(manifest, indent=2, sort_keys=True)
    (outdir / "manifest.json").write_text(text + "\n", newline="\n")


# ---------------------------------------------------------------------------
# Config validation
# ---------------------------------------------------------------------------


def _fail(path: str, message: str):
    raise ConfigError(f"{path}: {message}")


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _expect_mapping(value, path: str) -> dict:
    if not isinstance(value, dict):
        _fail(path, f"expected a mapping, got {type(value).__name__}")
    return value


def _get_number(cfg: dict, key: str, path: str, default=None, required=False,
                minimum=None, exclusive_minimum=None, maximum=None) -> float:
    if key not in cfg:
        if required:
            _fail(_join(path, key), "missing required key")
        return default
    value = cfg[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(_join(path, key), f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        _fail(_join(path, key), "value must be finite")
    if minimum is not None and value < minimum:
        _fail(_join(path, key), f"value {value:g} below minimum {minimum:g}")
    if exclusive_minimum is not None and value <= exclusive_minimum:
        _fail(_join(path, key), f"value {value:g} must exceed {exclusive_minimum:g}")
    if maximum is not None and value > maximum:
        _fail(_join(path, key), f"value {value:g} above maximum {maximum:g}")
    return value


def _get_int(cfg: dict, key: str, path: str, default=None, required=False,
             minimum=None) -> int:
    if key not in cfg:
        if required:
            _fail(_join(path, key), "missing required key")
        return default
    value = cfg[key]
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(_join(path, key), f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        _fail(_join(path, key), f"value {value} below minimum {minimum}")
    return value


def _get_choice(cfg: dict, key: str, path: str, choices, default=None,
                required=False) -> str:
    if key not in cfg:
        if required:
            _fail(_join(path, key), "missing required key")
        return default
    value = cfg[key]
    if value not in choices:
        _fail(_join(path, key), f"expected one of {sorted(choices)}, got {value!r}")
    return value


def _check_keys(cfg: dict, path: str, allowed) -> None:
    for key in cfg:
        if key not in allowed:
            _fail(_join(path, key) if path else key, "unknown key")


def _resolve_profile(cfg, path: str, default_constant=0.0) -> dict:
    if cfg is None:
        return {"type": "constant", "value": default_constant}
    cfg = _expect_mapping(cfg, path)
    kind = _get_choice(cfg, "type", path, {"constant", "linear"}, required=True)
    if kind == "constant":
        _check_keys(cfg, path, {"type", "value"})
        return {"type": "constant",
                "value": _get_number(cfg, "value", path, default=0.0)}
    _check_keys(cfg, path, {"type", "c0", "theta"})
    theta = _get_number(cfg, "theta", path, default=0.0)
    if abs(math.cos(theta)) < 1e-12:
        _fail(f"{path}.theta", "cos(theta) vanishes; linear profile singular")
    return {
        "type": "linear",
        "c0": _get_number(cfg, "c0", path, default=0.0),
        "theta": theta,
    }


def _profile_from(resolved: dict) -> Profile:
    if resolved["type"] == "constant":
        return ConstantProfile(resolved["value"])
    return ShearFlowCurvature(resolved["c0"], resolved["theta"])


def _resolve_range(cfg, path: str, default) -> list[float]:
    if cfg is None:
        return list(default)
    if (not isinstance(cfg, (list, tuple)) or len(cfg) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool)
                       for v in cfg)):
        _fail(path, f"expected [low, high], got {cfg!r}")
    lo, hi = float(cfg[0]), float(cfg[1])
    if hi < lo:
        _fail(path, f"range is reversed: [{lo:g}, {hi:g}]")
    return [lo, hi]


# ---------------------------------------------------------------------------
# Subcommand: curvature
# ---------------------------------------------------------------------------


def _resolve_curvature(params: dict) -> dict:
    _check_keys(params, "", {"family", "kappa", "h", "points", "seed"})
    family = _get_choice(params, "family", "", {"thin", "thick"}, required=True)
    kappa = _resolve_profile(params.get("kappa"), "kappa")
    h = _get_number(params, "h", "", default=geometry.DEFAULT_STEP,
                    exclusive_minimum=0.0)
    pts = _expect_mapping(params.get("points", {"count": 100}), "points")
    if "list" in pts:
        _check_keys(pts, "points", {"list"})
        raw = pts["list"]
        if not isinstance(raw, list) or not raw:
            _fail("points.list", "expected a non-empty list of [r, theta, s]")
        out = []
        for i, item in enumerate(raw):
            if not isinstance(item, (list, tuple)) or len(item) != 3:
                _fail(f"points.list[{i}]", f"expected [r, theta, s], got {item!r}")
            out.append([float(v) for v in item])
        points = {"list": out}
    else:
        _check_keys(pts, "points", {"count", "r", "theta", "s"})
        points = {
            "count": _get_int(pts, "count", "points", default=100, minimum=1),
            "r": _resolve_range(pts.get("r"), "points.r", [0.1, 2.0]),
            "theta": _resolve_range(pts.get("theta"), "points.theta", [0.0, _TWO_PI]),
            "s": _resolve_range(pts.get("s"), "points.s", [0.0, 10.0]),
        }
    return {"family": family, "kappa": kappa, "h": h, "points": points}


def _run_curvature(params: dict, seed: int, outdir: Path) -> None:
    profile = _profile_from(params["kappa"])
    family = (geometry.MetricFamily.THIN if params["family"] == "thin"
              else geometry.MetricFamily.THICK)
    metric = geometry.TubeMetric(family, profile)
    pts_cfg = params["points"]
    if "list" in pts_cfg:
        points = [CoordPoint(r, th, s) for r, th, s in pts_cfg["list"]]
    else:
        rng = np.random.default_rng(seed)
        count = pts_cfg["count"]
        r = rng.uniform(*pts_cfg["r"], count)
        th = rng.uniform(*pts_cfg["theta"], count)
        s = rng.uniform(*pts_cfg["s"], count)
        points = [CoordPoint(r[i], th[i], s[i]) for i in range(count)]
    rows = geometry.curvature_comparison(metric, points, params["h"])
    header = ["r", "theta", "s", "component", "oracle",
              "paper_form_1", "paper_form_2", "rel_dev_1", "rel_dev_2"]
    csv_rows = [
        [row.point.r, row.point.theta, row.point.s, row.component, row.oracle,
         row.form_1, row.form_2, row.rel_dev_1, row.rel_dev_2]
        for row in rows
    ]
    _write_csv(outdir / "curvature_report.csv", header, csv_rows)


# ---------------------------------------------------------------------------
# Subcommand: frenet
# ---------------------------------------------------------------------------


def _resolve_frenet(params: dict) -> dict:
    _check_keys(params, "", {"kappa", "tau", "s_span", "steps", "seed"})
    span = _resolve_range(params.get("s_span"), "s_span", [0.0, _TWO_PI])
    if span[0] == span[1]:
        _fail("s_span", "span must be non-degenerate")
    return {
        "kappa": _resolve_profile(params.get("kappa"), "kappa"),
        "tau": _resolve_profile(params.get("tau"), "tau"),
        "s_span": span,
        "steps": _get_int(params, "steps", "", default=10000, minimum=1),
    }


def _run_frenet(params: dict, seed: int, outdir: Path) -> None:
    curve = CurveGeometry(
        kappa=_profile_from(params["kappa"]),
        tau=_profile_from(params["tau"]),
        s_span=tuple(params["s_span"]),
    )
    frames = transport_frame(curve, FrenetFrame.standard(), params["steps"])
    s0, s1 = curve.s_span
    h = (s1 - s0) / params["steps"]
    header = ["s", "t_x", "t_y", "t_z", "n_x", "n_y", "n_z",
              "b_x", "b_y", "b_z", "pos_x", "pos_y", "pos_z"]
    rows = []
    for i, fr in enumerate(frames):
        rows.append([s0 + i * h, *fr.t, *fr.n, *fr.b, *fr.position])
    _write_csv(outdir / "frames.csv", header, rows)


# ---------------------------------------------------------------------------
# Subcommand: constraints
# ---------------------------------------------------------------------------

_FIELD_KEYS = {"B_r", "B_theta", "B_s", "v_s", "v_n", "v_b",
               "omega0", "gamma", "eta", "v_theta"}


def _resolve_field(cfg, path: str) -> dict:
    cfg = _expect_mapping(cfg if cfg is not None else {}, path)
    _check_keys(cfg, path, _FIELD_KEYS)
    out = {}
    for key in sorted(_FIELD_KEYS - {"v_theta", "eta"}):
        out[key] = _get_number(cfg, key, path, default=0.0)
    out["eta"] = _get_number(cfg, "eta", path, default=0.0, minimum=0.0)
    if cfg.get("v_theta") is None:
        out["v_theta"] = None
    else:
        out["v_theta"] = _get_number(cfg, "v_theta", path, default=None)
    return out


def _field_from(resolved: dict) -> FieldDecomposition:
    return FieldDecomposition(**resolved)


def _resolve_constraints(params: dict) -> dict:
    _check_keys(params, "", {"field", "curve", "point", "seed"})
    curve = _expect_mapping(params.get("curve", {}), "curve")
    _check_keys(curve, "curve", {"kappa", "tau"})
    point = _expect_mapping(params.get("point", {}), "point")
    _check_keys(point, "point", {"r", "theta", "s"})
    return {
        "field": _resolve_field(params.get("field"), "field"),
        "curve": {
            "kappa": _resolve_profile(curve.get("kappa"), "curve.kappa"),
            "tau": _resolve_profile(curve.get("tau"), "curve.tau"),
        },
        "point": {
            "r": _get_number(point, "r", "point", default=1.0, minimum=0.0),
            "theta": _get_number(point, "theta", "point", default=0.0),
            "s": _get_number(point, "s", "point", default=0.0),
        },
    }


def _run_constraints(params: dict, seed: int, outdir: Path) -> None:
    field = _field_from(params["field"])
    curve = CurveGeometry(
        kappa=_profile_from(params["curve"]["kappa"]),
        tau=_profile_from(params["curve"]["tau"]),
        s_span=(0.0, 1.0),
    )
    p = CoordPoint(**params["point"])
    report = induction.constraint_checks(field, curve, p)
    residuals = induction.thin_tube_residuals(field, curve, p.theta, p.s)
    entries = list(report.entries) + [
        ("normal_residual", residuals.normal),
        ("binormal_residual", residuals.binormal),
        ("axial_residual", residuals.axial),
    ]
    _write_csv(outdir / "constraints.csv", ["constraint", "value"], entries)
    print(report.as_text())
    for name, value in entries[len(report.entries):]:
        print(f"{name} = {value:.17g}")


# ---------------------------------------------------------------------------
# Subcommand: modes
# ---------------------------------------------------------------------------


def _resolve_modes(params: dict) -> dict:
    _check_keys(params, "", {"gamma", "eta", "r_max", "n", "seed"})
    return {
        "gamma": _get_number(params, "gamma", "", required=True),
        "eta": _get_number(params, "eta", "", required=True, exclusive_minimum=0.0),
        "r_max": _get_number(params, "r_max", "", default=5.0, exclusive_minimum=0.0),
        "n": _get_int(params, "n", "", default=256, minimum=16),
    }


def _run_modes(params: dict, seed: int, outdir: Path) -> None:
    profile = solve_toroidal_mode(
        params["gamma"], params["eta"], params["r_max"], params["n"]
    )
    rows = list(zip(profile.r_grid, profile.values))
    _write_csv(outdir / "mode_profile.csv", ["r", "B"], rows)


# ---------------------------------------------------------------------------
# Subcommand: evolve
# ---------------------------------------------------------------------------


def _resolve_init(cfg, path: str) -> dict:
    if cfg is None:
        return {"type": "bessel_mode", "mode": 1}
    cfg = _expect_mapping(cfg, path)
    kind = _get_choice(cfg, "type", path,
                       {"bessel_mode", "bessel_sum", "constant", "ramp"},
                       required=True)
    if kind == "bessel_mode":
        _check_keys(cfg, path, {"type", "mode"})
        return {"type": kind, "mode": _get_int(cfg, "mode", path, default=1, minimum=1)}
    if kind == "bessel_sum":
        _check_keys(cfg, path, {"type", "modes"})
        modes = cfg.get("modes")
        if (not isinstance(modes, list) or not modes
                or not all(isinstance(m, int) and not isinstance(m, bool) and m >= 1
                           for m in modes)):
            _fail(f"{path}.modes", f"expected a list of mode indices >= 1, got {modes!r}")
        return {"type": kind, "modes": list(modes)}
    _check_keys(cfg, path, {"type", "value"})
    return {"type": kind, "value": _get_number(cfg, "value", path, default=1.0)}


def _build_init(resolved: dict, grid: np.ndarray, r_max: float) -> np.ndarray:
    kind = resolved["type"]
    if kind == "bessel_mode":
        lam = bessel_j0_zero(resolved["mode"]) / r_max
        return bessel_j0(lam * grid)
    if kind == "bessel_sum":
        values = np.zeros_like(grid)
        for mode in resolved["modes"]:
            lam = bessel_j0_zero(mode) / r_max
            values = values + bessel_j0(lam * grid)
        return values
    if kind == "constant":
        return np.full_like(grid, resolved["value"])
    return resolved["value"] * grid  # ramp


def _resolve_evolve(params: dict, path: str = "") -> dict:
    _check_keys(params, path, {"eta", "r_max", "n", "dt", "steps",
                               "boundary", "component", "init", "seed"})
    return {
        "eta": _get_number(params, "eta", path, required=True, minimum=0.0),
        "r_max": _get_number(params, "r_max", path, default=1.0,
                             exclusive_minimum=0.0),
        "n": _get_int(params, "n", path, default=101, minimum=16),
        "dt": _get_number(params, "dt", path, required=True, exclusive_minimum=0.0),
        "steps": _get_int(params, "steps", path, default=10000, minimum=1),
        "boundary": _get_choice(params, "boundary", path,
                                {"dirichlet", "neumann"}, default="dirichlet"),
        "component": _get_choice(params, "component", path,
                                 {"toroidal", "poloidal"}, default="toroidal"),
        "init": _resolve_init(params.get("init"), f"{path}.init" if path else "init"),
    }


def _evolve_from(params: dict) -> evolution.EvolutionResult:
    config = evolution.EvolutionConfig(
        eta=params["eta"],
        r_max=params["r_max"],
        n=params["n"],
        dt=params["dt"],
        steps=params["steps"],
        boundary=(evolution.Boundary.DIRICHLET_ZERO if params["boundary"] == "dirichlet"
                  else evolution.Boundary.NEUMANN_ZERO),
        component=(evolution.Component.TOROIDAL if params["component"] == "toroidal"
                   else evolution.Component.POLOIDAL),
    )
    grid = config.grid()
    init = RadialProfile(grid, _build_init(params["init"], grid, config.r_max))
    return evolution.evolve(config, init)


def _run_evolve(params: dict, seed: int, outdir: Path) -> None:
    result = _evolve_from(params)
    energy_rows = [
        [k, result.times[k], result.energies[k]]
        for k in range(result.energies.size)
    ]
    _write_csv(outdir / "energy.csv", ["step", "time", "energy"], energy_rows)
    profile_rows = list(zip(result.final.r_grid, result.final.values))
    _write_csv(outdir / "final_profile.csv", ["r", "B"], profile_rows)


# ---------------------------------------------------------------------------
# Subcommand: classify
# ---------------------------------------------------------------------------

_FILAMENT_KEYS = {"kappa0", "tau0", "eta", "v_s", "v_n", "v_b", "B_s", "B_n", "B_b"}


def _resolve_classify(params: dict) -> dict:
    kind = _get_choice(params, "kind", "", {"thin_tube", "filament"}, required=True)
    if kind == "thin_tube":
        _check_keys(params, "", {"kind", "field", "curve", "eta", "seed"})
        curve = _expect_mapping(params.get("curve", {}), "curve")
        _check_keys(curve, "curve", {"kappa", "tau"})
        return {
            "kind": kind,
            "field": _resolve_field(params.get("field"), "field"),
            "curve": {
                "kappa": _resolve_profile(curve.get("kappa"), "curve.kappa"),
                "tau": _resolve_profile(curve.get("tau"), "curve.tau"),
            },
            "eta": _get_number(params, "eta", "", required=True, minimum=0.0),
        }
    _check_keys(params, "", {"kind", "config", "seed"})
    cfg = _expect_mapping(params.get("config", {}), "config")
    _check_keys(cfg, "config", _FILAMENT_KEYS)
    resolved = {key: _get_number(cfg, key, "config", default=0.0)
                for key in sorted(_FILAMENT_KEYS - {"eta"})}
    resolved["eta"] = _get_number(cfg, "eta", "config", default=0.0, minimum=0.0)
    return {"kind": kind, "config": resolved}


def _report_rows(report: classifier.RegimeReport):
    header = ["gamma", "gamma_limit", "regime"]
    row = [report.gamma, report.gamma_diffusionless_limit, report.regime.value]
    for name, value in report.constraints:
        header.append(name)
        row.append(value)
    return header, row


def _run_classify(params: dict, seed: int, outdir: Path) -> None:
    if params["kind"] == "thin_tube":
        curve = CurveGeometry(
            kappa=_profile_from(params["curve"]["kappa"]),
            tau=_profile_from(params["curve"]["tau"]),
            s_span=(0.0, 1.0),
        )
        report = classifier.classify_thin_tube(
            _field_from(params["field"]), curve, params["eta"]
        )
    else:
        report = classifier.filament_growth_rate(
            classifier.FilamentConfig(**params["config"])
        )
    header, row = _report_rows(report)
    _write_csv(outdir / "regime.csv", header, [row])
    print(report.as_text())


# ---------------------------------------------------------------------------
# Subcommand: sweep
# ---------------------------------------------------------------------------


def _resolve_axis(cfg, path: str) -> dict:
    cfg = _expect_mapping(cfg, path)
    _check_keys(cfg, path, {"min", "max", "count"})
    lo = _get_number(cfg, "min", path, required=True)
    hi = _get_number(cfg, "max", path, required=True)
    if hi < lo:
        _fail(path, f"range is reversed: [{lo:g}, {hi:g}]")
    return {"min": lo, "max": hi,
            "count": _get_int(cfg, "count", path, default=50, minimum=2)}


def _resolve_sweep(params: dict) -> dict:
    kind = _get_choice(params, "kind", "", {"filament_grid", "evolve_cases"},
                       required=True)
    if kind == "filament_grid":
        _check_keys(params, "", {"kind", "tau0", "eta", "seed"})
        tau0 = _resolve_axis(params.get("tau0", {"min": -3.0, "max": 3.0}), "tau0")
        eta = _resolve_axis(params.get("eta", {"min": 0.0, "max": 2.0}), "eta")
        if eta["min"] < 0.0:
            _fail("eta.min", "diffusivity must be >= 0")
        return {"kind": kind, "tau0": tau0, "eta": eta}
    _check_keys(params, "", {"kind", "cases", "seed"})
    raw = params.get("cases")
    if not isinstance(raw, list) or not raw:
        _fail("cases", "expected a non-empty list of evolve configurations")
    cases = []
    for i, case in enumerate(raw):
        cases.append(_resolve_evolve(_expect_mapping(case, f"cases[{i}]"),
                                     f"cases[{i}]"))
    return {"kind": kind, "cases": cases}


def _run_sweep(params: dict, seed: int, outdir: Path) -> None:
    if params["kind"] == "filament_grid":
        tau_axis = np.linspace(params["tau0"]["min"], params["tau0"]["max"],
                               params["tau0"]["count"])
        eta_axis = np.linspace(params["eta"]["min"], params["eta"]["max"],
                               params["eta"]["count"])
        grid = classifier.growth_rate_grid(tau_axis, eta_axis)
        rows = [[g.tau0, g.eta, g.gamma, g.gamma_limit, g.regime.value]
                for g in grid]
        _write_csv(outdir / "sweep.csv",
                   ["tau0", "eta", "gamma", "gamma_limit", "regime"], rows)
        return
    # evolve_cases: run sequentially, merged deterministically by case index
    rows = []
    for index, case in enumerate(params["cases"]):
        result = _evolve_from(case)
        rate = evolution.measure_growth_rate(result.energies, case["dt"])
        rows.append([
            index, case["eta"], case["boundary"], case["component"],
            case["n"], case["dt"], case["steps"], case["init"]["type"],
            result.energies[-1], rate,
        ])
    _write_csv(
        outdir / "sweep.csv",
        ["case", "eta", "boundary", "component", "n", "dt", "steps",
         "init_type", "final_energy", "measured_rate"],
        rows,
    )


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------

_RESOLVERS = {
    "curvature": _resolve_curvature,
    "frenet": _resolve_frenet,
    "constraints": _resolve_constraints,
    "modes": _resolve_modes,
    "evolve": _resolve_evolve,
    "classify": _resolve_classify,
    "sweep": _resolve_sweep,
}

_RUNNERS = {
    "curvature": _run_curvature,
    "frenet": _run_frenet,
    "constraints": _run_constraints,
    "modes": _run_modes,
    "evolve": _run_evolve,
    "classify": _run_classify,
    "sweep": _run_sweep,
}


def _load_config(path: str | None, subcommand: str) -> dict:
    if path is None:
        return {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"config: cannot read {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config: invalid JSON in {path}: {exc}") from exc
    raw = _expect_mapping(raw, "config")
    if "parameters" in raw and "subcommand" in raw:  # manifest round-trip
        if raw["subcommand"] != subcommand:
            _fail("config.subcommand",
                  f"manifest is for {raw['subcommand']!r}, not {subcommand!r}")
        params = _expect_mapping(raw["parameters"], "config.parameters")
        if "seed" in raw:
            params = dict(params)
            params["seed"] = raw["seed"]
        return params
    return dict(raw)


def _parse_set_value(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _apply_set(params: dict, assignments) -> None:
    for item in assignments or []:
        if "=" not in item:
            raise ConfigError(f"--set {item!r}: expected key.path=value")
        key, _, value = item.partition("=")
        target = params
        parts = key.split(".")
        for part in parts[:-1]:
            node = target.setdefault(part, {})
            if not isinstance(node, dict):
                raise ConfigError(f"--set {item!r}: {part} is not a mapping")
            target = node
        target[parts[-1]] = _parse_set_value(value)


_CONVENIENCE_FLAGS = {
    "curvature": {"family": ("family",), "h": ("h",), "count": ("points", "count"),
                  "kappa0": ("kappa",)},
    "frenet": {"kappa0": ("kappa",), "tau0": ("tau",), "steps": ("steps",)},
    "constraints": {},
    "modes": {"gamma": ("gamma",), "eta": ("eta",), "r_max": ("r_max",), "n": ("n",)},
    "evolve": {"eta": ("eta",), "dt": ("dt",), "steps": ("steps",),
               "r_max": ("r_max",), "n": ("n",), "boundary": ("boundary",),
               "component": ("component",)},
    "classify": {"kind": ("kind",)},
    "sweep": {"kind": ("kind",)},
}

_PROFILE_FLAGS = {"kappa0": "kappa", "tau0": "tau"}


def _apply_flags(params: dict, subcommand: str, args: argparse.Namespace) -> None:
    for flag, path in _CONVENIENCE_FLAGS[subcommand].items():
        value = getattr(args, flag, None)
        if value is None:
            continue
        if flag in _PROFILE_FLAGS:
            params[_PROFILE_FLAGS[flag]] = {"type": "constant", "value": value}
            continue
        target = params
        for part in path[:-1]:
            node = target.setdefault(part, {})
            if not isinstance(node, dict):
                raise ConfigError(f"--{flag}: {part} is not a mapping")
            target = node
        target[path[-1]] = value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fluxtube",
        description="Flux-tube geometry, induction, eigenmode, evolution, "
                    "and dynamo-regime analyses with deterministic CSV output.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    flag_types = {"family": str, "boundary": str, "component": str, "kind": str,
                  "count": int, "n": int, "steps": int}
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", default=None, help="JSON config or manifest")
        p.add_argument("--out", default="fluxtube_out", help="output directory")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for randomized sampling (default 0)")
        p.add_argument("--set", action="append", metavar="KEY.PATH=VALUE",
                       help="override a config entry (repeatable; flags win)")
        for flag in _CONVENIENCE_FLAGS[name]:
            p.add_argument(f"--{flag}", type=flag_types.get(flag, float),
                           default=None)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    subcommand = args.subcommand
    try:
        params = _load_config(args.config, subcommand)
        _apply_set(params, args.set)
        _apply_flags(params, subcommand, args)
        seed = params.pop("seed", 0)
        if args.seed is not None:
            seed = args.seed
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise ConfigError(f"seed: expected an integer, got {seed!r}")
        resolved = _RESOLVERS[subcommand](params)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        _RUNNERS[subcommand](resolved, seed, outdir)
        _write_manifest(outdir, subcommand, seed, resolved)
    except (DomainError, ValueError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4
    return 0


def console_main() -> None:
    sys.exit(main())
