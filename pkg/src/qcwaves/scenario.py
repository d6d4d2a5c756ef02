"""Scenario and material documents, field sampling, CSV/JSON output.

File formats (all JSON with an explicit ``schema_version`` key, currently 1):

Material document, flat keys in SI units::

    {"schema_version": 1, "c44": 4.2e10, "R3": 1.2e9, "K2": 2.4e10,
     "rho": 4186.0}

Scenario document::

    {
      "schema_version": 1,
      "kind": "fundamental",            # or green-half | freefield-full
                                        #    | freefield-half
      "omega": 6.283e6,
      "source": [0.0, 0.0],             # point-source kinds
      "wave": {"mode": "S1", "amplitude": [1.0, 0.0], "phi": 0.6},
                                        # free-field kinds
      "grid": {"x1": [min, max, n], "x2": [min, max, n]},
      "points": [[x1, x2], ...],        # alternative to "grid"
      "outputs": ["displacement", "traction"],
      "normal": [0.0, 1.0]              # required when traction is requested
    }

Field samples are written as CSV with one row per evaluation point; complex
quantities always appear as separate ``_re``/``_im`` columns (so
superposition checks stay exact), formatted with shortest round-trip float
repr. Point-source kinds use the column set
``x1,x2,u31_re,u31_im,u32_re,u32_im,w31_re,w31_im,w32_re,w32_im`` (plus
``t31,t32,G31,G32`` pairs when tractions are requested), free-field kinds
``x1,x2,u3_re,u3_im,w3_re,w3_im`` (plus ``t3,G3``). Grid rows are emitted
with x1 as the outer loop and x2 as the inner loop; evaluation order is
deterministic, so identical scenarios produce byte-identical CSV files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .errors import EvaluationError, ParseError, QcError, ValidationError
from .freefield import (
    IncidentWave,
    freefield_traction,
    fullplane_incident,
    halfplane_freefield,
)
from .halfplane import green_displacement, green_traction
from .kernels import fundamental_displacement, fundamental_traction
from .material import QcMaterial, validate

__all__ = [
    "SCHEMA_VERSION",
    "KINDS",
    "Scenario",
    "load_material",
    "material_to_dict",
    "parse_scenario",
    "load_scenario",
    "scenario_to_dict",
    "validate_scenario",
    "scenario_points",
    "csv_header",
    "sample_rows",
    "run_scenario",
]

SCHEMA_VERSION = 1
KINDS = ("fundamental", "green-half", "freefield-full", "freefield-half")
POINT_SOURCE_KINDS = ("fundamental", "green-half")
HALF_PLANE_KINDS = ("green-half", "freefield-half")

MATERIAL_KEYS = ("c44", "R3", "K2", "rho")


@dataclass(frozen=True)
class Scenario:
    """A validated sampling request for one solution family."""

    kind: str
    omega: float
    source: Optional[tuple[float, float]] = None
    wave: Optional[IncidentWave] = None
    grid: Optional[tuple[tuple[float, float, int], tuple[float, float, int]]] = None
    points: Optional[tuple[tuple[float, float], ...]] = None
    outputs: tuple[str, ...] = ("displacement",)
    normal: Optional[tuple[float, float]] = None


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise ParseError(f"{where}: missing required key {key!r}")
    return doc[key]


def _number(value, key: str, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: key {key!r} must be a number; got {value!r}")
    return float(value)


def _check_schema_version(doc: dict, where: str) -> None:
    version = _require(doc, "schema_version", where)
    if version != SCHEMA_VERSION:
        raise ParseError(
            f"{where}: unsupported schema_version {version!r} (expected {SCHEMA_VERSION})"
        )


def load_material(path) -> QcMaterial:
    """Load and parse a material document; does not run validate()."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"material file {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"material file {path}: expected a JSON object")
    _check_schema_version(doc, f"material file {path}")
    values = {k: _number(_require(doc, k, f"material file {path}"), k, f"material file {path}")
              for k in MATERIAL_KEYS}
    return QcMaterial(**values)


def material_to_dict(m: QcMaterial) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "c44": m.c44,
        "R3": m.R3,
        "K2": m.K2,
        "rho": m.rho,
    }


def _parse_point(value, key: str, where: str) -> tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ParseError(f"{where}: key {key!r} must be a pair [x1, x2]")
    return (_number(value[0], key, where), _number(value[1], key, where))


def parse_scenario(doc: dict, where: str = "scenario") -> Scenario:
    """Build a Scenario from a parsed JSON document."""
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a JSON object")
    _check_schema_version(doc, where)
    kind = _require(doc, "kind", where)
    if kind not in KINDS:
        raise ParseError(f"{where}: kind must be one of {KINDS}; got {kind!r}")
    omega = _number(_require(doc, "omega", where), "omega", where)

    source = None
    wave = None
    if kind in POINT_SOURCE_KINDS:
        source = _parse_point(_require(doc, "source", where), "source", where)
    else:
        wdoc = _require(doc, "wave", where)
        if not isinstance(wdoc, dict):
            raise ParseError(f"{where}: key 'wave' must be an object")
        mode = _require(wdoc, "mode", where + ".wave")
        amp = _require(wdoc, "amplitude", where + ".wave")
        if not isinstance(amp, (list, tuple)) or len(amp) != 2:
            raise ParseError(f"{where}.wave: amplitude must be [re, im]")
        phi = _number(_require(wdoc, "phi", where + ".wave"), "phi", where + ".wave")
        try:
            wave = IncidentWave(
                mode=mode,
                amplitude=complex(_number(amp[0], "amplitude", where),
                                  _number(amp[1], "amplitude", where)),
                phi=phi,
            )
        except ValueError as exc:
            raise ValidationError(f"{where}.wave: {exc}") from exc

    grid = None
    points = None
    if ("grid" in doc) == ("points" in doc):
        raise ParseError(f"{where}: exactly one of 'grid' or 'points' is required")
    if "grid" in doc:
        gdoc = doc["grid"]
        if not isinstance(gdoc, dict):
            raise ParseError(f"{where}: key 'grid' must be an object")
        axes = []
        for axis in ("x1", "x2"):
            spec = _require(gdoc, axis, where + ".grid")
            if not isinstance(spec, (list, tuple)) or len(spec) != 3:
                raise ParseError(f"{where}.grid: {axis} must be [min, max, count]")
            lo = _number(spec[0], axis, where)
            hi = _number(spec[1], axis, where)
            if isinstance(spec[2], bool) or not isinstance(spec[2], int):
                raise ParseError(f"{where}.grid: {axis} count must be an integer")
            axes.append((lo, hi, spec[2]))
        grid = (axes[0], axes[1])
    else:
        pdoc = doc["points"]
        if not isinstance(pdoc, (list, tuple)) or not pdoc:
            raise ParseError(f"{where}: key 'points' must be a non-empty list of pairs")
        points = tuple(_parse_point(p, "points", where) for p in pdoc)

    outputs = tuple(doc.get("outputs", ["displacement"]))
    for out in outputs:
        if out not in ("displacement", "traction"):
            raise ParseError(f"{where}: unknown output {out!r}")
    if not outputs:
        raise ParseError(f"{where}: outputs must not be empty")

    normal = None
    if "normal" in doc:
        normal = _parse_point(doc["normal"], "normal", where)

    return Scenario(kind=kind, omega=omega, source=source, wave=wave, grid=grid,
                    points=points, outputs=outputs, normal=normal)


def load_scenario(path) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"scenario file {path}: {exc}") from exc
    return parse_scenario(doc, where=f"scenario file {path}")


def scenario_to_dict(s: Scenario) -> dict:
    """Canonical JSON-ready form; parse_scenario() round-trips it exactly."""
    doc: dict = {"schema_version": SCHEMA_VERSION, "kind": s.kind, "omega": s.omega}
    if s.source is not None:
        doc["source"] = list(s.source)
    if s.wave is not None:
        doc["wave"] = {
            "mode": s.wave.mode,
            "amplitude": [s.wave.amplitude.real, s.wave.amplitude.imag],
            "phi": s.wave.phi,
        }
    if s.grid is not None:
        doc["grid"] = {"x1": list(s.grid[0]), "x2": list(s.grid[1])}
    if s.points is not None:
        doc["points"] = [list(p) for p in s.points]
    doc["outputs"] = list(s.outputs)
    if s.normal is not None:
        doc["normal"] = list(s.normal)
    return doc


def _axis_values(lo: float, hi: float, count: int) -> list[float]:
    if count == 1:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def scenario_points(s: Scenario) -> list[tuple[float, float]]:
    """Evaluation points in deterministic output order (x1 outer, x2 inner)."""
    if s.points is not None:
        return list(s.points)
    (lo1, hi1, n1), (lo2, hi2, n2) = s.grid
    return [(x1, x2) for x1 in _axis_values(lo1, hi1, n1)
            for x2 in _axis_values(lo2, hi2, n2)]


def validate_scenario(s: Scenario, m: QcMaterial) -> None:
    """Check every scenario invariant before any kernel evaluation."""
    try:
        validate(m)
    except QcError as exc:
        raise ValidationError(f"material: {exc}") from exc
    if not (s.omega > 0.0):
        raise ValidationError(f"omega must be > 0; got {s.omega}")
    if s.grid is not None:
        for axis, (lo, hi, count) in zip(("x1", "x2"), s.grid):
            if count < 1:
                raise ValidationError(f"grid {axis} count must be >= 1; got {count}")
    if "traction" in s.outputs and s.normal is None:
        raise ValidationError("traction output requested but no normal given")
    if s.kind == "green-half":
        if s.source[1] >= 0.0:
            raise ValidationError(
                f"green-half source must have xi2 < 0; got xi2 = {s.source[1]}"
            )
    if s.kind in HALF_PLANE_KINDS:
        for p in scenario_points(s):
            if p[1] > 0.0:
                raise ValidationError(
                    f"half-plane scenario contains point {list(p)} with x2 > 0"
                )


def csv_header(s: Scenario) -> list[str]:
    if s.kind in POINT_SOURCE_KINDS:
        cols = ["x1", "x2"]
        for name in ("u31", "u32", "w31", "w32"):
            cols += [f"{name}_re", f"{name}_im"]
        if "traction" in s.outputs:
            for name in ("t31", "t32", "G31", "G32"):
                cols += [f"{name}_re", f"{name}_im"]
        return cols
    cols = ["x1", "x2", "u3_re", "u3_im", "w3_re", "w3_im"]
    if "traction" in s.outputs:
        cols += ["t3_re", "t3_im", "G3_re", "G3_im"]
    return cols


def _point_source_row(s: Scenario, m: QcMaterial, p) -> list[float]:
    if s.kind == "fundamental":
        v = fundamental_displacement(m, p, s.source, s.omega)
    else:
        v = green_displacement(m, p, s.source, s.omega)
    row = [p[0], p[1]]
    for z in (v[0, 0], v[0, 1], v[1, 0], v[1, 1]):
        row += [z.real, z.imag]
    if "traction" in s.outputs:
        if s.kind == "fundamental":
            t = fundamental_traction(m, p, s.source, s.omega, s.normal)
        else:
            t = green_traction(m, p, s.source, s.omega, s.normal)
        for z in (t[0, 0], t[0, 1], t[1, 0], t[1, 1]):
            row += [z.real, z.imag]
    return row


def _freefield_row(s: Scenario, m: QcMaterial, p) -> list[float]:
    if s.kind == "freefield-full":
        f = fullplane_incident(m, s.wave, s.omega, p)
    else:
        f = halfplane_freefield(m, s.wave, s.omega, p)
    row = [p[0], p[1], f.u3.real, f.u3.imag, f.w3.real, f.w3.imag]
    if "traction" in s.outputs:
        t = freefield_traction(m, s.wave, s.omega, p, s.normal,
                               half_plane=(s.kind == "freefield-half"))
        row += [t[0].real, t[0].imag, t[1].real, t[1].imag]
    return row


def sample_rows(s: Scenario, m: QcMaterial) -> list[list[float]]:
    """Evaluate the scenario; raises EvaluationError naming a failing point."""
    rows = []
    make_row = _point_source_row if s.kind in POINT_SOURCE_KINDS else _freefield_row
    for p in scenario_points(s):
        try:
            rows.append(make_row(s, m, p))
        except QcError as exc:
            raise EvaluationError(f"evaluation failed at point {list(p)}: {exc}") from exc
    return rows


def run_scenario(s: Scenario, m: QcMaterial, out_path, sidecar_path=None) -> int:
    """Validate, evaluate and write the CSV (and optional JSON sidecar).

    Returns the number of data rows written.
    """
    validate_scenario(s, m)
    rows = sample_rows(s, m)
    header = csv_header(s)
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            # repr of builtin float: shortest digits that round-trip exactly
            fh.write(",".join(repr(float(v)) for v in row) + "\n")
    if sidecar_path is not None:
        sidecar = {
            "schema_version": SCHEMA_VERSION,
            "generator": {"package": "qcwaves", "version": __version__},
            "scenario": scenario_to_dict(s),
            "material": material_to_dict(m),
            "rows": len(rows),
        }
        with open(sidecar_path, "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return len(rows)
