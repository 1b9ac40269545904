"""Waveform/spectrum series evaluation and CSV/JSON serialization.

CSV files carry a header row and one ``abscissa,value`` record per line,
printed with 17 significant digits so that re-parsing reproduces the
binary doubles exactly.  JSON output is an object with ``grid`` metadata
and parallel ``t``/``value`` arrays.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from . import closed_form, quadrature, signals, spectral

MAX_EXPORT_POINTS = 10_000_000

# functions evaluated against an angular-frequency axis
SPECTRUM_FUNCTIONS = ("phi_spectrum", "psi_spectrum_magnitude")

FUNCTIONS = ("phi", "psi", "psi1", "psi2",
             "phi_spectrum", "psi_spectrum_magnitude",
             "envelope", "s_c", "s_s",
             "phi_oracle", "psi_oracle")

__all__ = ["InvalidRequest", "ExportRequest", "FUNCTIONS",
           "SPECTRUM_FUNCTIONS", "grid_points", "evaluate_series",
           "write_csv", "write_json", "parse_csv"]


class InvalidRequest(ValueError):
    pass


@dataclass(frozen=True)
class ExportRequest:
    function: str
    t_start: float
    t_end: float
    step: float
    format: str = "csv"

    def __post_init__(self):
        if self.function not in FUNCTIONS:
            raise InvalidRequest(f"unknown function {self.function!r}")
        if not (self.t_start < self.t_end):
            raise InvalidRequest("start must be below end")
        if not self.step > 0:
            raise InvalidRequest("step must be positive")
        if (self.t_end - self.t_start) / self.step > MAX_EXPORT_POINTS:
            raise InvalidRequest("export would exceed the point budget")
        if self.format not in ("csv", "json"):
            raise InvalidRequest(f"unknown format {self.format!r}")


def grid_points(t_start, t_end, step):
    n = int(math.floor((t_end - t_start) / step * (1.0 + 1e-12))) + 1
    return t_start + step * np.arange(n)


def evaluate_series(req, cutoff=signals.DEFAULT_CUTOFF, quad_cfg=None):
    """Evaluate the requested series; returns (axis_label, axis, values)."""
    t = grid_points(req.t_start, req.t_end, req.step)
    name = req.function
    if name in ("phi", "psi", "psi1", "psi2"):
        return "t", t, getattr(closed_form, name)(t)
    if name == "phi_spectrum":
        return "w", t, spectral.scale_spectrum(t)
    if name == "psi_spectrum_magnitude":
        return "w", t, spectral.wavelet_spectrum_magnitude(t)
    if name in ("phi_oracle", "psi_oracle"):
        fn = getattr(quadrature, name)
        return "t", t, np.array([fn(tv, quad_cfg) for tv in t])
    # grid-coupled signal operations: the export grid is the DFT grid
    sig = signals.SampledSignal(t[0], req.step, closed_form.psi(t))
    if name == "envelope":
        return "t", t, signals.envelope(sig).samples
    s_c, s_s = signals.decompose_quadrature(sig, cutoff)
    return "t", t, (s_c if name == "s_c" else s_s).samples


def write_csv(stream, name, axis_label, axis, values):
    stream.write(f"{axis_label},{name}\n")
    for a, v in zip(axis, values):
        stream.write(f"{a:.17g},{v:.17g}\n")


def write_json(stream, name, axis_label, axis, values):
    payload = {
        "function": name,
        "grid": {"axis": axis_label, "start": axis[0], "stop": axis[-1],
                 "step": float(axis[1] - axis[0]), "count": len(axis)},
        "t": list(map(float, axis)),
        "value": list(map(float, values)),
    }
    json.dump(payload, stream, indent=2)
    stream.write("\n")


def parse_csv(text):
    """Inverse of write_csv; returns (header, axis array, value array)."""
    lines = [ln for ln in text.splitlines() if ln]
    header = lines[0]
    rows = [ln.split(",") for ln in lines[1:]]
    axis = np.array([float(r[0]) for r in rows])
    values = np.array([float(r[1]) for r in rows])
    return header, axis, values
