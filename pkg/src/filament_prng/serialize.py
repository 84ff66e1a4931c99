"""CSV / JSON / raw-float writers.

CSV uses '.' decimals, LF line endings, and 17 significant digits so every
double round-trips; identical inputs therefore produce byte-identical
output.  The f64le format is a bare little-endian stream of 64-bit floats
for feeding external test batteries.
"""

from __future__ import annotations

import json
import struct
from typing import Iterable, Sequence

import numpy as np

from .filament import CirclePoint
from .prng import UnitSample


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def unit_samples_csv(samples: Sequence[UnitSample], q: int | None = None) -> str:
    """Rows (n, x, u) when the integer state is recoverable as u*q, else (n, u)."""
    if q is not None:
        lines = ["n,x,u"]
        lines += [
            f"{s.n},{round(s.u * q)},{format_float(s.u)}" for s in samples
        ]
    else:
        lines = ["n,u"]
        lines += [f"{s.n},{format_float(s.u)}" for s in samples]
    return "\n".join(lines) + "\n"


def unit_samples_json(samples: Sequence[UnitSample], q: int | None = None) -> str:
    if q is not None:
        rows = [{"n": s.n, "x": round(s.u * q), "u": s.u} for s in samples]
    else:
        rows = [{"n": s.n, "u": s.u} for s in samples]
    return json.dumps(rows, indent=2) + "\n"


def circle_points_csv(points: Sequence[CirclePoint]) -> str:
    lines = ["p,re,im"]
    lines += [
        f"{pt.p},{format_float(pt.re)},{format_float(pt.im)}" for pt in points
    ]
    return "\n".join(lines) + "\n"


def circle_points_json(points: Sequence[CirclePoint]) -> str:
    rows = [{"p": pt.p, "re": pt.re, "im": pt.im} for pt in points]
    return json.dumps(rows, indent=2) + "\n"


def f64le_bytes(values: Iterable[float]) -> bytes:
    vals = list(values)
    return struct.pack(f"<{len(vals)}d", *vals)


def polygon_csv(vertices: np.ndarray) -> str:
    lines = ["index,x,y,z"]
    for i, (x, y, z) in enumerate(vertices):
        lines.append(
            f"{i},{format_float(x)},{format_float(y)},{format_float(z)}"
        )
    return "\n".join(lines) + "\n"


def polygon_json(vertices: np.ndarray) -> str:
    rows = [
        {"index": i, "x": float(x), "y": float(y), "z": float(z)}
        for i, (x, y, z) in enumerate(vertices)
    ]
    return json.dumps(rows, indent=2) + "\n"


def report_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"
