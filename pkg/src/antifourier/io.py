"""JSON/CSV serialization and atomic file output.

JSON schemas (floats serialize via repr, so a dump/load round-trip is
bit-exact):

    {"kind": "classical",    "L": .., "N": .., "a": [..], "b": [..]}
    {"kind": "antiperiodic", "L": .., "N": .., "gamma": .., "alpha": [..], "beta": [..]}
    {"kind": "heat",         "k": .., "L": .., "c": .., "N": .., "A": [..], "B": [..]}

CSV cells are written with 17 significant digits, enough to round-trip a
double.
"""

from __future__ import annotations

import json
import os
import tempfile

from .antiperiodic import AntiperiodicCoefficients
from .classical import ClassicalCoefficients
from .diagnostics import REPORT_COLUMNS
from .errors import ValidationError
from .heat import HeatSolution


def fmt(value) -> str:
    """Format one CSV cell: floats with 17 significant digits."""
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def to_dict(obj) -> dict:
    """Serialize a coefficient or solution object to its JSON schema."""
    if isinstance(obj, ClassicalCoefficients):
        return {
            "kind": "classical",
            "L": obj.L,
            "N": obj.N,
            "a": obj.a.tolist(),
            "b": obj.b.tolist(),
        }
    if isinstance(obj, AntiperiodicCoefficients):
        return {
            "kind": "antiperiodic",
            "L": obj.L,
            "N": obj.N,
            "gamma": obj.gamma,
            "alpha": obj.alpha.tolist(),
            "beta": obj.beta.tolist(),
        }
    if isinstance(obj, HeatSolution):
        return {
            "kind": "heat",
            "k": obj.k,
            "L": obj.L,
            "c": obj.boundary_mean,
            "N": obj.N,
            "A": obj.A.tolist(),
            "B": obj.B.tolist(),
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_dict(data: dict):
    """Inverse of :func:`to_dict`."""
    try:
        kind = data["kind"]
        if kind == "classical":
            obj = ClassicalCoefficients(float(data["L"]), data["a"], data["b"])
        elif kind == "antiperiodic":
            obj = AntiperiodicCoefficients(
                float(data["L"]), float(data["gamma"]), data["alpha"], data["beta"]
            )
        elif kind == "heat":
            obj = HeatSolution(
                float(data["k"]), float(data["L"]), float(data["c"]), data["A"], data["B"]
            )
        else:
            raise ValidationError(f"unknown coefficient kind {kind!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed coefficient object: {exc}") from exc
    if "N" in data and int(data["N"]) != obj.N:
        raise ValidationError(
            f"declared order N={data['N']} does not match array length {obj.N}"
        )
    return obj


def dumps(obj) -> str:
    """JSON text for one object (or a dict of them)."""
    if isinstance(obj, dict):
        payload = {key: to_dict(value) for key, value in obj.items()}
        return json.dumps(payload)
    return json.dumps(to_dict(obj))


def load_coefficients(path: str) -> dict:
    """Load a coefficients JSON file.

    Accepts either a single serialized object or an object keyed by kind
    label (as written by ``coeffs --kind both``).  Returns a dict mapping
    "classical"/"antiperiodic"/"heat" to deserialized objects.
    """
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValidationError(f"{path}: expected a JSON object")
    if "kind" in data:
        obj = from_dict(data)
        return {data["kind"]: obj}
    out = {}
    for key, value in data.items():
        if not isinstance(value, dict):
            raise ValidationError(f"{path}: entry {key!r} is not an object")
        out[key] = from_dict(value)
    if not out:
        raise ValidationError(f"{path}: no coefficient objects found")
    return out


def csv_text(header, rows) -> str:
    """Assemble CSV text (comma separated, trailing newline)."""
    lines = [",".join(header)]
    lines.extend(",".join(fmt(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def report_csv(reports) -> str:
    """CSV text for diagnostics rows in the fixed REPORT_COLUMNS order."""
    rows = [[getattr(r, column) for column in REPORT_COLUMNS] for r in reports]
    return csv_text(REPORT_COLUMNS, rows)


def write_text_atomic(path: str, text: str) -> None:
    """Write ``text`` to ``path`` via a temp file + rename; never leaves a
    partial file behind."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".antifourier-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise
