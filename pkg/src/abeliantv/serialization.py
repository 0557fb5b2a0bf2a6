"""JSON input parsing and exact report encoding.

Rationals are written as ``{"num": a, "den": b}`` and angles additionally
carry ``"type": "angle"``; no exact quantity is ever written as a float.
"""

from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exact_arith import RationalAngle
from .intlinalg import BlowUp, HandleSlide, HomologySummary, IntegerMatrix, LinkingForm
from .invariants import ExternalLink, PhaseScalar, SurgeryPresentation
from .statesum import CellComplex

__all__ = [
    "InputError",
    "parse_presentation",
    "parse_complex",
    "parse_input",
    "load_input",
    "dump_input",
    "to_jsonable",
    "dumps",
]


class InputError(ValueError):
    """Malformed input; the message names the offending field or position."""


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer, got {value!r}")
    return value


def _int_rows(value, where, cols=None):
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list of rows")
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise InputError(f"{where}[{i}]: expected a list of integers")
        rows.append([_int(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    widths = {len(r) for r in rows}
    if cols is not None:
        widths.add(cols)
    if len(widths) > 1:
        raise InputError(f"{where}: rows have inconsistent lengths {sorted(widths)}")
    return rows


def parse_presentation(obj: dict) -> SurgeryPresentation:
    if "linking_matrix" not in obj:
        raise InputError("missing field 'linking_matrix'")
    rows = _int_rows(obj["linking_matrix"], "linking_matrix")
    if any(len(r) != len(rows) for r in rows):
        raise InputError("linking_matrix: must be square")
    L = IntegerMatrix.from_rows(rows, len(rows))
    if not L.is_symmetric():
        raise InputError("linking_matrix: must be symmetric")
    link = None
    ext = obj.get("external_link")
    if ext is not None:
        if not isinstance(ext, dict) or "lambda" not in ext:
            raise InputError("external_link: expected an object with a 'lambda' list")
        lam = ext["lambda"]
        if not isinstance(lam, list):
            raise InputError("external_link.lambda: expected a list of integers")
        lam = [_int(x, f"external_link.lambda[{i}]") for i, x in enumerate(lam)]
        if len(lam) != L.rows:
            raise InputError(
                f"external_link.lambda: has {len(lam)} entries, linking_matrix has {L.rows} rows"
            )
        link = ExternalLink(tuple(lam), _int(ext.get("framing", 0), "external_link.framing"))
    return SurgeryPresentation(L, link)


def parse_complex(obj: dict) -> CellComplex:
    for key in ("vertices", "edges", "faces", "incidence"):
        if key not in obj:
            raise InputError(f"complex: missing field '{key}'")
    V = _int(obj["vertices"], "complex.vertices")
    E = _int(obj["edges"], "complex.edges")
    F = _int(obj["faces"], "complex.faces")
    rows = _int_rows(obj["incidence"], "complex.incidence", cols=E if obj["incidence"] else None)
    if len(rows) != F:
        raise InputError(f"complex.incidence: has {len(rows)} rows, expected faces = {F}")
    connected = obj.get("connected", True)
    if not isinstance(connected, bool):
        raise InputError("complex.connected: expected a boolean")
    try:
        return CellComplex(V, E, F, IntegerMatrix.from_rows(rows, E), connected)
    except ValueError as exc:
        raise InputError(f"complex: {exc}") from None


def parse_input(obj: Any) -> tuple[SurgeryPresentation | None, CellComplex | None]:
    """Split a decoded input document into its surgery and complex parts."""
    if not isinstance(obj, dict):
        raise InputError("top level: expected a JSON object")
    surgery = parse_presentation(obj) if "linking_matrix" in obj else None
    if "complex" in obj:
        cx = obj["complex"]
        if not isinstance(cx, dict):
            raise InputError("complex: expected an object")
        complex_ = parse_complex(cx)
    elif "vertices" in obj:
        complex_ = parse_complex(obj)
    else:
        complex_ = None
    if surgery is None and complex_ is None:
        raise InputError("input holds neither 'linking_matrix' nor a cell complex")
    return surgery, complex_


def load_input(path: str | Path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_input(obj)


def dump_input(surgery: SurgeryPresentation | None, complex_: CellComplex | None = None) -> dict:
    """Canonical document for the given presentations (inverse of :func:`parse_input`)."""
    out: dict[str, Any] = {}
    if surgery is not None:
        out["linking_matrix"] = surgery.linking.tolist()
        if surgery.external_link is not None:
            out["external_link"] = {
                "lambda": list(surgery.external_link.linking_numbers),
                "framing": surgery.external_link.framing,
            }
    if complex_ is not None:
        out["complex"] = {
            "vertices": complex_.vertices,
            "edges": complex_.edges,
            "faces": complex_.faces,
            "incidence": complex_.incidence.tolist(),
            "connected": complex_.connected,
        }
    return out


def to_jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, RationalAngle):
        return {"num": value.numerator, "den": value.denominator, "type": "angle"}
    if isinstance(value, PhaseScalar):
        return {"magnitude": to_jsonable(value.magnitude), "phase": to_jsonable(value.phase)}
    if isinstance(value, HomologySummary):
        return {"betti1": value.betti1, "torsion": list(value.torsion)}
    if isinstance(value, IntegerMatrix):
        return value.tolist()
    if isinstance(value, LinkingForm):
        return {"orders": list(value.generator_orders), "gram": to_jsonable(value.gram)}
    if isinstance(value, BlowUp):
        return {"move": "blow_up", "sign": value.sign}
    if isinstance(value, HandleSlide):
        return {"move": "handle_slide", "source": value.source, "target": value.target, "sign": value.sign}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if is_dataclass(value):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in fields(value)}
    return str(value)


def dumps(value: Any) -> str:
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2)
