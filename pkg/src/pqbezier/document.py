"""Curve documents: the JSON object shared by the CLI, the service, and the UI.

Shape (version 1, the only version):

    {
      "version": 1,
      "degree": n,
      "dimension": d,            # 1, 2 or 3
      "p": number | "num/den",
      "q": number | "num/den",
      "points": [[d numbers | rational strings], ...]   # length n + 1
    }

Unknown fields are rejected.  In exact mode scalars serialize as rational
strings and decimal input is refused; in float mode everything converts to
floats (rational strings are accepted and converted).
"""
from __future__ import annotations

import json
from fractions import Fraction

from .curve import PqBezierCurve
from .scalars import ModeError, PqParams, Scalar, format_scalar, parse_scalar

DOCUMENT_VERSION = 1
_FIELDS = {"version", "degree", "dimension", "p", "q", "points"}


class DocumentError(ValueError):
    """The object does not conform to the curve document schema."""


def parse_number(value, exact: bool, what: str) -> Scalar:
    """One scalar from decoded JSON: int, float, or rational string."""
    if isinstance(value, bool):
        raise DocumentError(f"{what} must be a number or rational string")
    if isinstance(value, str):
        try:
            return parse_scalar(value, exact)
        except ModeError as exc:
            raise DocumentError(str(exc)) from None
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{what}: {exc}") from None
    if isinstance(value, int):
        return Fraction(value) if exact else float(value)
    if isinstance(value, float):
        if exact:
            raise DocumentError(f"{what}: decimal values are not allowed in exact mode")
        return value
    raise DocumentError(f"{what} must be a number or rational string")


def parse_document(obj, exact: bool = False) -> PqBezierCurve:
    """Validate a decoded JSON object and build the curve it describes.

    Schema violations raise DocumentError; parameter-domain violations
    (nonpositive p or q) surface as ValueError from the curve constructor.
    """
    if not isinstance(obj, dict):
        raise DocumentError("curve document must be a JSON object")
    unknown = set(obj) - _FIELDS
    if unknown:
        raise DocumentError(f"unknown document fields: {', '.join(sorted(unknown))}")
    missing = _FIELDS - set(obj)
    if missing:
        raise DocumentError(f"missing document fields: {', '.join(sorted(missing))}")
    version = obj["version"]
    if isinstance(version, bool) or version != DOCUMENT_VERSION:
        raise DocumentError(f"unsupported document version {version!r}")
    degree = obj["degree"]
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 0:
        raise DocumentError("degree must be a nonnegative integer")
    dimension = obj["dimension"]
    if isinstance(dimension, bool) or dimension not in (1, 2, 3):
        raise DocumentError("dimension must be 1, 2 or 3")
    p = parse_number(obj["p"], exact, "p")
    q = parse_number(obj["q"], exact, "q")
    raw_points = obj["points"]
    if not isinstance(raw_points, list) or len(raw_points) != degree + 1:
        raise DocumentError("points must be an array of length degree + 1")
    points = []
    for idx, raw in enumerate(raw_points):
        if not isinstance(raw, list) or len(raw) != dimension:
            raise DocumentError(
                f"points[{idx}] must be an array of {dimension} coordinate(s)"
            )
        coords = [parse_number(c, exact, f"points[{idx}]") for c in raw]
        points.append(coords[0] if dimension == 1 else tuple(coords))
    params = PqParams.exact_params(p, q) if exact else PqParams.float_params(p, q)
    return PqBezierCurve(tuple(points), params)


def _emit_scalar(x: Scalar, exact: bool):
    return format_scalar(x) if exact else float(x)


def document_from_curve(curve: PqBezierCurve) -> dict:
    """Serialize a curve back to the document shape (mode-preserving)."""
    exact = curve.params.exact
    points = []
    for pt in curve.control_points:
        coords = pt if isinstance(pt, tuple) else (pt,)
        points.append([_emit_scalar(c, exact) for c in coords])
    return {
        "version": DOCUMENT_VERSION,
        "degree": curve.degree,
        "dimension": curve.dimension,
        "p": _emit_scalar(curve.params.p, exact),
        "q": _emit_scalar(curve.params.q, exact),
        "points": points,
    }


def point_as_list(pt) -> list:
    """Wire form of one point: always an array, floats only."""
    coords = pt if isinstance(pt, tuple) else (pt,)
    return [float(c) for c in coords]


def load_document(path, exact: bool = False) -> PqBezierCurve:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON in {path}: {exc}") from None
    return parse_document(obj, exact)


def save_document(path, curve: PqBezierCurve) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(document_from_curve(curve), fh, indent=2)
        fh.write("\n")
