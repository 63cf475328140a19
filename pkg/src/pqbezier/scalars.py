"""Scalar plumbing: exact/float modes, (p,q) parameter pairs, point helpers.

Exact mode works on fractions.Fraction (always lowest terms, positive
denominator); float mode works on Python floats.  A computation never mixes
modes: every public entry point coerces its scalar inputs through the
governing PqParams first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, float, Fraction]

EXACT = "exact"
FLOAT = "float"


class ModeError(TypeError):
    """A scalar of the wrong arithmetic mode reached a computation."""


def parse_scalar(text: str, exact: bool) -> Scalar:
    """Parse "3", "3/8" or "0.375".  Decimals are rejected in exact mode."""
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        frac = Fraction(int(num), int(den))
        return frac if exact else float(frac)
    try:
        as_int = int(s)
    except ValueError:
        try:
            as_float = float(s)
        except ValueError:
            raise ValueError(f"cannot parse scalar {text!r}") from None
        if exact:
            raise ModeError(f"decimal literal {text!r} not allowed in exact mode")
        return as_float
    return Fraction(as_int) if exact else float(as_int)


def format_scalar(x: Scalar) -> str:
    """Render a scalar for text output; exact values print as num/den."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def coerce_scalar(x, exact: bool) -> Scalar:
    """Bring one value into the requested mode. No silent float->exact."""
    if isinstance(x, str):
        return parse_scalar(x, exact)
    if exact:
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise ModeError(f"exact mode requires int/Fraction inputs, got {type(x).__name__}")
        return Fraction(x)
    if isinstance(x, Fraction):
        return float(x)
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return float(x)
    raise ModeError(f"cannot coerce {type(x).__name__} to float mode")


@dataclass(frozen=True)
class PqParams:
    """Shape-parameter pair (p, q) plus arithmetic mode.

    n_context optionally records the degree that parameter-validity checks
    should assume when none is passed explicitly.
    """

    p: Scalar
    q: Scalar
    mode: str = EXACT
    n_context: int | None = None

    def __post_init__(self):
        if self.mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown mode {self.mode!r}")
        object.__setattr__(self, "p", coerce_scalar(self.p, self.exact))
        object.__setattr__(self, "q", coerce_scalar(self.q, self.exact))
        if self.n_context is not None and self.n_context < 0:
            raise ValueError("n_context must be nonnegative")

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    @classmethod
    def exact_params(cls, p, q, n_context: int | None = None) -> "PqParams":
        return cls(p, q, EXACT, n_context)

    @classmethod
    def float_params(cls, p, q, n_context: int | None = None) -> "PqParams":
        return cls(p, q, FLOAT, n_context)

    def coerce(self, x) -> Scalar:
        return coerce_scalar(x, self.exact)

    def one(self) -> Scalar:
        return Fraction(1) if self.exact else 1.0

    def zero(self) -> Scalar:
        return Fraction(0) if self.exact else 0.0


# ---------------------------------------------------------------------------
# Point helpers.  A point is either a bare scalar (1-D) or a tuple of scalars.
# All curve/blossom algorithms are written against these so they stay
# dimension-agnostic.

Point = Union[Scalar, tuple]


def point_dimension(pt: Point) -> int:
    return len(pt) if isinstance(pt, tuple) else 1


def coerce_point(pt, params: PqParams) -> Point:
    if isinstance(pt, (tuple, list)):
        return tuple(params.coerce(c) for c in pt)
    return params.coerce(pt)


def scale(c: Scalar, pt: Point) -> Point:
    if isinstance(pt, tuple):
        return tuple(c * x for x in pt)
    return c * pt


def add(a: Point, b: Point) -> Point:
    if isinstance(a, tuple):
        return tuple(x + y for x, y in zip(a, b))
    return a + b


def combine(ca: Scalar, a: Point, cb: Scalar, b: Point) -> Point:
    """ca*a + cb*b, elementwise."""
    if isinstance(a, tuple):
        return tuple(ca * x + cb * y for x, y in zip(a, b))
    return ca * a + cb * b


def zero_point_like(pt: Point, params: PqParams) -> Point:
    z = params.zero()
    if isinstance(pt, tuple):
        return tuple(z for _ in pt)
    return z


def weighted_sum(weights: Sequence[Scalar], points: Sequence[Point], params: PqParams) -> Point:
    acc = zero_point_like(points[0], params)
    for w, pt in zip(weights, points):
        acc = add(acc, scale(w, pt))
    return acc


def points_equal(a: Point, b: Point) -> bool:
    if isinstance(a, tuple) != isinstance(b, tuple):
        return False
    if isinstance(a, tuple):
        return len(a) == len(b) and all(x == y for x, y in zip(a, b))
    return a == b
