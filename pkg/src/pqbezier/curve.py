"""(p,q)-Bezier curves: evaluation, elevation, subdivision, conversions.

A curve of degree n is S(t) = sum_k P_k B_k^n(t; p, q) over t in [0, 1].
Three de Casteljau-style pyramids (two fixed level orders plus one per
permutation of the levels) all finish at p^(n(n-1)/2) * S(t); evaluate()
divides that constant back out.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .basis import (
    bernstein_basis_all,
    pq_binomial,
    pq_expansion_coefficients,
    pq_integer,
)
from .blossom import (
    BlossomForm,
    Polynomial,
    blossom_from_polynomial,
    dual_control_points,
)
from .scalars import (
    Point,
    PqParams,
    Scalar,
    add,
    coerce_point,
    point_dimension,
    scale,
    weighted_sum,
)

ALGORITHMS = ("direct", "dc1", "dc2", "perm")


@dataclass(frozen=True)
class PqBezierCurve:
    """Control points plus the (p, q) parameters (both > 0)."""

    control_points: tuple
    params: PqParams

    def __post_init__(self):
        pts = tuple(coerce_point(pt, self.params) for pt in self.control_points)
        if not pts:
            raise ValueError("need at least one control point")
        dim = point_dimension(pts[0])
        if any(point_dimension(pt) != dim for pt in pts):
            raise ValueError("control points must share one dimension")
        if dim not in (1, 2, 3):
            raise ValueError("dimension must be 1, 2, or 3")
        if not (self.params.p > 0 and self.params.q > 0):
            raise ValueError("curve parameters require p > 0 and q > 0")
        object.__setattr__(self, "control_points", pts)

    @property
    def degree(self) -> int:
        return len(self.control_points) - 1

    @property
    def dimension(self) -> int:
        return point_dimension(self.control_points[0])


@dataclass(frozen=True)
class EvaluationTriangle:
    """Raw pyramid rows of one de Casteljau run (no normalization).

    rows[0] is the control polygon; rows[n] holds the single apex point,
    which equals p^(n(n-1)/2) times the curve point.
    """

    algorithm: str
    parameter: Scalar
    rows: tuple

    @property
    def apex(self) -> Point:
        return self.rows[-1][0]


@dataclass(frozen=True)
class SubdivisionResult:
    """Exact left piece plus a sampled polyline covering the right piece."""

    r: Scalar
    left: PqBezierCurve
    right_samples: tuple


def _apex_normalization(n: int, params: PqParams) -> Scalar:
    return params.p ** (n * (n - 1) // 2)


def _triangle_dc1(points, n, t, params: PqParams):
    p, q = params.p, params.q
    rows = [tuple(points)]
    for k in range(1, n + 1):
        prev = rows[-1]
        row = []
        for i in range(n - k + 1):
            w = p**i * q ** (n - k - i) * t
            row.append(add(scale(p ** (n - k) - w, prev[i]), scale(w, prev[i + 1])))
        rows.append(tuple(row))
    return rows


def _triangle_dc2(points, n, t, params: PqParams):
    p, q = params.p, params.q
    rows = [tuple(points)]
    for k in range(1, n + 1):
        prev = rows[-1]
        row = []
        for i in range(n - k + 1):
            a = q**i * (p ** (n - k - i) - q ** (n - k - i) * t)
            b = p ** (n - k) * t
            row.append(add(scale(a, prev[i]), scale(b, prev[i + 1])))
        rows.append(tuple(row))
    return rows


def _triangle_perm(points, n, t, sigma, params: PqParams):
    p, q = params.p, params.q
    rows = [tuple(points)]
    for k in range(n):
        e = sigma[k] - 1
        prev = rows[-1]
        row = []
        for i in range(len(prev) - 1):
            exp = e - i
            if exp < 0 and q == 0:
                raise ValueError("q must be nonzero")
            w = p**i * q**exp * t
            row.append(add(scale(p**e - w, prev[i]), scale(w, prev[i + 1])))
        rows.append(tuple(row))
    return rows


def _check_sigma(sigma: Sequence[int], n: int) -> tuple:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"sigma must be a permutation of 1..{n}")
    return sigma


def intermediate_points(
    curve: PqBezierCurve, t, algorithm: str = "dc1", sigma: Sequence[int] | None = None
) -> EvaluationTriangle:
    """Full pyramid of one run; rows keep the raw (unnormalized) values."""
    n = curve.degree
    params = curve.params
    t = params.coerce(t)
    if algorithm == "dc1":
        rows = _triangle_dc1(curve.control_points, n, t, params)
    elif algorithm == "dc2":
        rows = _triangle_dc2(curve.control_points, n, t, params)
    elif algorithm == "perm":
        sigma = _check_sigma(sigma if sigma is not None else range(1, n + 1), n)
        rows = _triangle_perm(curve.control_points, n, t, sigma, params)
        return EvaluationTriangle(f"perm{sigma}", t, tuple(rows))
    else:
        raise ValueError("triangles exist for dc1, dc2, perm")
    return EvaluationTriangle(algorithm, t, tuple(rows))


def evaluate(curve: PqBezierCurve, t, algorithm: str = "direct") -> Point:
    """Point on the curve at t by the chosen algorithm.

    All algorithms agree exactly in rational mode; the pyramid variants
    divide their apex by p^(n(n-1)/2).
    """
    n = curve.degree
    params = curve.params
    t = params.coerce(t)
    if algorithm == "direct":
        values = bernstein_basis_all(n, t, params)
        return weighted_sum(values.values, list(curve.control_points), params)
    if algorithm in ("dc1", "dc2"):
        tri = intermediate_points(curve, t, algorithm)
        return scale(1 / _apex_normalization(n, params), tri.apex)
    if algorithm == "perm":
        return evaluate_permuted(curve, t, range(1, n + 1))
    raise ValueError(f"unknown algorithm {algorithm!r}")


def evaluate_permuted(curve: PqBezierCurve, t, sigma: Sequence[int]) -> Point:
    """Pyramid evaluation with levels taken in the order given by sigma."""
    n = curve.degree
    params = curve.params
    sigma = _check_sigma(sigma, n)
    t = params.coerce(t)
    rows = _triangle_perm(curve.control_points, n, t, sigma, params)
    return scale(1 / _apex_normalization(n, params), rows[-1][0])


def degree_elevate(curve: PqBezierCurve) -> PqBezierCurve:
    """Same curve written to degree n+1.

    New points: P'_k = q^(n+1-k)([k]/[n+1]) P_{k-1} + p^k([n+1-k]/[n+1]) P_k,
    with the missing ends dropping out (P'_0 = P_0, P'_{n+1} = P_n).  The
    blend is exact: no global power of p is needed.
    """
    n = curve.degree
    params = curve.params
    p, q = params.p, params.q
    denom = pq_integer(n + 1, params)
    pts = curve.control_points
    new_points = []
    for k in range(n + 2):
        acc = None
        if 1 <= k:
            w_prev = q ** (n + 1 - k) * pq_integer(k, params) / denom
            acc = scale(w_prev, pts[k - 1])
        if k <= n:
            w_keep = p**k * pq_integer(n + 1 - k, params) / denom
            kept = scale(w_keep, pts[k])
            acc = kept if acc is None else add(acc, kept)
        new_points.append(acc)
    return PqBezierCurve(tuple(new_points), params)


def polynomial_from_curve(curve: PqBezierCurve) -> Polynomial:
    """Monomial coefficients of S(t); exact in rational mode."""
    n = curve.degree
    params = curve.params
    p = params.p
    norm = p ** (-(n * (n - 1) // 2))
    coeffs = [None] * (n + 1)
    for i, pt in enumerate(curve.control_points):
        lead = norm * pq_binomial(n, i, params) * p ** (i * (i - 1) // 2)
        for k, e_k in enumerate(pq_expansion_coefficients(n - i, params)):
            term = scale(lead * e_k, pt)
            idx = i + k
            coeffs[idx] = term if coeffs[idx] is None else add(coeffs[idx], term)
    return Polynomial(tuple(coeffs))


def curve_from_polynomial(poly: Polynomial, params: PqParams) -> PqBezierCurve:
    """Control points of the polynomial via its blossom's dual functionals."""
    form = blossom_from_polynomial(poly, params)
    return PqBezierCurve(tuple(dual_control_points(form)), params)


def blossom_form_from_curve(curve: PqBezierCurve) -> BlossomForm:
    return blossom_from_polynomial(polynomial_from_curve(curve), curve.params)


def subdivide_left(curve: PqBezierCurve, r) -> PqBezierCurve:
    """Exact control points of the restriction to [0, r], reparametrized.

    L_i = sum_{k<=i} P_k B_k^i(r), so left(t) = source(r t) for all t.
    """
    params = curve.params
    r = params.coerce(r)
    if not (0 < r < 1):
        raise ValueError("r must lie strictly inside (0, 1)")
    pts = curve.control_points
    new_points = []
    for i in range(curve.degree + 1):
        values = bernstein_basis_all(i, r, params)
        new_points.append(weighted_sum(values.values, list(pts[: i + 1]), params))
    return PqBezierCurve(tuple(new_points), params)


def _distance(a: Point, b: Point) -> float:
    if isinstance(a, tuple):
        return math.sqrt(sum((float(x) - float(y)) ** 2 for x, y in zip(a, b)))
    return abs(float(a) - float(b))


def _midpoint(a: Point, b: Point) -> Point:
    if isinstance(a, tuple):
        return tuple((x + y) / 2 for x, y in zip(a, b))
    return (a + b) / 2


def adaptive_polyline(
    curve: PqBezierCurve, a, b, tolerance: float = 1e-6, max_depth: int = 14
) -> list:
    """Points of evaluate() over [a, b], bisected until each chord midpoint
    deviates from the curve by less than tolerance."""
    params = curve.params
    a = params.coerce(a)
    b = params.coerce(b)
    pa = evaluate(curve, a)
    pb = evaluate(curve, b)
    out = [pa]

    def refine(ta, fa, tb, fb, depth):
        # contract: append every polyline point after fa, through fb
        tm = (ta + tb) / 2
        fm = evaluate(curve, tm)
        if depth >= max_depth or _distance(fm, _midpoint(fa, fb)) < tolerance:
            out.append(fm)
            out.append(fb)
            return
        refine(ta, fa, tm, fm, depth + 1)
        refine(tm, fm, tb, fb, depth + 1)

    refine(a, pa, b, pb, 0)
    return out


def subdivide(
    curve: PqBezierCurve, r, tolerance: float = 1e-6, max_depth: int = 14
) -> SubdivisionResult:
    """Exact left piece at r; right piece returned as an adaptive polyline."""
    params = curve.params
    r = params.coerce(r)
    left = subdivide_left(curve, r)
    samples = adaptive_polyline(curve, r, 1, tolerance=tolerance, max_depth=max_depth)
    return SubdivisionResult(r, left, tuple(samples))


def flatten(curve: PqBezierCurve, samples: int) -> list:
    """Uniform polyline with the endpoints included; samples >= 2."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    params = curve.params
    step_points = []
    for j in range(samples):
        t = Fraction(j, samples - 1) if params.exact else j / (samples - 1)
        step_points.append(evaluate(curve, t))
    return step_points
