"""Standalone SVG rendering: curve polyline, control polygon, triangle overlay.

Geometry is emitted y-up inside a <g transform="scale(1,-1)"> group, so the
coordinates written to the file match the curve document while the on-screen
image is y-down as SVG expects.  The viewBox is the bounding box of all drawn
geometry expanded by 5% per side.

Scalar (1-D) curves are lifted to the plane for display: control point i sits
at abscissa i/n, a curve sample at parameter t sits at abscissa t, and
triangle row k vertex i at (i + k*t)/n, which interpolates between the two
conventions so the apex column lines up with the sampled curve point.
3-D curves project onto the xy plane.
"""
from __future__ import annotations

from .curve import PqBezierCurve, evaluate, flatten, intermediate_points
from .scalars import PqParams


def _as_float_curve(curve: PqBezierCurve) -> PqBezierCurve:
    if not curve.params.exact:
        return curve
    params = PqParams.float_params(curve.params.p, curve.params.q)
    points = tuple(
        tuple(float(c) for c in pt) if isinstance(pt, tuple) else float(pt)
        for pt in curve.control_points
    )
    return PqBezierCurve(points, params)


def _plane(pt, x_for_scalar: float) -> tuple:
    if isinstance(pt, tuple):
        return (float(pt[0]), float(pt[1]))  # 2-D as is, 3-D projected
    return (x_for_scalar, float(pt))


def _fmt(x: float) -> str:
    return repr(float(x))


def _polyline(points, stroke, width, dash=None) -> str:
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<polyline points="{coords}" fill="none" stroke="{stroke}"'
        f' stroke-width="{_fmt(width)}"{dash_attr} vector-effect="non-scaling-stroke"/>'
    )


def _circle(x, y, r, fill) -> str:
    return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}" fill="{fill}"/>'


def render_svg(
    curve: PqBezierCurve,
    samples: int = 128,
    show_polygon: bool = False,
    triangle_at=None,
    algorithm: str = "dc1",
    sigma=None,
) -> str:
    """Render the curve to a standalone SVG string.

    triangle_at draws the intermediate-point rows of the chosen evaluation
    recurrence at that parameter, exactly as intermediate_points returns
    them, plus a marker on the curve point itself.
    """
    if samples < 2:
        raise ValueError("samples must be at least 2")
    fcurve = _as_float_curve(curve)
    n = fcurve.degree

    def lift_control(i, pt):
        return _plane(pt, (i / n) if n else 0.0)

    curve_pts = [
        _plane(pt, j / (samples - 1))
        for j, pt in enumerate(flatten(fcurve, samples))
    ]
    groups = []
    polygon_pts = [lift_control(i, pt) for i, pt in enumerate(fcurve.control_points)]
    everything = list(curve_pts)

    if show_polygon:
        everything.extend(polygon_pts)
    triangle_rows = []
    marker = None
    if triangle_at is not None:
        t = float(triangle_at)
        tri_alg = algorithm if algorithm in ("dc1", "dc2", "perm") else "dc1"
        tri = intermediate_points(fcurve, t, tri_alg, sigma)
        for k, row in enumerate(tri.rows):
            lifted = [
                _plane(pt, ((i + k * t) / n) if n else 0.0)
                for i, pt in enumerate(row)
            ]
            triangle_rows.append(lifted)
            everything.extend(lifted)
        marker = _plane(evaluate(fcurve, t), t)
        everything.append(marker)

    xs = [pt[0] for pt in everything]
    ys = [pt[1] for pt in everything]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    width = (x1 - x0) or 1.0
    height = (y1 - y0) or 1.0
    pad_x, pad_y = 0.05 * width, 0.05 * height
    view = (
        x0 - pad_x,
        -(y1 + pad_y),  # y axis flips inside the transform group
        width + 2 * pad_x,
        height + 2 * pad_y,
    )
    stroke = max(width, height) / 200.0
    dot = 1.6 * stroke

    if show_polygon:
        groups.append(_polyline(polygon_pts, "#888888", stroke, dash=f"{_fmt(3 * stroke)}"))
        groups.extend(_circle(x, y, dot, "#888888") for x, y in polygon_pts)
    for row in triangle_rows:
        if len(row) > 1:
            groups.append(_polyline(row, "#d62728", 0.6 * stroke))
        groups.extend(_circle(x, y, 0.8 * dot, "#d62728") for x, y in row)
    groups.append(_polyline(curve_pts, "#1f77b4", stroke))
    if marker is not None:
        groups.append(_circle(marker[0], marker[1], 1.2 * dot, "#1f77b4"))

    body = "\n    ".join(groups)
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(view[0])} {_fmt(view[1])} {_fmt(view[2])} {_fmt(view[3])}" '
        f'width="640" height="{_fmt(640 * view[3] / view[2])}">\n'
        '  <g transform="scale(1,-1)">\n'
        f"    {body}\n"
        "  </g>\n"
        "</svg>\n"
    )
