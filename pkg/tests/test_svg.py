"""SVG rendering: structure, geometry conventions, and overlays."""
import re
import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest

from pqbezier import PqBezierCurve, PqParams, evaluate
from pqbezier.svg import render_svg

P21F = PqParams.float_params(2.0, 1.0)


def curve2d():
    return PqBezierCurve(((0.0, 0.0), (1.0, 2.0), (3.0, 1.0)), P21F)


def parse(svg_text):
    return ET.fromstring(svg_text)


def strip_ns(tag):
    return tag.rsplit("}", 1)[-1]


def all_tags(root):
    return [strip_ns(el.tag) for el in root.iter()]


class TestStructure:
    def test_well_formed_and_has_core_elements(self):
        svg = render_svg(curve2d())
        root = parse(svg)
        assert strip_ns(root.tag) == "svg"
        tags = all_tags(root)
        assert "polyline" in tags
        assert "g" in tags

    def test_flips_vertical_axis(self):
        svg = render_svg(curve2d())
        assert 'transform="scale(1,-1)"' in svg

    def test_viewbox_covers_geometry_with_margin(self):
        # curve alone: box snugly fits the sampled points plus a margin
        root = parse(render_svg(curve2d()))
        x0, y0, w, h = (float(v) for v in root.get("viewBox").split())
        assert x0 < 0 and x0 > -0.5
        assert w > 3
        # with the control polygon shown the box must reach the y=2 vertex
        root = parse(render_svg(curve2d(), show_polygon=True))
        x0, y0, w, h = (float(v) for v in root.get("viewBox").split())
        assert y0 <= -2.0 and h > 2.0

    def test_sample_count_respected(self):
        svg = render_svg(curve2d(), samples=5)
        root = parse(svg)
        curve_polyline = next(
            el
            for el in root.iter()
            if strip_ns(el.tag) == "polyline" and "1f77b4" in (el.get("stroke") or "")
        )
        assert len(curve_polyline.get("points").split()) == 5

    def test_too_few_samples_rejected(self):
        with pytest.raises(ValueError):
            render_svg(curve2d(), samples=1)


class TestOverlays:
    def test_polygon_drawn_when_requested(self):
        plain = render_svg(curve2d())
        with_poly = render_svg(curve2d(), show_polygon=True)
        assert "888888" not in plain
        assert "888888" in with_poly

    def test_triangle_rows_are_raw_values(self):
        c = PqBezierCurve((0.0, 1.0, 0.0), P21F)
        svg = render_svg(c, triangle_at=0.5, algorithm="dc1")
        root = parse(svg)
        reds = [
            el
            for el in root.iter()
            if strip_ns(el.tag) in ("polyline", "circle") and "d62728" in (el.get("stroke") or el.get("fill") or "")
        ]
        assert reds, "triangle overlay missing"
        # the raw apex 0.75 must appear as a vertex y-value; the on-curve
        # marker sits at the true curve value 0.375
        text = svg
        assert "0.75" in text
        assert "0.375" in text

    def test_marker_lies_on_curve(self):
        c = curve2d()
        t = 0.3
        svg = render_svg(c, triangle_at=t)
        root = parse(svg)
        marker = next(
            el
            for el in root.iter()
            if strip_ns(el.tag) == "circle" and "1f77b4" in (el.get("fill") or "")
        )
        x, y = float(marker.get("cx")), float(marker.get("cy"))
        want = evaluate(c, t)
        assert abs(x - want[0]) < 1e-9 and abs(y - want[1]) < 1e-9


class TestOneDimensionalLifting:
    def test_scalar_curve_plots_value_graph(self):
        c = PqBezierCurve((0.0, 1.0, 0.0), P21F)
        svg = render_svg(c, samples=3)
        root = parse(svg)
        curve_polyline = next(
            el
            for el in root.iter()
            if strip_ns(el.tag) == "polyline" and "1f77b4" in (el.get("stroke") or "")
        )
        pts = [tuple(map(float, pair.split(","))) for pair in curve_polyline.get("points").split()]
        assert pts[0] == (0.0, 0.0)
        assert pts[1] == (0.5, 0.375)
        assert pts[2] == (1.0, 0.0)


class TestExactModeInput:
    def test_rational_curve_renders(self):
        c = PqBezierCurve((F(0), F(1), F(0)), PqParams.exact_params(2, 1))
        svg = render_svg(c, samples=9, show_polygon=True, triangle_at=F(1, 2))
        parse(svg)

    def test_three_dimensional_projection(self):
        c = PqBezierCurve(((0.0, 0.0, 5.0), (1.0, 2.0, 6.0)), P21F)
        svg = render_svg(c)
        root = parse(svg)
        x0, y0, w, h = (float(v) for v in root.get("viewBox").split())
        # projection keeps x/y only, so the box tracks those extents
        assert w < 2.0 and h < 3.0


class TestDegenerateExtent:
    def test_single_point_curve(self):
        c = PqBezierCurve(((2.0, 2.0), (2.0, 2.0)), P21F)
        svg = render_svg(c)
        root = parse(svg)
        _, _, w, h = (float(v) for v in root.get("viewBox").split())
        assert w > 0 and h > 0
