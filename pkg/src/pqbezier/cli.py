"""Command line front end: eval, plot, elevate, subdivide, audit, serve.

Exit codes: 0 success, 1 audit found a failing identity, 2 usage or input
errors, 3 I/O errors.  Rational values are accepted anywhere a number is
accepted, as "num/den" strings; decimal input implies float mode unless
--exact is given, in which case decimals are rejected rather than silently
rounded.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .curve import degree_elevate, evaluate, evaluate_permuted, subdivide
from .document import DocumentError, document_from_curve, load_document
from .identities import DEFAULT_AUDIT_PARAMS, audit_all
from .scalars import ModeError, format_scalar, parse_scalar
from .svg import render_svg

EXIT_OK = 0
EXIT_AUDIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqbezier",
        description="Evaluate, elevate, subdivide, audit and plot curves with "
        "two shape parameters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shared(p, curve_required=True):
        p.add_argument("--curve", required=curve_required, help="curve document (JSON)")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--exact", action="store_true",
                       help="exact rational arithmetic; decimal input rejected")

    p_eval = sub.add_parser("eval", help="evaluate the curve at parameter values")
    add_shared(p_eval)
    p_eval.add_argument("--t", action="append", required=True,
                        help="parameter value (repeatable)")
    p_eval.add_argument("--algorithm", default="direct",
                        choices=("direct", "dc1", "dc2", "perm"))
    p_eval.add_argument("--sigma", help="comma-separated permutation of 1..n")

    p_plot = sub.add_parser("plot", help="render the curve to an SVG file")
    add_shared(p_plot)
    p_plot.add_argument("--samples", type=int, default=128)
    p_plot.add_argument("--show-polygon", action="store_true")
    p_plot.add_argument("--show-triangle", metavar="T",
                        help="overlay the evaluation triangle at parameter T")
    p_plot.add_argument("--algorithm", default="dc1",
                        choices=("direct", "dc1", "dc2", "perm"))
    p_plot.add_argument("--sigma", help="comma-separated permutation of 1..n")

    p_elev = sub.add_parser("elevate", help="raise the degree by one")
    add_shared(p_elev)

    p_sub = sub.add_parser("subdivide", help="split at r: left piece + right samples")
    add_shared(p_sub)
    p_sub.add_argument("--r", required=True, help="split parameter in (0,1)")

    p_audit = sub.add_parser("audit", help="exact audit of the published identities")
    add_shared(p_audit, curve_required=False)
    p_audit.add_argument("--n-max", type=int, default=4)
    p_audit.add_argument("--p", action="append", default=None,
                         help="parameter p (repeat in pairs with --q)")
    p_audit.add_argument("--q", action="append", default=None,
                         help="parameter q (repeat in pairs with --p)")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    add_shared(p_serve, curve_required=False)
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--store", default="./pqbezier_store",
                         help="directory for saved curve documents")
    p_serve.add_argument("--static", default=None,
                         help="directory with the UI bundle to serve at /")
    return parser


def _load_curve(path, exact: bool):
    # an unreadable input path is an input error (2), not an output I/O error (3)
    try:
        return load_document(path, exact)
    except OSError as exc:
        raise UsageError(f"cannot read curve document {path}: {exc}") from None


def _parse_sigma(text: str | None):
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"invalid sigma {text!r}: expected comma-separated integers")


def _format_point(pt, exact: bool) -> str:
    coords = pt if isinstance(pt, tuple) else (pt,)
    return " ".join(format_scalar(c) for c in coords)


def _write_output(out_path, text: str) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_eval(args) -> int:
    curve = _load_curve(args.curve, args.exact)
    sigma = _parse_sigma(args.sigma)
    lines = []
    for raw in args.t:
        t = parse_scalar(raw, args.exact)
        if args.algorithm == "perm" and sigma is not None:
            value = evaluate_permuted(curve, t, sigma)
        else:
            value = evaluate(curve, t, args.algorithm)
        lines.append(_format_point(value, args.exact))
    _write_output(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_plot(args) -> int:
    if args.out is None:
        raise UsageError("plot requires --out")
    curve = _load_curve(args.curve, args.exact)
    triangle_at = None
    if args.show_triangle is not None:
        triangle_at = parse_scalar(args.show_triangle, False)
    svg = render_svg(
        curve,
        samples=args.samples,
        show_polygon=args.show_polygon,
        triangle_at=triangle_at,
        algorithm=args.algorithm,
        sigma=_parse_sigma(args.sigma),
    )
    _write_output(args.out, svg)
    return EXIT_OK


def _cmd_elevate(args) -> int:
    curve = _load_curve(args.curve, args.exact)
    doc = document_from_curve(degree_elevate(curve))
    _write_output(args.out, json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def _cmd_subdivide(args) -> int:
    curve = _load_curve(args.curve, args.exact)
    r = parse_scalar(args.r, args.exact)
    result = subdivide(curve, r)
    payload = {
        "left": document_from_curve(result.left),
        "right_samples": [
            [float(c) for c in (pt if isinstance(pt, tuple) else (pt,))]
            for pt in result.right_samples
        ],
    }
    _write_output(args.out, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_audit(args) -> int:
    if (args.p is None) != (args.q is None):
        raise UsageError("--p and --q must be given together, in pairs")
    if args.p is None:
        pairs = DEFAULT_AUDIT_PARAMS
    else:
        if len(args.p) != len(args.q):
            raise UsageError("--p and --q must be repeated the same number of times")
        # the audit runs in exact arithmetic only: decimals are a usage error
        pairs = []
        for raw_p, raw_q in zip(args.p, args.q):
            pairs.append((parse_scalar(raw_p, True), parse_scalar(raw_q, True)))
    report = audit_all(args.n_max, pairs)
    sys.stdout.write(report.to_text() + "\n")
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
    return EXIT_AUDIT_FAILED if report.has_failures else EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(store_dir=args.store, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "plot": _cmd_plot,
    "elevate": _cmd_elevate,
    "subdivide": _cmd_subdivide,
    "audit": _cmd_audit,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DocumentError, ModeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
