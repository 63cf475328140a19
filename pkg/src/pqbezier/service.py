"""HTTP JSON API over the curve kernel, plus curve-document persistence.

All numeric traffic is float mode (rational "num/den" strings are accepted on
input and converted); the audit endpoint runs exactly server-side and returns
verdicts rather than exact numbers.  Error mapping: 400 malformed body,
422 well-formed but invalid values, 404 unknown document, 409 save collision.
"""
from __future__ import annotations

import json
import os
import re
import tempfile
import threading
from pathlib import Path

from fastapi import Body, FastAPI, HTTPException, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .blossom import (
    BlossomUndefinedError,
    Polynomial,
    blossom_evaluate,
    blossom_from_polynomial,
    dual_control_points,
)
from .curve import (
    blossom_form_from_curve,
    curve_from_polynomial,
    degree_elevate,
    evaluate,
    evaluate_permuted,
    intermediate_points,
    subdivide,
)
from .document import (
    DocumentError,
    parse_number,
    document_from_curve,
    parse_document,
    point_as_list,
)
from .identities import DEFAULT_AUDIT_PARAMS, audit_all
from .scalars import ModeError, PqParams

_NAME_RE = re.compile(r"[A-Za-z0-9_-]{1,64}")
_ALGORITHMS = ("direct", "dc1", "dc2", "perm")


class CurveStore:
    """File-per-name persistence with atomic writes and per-name locking."""

    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks: dict = {}
        self._registry_lock = threading.Lock()

    def _lock_for(self, name: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(name, threading.Lock())

    def _path(self, name: str) -> Path:
        return self.root / f"{name}.json"

    def save(self, name: str, doc: dict, overwrite: bool) -> None:
        with self._lock_for(name):
            path = self._path(name)
            if path.exists() and not overwrite:
                raise FileExistsError(name)
            fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    json.dump(doc, fh, indent=2)
                    fh.write("\n")
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise

    def load(self, name: str):
        path = self._path(name)
        if not path.exists():
            return None
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)


def _expect_object(payload, allowed: set) -> dict:
    if not isinstance(payload, dict):
        raise DocumentError("request body must be a JSON object")
    unknown = set(payload) - allowed
    if unknown:
        raise DocumentError(f"unknown request fields: {', '.join(sorted(unknown))}")
    return payload


def _require(payload: dict, field: str):
    if field not in payload:
        raise DocumentError(f"missing request field: {field!r}")
    return payload[field]


def _float_list(value, what: str) -> list:
    if not isinstance(value, list) or not value:
        raise DocumentError(f"{what} must be a nonempty array")
    return [parse_number(v, False, what) for v in value]


def _sigma_from(payload: dict):
    sigma = payload.get("sigma")
    if sigma is None:
        return None
    if not isinstance(sigma, list) or not all(
        isinstance(s, int) and not isinstance(s, bool) for s in sigma
    ):
        raise DocumentError("sigma must be an array of integers")
    return tuple(sigma)


def _algorithm_from(payload: dict) -> str:
    algorithm = payload.get("algorithm", "direct")
    if algorithm not in _ALGORITHMS:
        raise DocumentError(f"algorithm must be one of {', '.join(_ALGORITHMS)}")
    return algorithm


def create_app(store_dir=None, static_dir=None, audit_n_max_cap: int = 6) -> FastAPI:
    app = FastAPI(title="pqbezier", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"^https?://(localhost|127\.0\.0\.1)(:\d+)?$",
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = CurveStore(store_dir if store_dir is not None else "./pqbezier_store")

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    @app.exception_handler(DocumentError)
    async def document_error(request: Request, exc: DocumentError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(BlossomUndefinedError)
    async def blossom_undefined(request: Request, exc: BlossomUndefinedError):
        return JSONResponse(
            status_code=422,
            content={
                "detail": str(exc),
                "violated_conditions": list(exc.validity.violated_conditions),
            },
        )

    @app.exception_handler(ModeError)
    async def mode_error(request: Request, exc: ModeError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.post("/api/evaluate")
    def api_evaluate(payload: dict = Body(...)):
        body = _expect_object(
            payload, {"curve", "t", "algorithm", "sigma", "triangle_at"}
        )
        curve = parse_document(_require(body, "curve"))
        ts = _float_list(_require(body, "t"), "t")
        algorithm = _algorithm_from(body)
        sigma = _sigma_from(body)
        points = []
        for t in ts:
            if algorithm == "perm" and sigma is not None:
                value = evaluate_permuted(curve, t, sigma)
            else:
                value = evaluate(curve, t, algorithm)
            points.append(point_as_list(value))
        out = {"points": points}
        if "triangle_at" in body:
            t = parse_number(body["triangle_at"], False, "triangle_at")
            tri_alg = algorithm if algorithm != "direct" else "dc1"
            tri = intermediate_points(curve, t, tri_alg, sigma)
            out["triangle"] = {
                "algorithm": tri.algorithm,
                "t": t,
                "rows": [[point_as_list(pt) for pt in row] for row in tri.rows],
            }
        return out

    @app.post("/api/elevate")
    def api_elevate(payload: dict = Body(...)):
        body = _expect_object(payload, {"curve"})
        curve = parse_document(_require(body, "curve"))
        return {"curve": document_from_curve(degree_elevate(curve))}

    @app.post("/api/subdivide")
    def api_subdivide(payload: dict = Body(...)):
        body = _expect_object(payload, {"curve", "r"})
        curve = parse_document(_require(body, "curve"))
        r = parse_number(_require(body, "r"), False, "r")
        result = subdivide(curve, r)
        return {
            "left": document_from_curve(result.left),
            "right_samples": [point_as_list(pt) for pt in result.right_samples],
        }

    @app.post("/api/blossom")
    def api_blossom(payload: dict = Body(...)):
        body = _expect_object(payload, {"curve", "polynomial", "u"})
        if ("curve" in body) == ("polynomial" in body):
            raise DocumentError("provide exactly one of 'curve' or 'polynomial'")
        if "curve" in body:
            form = blossom_form_from_curve(parse_document(body["curve"]))
        else:
            spec = body["polynomial"]
            if not isinstance(spec, dict) or set(spec) != {"coefficients", "p", "q"}:
                raise DocumentError(
                    "polynomial must be an object with coefficients, p, q"
                )
            coeffs = _float_list(spec["coefficients"], "coefficients")
            params = PqParams.float_params(
                parse_number(spec["p"], False, "p"),
                parse_number(spec["q"], False, "q"),
            )
            form = blossom_from_polynomial(Polynomial(tuple(coeffs)), params)
        if "u" in body:
            if not isinstance(body["u"], list):
                raise DocumentError("u must be an array")
            u = [parse_number(v, False, "u") for v in body["u"]]
            return {"value": point_as_list(blossom_evaluate(form, u))}
        return {
            "control_points": [point_as_list(pt) for pt in dual_control_points(form)]
        }

    @app.post("/api/audit")
    def api_audit(payload: dict = Body(None)):
        body = _expect_object(payload or {}, {"n_max", "params"})
        n_max = body.get("n_max", 4)
        if isinstance(n_max, bool) or not isinstance(n_max, int):
            raise DocumentError("n_max must be an integer")
        if n_max > audit_n_max_cap:
            raise ValueError(
                f"audit degree is capped at {audit_n_max_cap} for this service"
            )
        if "params" in body:
            raw = body["params"]
            if not isinstance(raw, list) or not raw:
                raise DocumentError("params must be a nonempty array of {p, q} objects")
            pairs = []
            for entry in raw:
                if not isinstance(entry, dict) or set(entry) != {"p", "q"}:
                    raise DocumentError("each params entry must be an object {p, q}")
                pairs.append((entry["p"], entry["q"]))
        else:
            pairs = DEFAULT_AUDIT_PARAMS
        return audit_all(n_max, pairs).to_dict()

    @app.put("/api/curves/{name}")
    def api_save_curve(
        name: str, payload: dict = Body(...), overwrite: bool = Query(False)
    ):
        if not _NAME_RE.fullmatch(name):
            raise ValueError(
                "curve names are 1-64 characters from A-Za-z0-9_- only"
            )
        doc = document_from_curve(parse_document(payload))
        try:
            store.save(name, doc, overwrite)
        except FileExistsError:
            raise HTTPException(
                status_code=409,
                detail=f"curve {name!r} already exists; pass ?overwrite=true",
            )
        return {"name": name, "curve": doc}

    @app.get("/api/curves/{name}")
    def api_load_curve(name: str):
        if not _NAME_RE.fullmatch(name):
            raise ValueError(
                "curve names are 1-64 characters from A-Za-z0-9_- only"
            )
        doc = store.load(name)
        if doc is None:
            raise HTTPException(status_code=404, detail=f"no curve named {name!r}")
        return {"name": name, "curve": doc}

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
