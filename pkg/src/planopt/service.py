"""Stateless HTTP facade: solve, pareto, health, samples, static UI.

Every response body is produced by the same canonical serializer the CLI
uses, so identical logical inputs yield byte-identical payloads across both
interfaces. Limits come from the environment: PLANOPT_TIMEOUT_SECS caps
front generation wall-clock (default 120), PLANOPT_MAX_CONCURRENCY caps
simultaneous solves (default: CPU count), PLANOPT_ADDR sets the listen
address (default 127.0.0.1:8080).
"""

from __future__ import annotations

import hashlib
import importlib.resources
import os
import threading

from fastapi import FastAPI, Request, Response
from fastapi.concurrency import run_in_threadpool

from . import __version__
from .data_io import (
    canonical_bytes,
    document_to_constraint,
    document_to_instance,
    document_to_objective,
    front_to_document,
    load_instance,
    parse_json_bytes,
    scenario_to_document,
)
from .errors import (
    DocumentParseError,
    DocumentSchemaError,
    FrontTimeoutError,
    InfeasiblePlanError,
    InstanceInvariantError,
    PlanModelError,
    UnboundedObjectiveError,
)
from .pareto import ParetoRequest, nnc_front, solve_plan
from .plan import PlanInstance

DEFAULT_ADDR = "127.0.0.1:8080"
DEFAULT_TIMEOUT_SECS = 120.0
DIGEST_HEADER = "x-content-digest"


class _UnknownSampleError(Exception):
    def __init__(self, name: str):
        super().__init__(f"unknown sample {name!r}")
        self.name = name


def _json_response(document, status_code: int = 200) -> Response:
    data = canonical_bytes(document)
    digest = hashlib.sha256(data).hexdigest()
    return Response(
        content=data,
        status_code=status_code,
        media_type="application/json",
        headers={DIGEST_HEADER: f"sha256={digest}"},
    )


def _samples_root():
    return importlib.resources.files("planopt") / "samples"


def _sample_names() -> list[str]:
    root = _samples_root()
    if not root.is_dir():
        return []
    return sorted(
        entry.name[: -len(".json")]
        for entry in root.iterdir()
        if entry.name.endswith(".json")
    )


def _load_sample(name: str) -> PlanInstance:
    if name not in _sample_names():
        raise _UnknownSampleError(name)
    return load_instance(str(_samples_root() / f"{name}.json"))


def _body_instance(doc: dict, problems: list[str]) -> PlanInstance | None:
    has_inline = "instance" in doc
    has_sample = "sample" in doc
    if has_inline == has_sample:
        problems.append("instance/sample: exactly one of the two is required")
        return None
    if has_sample:
        if not isinstance(doc["sample"], str):
            problems.append("sample: expected a string")
            return None
        return _load_sample(doc["sample"])
    return document_to_instance(doc["instance"])


def _body_constraints(doc: dict, problems: list[str]):
    raw = doc.get("constraints", [])
    if not isinstance(raw, list):
        problems.append("constraints: expected a list")
        return []
    return [
        document_to_constraint(c, f"constraints[{i}]") for i, c in enumerate(raw)
    ]


def _timeout_secs() -> float:
    raw = os.environ.get("PLANOPT_TIMEOUT_SECS")
    if raw is None:
        return DEFAULT_TIMEOUT_SECS
    try:
        return float(raw)
    except ValueError:
        return DEFAULT_TIMEOUT_SECS


def _max_concurrency() -> int:
    raw = os.environ.get("PLANOPT_MAX_CONCURRENCY")
    if raw is not None:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def create_app(ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="planopt", version=__version__, openapi_url=None)
    limiter = threading.Semaphore(_max_concurrency())

    def _error(status: int, document) -> Response:
        return _json_response(document, status_code=status)

    @app.exception_handler(DocumentParseError)
    def _parse_error(_, exc):
        return _error(422, {"violations": [str(exc)]})

    @app.exception_handler(DocumentSchemaError)
    def _schema_error(_, exc):
        return _error(422, {"violations": exc.violations})

    @app.exception_handler(InstanceInvariantError)
    def _invariant_error(_, exc):
        return _error(422, {"violations": exc.violations})

    @app.exception_handler(PlanModelError)
    def _model_error(_, exc):
        return _error(422, {"violations": [str(exc)]})

    @app.exception_handler(InfeasiblePlanError)
    def _infeasible(_, exc):
        return _error(409, {"status": "infeasible", "detail": str(exc)})

    @app.exception_handler(UnboundedObjectiveError)
    def _unbounded(_, exc):
        return _error(409, {"status": "unbounded", "detail": str(exc)})

    @app.exception_handler(FrontTimeoutError)
    def _timeout(_, exc):
        return _error(408, {"status": "timeout", "detail": str(exc)})

    @app.exception_handler(_UnknownSampleError)
    def _no_sample(_, exc):
        return _error(404, {"detail": str(exc)})

    @app.get("/api/v1/health")
    def health():
        return _json_response({"status": "ok", "version": __version__})

    @app.get("/api/v1/samples")
    def samples():
        return _json_response(_sample_names())

    @app.get("/api/v1/samples/{name}")
    def sample(name: str):
        if name not in _sample_names():
            raise _UnknownSampleError(name)
        data = (_samples_root() / f"{name}.json").read_bytes()
        # shipped files are already canonical bytes
        digest = hashlib.sha256(data).hexdigest()
        return Response(
            content=data,
            media_type="application/json",
            headers={DIGEST_HEADER: f"sha256={digest}"},
        )

    async def _read_body(request: Request) -> dict:
        doc = parse_json_bytes(await request.body(), "body")
        if not isinstance(doc, dict):
            raise DocumentSchemaError(["body: expected an object"])
        return doc

    @app.post("/api/v1/solve")
    async def solve(request: Request):
        doc = await _read_body(request)
        problems = []
        for key in doc:
            if key not in ("instance", "sample", "objective", "constraints"):
                problems.append(f"{key}: unknown field")
        if "objective" not in doc:
            problems.append("objective: missing")
        if problems:
            raise DocumentSchemaError(problems)
        instance = _body_instance(doc, problems)
        if problems:
            raise DocumentSchemaError(problems)
        objective = document_to_objective(doc["objective"])
        constraints = _body_constraints(doc, problems)
        if problems:
            raise DocumentSchemaError(problems)
        def run():
            with limiter:
                return solve_plan(instance, objective, constraints)

        scenario = await run_in_threadpool(run)
        return _json_response(scenario_to_document(scenario))

    @app.post("/api/v1/pareto")
    async def pareto(request: Request):
        doc = await _read_body(request)
        problems = []
        for key in doc:
            if key not in ("instance", "sample", "objectives", "points",
                           "constraints"):
                problems.append(f"{key}: unknown field")
        for key in ("objectives", "points"):
            if key not in doc:
                problems.append(f"{key}: missing")
        if problems:
            raise DocumentSchemaError(problems)
        if not isinstance(doc["objectives"], list):
            raise DocumentSchemaError(["objectives: expected a list"])
        if not isinstance(doc["points"], int) or isinstance(doc["points"], bool):
            raise DocumentSchemaError(["points: expected an integer"])
        instance = _body_instance(doc, problems)
        if problems:
            raise DocumentSchemaError(problems)
        objectives = [
            document_to_objective(o, f"objectives[{i}]")
            for i, o in enumerate(doc["objectives"])
        ]
        constraints = _body_constraints(doc, problems)
        if problems:
            raise DocumentSchemaError(problems)
        pareto_request = ParetoRequest(
            objectives=objectives, points=doc["points"], extra=constraints
        )
        def run():
            with limiter:
                return nnc_front(
                    instance, pareto_request, timeout_seconds=_timeout_secs()
                )

        front = await run_in_threadpool(run)
        return _json_response(front_to_document(front))

    if ui_dir is None:
        packaged = importlib.resources.files("planopt") / "webui"
        if packaged.is_dir():
            ui_dir = str(packaged)
    if ui_dir is not None and os.path.isdir(ui_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def run_server(addr: str | None = None) -> None:
    import uvicorn

    addr = addr or os.environ.get("PLANOPT_ADDR") or DEFAULT_ADDR
    host, _, port_text = addr.rpartition(":")
    if not host:
        host, port_text = addr, "8080"
    ui_dir = os.environ.get("PLANOPT_UI_DIR")
    uvicorn.run(create_app(ui_dir=ui_dir), host=host, port=int(port_text))
