"""FastAPI application exposing the enumeration and verification operations.

Run with ``uvicorn homconf.service.app:app``.  The process keeps every
computed hom table and lattice in memory, so repeated queries against the
same quiver are cheap.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import InputError, InvariantViolation
from . import handlers
from .models import (
    CountRequest,
    CountResponse,
    EnumerateResponse,
    HomTableResponse,
    MutationGraphRequest,
    MutationGraphResponse,
    NCRequest,
    NCResponse,
    QuiverInfo,
    QuiverRequest,
    RunReport,
    TypeACheckRequest,
    TypeAFResponse,
    TypeAGammaResponse,
    TypeAPartitionRequest,
    VerifyRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(title="homconf", version=__version__)

    @app.exception_handler(InputError)
    async def _input_error(_: Request, exc: InputError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc), "kind": "input"})

    @app.exception_handler(InvariantViolation)
    async def _invariant_error(_: Request, exc: InvariantViolation) -> JSONResponse:
        return JSONResponse(status_code=500, content={"detail": str(exc), "kind": "invariant"})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/quiver/info", response_model=QuiverInfo)
    def quiver_info(req: QuiverRequest) -> QuiverInfo:
        return handlers.quiver_info(req)

    @app.post("/configurations/enumerate", response_model=EnumerateResponse)
    def enumerate_configurations(req: QuiverRequest) -> EnumerateResponse:
        return handlers.enumerate_configurations(req)

    @app.post("/count", response_model=CountResponse)
    def count(req: CountRequest) -> CountResponse:
        return handlers.count(req)

    @app.post("/verify", response_model=RunReport)
    def verify(req: VerifyRequest) -> RunReport:
        return handlers.verify(req)

    @app.post("/nc/elements", response_model=NCResponse, response_model_exclude_none=True)
    def nc_elements(req: NCRequest) -> NCResponse:
        return handlers.nc_elements(req)

    @app.post("/mutation-graph", response_model=MutationGraphResponse, response_model_exclude_none=True)
    def mutation_graph(req: MutationGraphRequest) -> MutationGraphResponse:
        return handlers.mutation_graph(req)

    @app.post("/hom-table", response_model=HomTableResponse)
    def hom_table(req: QuiverRequest) -> HomTableResponse:
        return handlers.hom_table_doc(req)

    @app.post("/typea/gamma", response_model=TypeAGammaResponse)
    def typea_gamma(req: TypeAPartitionRequest) -> TypeAGammaResponse:
        return handlers.typea_gamma(req)

    @app.post("/typea/f", response_model=TypeAFResponse)
    def typea_f(req: TypeAPartitionRequest) -> TypeAFResponse:
        return handlers.typea_f(req)

    @app.post("/typea/check", response_model=RunReport)
    def typea_check(req: TypeACheckRequest) -> RunReport:
        return handlers.typea_check(req)

    return app


app = create_app()
