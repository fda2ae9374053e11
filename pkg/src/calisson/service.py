"""HTTP solve service for the playground and other clients.

Stateless wrapper over the solvers: POST /api/solve takes an instance
plus algorithm choice and returns the outcome JSON (optionally with an
SVG view); GET /healthz is a liveness probe.  Infeasibility is a result,
not an error — only malformed requests (400) and oversized regions (413)
are rejected.

Configuration comes from create_app arguments, falling back to the
CALISSON_MAX_TRIANGLES and CALISSON_CORS_ORIGIN environment variables;
the __main__ runner also honors CALISSON_PORT.
"""

from __future__ import annotations

import os
from typing import Literal

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, Field

from .infinite import solve_infinite
from .instances import HEXAGON, InstanceFormatError, Region, instance_from_data, validate
from .render import render, window_view
from .solvers import solve_advancing, solve_bf

DEFAULT_MAX_TRIANGLES = 250_000
MAX_HEXAGON_SIDE = 200


class WindowModel(BaseModel):
    center: tuple[int, int, int]
    radius: int = Field(ge=0)


class SolveRequest(BaseModel):
    instance: dict = Field(default_factory=dict)
    algo: Literal["bf", "advancing", "infinite"] = "advancing"
    window: WindowModel | None = None
    includeSvg: bool = False


class SolveStatsModel(BaseModel):
    vertices: int
    arcs: int
    relaxations: int
    elapsed: float


class SolveResponse(BaseModel):
    status: str
    lozenges: list[list] | None = None
    heights: list[list] | None = None
    cycle: list[list] | None = None
    stats: SolveStatsModel
    svg: str | None = None


def _violations_response(status_code: int, items: list[dict]) -> JSONResponse:
    return JSONResponse(status_code=status_code, content={"violations": items})


def _triangle_budget(region: Region, window: WindowModel | None) -> int:
    if region.kind == HEXAGON:
        return 6 * region.n * region.n
    if region.bounded:
        return len(region.triangles)
    return 6 * window.radius * window.radius if window else 0


def create_app(
    max_triangles: int | None = None,
    cors_origin: str | None = None,
) -> FastAPI:
    if max_triangles is None:
        max_triangles = int(os.environ.get("CALISSON_MAX_TRIANGLES", DEFAULT_MAX_TRIANGLES))
    if cors_origin is None:
        cors_origin = os.environ.get("CALISSON_CORS_ORIGIN")

    app = FastAPI(title="calisson solve service")
    if cors_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request: Request, exc: RequestValidationError):
        items = [
            {
                "code": "invalid-request",
                "message": f"{err['msg']} at {'/'.join(str(p) for p in err['loc'])}",
            }
            for err in exc.errors()
        ]
        return _violations_response(400, items)

    @app.api_route("/healthz", methods=["GET", "HEAD"], response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.post("/api/solve", response_model=SolveResponse, response_model_exclude_none=True)
    def solve(req: SolveRequest):
        try:
            instance = instance_from_data(req.instance)
        except InstanceFormatError as exc:
            return _violations_response(400, [{"code": exc.code, "message": str(exc)}])
        problems = validate(instance)
        if problems:
            return _violations_response(400, [v.to_dict() for v in problems])

        region = instance.region
        if region.kind == HEXAGON and region.n > MAX_HEXAGON_SIDE:
            return JSONResponse(
                status_code=413,
                content={
                    "code": "region-too-large",
                    "message": f"hexagon side {region.n} exceeds the cap of {MAX_HEXAGON_SIDE}",
                },
            )
        budget = _triangle_budget(region, req.window)
        if budget > max_triangles:
            return JSONResponse(
                status_code=413,
                content={
                    "code": "region-too-large",
                    "message": f"{budget} triangles exceed the cap of {max_triangles}",
                },
            )

        if req.algo == "infinite":
            if region.bounded:
                return _violations_response(
                    400,
                    [{"code": "algo-region-mismatch",
                      "message": "algo infinite needs a region of type infinite"}],
                )
            if req.window is not None:
                outcome = solve_infinite(
                    instance, center=req.window.center, radius=req.window.radius
                )
            else:
                outcome = solve_infinite(instance)
        else:
            if not region.bounded:
                return _violations_response(
                    400,
                    [{"code": "algo-region-mismatch",
                      "message": f"algo {req.algo} needs a bounded region"}],
                )
            outcome = (solve_bf if req.algo == "bf" else solve_advancing)(instance)

        svg = None
        if req.includeSvg:
            if region.bounded:
                svg = render(instance, outcome)
            elif outcome.tiling is not None:
                svg = render(window_view(instance, outcome), outcome)
        return SolveResponse(**outcome.to_dict(), svg=svg)

    return app


app = create_app()


def main() -> None:
    import uvicorn

    uvicorn.run(
        "calisson.service:app",
        host="0.0.0.0",
        port=int(os.environ.get("CALISSON_PORT", "8000")),
    )


if __name__ == "__main__":
    main()
