"""FastAPI service exposing the walk experiments.

Domain validation errors surface as 422 responses with ``error:
"validation"``; numerical failures (non-converging decompositions) as 500
responses with ``error: "numerical"``.  Both carry a human-readable
``detail`` field.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

import coinwalk.explore as explore
import coinwalk.measurement as measurement
from coinwalk import __version__
from coinwalk.entanglement import spatial_entanglement
from coinwalk.parsing import parse_angle, parse_basis
from coinwalk.walks import SYMMETRIC_ALPHA, WalkKind, alternate_initial, evolve, grover_initial

from . import schemas


def _initial_coin(walk: str, alpha: float | str | None) -> tuple[WalkKind, np.ndarray]:
    """Initial coin for a walk; ``alpha`` applies only to the qubit walk."""
    kind = WalkKind(walk)
    if kind is WalkKind.GROVER:
        if alpha is not None:
            raise ValueError("alpha applies only to the alternate walk")
        return kind, grover_initial()
    angle = SYMMETRIC_ALPHA if alpha is None else parse_angle(alpha)
    return kind, alternate_initial(angle)


def create_app() -> FastAPI:
    app = FastAPI(title="coinwalk", version=__version__)

    @app.exception_handler(ValueError)
    async def _validation_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(
            status_code=422, content={"error": "validation", "detail": str(exc)}
        )

    @app.exception_handler(np.linalg.LinAlgError)
    async def _numerical_error(
        request: Request, exc: np.linalg.LinAlgError
    ) -> JSONResponse:
        return JSONResponse(
            status_code=500, content={"error": "numerical", "detail": str(exc)}
        )

    @app.get("/", response_model=schemas.ServiceInfo)
    def info() -> schemas.ServiceInfo:
        return schemas.ServiceInfo(name="coinwalk", version=__version__)

    @app.post("/sweep-time", response_model=schemas.SweepTimeResponse)
    def sweep_time(request: schemas.SweepTimeRequest) -> schemas.SweepTimeResponse:
        kind, coin = _initial_coin(request.walk, request.alpha)
        basis = parse_basis(request.basis, kind.coin_dim)
        rows = explore.sweep_time(kind, coin, basis, request.t_max)
        return schemas.SweepTimeResponse(
            rows=[schemas.SweepPoint(t=t, entropy=e) for t, e in rows]
        )

    @app.post("/grid", response_model=schemas.GridResponse)
    def grid(request: schemas.GridRequest) -> schemas.GridResponse:
        _, coin = _initial_coin("alternate", request.alpha)
        spec = explore.GridSpec(request.theta_points, request.phi_points)
        surface = explore.grid_search_qubit(request.t, coin, spec)
        return schemas.GridResponse(
            rows=[
                schemas.GridPoint(theta=theta, phi=phi, entropy=e)
                for theta, phi, e in surface.rows
            ],
            argmax=schemas.AnglePair(theta=surface.argmax[0], phi=surface.argmax[1]),
            argmin=schemas.AnglePair(theta=surface.argmin[0], phi=surface.argmin[1]),
        )

    @app.post("/random-run", response_model=schemas.RandomRunResponse)
    def random_run(request: schemas.RandomRunRequest) -> schemas.RandomRunResponse:
        run = explore.random_basis_run(
            request.t_min, request.t_max, request.samples, request.seed
        )
        return schemas.RandomRunResponse(
            seed=run.seed,
            samples=run.samples,
            rows=[
                schemas.RandomRunPoint(sample=k, t=t, entropy=e)
                for k, t, e in run.rows
            ],
        )

    @app.post("/compare", response_model=schemas.CompareResponse)
    def compare(request: schemas.CompareRequest) -> schemas.CompareResponse:
        rows = explore.compare_walks(request.t_max, request.mode)
        return schemas.CompareResponse(
            rows=[
                schemas.ComparePoint(
                    t=t, alternate_entropy=a, grover_entropy=g, difference=d
                )
                for t, a, g, d in rows
            ]
        )

    @app.post("/evolve", response_model=schemas.EvolveResponse)
    def evolve_walk(request: schemas.EvolveRequest) -> schemas.EvolveResponse:
        kind, coin = _initial_coin(request.walk, request.alpha)
        state = evolve(kind, coin, request.t)
        rows = [
            schemas.AmplitudeRow(x=x, y=y, coin=c, re=amp.real, im=amp.imag)
            for (x, y, c), amp in sorted(state.amplitudes.items())
        ]
        return schemas.EvolveResponse(rows=rows)

    @app.post("/measure", response_model=schemas.MeasureResponse)
    def measure(request: schemas.MeasureRequest) -> schemas.MeasureResponse:
        kind, coin = _initial_coin(request.walk, request.alpha)
        basis = parse_basis(request.basis, kind.coin_dim)
        state = evolve(kind, coin, request.t)
        rows = []
        for outcome in measurement.measure_coin(state, basis):
            entropy = 0.0
            if outcome.post_state is not None:
                entropy = spatial_entanglement(outcome.post_state)
            rows.append(
                schemas.OutcomeRow(
                    outcome=outcome.index,
                    probability=outcome.probability,
                    entropy=entropy,
                )
            )
        return schemas.MeasureResponse(rows=rows)

    return app


app = create_app()
