"""FastAPI service exposing the verification suites.

Run with:

    uvicorn gaussbalance.service:app

Every suite is a POST endpoint taking a SuiteRequest and returning the full
report; hard-check failures are reported in the body (passed = false), not
as HTTP errors, so clients can archive failing reports.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..errors import GaussBalanceError
from ..suites import COMMANDS, SuiteOptions, run_command
from .schemas import CommandName, Health, SuiteReport, SuiteRequest


def options_from_request(request: SuiteRequest) -> SuiteOptions:
    return SuiteOptions(
        p_list=tuple(request.p_list) if request.p_list else None,
        grid=request.grid,
        samples=request.samples,
        seed=request.seed,
        tolerances=dict(request.tolerances),
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="gaussbalance",
        version=__version__,
        description="Verification suites for Gaussian measures of cones, "
                    "vector balancing and lattice covering radii.",
    )

    @app.get("/health", response_model=Health)
    def health() -> Health:
        return Health(status="ok", version=__version__)

    @app.get("/commands")
    def commands() -> dict:
        return {"commands": list(COMMANDS)}

    @app.post("/suites/{command}", response_model=SuiteReport)
    def run_suite(command: CommandName, request: SuiteRequest) -> SuiteReport:
        try:
            report = run_command(command.value, options_from_request(request))
        except GaussBalanceError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return SuiteReport.model_validate(report)

    return app


app = create_app()
