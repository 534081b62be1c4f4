"""Pydantic request and response models for the HTTP service.

Angles may be sent as numbers or as pi-literal strings (``pi/4``); basis
specifications are strings in the grammar of :mod:`coinwalk.parsing`.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

Angle = float | str
WalkName = Literal["alternate", "grover"]


class SweepTimeRequest(BaseModel):
    walk: WalkName
    basis: str = "computational"
    alpha: Angle | None = None
    t_max: int = Field(ge=1)


class SweepPoint(BaseModel):
    t: int
    entropy: float


class SweepTimeResponse(BaseModel):
    rows: list[SweepPoint]


class GridRequest(BaseModel):
    t: int = Field(ge=1)
    alpha: Angle | None = None
    theta_points: int = Field(default=51, ge=2)
    phi_points: int = Field(default=51, ge=2)


class GridPoint(BaseModel):
    theta: float
    phi: float
    entropy: float


class AnglePair(BaseModel):
    theta: float
    phi: float


class GridResponse(BaseModel):
    rows: list[GridPoint]
    argmax: AnglePair
    argmin: AnglePair


class RandomRunRequest(BaseModel):
    t_min: int = Field(ge=1)
    t_max: int = Field(ge=1)
    samples: int = Field(ge=1)
    seed: int = Field(ge=0)


class RandomRunPoint(BaseModel):
    sample: int
    t: int
    entropy: float


class RandomRunResponse(BaseModel):
    seed: int
    samples: int
    rows: list[RandomRunPoint]


class CompareRequest(BaseModel):
    mode: Literal["computational", "optimal"]
    t_max: int = Field(ge=1)


class ComparePoint(BaseModel):
    t: int
    alternate_entropy: float
    grover_entropy: float
    difference: float


class CompareResponse(BaseModel):
    rows: list[ComparePoint]


class EvolveRequest(BaseModel):
    walk: WalkName
    t: int = Field(ge=0)
    alpha: Angle | None = None


class AmplitudeRow(BaseModel):
    x: int
    y: int
    coin: int
    re: float
    im: float


class EvolveResponse(BaseModel):
    rows: list[AmplitudeRow]


class MeasureRequest(BaseModel):
    walk: WalkName
    t: int = Field(ge=0)
    basis: str = "computational"
    alpha: Angle | None = None


class OutcomeRow(BaseModel):
    outcome: int
    probability: float
    entropy: float


class MeasureResponse(BaseModel):
    rows: list[OutcomeRow]


class ServiceInfo(BaseModel):
    name: str
    version: str
