"""Pydantic request/response models for the HTTP service.

Every scalar crosses the wire as a decimal-integer or "p/q" string;
validators reject anything float-shaped so the exactness contract holds
at the boundary.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..errors import VectorFormatError
from ..family import CircleFamilyVector
from ..scalars import format_scalar, parse_scalar


def _check_scalar(value: str | int) -> str:
    try:
        return format_scalar(parse_scalar(value))
    except VectorFormatError as exc:
        raise ValueError(str(exc)) from None


class VectorPayload(BaseModel):
    """JSON form of a circle-family vector."""

    r: str
    u: list[str] = Field(min_length=5, max_length=5)
    v: list[str] = Field(min_length=4, max_length=4)

    @field_validator("r", mode="before")
    @classmethod
    def _r_exact(cls, value):
        return _check_scalar(value)

    @field_validator("u", "v", mode="before")
    @classmethod
    def _coeffs_exact(cls, value):
        if not isinstance(value, list):
            raise ValueError("expected a list of exact rational strings")
        return [_check_scalar(item) for item in value]

    def to_vector(self) -> CircleFamilyVector:
        # scalars are already validated; InvalidVector (all-zero, r <= 0)
        # propagates to the app-level 400 handler
        return CircleFamilyVector.from_json_dict(self.model_dump())

    @classmethod
    def from_vector(cls, vec: CircleFamilyVector) -> "VectorPayload":
        return cls(**vec.to_json_dict())


class ScalarField(str):
    """Alias for documentation purposes; scalars travel as strings."""


class ClassifyRequest(BaseModel):
    vector: VectorPayload


class ClassifyResponse(BaseModel):
    verdict: str
    witnesses: dict


class DupinCheckResponse(BaseModel):
    kind: str  # "quartic" | "cubic"
    residuals: dict[str, str]
    all_vanish: bool


class BlendRequest(BaseModel):
    a: VectorPayload
    b: VectorPayload


class BlendResponse(BaseModel):
    blend: bool


class ConeSolveRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    r: str
    lam: str = Field(alias="lambda")
    u0: str
    u1: str
    u2: str
    u3: str

    @field_validator("r", "lam", "u0", "u1", "u2", "u3", mode="before")
    @classmethod
    def _exact(cls, value):
        return _check_scalar(value)


class CylinderSolveRequest(BaseModel):
    r: str
    u0: str
    u2: str
    u3: str
    u4: str

    @field_validator("r", "u0", "u2", "u3", "u4", mode="before")
    @classmethod
    def _exact(cls, value):
        return _check_scalar(value)


class PlaneSolveRequest(BaseModel):
    r: str
    u0: str
    u1: str
    v2: str
    v3: str

    @field_validator("r", "u0", "u1", "v2", "v3", mode="before")
    @classmethod
    def _exact(cls, value):
        return _check_scalar(value)


class VillarceauCompleteRequest(BaseModel):
    r: str
    u0: str
    u1: str
    u2: str
    u3: str
    u4: str

    @field_validator("r", "u0", "u1", "u2", "u3", "u4", mode="before")
    @classmethod
    def _exact(cls, value):
        return _check_scalar(value)


class PencilRequest(BaseModel):
    vector: VectorPayload
    t: str

    @field_validator("t", mode="before")
    @classmethod
    def _exact(cls, value):
        return _check_scalar(value)


class VectorResponse(BaseModel):
    vector: VectorPayload


class VectorsResponse(BaseModel):
    vectors: list[VectorPayload]
    count: int


class TorusRecognizeResponse(BaseModel):
    case: str | None  # "I" | "II" | null


class InvariantResponse(BaseModel):
    J0: str
    cls: str = Field(alias="class")
    model_config = ConfigDict(populate_by_name=True)


class MeshRequest(BaseModel):
    vectors: list[VectorPayload] = Field(min_length=1)
    bbox: list[float] = Field(default=[-3.0, 3.0, -3.0, 3.0, -3.0, 3.0],
                              min_length=6, max_length=6)
    resolution: int = 48
    threads: int = 1


class MeshData(BaseModel):
    vertices: list[list[float]]
    triangles: list[list[int]]


class MeshResponse(BaseModel):
    meshes: list[MeshData]


class PanelData(BaseModel):
    name: str
    vectors: list[VectorPayload]
    verdicts: list[str]
    invariants: list[InvariantResponse]
    blend: bool


class GalleryResponse(BaseModel):
    radius: str
    panels: list[PanelData]


class ErrorBody(BaseModel):
    error: str
    message: str
    detail: dict = {}
