"""FastAPI service exposing the cyclide kernel.

Status conventions: 200 for results, 400 for malformed/invalid requests
(bad scalars, precondition violations), 422 for domain errors such as
NoRealSolution or ComponentMismatch, always with a machine-readable body
{"error", "message", "detail"} carrying the exact residuals.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..blending import (blend_check, cone_family_solve, cylinder_family_solve,
                        plane_family_solve, torus_recognize, villarceau_pencil)
from ..components import classify, villarceau_complete
from ..conditions import cubic_dupin_conditions, quartic_dupin_conditions
from ..errors import InvalidVector, KernelError, VectorFormatError
from ..family import expand, to_intermediate
from ..invariants import j0
from ..meshing import mesh
from ..scalars import parse_scalar
from ..showcase import run_gallery
from . import schemas as s


def create_app() -> FastAPI:
    app = FastAPI(title="cyclide kernel service", version=__version__)

    @app.exception_handler(KernelError)
    async def _kernel_error(request: Request, exc: KernelError):
        return JSONResponse(status_code=422, content={
            "error": exc.code, "message": str(exc), "detail": exc.detail})

    @app.exception_handler(InvalidVector)
    @app.exception_handler(VectorFormatError)
    async def _invalid(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={
            "error": "InvalidInput", "message": str(exc), "detail": {}})

    @app.exception_handler(RequestValidationError)
    async def _validation(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={
            "error": "InvalidRequest", "message": "request validation failed",
            "detail": {"errors": [
                {"loc": [str(x) for x in e["loc"]], "msg": e["msg"]}
                for e in exc.errors()]}})

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/classify", response_model=s.ClassifyResponse)
    def classify_endpoint(req: s.ClassifyRequest):
        outcome = classify(req.vector.to_vector())
        data = outcome.as_dict()
        return s.ClassifyResponse(verdict=data["verdict"],
                                  witnesses=_stringify(data["witnesses"]))

    @app.post("/check-dupin", response_model=s.DupinCheckResponse)
    def check_dupin(req: s.ClassifyRequest):
        vec = req.vector.to_vector()
        if vec.u0 != 0:
            report = quartic_dupin_conditions(to_intermediate(vec))
            kind = "quartic"
        else:
            report = cubic_dupin_conditions(expand(vec))
            kind = "cubic"
        return s.DupinCheckResponse(
            kind=kind,
            residuals={k: str(v) for k, v in report.as_dict().items()},
            all_vanish=report.all_vanish)

    @app.post("/blend-check", response_model=s.BlendResponse)
    def blend(req: s.BlendRequest):
        return s.BlendResponse(blend=blend_check(req.a.to_vector(),
                                                 req.b.to_vector()))

    @app.post("/solve/cone", response_model=s.VectorResponse)
    def solve_cone(req: s.ConeSolveRequest):
        vec = cone_family_solve(*map(parse_scalar,
                                     (req.r, req.lam, req.u0, req.u1, req.u2, req.u3)))
        return s.VectorResponse(vector=s.VectorPayload.from_vector(vec))

    @app.post("/solve/cylinder", response_model=s.VectorsResponse)
    def solve_cylinder(req: s.CylinderSolveRequest):
        vecs = cylinder_family_solve(*map(parse_scalar,
                                          (req.r, req.u0, req.u2, req.u3, req.u4)))
        return s.VectorsResponse(
            vectors=[s.VectorPayload.from_vector(v) for v in vecs], count=len(vecs))

    @app.post("/solve/plane", response_model=s.VectorResponse)
    def solve_plane(req: s.PlaneSolveRequest):
        vec = plane_family_solve(*map(parse_scalar,
                                      (req.r, req.u0, req.u1, req.v2, req.v3)))
        return s.VectorResponse(vector=s.VectorPayload.from_vector(vec))

    @app.post("/villarceau/complete", response_model=s.VectorsResponse)
    def complete(req: s.VillarceauCompleteRequest):
        vecs = villarceau_complete(*map(parse_scalar,
                                        (req.r, req.u0, req.u1, req.u2, req.u3, req.u4)))
        return s.VectorsResponse(
            vectors=[s.VectorPayload.from_vector(v) for v in vecs], count=len(vecs))

    @app.post("/pencil", response_model=s.VectorResponse)
    def pencil(req: s.PencilRequest):
        vec = villarceau_pencil(req.vector.to_vector(), parse_scalar(req.t))
        return s.VectorResponse(vector=s.VectorPayload.from_vector(vec))

    @app.post("/recognize-torus", response_model=s.TorusRecognizeResponse)
    def recognize(req: s.ClassifyRequest):
        form = torus_recognize(req.vector.to_vector())
        return s.TorusRecognizeResponse(case=None if form is None else form.value)

    @app.post("/invariant", response_model=s.InvariantResponse)
    def invariant(req: s.ClassifyRequest):
        value = j0(req.vector.to_vector())
        return s.InvariantResponse(**value.as_dict())

    @app.post("/mesh", response_model=s.MeshResponse)
    def mesh_endpoint(req: s.MeshRequest):
        meshes = []
        for payload in req.vectors:
            m = mesh(payload.to_vector(), bbox=req.bbox,
                     resolution=req.resolution, threads=req.threads)
            meshes.append(s.MeshData(
                vertices=[[float(c) for c in v] for v in m.vertices],
                triangles=[[int(i) for i in t] for t in m.triangles]))
        return s.MeshResponse(meshes=meshes)

    @app.post("/demo/fig2", response_model=s.GalleryResponse)
    def demo_gallery():
        panels = []
        for report in run_gallery():
            panels.append(s.PanelData(
                name=report.name,
                vectors=[s.VectorPayload.from_vector(v) for v in report.vectors],
                verdicts=[v.verdict.value for v in report.verdicts],
                invariants=[s.InvariantResponse(**val.as_dict())
                            for val in report.invariants],
                blend=report.blend))
        return s.GalleryResponse(radius="1", panels=panels)

    return app


def _stringify(obj):
    from fractions import Fraction

    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


app = create_app()
