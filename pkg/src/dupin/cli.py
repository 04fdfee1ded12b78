"""Thin command-line client for the cyclide kernel service.

Every verb maps to one service endpoint. By default requests are routed
in-process through the ASGI app (no server or network needed); pass
--server http://host:port to talk to a remote instance instead. Scalar
options accept decimal integers or "p/q" strings only, keeping the
exactness contract at the boundary.

Exit codes: 0 success, 1 usage/input errors, 2 domain errors
(NoRealSolution, ComponentMismatch, ...), always with JSON on stdout.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx

from .errors import VectorFormatError
from .family import CircleFamilyVector
from .meshing import TriangleMesh, export_obj
from .scalars import parse_scalar

USAGE_EXIT = 1
DOMAIN_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(json.dumps({"error": "UsageError", "message": message},
                         sort_keys=True))
        raise SystemExit(USAGE_EXIT)


def _scalar_arg(text: str) -> str:
    try:
        return str(parse_scalar(text))
    except VectorFormatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bbox_arg(text: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != 6:
        raise argparse.ArgumentTypeError(
            "bbox must be six comma-separated numbers: x0,x1,y0,y1,z0,z1")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_vector_payload(path: str) -> dict:
    try:
        vec = CircleFamilyVector.from_json_dict(json.loads(Path(path).read_text()))
    except OSError as exc:
        _fail_usage(f"cannot read {path}: {exc}")
    except (VectorFormatError, ValueError, json.JSONDecodeError) as exc:
        _fail_usage(f"invalid vector file {path}: {exc}")
    return vec.to_json_dict()


def _fail_usage(message: str):
    print(json.dumps({"error": "InvalidInput", "message": message}, sort_keys=True))
    raise SystemExit(USAGE_EXIT)


class ServiceClient:
    """One-shot request helper (in-process ASGI by default)."""

    def __init__(self, server: str | None = None):
        self.server = server

    def post(self, path: str, payload: dict | None) -> tuple[int, dict]:
        return asyncio.run(self._request("POST", path, payload))

    async def _request(self, method: str, path: str, payload: dict | None):
        if self.server:
            transport = None
            base = self.server
        else:
            from .service.app import app

            transport = httpx.ASGITransport(app=app)
            base = "http://kernel"
        async with httpx.AsyncClient(transport=transport, base_url=base,
                                     timeout=300.0) as client:
            response = await client.request(method, path, json=payload)
        try:
            body = response.json()
        except json.JSONDecodeError:
            body = {"error": "BadResponse", "message": response.text}
        return response.status_code, body


def _emit(status: int, body: dict) -> int:
    print(json.dumps(body, sort_keys=True))
    if status == 200:
        return 0
    if status == 422:
        return DOMAIN_EXIT
    return USAGE_EXIT


def build_parser() -> _Parser:
    parser = _Parser(prog="dupin",
                     description="Dupin cyclide kernel client (exact arithmetic)")
    parser.add_argument("--server", default=None,
                        help="base URL of a running service; default runs in-process")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", help="component verdict with witnesses")
    p.add_argument("--in", dest="infile", required=True, help="vector JSON file")

    p = sub.add_parser("check-dupin", help="necessary-condition residuals")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("blend-check", help="smooth blending along the circle")
    p.add_argument("--a", required=True, help="first vector JSON file")
    p.add_argument("--b", required=True, help="second vector JSON file")

    p = sub.add_parser("solve-cone", help="family touching a cone")
    for name in ("r", "lambda", "u0", "u1", "u2", "u3"):
        p.add_argument(f"--{name}", dest=name.replace("lambda", "lam"),
                       required=True, type=_scalar_arg)

    p = sub.add_parser("solve-cylinder", help="family touching the cylinder")
    for name in ("r", "u0", "u2", "u3", "u4"):
        p.add_argument(f"--{name}", dest=name, required=True, type=_scalar_arg)

    p = sub.add_parser("solve-plane", help="family touching the circle plane")
    for name in ("r", "u0", "u1", "v2", "v3"):
        p.add_argument(f"--{name}", dest=name, required=True, type=_scalar_arg)

    p = sub.add_parser("villarceau-complete", help="complete u-data to members")
    for name in ("r", "u0", "u1", "u2", "u3", "u4"):
        p.add_argument(f"--{name}", dest=name, required=True, type=_scalar_arg)

    p = sub.add_parser("pencil", help="perturb a Villarceau member")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--t", required=True, type=_scalar_arg)

    p = sub.add_parser("recognize-torus", help="detect exact torus shape")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("invariant", help="Möbius invariant J0")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("mesh", help="polygonize vectors into one OBJ")
    p.add_argument("--in", dest="infiles", action="append", required=True,
                   help="vector JSON file (repeatable; one OBJ group each)")
    p.add_argument("--bbox", type=_bbox_arg, default=[-3, 3, -3, 3, -3, 3],
                   help="x0,x1,y0,y1,z0,z1 (default -3,3,-3,3,-3,3)")
    p.add_argument("--res", type=int, default=48, help="grid resolution per axis")
    p.add_argument("--threads", type=int, default=1, help="sampling threads")
    p.add_argument("--out", required=True, help="output OBJ path")

    p = sub.add_parser("demo-fig2", help="build the six-panel blend gallery")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--res", type=int, default=32)
    p.add_argument("--bbox", type=_bbox_arg, default=[-4, 4, -4, 4, -4, 4])
    p.add_argument("--no-mesh", action="store_true",
                   help="skip OBJ export, write JSON reports only")
    return parser


def _run_mesh(client: ServiceClient, args) -> int:
    payload = {
        "vectors": [_load_vector_payload(f) for f in args.infiles],
        "bbox": args.bbox, "resolution": args.res, "threads": args.threads,
    }
    status, body = client.post("/mesh", payload)
    if status != 200:
        return _emit(status, body)
    meshes = [TriangleMesh(m["vertices"], m["triangles"]) for m in body["meshes"]]
    export_obj(meshes, args.out)
    return _emit(200, {
        "out": str(args.out),
        "groups": len(meshes),
        "vertices": [len(m.vertices) for m in meshes],
        "triangles": [len(m.triangles) for m in meshes],
    })


def _run_demo(client: ServiceClient, args) -> int:
    status, body = client.post("/demo/fig2", None)
    if status != 200:
        return _emit(status, body)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    summary = {"radius": body["radius"], "panels": []}
    for panel in body["panels"]:
        pdir = outdir / f"panel_{panel['name']}"
        pdir.mkdir(exist_ok=True)
        entry = {"name": panel["name"], "blend": panel["blend"],
                 "verdicts": panel["verdicts"],
                 "invariants": panel["invariants"], "files": []}
        for idx, vec in enumerate(panel["vectors"]):
            vpath = pdir / f"vector{idx + 1}.json"
            vpath.write_text(json.dumps(vec, sort_keys=True) + "\n")
            entry["files"].append(str(vpath))
        if not args.no_mesh:
            mstatus, mbody = client.post("/mesh", {
                "vectors": panel["vectors"], "bbox": args.bbox,
                "resolution": args.res, "threads": 1})
            if mstatus != 200:
                return _emit(mstatus, mbody)
            meshes = [TriangleMesh(m["vertices"], m["triangles"])
                      for m in mbody["meshes"]]
            opath = pdir / "pair.obj"
            export_obj(meshes, opath, names=["first", "second"])
            entry["files"].append(str(opath))
        summary["panels"].append(entry)
    (outdir / "summary.json").write_text(json.dumps(summary, sort_keys=True) + "\n")
    return _emit(200, summary)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    client = ServiceClient(args.server)

    if args.verb == "classify":
        return _emit(*client.post("/classify",
                                  {"vector": _load_vector_payload(args.infile)}))
    if args.verb == "check-dupin":
        return _emit(*client.post("/check-dupin",
                                  {"vector": _load_vector_payload(args.infile)}))
    if args.verb == "blend-check":
        return _emit(*client.post("/blend-check",
                                  {"a": _load_vector_payload(args.a),
                                   "b": _load_vector_payload(args.b)}))
    if args.verb == "solve-cone":
        return _emit(*client.post("/solve/cone", {
            "r": args.r, "lambda": args.lam, "u0": args.u0,
            "u1": args.u1, "u2": args.u2, "u3": args.u3}))
    if args.verb == "solve-cylinder":
        return _emit(*client.post("/solve/cylinder", {
            "r": args.r, "u0": args.u0, "u2": args.u2,
            "u3": args.u3, "u4": args.u4}))
    if args.verb == "solve-plane":
        return _emit(*client.post("/solve/plane", {
            "r": args.r, "u0": args.u0, "u1": args.u1,
            "v2": args.v2, "v3": args.v3}))
    if args.verb == "villarceau-complete":
        return _emit(*client.post("/villarceau/complete", {
            "r": args.r, "u0": args.u0, "u1": args.u1,
            "u2": args.u2, "u3": args.u3, "u4": args.u4}))
    if args.verb == "pencil":
        return _emit(*client.post("/pencil",
                                  {"vector": _load_vector_payload(args.infile),
                                   "t": args.t}))
    if args.verb == "recognize-torus":
        return _emit(*client.post("/recognize-torus",
                                  {"vector": _load_vector_payload(args.infile)}))
    if args.verb == "invariant":
        return _emit(*client.post("/invariant",
                                  {"vector": _load_vector_payload(args.infile)}))
    if args.verb == "mesh":
        return _run_mesh(client, args)
    if args.verb == "demo-fig2":
        return _run_demo(client, args)
    raise AssertionError(f"unhandled verb {args.verb}")


if __name__ == "__main__":
    sys.exit(main())
