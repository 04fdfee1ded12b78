"""Floating-point sampling and meshing of the implicit surfaces, plus file I/O.

Everything upstream of this module is exact; rationals are floated once at
mesher entry. Exact circle sampling (for identity tests and tangency
checks) stays rational via the half-angle parametrization
t -> (0, r(1-t^2)/(1+t^2), 2rt/(1+t^2)).
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np
from skimage import measure

from .errors import EmptySurface, InvalidVector, VectorFormatError
from .family import CircleFamilyVector, family_polynomial
from .poly import TrivariatePolynomial
from .scalars import Scalar

DEGENERATE_AREA = 1e-12


@dataclass(frozen=True)
class RationalCirclePoint:
    """Exact point of the circle {x = 0, y^2 + z^2 = r^2}."""

    t: Scalar
    point: tuple[Scalar, Scalar, Scalar]


@dataclass
class TriangleMesh:
    vertices: np.ndarray  # (n, 3) float64
    triangles: np.ndarray  # (m, 3) int indices

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=np.float64).reshape(-1, 3)
        self.triangles = np.asarray(self.triangles, dtype=np.int64).reshape(-1, 3)
        if len(self.triangles) and (self.triangles.min() < 0
                                    or self.triangles.max() >= len(self.vertices)):
            raise InvalidVector("triangle indices out of range")

    def is_empty(self) -> bool:
        return len(self.triangles) == 0


def sample_circle(r: Scalar, n: int, include_opposite: bool = False) -> list[RationalCirclePoint]:
    """Exact circle points on the half-angle grid t = k/n, k = -n..n.

    The grid misses exactly one circle point, (0, -r, 0) (the t = inf
    limit); pass include_opposite=True to append it.
    """
    r = Fraction(r)
    if r <= 0:
        raise InvalidVector("circle radius must be positive")
    if n < 1:
        raise InvalidVector("need n >= 1")
    pts = []
    for k in range(-n, n + 1):
        t = Fraction(k, n)
        den = 1 + t**2
        pts.append(RationalCirclePoint(t, (Fraction(0),
                                           r * (1 - t**2) / den,
                                           2 * r * t / den)))
    if include_opposite:
        pts.append(RationalCirclePoint(Fraction(0), (Fraction(0), -r, Fraction(0))))
    return pts


class FloatSurface:
    """Monomial-compiled float evaluator for one implicit polynomial."""

    def __init__(self, poly: TrivariatePolynomial):
        items = sorted(poly.coeffs.items())
        self.exps = np.array([m for m, _ in items], dtype=np.int64).reshape(-1, 3)
        self.coefs = np.array([float(c) for _, c in items], dtype=np.float64)

    def values(self, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        out = np.zeros(np.broadcast(x, y, z).shape, dtype=np.float64)
        for (i, j, k), c in zip(self.exps, self.coefs):
            out += c * x**i * y**j * z**k
        return out

    def gradients(self, pts: np.ndarray) -> np.ndarray:
        pts = np.asarray(pts, dtype=np.float64).reshape(-1, 3)
        x, y, z = pts[:, 0], pts[:, 1], pts[:, 2]
        grad = np.zeros_like(pts)
        for (i, j, k), c in zip(self.exps, self.coefs):
            if i:
                grad[:, 0] += c * i * x ** (i - 1) * y**j * z**k
            if j:
                grad[:, 1] += c * j * x**i * y ** (j - 1) * z**k
            if k:
                grad[:, 2] += c * k * x**i * y**j * z ** (k - 1)
        return grad

    def values_at(self, pts: np.ndarray) -> np.ndarray:
        pts = np.asarray(pts, dtype=np.float64).reshape(-1, 3)
        return self.values(pts[:, 0], pts[:, 1], pts[:, 2])


def _sample_grid(surface: FloatSurface, axes, threads: int) -> np.ndarray:
    xs, ys, zs = axes
    vol = np.empty((len(xs), len(ys), len(zs)), dtype=np.float64)
    Y, Z = np.meshgrid(ys, zs, indexing="ij")

    def fill(i):
        vol[i] = surface.values(xs[i], Y, Z)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(fill, range(len(xs))))
    else:
        for i in range(len(xs)):
            fill(i)
    return vol


def mesh(vec: CircleFamilyVector,
         bbox: Sequence[float] = (-3.0, 3.0, -3.0, 3.0, -3.0, 3.0),
         resolution: int = 48,
         threads: int = 1) -> TriangleMesh:
    """Polygonize the zero set of the floated implicit polynomial.

    Marching cubes over a regular grid (ambiguous cells resolved by the
    Lewiner topology tables), vertices by linear interpolation along cell
    edges followed by one Newton projection step onto the surface.
    Raises :class:`EmptySurface` when the sampled values never change sign.
    """
    if resolution < 8:
        raise InvalidVector("resolution must be at least 8 per axis")
    x0, x1, y0, y1, z0, z1 = (float(b) for b in bbox)
    if not (x0 < x1 and y0 < y1 and z0 < z1):
        raise InvalidVector("degenerate bounding box")
    surface = FloatSurface(family_polynomial(vec))
    axes = (np.linspace(x0, x1, resolution + 1),
            np.linspace(y0, y1, resolution + 1),
            np.linspace(z0, z1, resolution + 1))
    vol = _sample_grid(surface, axes, threads)
    if not (vol.min() < 0.0 < vol.max()):
        raise EmptySurface("no sign change of the implicit function in the box",
                           {"min": float(vol.min()), "max": float(vol.max())})
    spacing = tuple(float(a[1] - a[0]) for a in axes)
    verts, faces, _, _ = measure.marching_cubes(vol, level=0.0, spacing=spacing)
    verts = verts + np.array([x0, y0, z0])

    # one Newton projection step per (shared) vertex
    grads = surface.gradients(verts)
    vals = surface.values_at(verts)
    norm2 = np.einsum("ij,ij->i", grads, grads)
    ok = norm2 > 1e-30
    verts[ok] -= (vals[ok] / norm2[ok])[:, None] * grads[ok]

    # drop triangles that collapsed below the area tolerance
    a = verts[faces[:, 1]] - verts[faces[:, 0]]
    b = verts[faces[:, 2]] - verts[faces[:, 0]]
    areas = 0.5 * np.linalg.norm(np.cross(a, b), axis=1)
    faces = faces[areas > DEGENERATE_AREA]

    used = np.unique(faces)
    remap = np.full(len(verts), -1, dtype=np.int64)
    remap[used] = np.arange(len(used))
    return TriangleMesh(verts[used], remap[faces])


def export_obj(meshes: Sequence[TriangleMesh], path: str | Path,
               names: Sequence[str] | None = None) -> None:
    """Write meshes to a Wavefront OBJ file, one group per mesh."""
    path = Path(path)
    lines = ["# implicit cyclide surface export"]
    offset = 1
    for idx, m in enumerate(meshes):
        name = names[idx] if names else f"surface{idx}"
        lines.append(f"g {name}")
        for vx, vy, vz in m.vertices:
            lines.append(f"v {vx:.9g} {vy:.9g} {vz:.9g}")
        for i, j, k in m.triangles:
            lines.append(f"f {i + offset} {j + offset} {k + offset}")
        offset += len(m.vertices)
    try:
        path.write_text("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write OBJ to {path}: {exc}") from exc


def write_vector_json(vec: CircleFamilyVector, path: str | Path) -> None:
    path = Path(path)
    try:
        path.write_text(dumps_vector(vec) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write vector JSON to {path}: {exc}") from exc


def read_vector_json(path: str | Path) -> CircleFamilyVector:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise OSError(f"cannot read vector JSON from {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise VectorFormatError(f"invalid JSON in {path}: {exc}") from None
    return CircleFamilyVector.from_json_dict(data)


def dumps_vector(vec: CircleFamilyVector) -> str:
    return json.dumps(vec.to_json_dict(), sort_keys=True)
