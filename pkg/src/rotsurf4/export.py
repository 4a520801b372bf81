"""Grid exporters: raw 4D CSV, and OBJ/PLY meshes of a 3D projection."""

from __future__ import annotations

import enum
import io
from typing import Optional

import numpy as np

from .geometry import SurfacePatch


class ExportFormat(enum.Enum):
    CSV4D = "csv"
    OBJ_PROJ = "obj"
    PLY_PROJ = "ply"


class Projection(enum.Enum):
    DROP_X1 = "x1"
    DROP_X2 = "x2"
    DROP_X3 = "x3"
    DROP_X4 = "x4"
    STEREOGRAPHIC = "stereo"


def _num(x: float) -> str:
    return format(float(x), ".17g")


def sample_grid(patch: SurfacePatch, nu: int, nv: int):
    """Closed uniform grid over the full patch domain, row-major in u then v."""
    if nu < 2 or nv < 2:
        raise ValueError("nu and nv must be at least 2")
    us = np.linspace(*patch.domain_u, nu)
    vs = np.linspace(*patch.domain_v, nv)
    U, V = np.meshgrid(us, vs, indexing="ij")
    return U.ravel(), V.ravel(), patch(U, V).reshape(-1, 4)


def project(points: np.ndarray, projection: Projection):
    """Map (n, 4) points to (n, 3) and return a one-line description."""
    projection = Projection(projection)
    if projection is Projection.STEREOGRAPHIC:
        top = float(np.max(np.abs(points[:, 3]))) if len(points) else 0.0
        # pole kept strictly outside the sampled x4 range
        R = 1.1 * top if top > 0 else 1.0
        out = points[:, :3] * (R / (R - points[:, 3]))[:, None]
        return out, f"stereographic projection from (0, 0, 0, {_num(R)})"
    k = int(projection.value[1]) - 1
    return np.delete(points, k, axis=1), f"dropped coordinate x{k + 1}"


def _quads(nu: int, nv: int):
    for i in range(nu - 1):
        for j in range(nv - 1):
            a = i * nv + j
            yield a, a + nv, a + nv + 1, a + 1


def export_grid(patch: SurfacePatch, nu: int, nv: int, fmt=ExportFormat.CSV4D,
                projection: Optional[Projection] = None) -> bytes:
    """Serialise an ``nu`` x ``nv`` grid of the patch.

    CSV4D rows are ``u,v,x1,x2,x3,x4`` after a header row.  OBJ and PLY hold
    the projected vertices and (nu-1)*(nv-1) quads in row-major order; they
    need a ``projection``.  Numbers use 17 significant digits, so output is
    byte-for-byte reproducible.
    """
    fmt = ExportFormat(fmt)
    U, V, X = sample_grid(patch, nu, nv)
    buf = io.StringIO()
    if fmt is ExportFormat.CSV4D:
        buf.write("u,v,x1,x2,x3,x4\n")
        for u, v, x in zip(U, V, X):
            buf.write(",".join(_num(t) for t in (u, v, *x)) + "\n")
        return buf.getvalue().encode()

    if projection is None:
        raise ValueError(f"{fmt.value} export needs a projection")
    P, how = project(X, projection)
    faces = list(_quads(nu, nv))
    if fmt is ExportFormat.OBJ_PROJ:
        buf.write(f"# {patch.family.value} surface, {nu}x{nv} grid, {how}\n")
        for p in P:
            buf.write("v " + " ".join(_num(t) for t in p) + "\n")
        for q in faces:
            buf.write("f " + " ".join(str(i + 1) for i in q) + "\n")
    else:
        buf.write("ply\nformat ascii 1.0\n")
        buf.write(f"comment {patch.family.value} surface, {nu}x{nv} grid, {how}\n")
        buf.write(f"element vertex {len(P)}\n")
        buf.write("property double x\nproperty double y\nproperty double z\n")
        buf.write(f"element face {len(faces)}\n")
        buf.write("property list uchar int vertex_indices\nend_header\n")
        for p in P:
            buf.write(" ".join(_num(t) for t in p) + "\n")
        for q in faces:
            buf.write("4 " + " ".join(str(i) for i in q) + "\n")
    return buf.getvalue().encode()
