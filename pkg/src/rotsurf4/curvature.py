"""First fundamental form and Gaussian curvature of a SurfacePatch.

Curvature uses the orthogonal-coordinate formula for semi-Riemannian
surfaces,

    K = -1/(e g) * [eps1 * (g_u / e)_u + eps2 * (e_v / g)_v],

with e = |E|^(1/2), g = |G|^(1/2) and eps1, eps2 the signs of E and G.
The outer derivatives are nested central differences with the same step as
the tangents, so the whole pipeline is second order in the step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .errors import DegeneratePoint, NotOrthogonal
from .geometry import DEFAULT_STEP, SurfacePatch, central_tangents, inner_product

TOL_DEGENERATE = 1e-9
TOL_ORTHOGONAL = 1e-6

OK, DEGENERATE, NOT_ORTHOGONAL = 0, 1, 2

# (du, dv) offsets in units of the step; index 0 is the centre
_STENCIL = np.array(
    [(0, 0), (1, 0), (-1, 0), (2, 0), (-2, 0), (0, 1), (0, -1), (0, 2), (0, -2)],
    dtype=float,
)


@dataclass(frozen=True)
class FundamentalForm:
    E: float
    F: float
    G: float

    @property
    def eps1(self) -> int:
        return 1 if self.E > 0 else -1

    @property
    def eps2(self) -> int:
        return 1 if self.G > 0 else -1


def _use_analytic(patch: SurfacePatch, tangents: str) -> bool:
    if tangents == "auto":
        return patch.has_analytic_derivatives
    if tangents == "analytic":
        if not patch.has_analytic_derivatives:
            raise ValueError(f"patch {patch.family.value} has no analytic derivatives")
        return True
    if tangents == "fd":
        return False
    raise ValueError(f"tangents must be 'auto', 'analytic' or 'fd', not {tangents!r}")


def stencil_reach(analytic: bool) -> int:
    """How many steps the curvature stencil reaches from its centre."""
    return 2 if analytic else 3


def metric_arrays(patch: SurfacePatch, u, v, step: float, analytic: bool):
    """E, F, G at arrays of points."""
    if analytic:
        xu, xv = patch.tangent_u(u, v), patch.tangent_v(u, v)
    else:
        xu, xv = central_tangents(patch, u, v, step)
    sig = patch.signature
    return inner_product(sig, xu, xu), inner_product(sig, xu, xv), inner_product(sig, xv, xv)


def curvature_arrays(patch: SurfacePatch, u, v, step: float = DEFAULT_STEP, *,
                     tangents: str = "auto",
                     tol_degenerate: float = TOL_DEGENERATE,
                     tol_orthogonal: float = TOL_ORTHOGONAL):
    """Vectorised Gaussian curvature.

    Returns ``(K, status)`` with the shape of ``u``/``v`` broadcast together.
    ``status`` is OK, DEGENERATE or NOT_ORTHOGONAL per point; K is NaN
    wherever status is not OK.  No margin checks are done here.
    """
    analytic = _use_analytic(patch, tangents)
    u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    shape = u.shape
    uf, vf = u.ravel(), v.ravel()
    h = float(step)

    U = uf[None, :] + h * _STENCIL[:, :1]
    V = vf[None, :] + h * _STENCIL[:, 1:]
    E, F, G = metric_arrays(patch, U, V, h, analytic)

    degenerate = np.any((np.abs(E) < tol_degenerate) | (np.abs(G) < tol_degenerate), axis=0)
    skew = np.abs(F[0]) > tol_orthogonal

    with np.errstate(divide="ignore", invalid="ignore"):
        e = np.sqrt(np.abs(E))
        g = np.sqrt(np.abs(G))
        gu_plus = (g[3] - g[0]) / (2 * h)
        gu_minus = (g[0] - g[4]) / (2 * h)
        d1 = (gu_plus / e[1] - gu_minus / e[2]) / (2 * h)
        ev_plus = (e[7] - e[0]) / (2 * h)
        ev_minus = (e[0] - e[8]) / (2 * h)
        d2 = (ev_plus / g[5] - ev_minus / g[6]) / (2 * h)
        eps1 = np.sign(E[0])
        eps2 = np.sign(G[0])
        K = -(eps1 * d1 + eps2 * d2) / (e[0] * g[0])

    status = np.where(degenerate, DEGENERATE, np.where(skew, NOT_ORTHOGONAL, OK))
    K = np.where(status == OK, K, np.nan)
    return K.reshape(shape), status.reshape(shape)


def fundamental_form(patch: SurfacePatch, point, step: float = DEFAULT_STEP, *,
                     tangents: str = "auto",
                     tol_degenerate: float = TOL_DEGENERATE) -> FundamentalForm:
    """E, F, G at a single parameter point.

    Raises DegeneratePoint when |E| or |G| is below ``tol_degenerate``.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    analytic = _use_analytic(patch, tangents)
    u, v = float(point[0]), float(point[1])
    patch.check_margin(u, v, 0.0 if analytic else step)
    E, F, G = (float(x) for x in metric_arrays(patch, np.array(u), np.array(v), step, analytic))
    if abs(E) < tol_degenerate or abs(G) < tol_degenerate:
        raise DegeneratePoint(f"degenerate metric at ({u:g}, {v:g}): E={E:.3g}, G={G:.3g}", (u, v))
    return FundamentalForm(E, F, G)


def _raise_for(status: int, point) -> None:
    u, v = point
    if status == DEGENERATE:
        raise DegeneratePoint(f"degenerate metric on the stencil at ({u:g}, {v:g})", point)
    if status == NOT_ORTHOGONAL:
        raise NotOrthogonal(f"coordinates not orthogonal at ({u:g}, {v:g})", point)


def gaussian_curvature(patch: SurfacePatch, point, step: float = DEFAULT_STEP, *,
                       tangents: str = "auto",
                       tol_degenerate: float = TOL_DEGENERATE,
                       tol_orthogonal: float = TOL_ORTHOGONAL) -> float:
    """Gaussian curvature at one point.

    Parameters
    ----------
    patch : SurfacePatch
        Surface to probe.  Must be orthogonally parametrised near ``point``.
    point : (float, float)
        Parameter point; the stencil reaches 3 steps out (2 with analytic
        tangents) and must stay inside the domain.
    step : float
        Finite-difference step used for tangents and for the outer
        derivatives.
    tangents : {'auto', 'analytic', 'fd'}
        'auto' prefers the patch's analytic derivatives when it has them.

    Raises
    ------
    DomainMargin, DegeneratePoint, NotOrthogonal
    """
    if step <= 0:
        raise ValueError("step must be positive")
    analytic = _use_analytic(patch, tangents)
    u, v = float(point[0]), float(point[1])
    patch.check_margin(u, v, stencil_reach(analytic) * step)
    K, status = curvature_arrays(patch, u, v, step, tangents=tangents,
                                 tol_degenerate=tol_degenerate, tol_orthogonal=tol_orthogonal)
    _raise_for(int(status), (u, v))
    return float(K)


def grid_axes(patch: SurfacePatch, nu: int, nv: int, margin: float):
    """Uniform interior grid axes, shrunk by ``margin`` on every side."""
    if nu < 2 or nv < 2:
        raise ValueError("nu and nv must be at least 2")
    (u0, u1), (v0, v1) = patch.domain_u, patch.domain_v
    if u1 - u0 <= 2 * margin or v1 - v0 <= 2 * margin:
        raise ValueError("domain too small for the stencil margin")
    return np.linspace(u0 + margin, u1 - margin, nu), np.linspace(v0 + margin, v1 - margin, nv)


def curvature_on_grid(patch: SurfacePatch, nu: int, nv: int, step: float = DEFAULT_STEP, *,
                      tangents: str = "auto", **tols):
    """Arrays ``(U, V, K, status)`` on the row-major (u outer, v inner) grid."""
    analytic = _use_analytic(patch, tangents)
    us, vs = grid_axes(patch, nu, nv, stencil_reach(analytic) * step)
    U, V = np.meshgrid(us, vs, indexing="ij")
    K, status = curvature_arrays(patch, U, V, step, tangents=tangents, **tols)
    return U.ravel(), V.ravel(), K.ravel(), status.ravel()


def curvature_grid(patch: SurfacePatch, nu: int, nv: int, step: float = DEFAULT_STEP, *,
                   tangents: str = "auto", **tols) -> List[Tuple[Tuple[float, float], float]]:
    """K sampled on an ``nu`` x ``nv`` interior grid, row-major in u then v.

    The first failing point (in row-major order) raises DegeneratePoint or
    NotOrthogonal with its coordinates attached as ``.point``.
    """
    U, V, K, status = curvature_on_grid(patch, nu, nv, step, tangents=tangents, **tols)
    bad = np.flatnonzero(status != OK)
    if bad.size:
        i = int(bad[0])
        _raise_for(int(status[i]), (float(U[i]), float(V[i])))
    return [((float(a), float(b)), float(k)) for a, b, k in zip(U, V, K)]
