"""Ambient four-spaces and evaluable surface patches.

Two ambient spaces are supported: Euclidean R^4 and Lorentz-Minkowski
R^4_1 with product x1*y1 + x2*y2 + x3*y3 - x4*y4.  Everything here works
on numpy arrays whose last axis has length 4, so a whole grid of points can
be pushed through a single call.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .errors import DomainMargin

Interval = Tuple[float, float]
PatchMap = Callable[[np.ndarray, np.ndarray], object]

DEFAULT_STEP = 1e-4


class MetricSignature(enum.Enum):
    EUCLIDEAN4 = "euclidean4"
    LORENTZ4 = "lorentz4"

    @property
    def diagonal(self) -> np.ndarray:
        if self is MetricSignature.LORENTZ4:
            return np.array([1.0, 1.0, 1.0, -1.0])
        return np.ones(4)


class Family(enum.Enum):
    SR1 = "sr1"
    SR2 = "sr2"
    SR3 = "sr3"
    SR4 = "sr4"
    CUSTOM = "custom"


def inner_product(sig: MetricSignature, x, y):
    """Ambient inner product, broadcast over leading axes.

    >>> inner_product(MetricSignature.LORENTZ4, [0, 0, 0, 1], [0, 0, 0, 1])
    -1.0
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = np.sum(x * y * sig.diagonal, axis=-1)
    return float(out) if np.ndim(out) == 0 else out


def _stack_points(raw, shape) -> np.ndarray:
    # a tuple of 4 components is the unambiguous convention; arrays are
    # read as trailing-axis points first, then as leading-axis components
    shape = tuple(shape)
    if isinstance(raw, np.ndarray) and raw.dtype != object:
        raw = raw.astype(float, copy=False)
        if raw.shape == shape + (4,):
            return raw
        if raw.ndim == 0 or raw.shape[0] != 4:
            return np.broadcast_to(raw, shape + (4,))
    comps = [np.broadcast_to(np.asarray(c, dtype=float), shape) for c in raw]
    if len(comps) != 4:
        raise ValueError(f"patch map must return 4 components, got {len(comps)}")
    return np.stack(comps, axis=-1)


@dataclass(frozen=True)
class SurfacePatch:
    """A map (u, v) -> R^4 over a rectangular parameter domain.

    ``func`` must accept numpy arrays for ``u`` and ``v`` (broadcast
    together) and return either an array with a trailing axis of length 4
    or a sequence of four components.  ``du``/``dv`` are optional analytic
    partial derivatives with the same calling convention; the curvature
    engine uses them when present unless asked for finite differences.
    """

    family: Family
    func: PatchMap
    domain_u: Interval
    domain_v: Interval
    signature: MetricSignature = MetricSignature.EUCLIDEAN4
    du: Optional[PatchMap] = None
    dv: Optional[PatchMap] = None
    label: str = ""

    def __call__(self, u, v) -> np.ndarray:
        u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
        return _stack_points(self.func(u, v), u.shape)

    @property
    def has_analytic_derivatives(self) -> bool:
        return self.du is not None and self.dv is not None

    def tangent_u(self, u, v) -> np.ndarray:
        u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
        return _stack_points(self.du(u, v), u.shape)

    def tangent_v(self, u, v) -> np.ndarray:
        u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
        return _stack_points(self.dv(u, v), u.shape)

    def check_margin(self, u: float, v: float, margin: float) -> None:
        (u0, u1), (v0, v1) = self.domain_u, self.domain_v
        if not (u0 <= u - margin and u + margin <= u1 and v0 <= v - margin and v + margin <= v1):
            raise DomainMargin(
                f"point ({u:g}, {v:g}) with margin {margin:g} leaves "
                f"[{u0:g}, {u1:g}] x [{v0:g}, {v1:g}]"
            )


def central_tangents(patch: SurfacePatch, u, v, step: float):
    """Central-difference X_u and X_v at arrays of points, one patch call."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    u, v = np.broadcast_arrays(u, v)
    uu = np.stack([u + step, u - step, u, u])
    vv = np.stack([v, v, v + step, v - step])
    X = patch(uu, vv)
    xu = (X[0] - X[1]) / (2.0 * step)
    xv = (X[2] - X[3]) / (2.0 * step)
    return xu, xv


def partial_derivative(patch: SurfacePatch, which: str, point, step: float = DEFAULT_STEP) -> np.ndarray:
    """Central-difference partial derivative of ``patch`` at ``point``.

    Raises
    ------
    DomainMargin
        If ``point +/- step`` leaves the patch domain.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    if which not in ("u", "v"):
        raise ValueError("which must be 'u' or 'v'")
    u, v = float(point[0]), float(point[1])
    (u0, u1), (v0, v1) = patch.domain_u, patch.domain_v
    if which == "u":
        if not (u0 <= u - step and u + step <= u1 and v0 <= v <= v1):
            raise DomainMargin(f"u-stencil at ({u:g}, {v:g}) leaves the domain")
        hi, lo = patch(u + step, v), patch(u - step, v)
    else:
        if not (v0 <= v - step and v + step <= v1 and u0 <= u <= u1):
            raise DomainMargin(f"v-stencil at ({u:g}, {v:g}) leaves the domain")
        hi, lo = patch(u, v + step), patch(u, v - step)
    return (hi - lo) / (2.0 * step)


def custom_patch(func: PatchMap, domain_u: Interval, domain_v: Interval,
                 signature: MetricSignature = MetricSignature.EUCLIDEAN4, **kw) -> SurfacePatch:
    return SurfacePatch(Family.CUSTOM, func, tuple(domain_u), tuple(domain_v), signature, **kw)
