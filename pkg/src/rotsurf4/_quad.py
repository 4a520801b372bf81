"""Cumulative adaptive quadrature shared by the meridian builders."""

from __future__ import annotations

from typing import Callable

import numpy as np
from scipy.integrate import quad


class CumulativeIntegral:
    """u -> integral of ``integrand`` from ``u0`` to u, vectorised.

    Each call sorts the distinct abscissae and integrates the gaps between
    neighbours with adaptive Gauss-Kronrod quadrature, so nearby points
    (finite-difference stencils) differ by an accurately integrated sliver.
    """

    def __init__(self, integrand: Callable[[np.ndarray], np.ndarray], u0: float, epsabs: float = 1e-13, epsrel: float = 1e-12):
        self.integrand = integrand
        self.u0 = float(u0)
        self.epsabs = epsabs
        self.epsrel = epsrel

    def _scalar_integrand(self, t):
        return float(self.integrand(np.asarray(t)))

    def __call__(self, u):
        u = np.asarray(u, dtype=float)
        pts, inv = np.unique(np.append(u.ravel(), self.u0), return_inverse=True)
        vals = np.zeros(pts.size)
        for k in range(1, pts.size):
            piece, _ = quad(self._scalar_integrand, pts[k - 1], pts[k],
                            epsabs=self.epsabs, epsrel=self.epsrel, limit=200)
            vals[k] = vals[k - 1] + piece
        vals -= vals[inv[-1]]
        out = vals[inv[:-1]].reshape(u.shape)
        return float(out) if out.ndim == 0 else out
