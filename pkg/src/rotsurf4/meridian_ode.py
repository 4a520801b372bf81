"""Meridians of constant-curvature general rotational surfaces (SR2).

With alpha*f = sqrt(G) cos(phi) and beta*g = sqrt(G) sin(phi), the
unit-speed condition f'^2 + g'^2 = 1 becomes a quadratic in phi',

    A phi'^2 + B phi' + Cc = 0,
    A  = G (sin^2 phi / alpha^2 + cos^2 phi / beta^2)
    B  = G' sin phi cos phi (1/beta^2 - 1/alpha^2)
    Cc = G'^2 / (4G) (cos^2 phi / alpha^2 + sin^2 phi / beta^2) - 1

(B comes from the cross term 2 sqrt(G) (sqrt G)' = G'; it vanishes when
alpha = beta).  The quadratic is solved pointwise for phi' (one root branch for the whole
trajectory) and integrated with classical RK4.  For alpha = beta the
equation separates and phi is a single quadrature.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from ._quad import CumulativeIntegral
from .errors import NegativeDiscriminant, NegativeRadicand, OutOfDomain
from .profiles import G_prime, G_profile, ProfileSpec

Interval = Tuple[float, float]

DEFAULT_STEP = 1e-3
# relative slack below zero still read as a double root
_DISC_RTOL = 1e-12


class Method(enum.Enum):
    GENERAL_ODE = "ode"
    CLOSED_FORM_QUADRATURE = "quadrature"


@dataclass(frozen=True, eq=False)
class MeridianSolution:
    """Sampled phi(u) and the meridian (f, g) it defines."""

    alpha: float
    beta: float
    spec: ProfileSpec
    u: np.ndarray
    phi: np.ndarray
    phi_prime: np.ndarray
    branch: int
    method: Method
    f: np.ndarray = field(init=False)
    g: np.ndarray = field(init=False)

    def __post_init__(self):
        sqrt_g = np.abs(self.spec.base(self.u))
        object.__setattr__(self, "f", sqrt_g * np.cos(self.phi) / self.alpha)
        object.__setattr__(self, "g", sqrt_g * np.sin(self.phi) / self.beta)


def _check_sr2_spec(spec: ProfileSpec, alpha: float, beta: float) -> None:
    if spec.eps != 1:
        raise ValueError("SR2 lives in Euclidean R^4; the profile must have eps=+1")
    if not (alpha > 0 and beta > 0):
        raise ValueError("rotation rates alpha and beta must be positive")


def _branch(branch) -> int:
    if branch in (1, "+", "+1"):
        return 1
    if branch in (-1, "-", "-1"):
        return -1
    raise ValueError(f"branch must be +1 or -1, not {branch!r}")


def ode_coefficients(spec: ProfileSpec, alpha: float, beta: float, u: float, phi: float):
    """Coefficients (A, B, Cc) of the quadratic in phi' at (u, phi)."""
    G = G_profile(spec, u)
    Gp = G_prime(spec, u)
    s, c = math.sin(phi), math.cos(phi)
    ia2, ib2 = 1.0 / alpha ** 2, 1.0 / beta ** 2
    A = G * (s * s * ia2 + c * c * ib2)
    B = Gp * s * c * (ib2 - ia2)
    Cc = Gp * Gp / (4.0 * G) * (c * c * ia2 + s * s * ib2) - 1.0
    return A, B, Cc


def discriminant(A: float, B: float, Cc: float) -> float:
    d = B * B - 4.0 * A * Cc
    if d < 0 and d >= -_DISC_RTOL * (B * B + 4.0 * abs(A * Cc)):
        return 0.0
    return d


def solve_phi_prime(A: float, B: float, Cc: float, branch=1) -> float:
    """Root (-B + branch*sqrt(B^2 - 4 A Cc)) / (2A).

    A discriminant that is negative only at roundoff level is treated as a
    double root.  Raises NegativeDiscriminant otherwise.
    """
    if not A > 0:
        raise ValueError("leading coefficient A must be positive")
    d = discriminant(A, B, Cc)
    if d < 0:
        raise NegativeDiscriminant(f"no real phi': B^2 - 4 A Cc = {d:.6g}")
    return (-B + _branch(branch) * math.sqrt(d)) / (2.0 * A)


def eq_residual(spec: ProfileSpec, alpha: float, beta: float, u: float, phi: float, dphi: float) -> float:
    A, B, Cc = ode_coefficients(spec, alpha, beta, u, phi)
    return A * dphi * dphi + B * dphi + Cc


def _grid(u_range: Interval, step: float) -> np.ndarray:
    a, b = float(u_range[0]), float(u_range[1])
    if not b > a:
        raise ValueError("u_range must be nonempty")
    if not step > 0:
        raise ValueError("step must be positive")
    n = max(1, math.ceil((b - a) / step - 1e-9))
    return np.linspace(a, b, n + 1)


def integrate_phi(spec: ProfileSpec, alpha: float, beta: float, u_range: Interval,
                  phi0: float = 0.0, branch=1, step: float = DEFAULT_STEP) -> MeridianSolution:
    """Integrate phi' = root of the quadratic with fixed-step RK4.

    The step is shrunk slightly so that it divides ``u_range`` evenly.  The
    discriminant is checked at every stage; on failure the first point where
    it goes negative is located by bisection (to 1e-8) along the segment
    from the last good stage and reported in ``NegativeDiscriminant.u``.
    """
    _check_sr2_spec(spec, alpha, beta)
    br = _branch(branch)
    us = _grid(u_range, step)
    h = us[1] - us[0]
    last_ok = None  # (u, phi) of the most recent successful evaluation

    def disc_at(u, p):
        return discriminant(*ode_coefficients(spec, alpha, beta, u, p))

    def rhs(u, p):
        nonlocal last_ok
        A, B, Cc = ode_coefficients(spec, alpha, beta, u, p)
        d = discriminant(A, B, Cc)
        if d < 0:
            where = _locate(u, p)
            raise NegativeDiscriminant(f"discriminant negative near u={where:.9g} for {spec}", u=where)
        last_ok = (u, p)
        return (-B + br * math.sqrt(d)) / (2.0 * A)

    def _locate(u_bad, p_bad):
        if last_ok is None:
            return u_bad
        u_good, p_good = last_ok
        if u_bad <= u_good:
            return u_bad
        lo, hi = u_good, u_bad
        while hi - lo > 1e-8:
            mid = 0.5 * (lo + hi)
            p_mid = p_good + (p_bad - p_good) * (mid - u_good) / (u_bad - u_good)
            if disc_at(mid, p_mid) < 0:
                hi = mid
            else:
                lo = mid
        return hi

    phi = np.empty_like(us)
    dphi = np.empty_like(us)
    phi[0] = float(phi0)
    for i in range(us.size - 1):
        u, p = us[i], phi[i]
        k1 = rhs(u, p)
        dphi[i] = k1
        k2 = rhs(u + 0.5 * h, p + 0.5 * h * k1)
        k3 = rhs(u + 0.5 * h, p + 0.5 * h * k2)
        k4 = rhs(u + h, p + h * k3)
        phi[i + 1] = p + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
    dphi[-1] = rhs(us[-1], phi[-1])
    return MeridianSolution(alpha, beta, spec, us, phi, dphi, br, Method.GENERAL_ODE)


def quadrature_radicand(spec: ProfileSpec, alpha: float, u):
    """alpha^2 - ((sqrt G)')^2; must be >= 0 for a real meridian."""
    return alpha ** 2 - spec.base_prime(u) ** 2


def quadrature_phi(spec: ProfileSpec, alpha: float, u_range: Interval, phi0: float = 0.0,
                   step: float = DEFAULT_STEP) -> MeridianSolution:
    """phi for equal rotation rates, by adaptive quadrature.

    phi(u) = phi0 + int sqrt(alpha^2 - ((sqrt G)')^2) / sqrt(G) du.

    For alpha = 1 the integrand is the familiar
    sqrt(1 - C^2 [C1 cos(Cu) - C2 sin(Cu)]^2) / (C1 sin(Cu) + C2 cos(Cu))
    (and its exponential and affine analogues).  The positive square root is
    taken, i.e. the ``+`` branch of the general equation.  A radicand of
    exactly zero gives a constant phi.
    """
    _check_sr2_spec(spec, alpha, alpha)
    us = _grid(u_range, step)
    probe = np.linspace(us[0], us[-1], 4 * us.size - 3)
    b = spec.base(probe)
    if np.any(b == 0) or np.any(np.sign(b) != np.sign(b[0])):
        raise OutOfDomain(f"G vanishes inside [{us[0]:g}, {us[-1]:g}] for {spec}")
    rad = quadrature_radicand(spec, alpha, probe)
    tol = _DISC_RTOL * alpha ** 2
    if np.any(rad < -tol):
        u_bad = float(probe[np.argmax(rad < -tol)])
        raise NegativeRadicand(f"radicand negative at u={u_bad:.6g} for {spec}", u=u_bad)

    def integrand(u):
        return np.sqrt(np.maximum(quadrature_radicand(spec, alpha, u), 0.0)) / np.abs(spec.base(u))

    phi = float(phi0) + CumulativeIntegral(integrand, us[0], epsabs=1e-13, epsrel=1e-12)(us)
    return MeridianSolution(alpha, alpha, spec, us, phi, integrand(us), 1,
                            Method.CLOSED_FORM_QUADRATURE)


def residuals(solution: MeridianSolution) -> np.ndarray:
    """Equation residual at interior samples, phi' from central differences."""
    u, phi = solution.u, solution.phi
    dphi = (phi[2:] - phi[:-2]) / (u[2:] - u[:-2])
    return np.array([
        eq_residual(solution.spec, solution.alpha, solution.beta, a, p, d)
        for a, p, d in zip(u[1:-1], phi[1:-1], dphi)
    ])


def unit_speed_defect(solution: MeridianSolution) -> np.ndarray:
    """f'^2 + g'^2 - 1 at interior samples, derivatives by central differences."""
    u = solution.u
    du = u[2:] - u[:-2]
    fp = (solution.f[2:] - solution.f[:-2]) / du
    gp = (solution.g[2:] - solution.g[:-2]) / du
    return fp ** 2 + gp ** 2 - 1.0
