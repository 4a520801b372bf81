"""Closed-form rotation profiles for constant Gaussian curvature.

A rotational surface with unit-speed meridian and metric E = eps,
G = rho^2 has K = -eps * rho''/rho, so constant K forces rho to be an
exponential, trigonometric or affine function of u.  The same bases, squared,
are the G-profiles of the general rotational surfaces (SR2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import EmptyDomain, OutOfDomain

Interval = Tuple[float, float]


class CurvatureClass(enum.Enum):
    NEGATIVE = "neg"
    POSITIVE = "pos"
    ZERO = "zero"

    @property
    def sign(self) -> int:
        return {"neg": -1, "pos": 1, "zero": 0}[self.value]


class MeridianRole(enum.Enum):
    SR1 = "SR1_meridian"
    SR3 = "SR3_meridian"
    SR4 = "SR4_meridian"
    # the shared Lorentzian condition eps + rho'^2 >= 0; exact for SR3 only
    SR34 = "SR34_meridian"


@dataclass(frozen=True)
class ProfileSpec:
    """Constants selecting one constant-curvature profile.

    ``C`` is the rate inside exp/sin/cos and is ignored for the zero class.
    ``eps`` is the sign of E for Lorentzian families (SR3/SR4); SR1 and SR2
    behave like ``eps = +1``.  The target curvature is ``sign * C**2``, and
    the functional form follows from the sign of ``eps * K``: negative gives
    exponentials, positive gives sines/cosines.
    """

    curvature_class: CurvatureClass
    C: float = 1.0
    C1: float = 0.0
    C2: float = 1.0
    eps: int = 1

    def __post_init__(self):
        if not isinstance(self.curvature_class, CurvatureClass):
            object.__setattr__(self, "curvature_class", CurvatureClass(self.curvature_class))
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if self.curvature_class is not CurvatureClass.ZERO and not self.C > 0:
            raise ValueError("C must be positive for the nonzero curvature classes")

    @property
    def target_K(self) -> float:
        s = self.curvature_class.sign
        return 0.0 if s == 0 else s * self.C ** 2

    @property
    def form(self) -> str:
        s = self.curvature_class.sign
        if s == 0:
            return "affine"
        return "exp" if self.eps * s < 0 else "trig"

    def base(self, u):
        u = np.asarray(u, dtype=float)
        C, C1, C2 = self.C, self.C1, self.C2
        if self.form == "exp":
            return C1 * np.exp(C * u) + C2 * np.exp(-C * u)
        if self.form == "trig":
            return C1 * np.sin(C * u) + C2 * np.cos(C * u)
        return C1 * u + C2

    def base_prime(self, u):
        u = np.asarray(u, dtype=float)
        C, C1, C2 = self.C, self.C1, self.C2
        if self.form == "exp":
            return C * (C1 * np.exp(C * u) - C2 * np.exp(-C * u))
        if self.form == "trig":
            return C * (C1 * np.cos(C * u) - C2 * np.sin(C * u))
        return np.full_like(u, C1)

    def base_second(self, u):
        u = np.asarray(u, dtype=float)
        if self.form == "exp":
            return self.C ** 2 * self.base(u)
        if self.form == "trig":
            return -self.C ** 2 * self.base(u)
        return np.zeros_like(u)


def _scalarize(x):
    return float(x) if np.ndim(x) == 0 else x


def rho(spec: ProfileSpec, u):
    """Radius of rotation; raises OutOfDomain where it is not positive."""
    r = spec.base(u)
    if np.any(~(r > 0)):
        raise OutOfDomain(f"rho <= 0 for {spec} at some of u={u}")
    return _scalarize(r)


def rho_prime(spec: ProfileSpec, u):
    return _scalarize(spec.base_prime(u))


def rho_second(spec: ProfileSpec, u):
    return _scalarize(spec.base_second(u))


def G_profile(spec: ProfileSpec, u):
    """Squared-norm profile G = base(u)**2 of a constant-curvature SR2 surface."""
    b = spec.base(u)
    if np.any(b == 0) or not np.all(np.isfinite(b)):
        raise OutOfDomain(f"G vanishes for {spec} at some of u={u}")
    return _scalarize(b * b)


def G_prime(spec: ProfileSpec, u):
    """Analytic derivative of G_profile."""
    return _scalarize(2.0 * spec.base(u) * spec.base_prime(u))


def meridian_slack(spec: ProfileSpec, role: MeridianRole, u):
    """Squared speed left over for the free meridian coordinates.

    Nonnegative exactly where a unit-speed meridian can be completed.
    """
    role = MeridianRole(role)
    rp2 = spec.base_prime(u) ** 2
    if role is MeridianRole.SR1:
        return 1.0 - rp2
    if role in (MeridianRole.SR3, MeridianRole.SR34):
        return spec.eps + rp2
    # SR4 meridian (rho, 0, f, g): E = rho'^2 + f'^2 - g'^2; for eps = -1 the
    # timelike coordinate g absorbs any rho', for eps = +1 we need |rho'| <= 1
    if spec.eps == 1:
        return 1.0 - rp2
    return np.ones_like(rp2)


def _feasible(spec: ProfileSpec, role: MeridianRole, u) -> np.ndarray:
    with np.errstate(over="ignore", invalid="ignore"):
        return (spec.base(u) > 0) & (meridian_slack(spec, role, u) >= 0)


def _refine(spec, role, good: float, bad: float, tol: float) -> float:
    # boolean bisection; always returns a feasible point
    while abs(bad - good) > tol:
        mid = 0.5 * (good + bad)
        if _feasible(spec, role, mid):
            good = mid
        else:
            bad = mid
    return good


def admissible_domain(spec: ProfileSpec, role: MeridianRole, requested: Interval, *,
                      n_samples: int = 10_001, tol: float = 1e-10) -> Interval:
    """Largest subinterval of ``requested`` where rho > 0 and the meridian is completable.

    Feasibility is checked on ``n_samples`` uniform points; the ends of the
    longest feasible run are then bisected to ``tol``.  Returned endpoints
    are always feasible.
    """
    a, b = float(requested[0]), float(requested[1])
    if not b > a:
        raise ValueError("requested interval must be nonempty")
    role = MeridianRole(role)
    us = np.linspace(a, b, n_samples)
    ok = _feasible(spec, role, us)
    if not ok.any():
        raise EmptyDomain(f"no admissible u in [{a:g}, {b:g}] for {spec} ({role.value})")

    # longest run of consecutive feasible samples
    padded = np.concatenate([[False], ok, [False]]).astype(int)
    edges = np.diff(padded)
    starts = np.flatnonzero(edges == 1)
    stops = np.flatnonzero(edges == -1) - 1
    k = int(np.argmax(stops - starts))
    i, j = int(starts[k]), int(stops[k])

    lo = a if i == 0 else _refine(spec, role, us[i], us[i - 1], tol)
    hi = b if j == n_samples - 1 else _refine(spec, role, us[j], us[j + 1], tol)
    if not hi > lo:
        raise EmptyDomain(f"admissible set in [{a:g}, {b:g}] is a single point for {spec}")
    return (float(lo), float(hi))
