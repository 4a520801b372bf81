"""Assemble SR1-SR4 surface patches from profiles and meridian solutions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from ._quad import CumulativeIntegral
from .errors import InfeasibleDomain, OutOfDomain
from .geometry import Family, MetricSignature, SurfacePatch
from .meridian_ode import MeridianSolution
from .profiles import MeridianRole, ProfileSpec, meridian_slack

Interval = Tuple[float, float]
Func = Callable[[np.ndarray], np.ndarray]

TWO_PI = 2.0 * np.pi

_ROLE = {Family.SR1: MeridianRole.SR1, Family.SR3: MeridianRole.SR3, Family.SR4: MeridianRole.SR4}


def _zero(u):
    return np.zeros_like(np.asarray(u, dtype=float))


@dataclass(frozen=True)
class MeridianCurve:
    """Unit-speed meridian (f, g, rho) with analytic derivatives."""

    family: Family
    spec: ProfileSpec
    f: Func
    g: Func
    rho: Func
    df: Func
    dg: Func
    drho: Func
    domain: Interval
    signature: MetricSignature
    eps: int = 1

    def speed_defect(self, u):
        """Deviation of the meridian's squared speed from its target (+1 or eps)."""
        fp, gp, rp = self.df(u), self.dg(u), self.drho(u)
        if self.family is Family.SR1:
            return fp ** 2 + gp ** 2 + rp ** 2 - 1.0
        if self.family is Family.SR3:
            return fp ** 2 + gp ** 2 - rp ** 2 - self.eps
        return rp ** 2 + fp ** 2 - gp ** 2 - self.eps


def _family(family) -> Family:
    fam = Family(family) if not isinstance(family, Family) else family
    if fam not in _ROLE:
        raise ValueError(f"complete_meridian handles SR1, SR3, SR4; got {fam.value}")
    return fam


def complete_meridian(spec: ProfileSpec, family, domain: Interval, *,
                      n_check: int = 2001) -> MeridianCurve:
    """Complete the profile ``rho`` to a unit-speed meridian with one free coordinate.

    SR1 and SR3 keep g = 0 and put the remaining speed into f.  SR4 with
    eps = +1 does the same; SR4 with eps = -1 keeps f = 0 and puts it into
    the timelike coordinate g.  The free coordinate is 0 at the left end of
    ``domain``.

    Raises
    ------
    OutOfDomain
        If rho is not positive on ``domain``.
    InfeasibleDomain
        If the arc-length integrand is negative somewhere on ``domain``.
    """
    fam = _family(family)
    role = _ROLE[fam]
    a, b = float(domain[0]), float(domain[1])
    if not b > a:
        raise ValueError("domain must be nonempty")
    us = np.linspace(a, b, n_check)
    # endpoints may touch the axis (open-interval reading); the interior may not
    if np.any(~(spec.base(us[1:-1]) > 0)) or np.any(spec.base(us[[0, -1]]) < 0):
        raise OutOfDomain(f"rho <= 0 somewhere on [{a:g}, {b:g}]")
    slack = meridian_slack(spec, role, us)
    if np.any(slack < -1e-12):
        bad = us[np.argmax(slack < -1e-12)]
        raise InfeasibleDomain(f"arc-length integrand negative at u={bad:.6g} for {spec}")

    if fam is Family.SR4 and spec.eps == -1:
        def speed(u):
            return np.sqrt(1.0 + spec.base_prime(u) ** 2)
        f, df = _zero, _zero
        g, dg = CumulativeIntegral(speed, a), speed
    else:
        def speed(u):
            return np.sqrt(np.maximum(meridian_slack(spec, role, u), 0.0))
        f, df = CumulativeIntegral(speed, a), speed
        g, dg = _zero, _zero

    sig = MetricSignature.EUCLIDEAN4 if fam is Family.SR1 else MetricSignature.LORENTZ4
    return MeridianCurve(
        family=fam, spec=spec, f=f, g=g, rho=spec.base, df=df, dg=dg, drho=spec.base_prime,
        domain=(a, b), signature=sig, eps=1 if fam is Family.SR1 else spec.eps,
    )


def default_v_range(family: Family) -> Interval:
    # hyperbolic rotations grow like cosh v, keep the default window modest
    return (-1.0, 1.0) if family is Family.SR3 else (0.0, TWO_PI)


def build_surface(family, meridian: MeridianCurve, v_range: Optional[Interval] = None,
                  *, check_tol: float = 1e-8) -> SurfacePatch:
    """Rotate a meridian into an SR1, SR3 or SR4 patch.

    SR1: (f, g, rho cos v, rho sin v) in R^4.
    SR3: (f, g, rho sinh v, rho cosh v) in R^4_1.
    SR4: (rho cos v, rho sin v, f, g) in R^4_1.
    """
    fam = _family(family)
    if meridian.family is not fam:
        raise ValueError(f"meridian was completed for {meridian.family.value}, not {fam.value}")
    a, b = meridian.domain
    probe = np.linspace(a, b, 201)
    defect = np.max(np.abs(meridian.speed_defect(probe)))
    if not defect <= check_tol:
        raise ValueError(f"meridian is not unit speed (max defect {defect:.3g})")
    v_range = default_v_range(fam) if v_range is None else tuple(map(float, v_range))
    m = meridian

    if fam is Family.SR1:
        def X(u, v):
            r = m.rho(u)
            return m.f(u), m.g(u), r * np.cos(v), r * np.sin(v)

        def Xu(u, v):
            rp = m.drho(u)
            return m.df(u), m.dg(u), rp * np.cos(v), rp * np.sin(v)

        def Xv(u, v):
            r = m.rho(u)
            return 0.0, 0.0, -r * np.sin(v), r * np.cos(v)
    elif fam is Family.SR3:
        def X(u, v):
            r = m.rho(u)
            return m.f(u), m.g(u), r * np.sinh(v), r * np.cosh(v)

        def Xu(u, v):
            rp = m.drho(u)
            return m.df(u), m.dg(u), rp * np.sinh(v), rp * np.cosh(v)

        def Xv(u, v):
            r = m.rho(u)
            return 0.0, 0.0, r * np.cosh(v), r * np.sinh(v)
    else:
        def X(u, v):
            r = m.rho(u)
            return r * np.cos(v), r * np.sin(v), m.f(u), m.g(u)

        def Xu(u, v):
            rp = m.drho(u)
            return rp * np.cos(v), rp * np.sin(v), m.df(u), m.dg(u)

        def Xv(u, v):
            r = m.rho(u)
            return -r * np.sin(v), r * np.cos(v), 0.0, 0.0

    return SurfacePatch(fam, X, (a, b), v_range, m.signature, du=Xu, dv=Xv,
                        label=f"{fam.value} {m.spec}")


def build_sr2(solution: MeridianSolution, v_range: Interval = (0.0, TWO_PI)) -> SurfacePatch:
    """General rotational surface (f cos av, f sin av, g cos bv, g sin bv).

    phi is interpolated between the solution samples with a cubic Hermite
    spline (using the stored phi' values); sqrt(G) is evaluated in closed
    form, so f and g inherit only the interpolation error of phi.
    """
    al, be = solution.alpha, solution.beta
    spec = solution.spec
    phi = CubicHermiteSpline(solution.u, solution.phi, solution.phi_prime)
    dphi = phi.derivative()

    def parts(u):
        b = spec.base(u)
        s = np.abs(b)
        sp = np.sign(b) * spec.base_prime(u)
        p = phi(u)
        return s, sp, np.cos(p), np.sin(p), dphi(u)

    def fg(u):
        s, _, c, sn, _ = parts(u)
        return s * c / al, s * sn / be

    def fg_prime(u):
        s, sp, c, sn, pp = parts(u)
        return (sp * c - s * sn * pp) / al, (sp * sn + s * c * pp) / be

    def X(u, v):
        f, g = fg(u)
        return f * np.cos(al * v), f * np.sin(al * v), g * np.cos(be * v), g * np.sin(be * v)

    def Xu(u, v):
        f, g = fg_prime(u)
        return f * np.cos(al * v), f * np.sin(al * v), g * np.cos(be * v), g * np.sin(be * v)

    def Xv(u, v):
        f, g = fg(u)
        return (-al * f * np.sin(al * v), al * f * np.cos(al * v),
                -be * g * np.sin(be * v), be * g * np.cos(be * v))

    domain = (float(solution.u[0]), float(solution.u[-1]))
    return SurfacePatch(Family.SR2, X, domain, tuple(map(float, v_range)),
                        MetricSignature.EUCLIDEAN4, du=Xu, dv=Xv,
                        label=f"sr2 alpha={al:g} beta={be:g} {spec}")
