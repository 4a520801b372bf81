"""Constant-curvature verification reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import List, Tuple

import numpy as np

from .curvature import DEGENERATE, NOT_ORTHOGONAL, curvature_on_grid
from .errors import AllDegenerate, NotOrthogonal
from .geometry import DEFAULT_STEP, SurfacePatch


@dataclass
class CurvatureReport:
    family: str
    target_K: float
    tolerance: float
    max_abs_deviation: float
    passed: bool
    samples: List[Tuple[float, float, float]] = field(default_factory=list)
    degenerate_points: List[Tuple[float, float]] = field(default_factory=list)

    @property
    def n_samples(self) -> int:
        return len(self.samples)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["n_samples"] = self.n_samples
        d["samples"] = [list(s) for s in self.samples]
        d["degenerate_points"] = [list(p) for p in self.degenerate_points]
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "CurvatureReport":
        return cls(
            family=d["family"],
            target_K=float(d["target_K"]),
            tolerance=float(d["tolerance"]),
            max_abs_deviation=float(d["max_abs_deviation"]),
            passed=bool(d["passed"]),
            samples=[tuple(map(float, s)) for s in d.get("samples", [])],
            degenerate_points=[tuple(map(float, p)) for p in d["degenerate_points"]],
        )

    @classmethod
    def from_json(cls, text: str) -> "CurvatureReport":
        return cls.from_dict(json.loads(text))


def verify_constant_curvature(patch: SurfacePatch, target_K: float, nu: int = 20, nv: int = 20,
                              tolerance: float = 1e-3, *, step: float = DEFAULT_STEP,
                              tangents: str = "auto") -> CurvatureReport:
    """Sample K on an interior grid and compare it with ``target_K``.

    Degenerate grid points (|E| or |G| tiny on the stencil) are skipped and
    listed in the report; a non-orthogonal point raises NotOrthogonal.
    """
    if nu < 4 or nv < 4:
        raise ValueError("verification grid needs nu, nv >= 4")
    U, V, K, status = curvature_on_grid(patch, nu, nv, step, tangents=tangents)
    skew = np.flatnonzero(status == NOT_ORTHOGONAL)
    if skew.size:
        i = int(skew[0])
        raise NotOrthogonal(f"coordinates not orthogonal at ({U[i]:g}, {V[i]:g})", (U[i], V[i]))
    good = status == 0
    if not good.any():
        raise AllDegenerate(f"every point of the {nu}x{nv} grid is degenerate")
    samples = [(float(a), float(b), float(k)) for a, b, k in zip(U[good], V[good], K[good])]
    degenerate = [(float(a), float(b)) for a, b in zip(U[status == DEGENERATE], V[status == DEGENERATE])]
    dev = float(np.max(np.abs(K[good] - target_K)))
    return CurvatureReport(
        family=patch.family.value,
        target_K=float(target_K),
        tolerance=float(tolerance),
        max_abs_deviation=dev,
        passed=bool(dev <= tolerance),
        samples=samples,
        degenerate_points=degenerate,
    )
