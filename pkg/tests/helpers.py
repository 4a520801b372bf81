"""Shared samplers for randomized constant-curvature instances."""

import numpy as np

from rotsurf4 import EmptyDomain, ProfileSpec, admissible_domain

ROLE = {"sr1": "SR1_meridian", "sr3": "SR3_meridian", "sr4": "SR4_meridian"}


def sample_profile(rng, cls, family="sr1", eps=1, *, requested=(-1.0, 1.0), rho_min=0.5,
                   min_length=0.4, trim=0.1):
    """Draw a well-conditioned admissible (spec, window) pair.

    C ~ U[0.5, 1.5], C1, C2 ~ U[-1.5, 1.5].  The window is the admissible
    domain inside ``requested`` with ``trim`` of its length cut from each end,
    and rho must stay above ``rho_min`` on it (finite-difference noise in K
    grows like 1/rho near the rotation axis).
    """
    while True:
        C = rng.uniform(0.5, 1.5)
        C1, C2 = rng.uniform(-1.5, 1.5, 2)
        spec = ProfileSpec(cls, C, C1, C2, eps)
        try:
            a, b = admissible_domain(spec, ROLE[family], requested)
        except EmptyDomain:
            continue
        length = b - a
        a, b = a + trim * length, b - trim * length
        if b - a < min_length:
            continue
        if spec.base(np.linspace(a, b, 201)).min() < rho_min:
            continue
        return spec, (a, b)
