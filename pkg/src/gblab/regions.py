"""Spacetime region classification relative to a smeared charge worldline."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np


class Region(Enum):
    INTERIOR = "INTERIOR"
    SPACELIKE = "SPACELIKE"
    SHELL = "SHELL"


@dataclass(frozen=True)
class RegionSpec:
    """Partition of spacetime points about the lightcone of the charge at t = 0.

    INTERIOR:  |x - y0| + r_eff < |t| - delta   (safely inside the cone)
    SPACELIKE: |x - y0| - r_eff > |t| + delta   (safely causally disjoint)
    SHELL:     everything else (conservative fallback near the smeared cone)
    """

    center: np.ndarray = field(default_factory=lambda: np.zeros(3))
    r_eff: float = 0.0
    delta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))
        if self.r_eff < 0.0 or self.delta < 0.0:
            raise ValueError("r_eff and delta must be non-negative")

    def classify(self, x, t: float) -> Region:
        x = np.asarray(x, dtype=float)
        dist = float(np.linalg.norm(x - self.center))
        if dist + self.r_eff < abs(t) - self.delta:
            return Region.INTERIOR
        if dist - self.r_eff > abs(t) + self.delta:
            return Region.SPACELIKE
        return Region.SHELL


def region_classify(x, t: float, spec: RegionSpec) -> Region:
    """Classify a spacetime point; total, SHELL is the conservative fallback."""
    return spec.classify(x, t)
