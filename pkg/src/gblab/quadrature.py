"""Quadrature machinery: composite Gauss-Legendre panels, product sphere rules,
oscillatory radial integrals with accelerated half-period tails, and a generic
two-level refinement wrapper that attaches an error estimate to every result.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre


@dataclass(frozen=True)
class QuadratureSpec:
    """Resolution knobs shared by the field evaluators.

    radial_panels / radial_nodes control momentum-space panels, theta_nodes and
    phi_nodes the product sphere rule, spatial_panel_nodes the position-space
    rules used for convolution-style integrals.  Every integral produced with a
    spec reports an error estimate alongside its value.
    """

    radial_panels: int = 64
    radial_nodes: int = 16
    theta_nodes: int = 96
    phi_nodes: int = 64
    spatial_panel_nodes: int = 12
    k_min: float = 0.0
    k_max: float = np.inf
    target_tol: float = 1e-9

    def __post_init__(self):
        for name in ("radial_panels", "radial_nodes", "theta_nodes", "phi_nodes", "spatial_panel_nodes"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.k_min < 0.0:
            raise ValueError("k_min must be >= 0")
        if not self.target_tol > 0.0:
            raise ValueError("target_tol must be positive")

    def scaled(self, factor: float) -> "QuadratureSpec":
        """Spec with all node counts multiplied by factor (refinement step)."""
        return QuadratureSpec(
            radial_panels=max(1, int(np.ceil(self.radial_panels * factor))),
            radial_nodes=self.radial_nodes,
            theta_nodes=max(1, int(np.ceil(self.theta_nodes * factor))),
            phi_nodes=max(1, int(np.ceil(self.phi_nodes * factor))),
            spatial_panel_nodes=self.spatial_panel_nodes,
            k_min=self.k_min,
            k_max=self.k_max,
            target_tol=self.target_tol,
        )


@lru_cache(maxsize=64)
def gauss_legendre(n: int):
    nodes, weights = roots_legendre(n)
    return nodes, weights


def panel_nodes(a: float, b: float, panels: int, nodes_per_panel: int):
    """Nodes and weights of a composite Gauss-Legendre rule on [a, b]."""
    x, w = gauss_legendre(nodes_per_panel)
    edges = np.linspace(a, b, panels + 1)
    lo = edges[:-1, None]
    hi = edges[1:, None]
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = (mid + half * x[None, :]).ravel()
    weights = (half * w[None, :]).ravel()
    return nodes, weights


def composite_gl(f, a: float, b: float, panels: int, nodes_per_panel: int = 16):
    """Integrate a vectorized callable on [a, b] with composite Gauss-Legendre."""
    if b <= a:
        return 0.0
    nodes, weights = panel_nodes(a, b, panels, nodes_per_panel)
    return np.sum(weights * f(nodes), axis=-1)


def sphere_rule(theta_nodes: int, phi_nodes: int):
    """Product rule on the unit sphere: Gauss-Legendre in cos(theta) times a
    uniform (trapezoid) rule in phi.  Weights sum to 4 pi.

    Returns (directions (N, 3), weights (N,)).
    """
    c, wc = gauss_legendre(theta_nodes)
    phi = 2.0 * np.pi * np.arange(phi_nodes) / phi_nodes
    wphi = 2.0 * np.pi / phi_nodes
    s = np.sqrt(1.0 - c**2)
    dirs = np.empty((theta_nodes, phi_nodes, 3))
    dirs[..., 0] = s[:, None] * np.cos(phi)[None, :]
    dirs[..., 1] = s[:, None] * np.sin(phi)[None, :]
    dirs[..., 2] = c[:, None]
    weights = (wc[:, None] * wphi) * np.ones_like(phi)[None, :]
    return dirs.reshape(-1, 3), weights.ravel()


def alternating_series_limit(terms: np.ndarray) -> tuple[float, float]:
    """Limit of a slowly converging (eventually alternating) series of panel
    integrals by iterated averaging (van Wijngaarden transformation).

    Returns (limit, error_estimate).  The estimate is the difference between
    the last two diagonal entries of the averaging tableau.
    """
    partial = np.cumsum(np.asarray(terms, dtype=float))
    if partial.size == 1:
        return float(partial[-1]), abs(float(partial[-1]))
    row = partial
    prev_last = row[-1]
    for _ in range(len(partial) - 1):
        row = 0.5 * (row[:-1] + row[1:])
        if row.size == 1:
            break
        prev_last = row[-1]
    return float(row[-1]), abs(float(row[-1]) - float(prev_last))


def oscillatory_sine_tail(amplitude, freq: float, k_start: float,
                          half_periods: int = 40, nodes: int = 12) -> tuple[float, float]:
    """integral_{k_start}^{inf} amplitude(k) sin(freq k) dk for a smooth,
    monotonically decaying amplitude, via half-period panels of length
    pi / freq accelerated as an alternating series.
    """
    if freq <= 0.0:
        raise ValueError("freq must be positive")
    hp = np.pi / freq
    terms = []
    a = k_start
    for _ in range(half_periods):
        b = a + hp
        terms.append(composite_gl(lambda k: amplitude(k) * np.sin(freq * k), a, b, 1, nodes))
        a = b
    return alternating_series_limit(np.array(terms))


def refine_to_tolerance(evaluate, base: QuadratureSpec, tol: float | None = None,
                        max_refinements: int = 3, factor: float = 1.6):
    """Call evaluate(spec) at increasing resolution until two successive values
    agree within tol.  Returns (value, error_estimate, converged).
    """
    tol = base.target_tol if tol is None else tol
    spec = base
    prev = evaluate(spec)
    for _ in range(max_refinements):
        spec = spec.scaled(factor)
        cur = evaluate(spec)
        err = float(np.max(np.abs(np.asarray(cur) - np.asarray(prev))))
        if err < tol:
            return cur, err, True
        prev = cur
    return prev, err, False
