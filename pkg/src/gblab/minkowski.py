"""Minkowski geometry with metric diag(+1, -1, -1, -1) and pure boosts.

Four-vectors are plain numpy arrays of shape (..., 4) ordered (t, x, y, z);
natural units (hbar = c = 1) throughout.
"""

from __future__ import annotations

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


def four_vector(t: float, spatial) -> np.ndarray:
    """Assemble (t, x, y, z) from a time component and a 3-vector."""
    spatial = np.asarray(spatial, dtype=float)
    if spatial.shape != (3,):
        raise ValueError(f"spatial part must have shape (3,), got {spatial.shape}")
    return np.concatenate(([float(t)], spatial))


def minkowski_dot(a, b) -> np.ndarray:
    """Indefinite inner product a0*b0 - a.b, broadcasting over leading axes."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a[..., 0] * b[..., 0] - np.sum(a[..., 1:] * b[..., 1:], axis=-1)


def lorentz_factor(v) -> float:
    v = np.asarray(v, dtype=float)
    speed2 = float(np.dot(v, v))
    if speed2 >= 1.0:
        raise ValueError(f"velocity must satisfy |v| < 1, got |v|^2 = {speed2}")
    return 1.0 / np.sqrt(1.0 - speed2)


def boost_from_velocity(v) -> np.ndarray:
    """Pure boost matrix mapping the rest frame onto a frame of velocity v.

    Satisfies Lambda^T g Lambda = g and Lambda (1, 0) = gamma (1, v).
    Raises ValueError for |v| >= 1.
    """
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"velocity must have shape (3,), got {v.shape}")
    gamma = lorentz_factor(v)
    lam = np.eye(4)
    lam[0, 0] = gamma
    lam[0, 1:] = gamma * v
    lam[1:, 0] = gamma * v
    speed2 = float(np.dot(v, v))
    if speed2 > 0.0:
        lam[1:, 1:] += (gamma - 1.0) * np.outer(v, v) / speed2
    return lam


def is_isometry(lam: np.ndarray, tol: float = 1e-12) -> bool:
    """Check Lambda^T g Lambda = g componentwise within tol."""
    return bool(np.max(np.abs(lam.T @ METRIC @ lam - METRIC)) < tol)
