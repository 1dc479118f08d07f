"""Rotationally invariant charge form factor and its analytic integrals.

The default family is the normalized isotropic Gaussian

    rho(r) = (2 pi sigma^2)^(-3/2) exp(-r^2 / (2 sigma^2)),   integral rho d^3x = 1,

whose radial Fourier transform under the symmetric convention

    rho_tilde(k) = (2 pi)^(-3/2) integral rho(|x|) exp(-i k.x) d^3x

is (2 pi)^(-3/2) exp(-sigma^2 k^2 / 2).  The Gaussian family admits closed
forms for every smeared kernel used by the field evaluators:

    smeared Coulomb        V(r) = erf(r / (sqrt(2) sigma)) / (4 pi r),
    first-moment integral  integral_a^b s rho(s) ds,
    segment mass           integral_0^R r exp(-(r-b)^2 / 2 sigma^2) dr,

all of which reduce to error functions and Gaussians.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import erf

TWO_PI_POW_MINUS_3_2 = (2.0 * np.pi) ** (-1.5)


@dataclass(frozen=True)
class GaussianFormFactor:
    """Isotropic Gaussian charge distribution of width sigma (a length)."""

    sigma: float

    def __post_init__(self):
        if not self.sigma > 0.0:
            raise ValueError(f"form factor width must be positive, got {self.sigma}")

    @property
    def _norm(self) -> float:
        return (2.0 * np.pi * self.sigma**2) ** (-1.5)

    def rho(self, r):
        """Charge density at radius r >= 0."""
        r = np.asarray(r, dtype=float)
        return self._norm * np.exp(-(r**2) / (2.0 * self.sigma**2))

    def rho_tilde(self, kmag):
        """Radial Fourier transform, symmetric convention; rho_tilde(0) = (2 pi)^(-3/2)."""
        kmag = np.asarray(kmag, dtype=float)
        return TWO_PI_POW_MINUS_3_2 * np.exp(-0.5 * (self.sigma * kmag) ** 2)

    def coulomb_potential(self, r):
        """Smeared Coulomb kernel integral rho(|w - z|) / (4 pi |z|) d^3z at |w| = r.

        Equals erf(r / (sqrt(2) sigma)) / (4 pi r); finite at r = 0 with value
        sqrt(2/pi) / (4 pi sigma).
        """
        r = np.asarray(r, dtype=float)
        x = r / (np.sqrt(2.0) * self.sigma)
        small = x < 1e-6
        safe_r = np.where(small, 1.0, r)
        out = erf(x) / (4.0 * np.pi * safe_r)
        # erf(x)/r -> sqrt(2/pi)/sigma * (1 - x^2/3) as r -> 0
        series = np.sqrt(2.0 / np.pi) / (4.0 * np.pi * self.sigma) * (1.0 - x**2 / 3.0)
        return np.where(small, series, out)

    def erf_scaled(self, x):
        """erf(x / (sqrt(2) sigma)), the recurring building block of the closed forms."""
        return erf(np.asarray(x, dtype=float) / (np.sqrt(2.0) * self.sigma))

    def erf_scaled_deriv(self, x):
        """d/dx erf(x / (sqrt(2) sigma)) = sqrt(2/pi) / sigma * exp(-x^2 / 2 sigma^2)."""
        x = np.asarray(x, dtype=float)
        return np.sqrt(2.0 / np.pi) / self.sigma * np.exp(-(x**2) / (2.0 * self.sigma**2))

    def first_moment_integral(self, a, b):
        """integral_a^b s rho(s) ds = sigma^2 (rho(a) - rho(b)) for the Gaussian."""
        return self.sigma**2 * (self.rho(a) - self.rho(b))

    def segment_mass(self, b, r_lo, r_hi):
        """integral_{r_lo}^{r_hi} r exp(-(r - b)^2 / (2 sigma^2)) dr, closed form.

        r_hi may be numpy.inf.  Used by the direction-resolved kernels, where b
        is the projection of the field point onto the integration ray.
        """
        b = np.asarray(b, dtype=float)
        r_lo = np.broadcast_to(np.asarray(r_lo, dtype=float), b.shape)
        r_hi = np.broadcast_to(np.asarray(r_hi, dtype=float), b.shape)
        s = self.sigma

        def gaussian(u):
            return np.exp(-(u**2) / (2.0 * s**2))

        def erf_term(u):
            return erf(u / (np.sqrt(2.0) * s))

        hi_gauss = np.where(np.isinf(r_hi), 0.0, gaussian(np.where(np.isinf(r_hi), 0.0, r_hi) - b))
        hi_erf = np.where(np.isinf(r_hi), 1.0, erf_term(np.where(np.isinf(r_hi), 0.0, r_hi) - b))
        return s**2 * (gaussian(r_lo - b) - hi_gauss) + b * s * np.sqrt(np.pi / 2.0) * (
            hi_erf - erf_term(r_lo - b)
        )

    def tail_mass(self, r) -> np.ndarray:
        """Charge mass outside radius r: integral_{|x| > r} rho d^3x."""
        r = np.asarray(r, dtype=float)
        x = r / (np.sqrt(2.0) * self.sigma)
        # 4 pi integral_r^inf s^2 rho ds = erfc(x) + sqrt(2/pi) (r/sigma) exp(-x^2)
        from scipy.special import erfc

        return erfc(x) + np.sqrt(2.0 / np.pi) * (r / self.sigma) * np.exp(-(x**2))

    def effective_radius(self, eps: float = 1e-10) -> float:
        """Smallest r with tail mass below eps, found by bisection."""
        if not 0.0 < eps < 1.0:
            raise ValueError("eps must lie in (0, 1)")
        lo, hi = 0.0, 4.0 * self.sigma
        while self.tail_mass(hi) > eps:
            hi *= 2.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if self.tail_mass(mid) > eps:
                lo = mid
            else:
                hi = mid
        return hi
