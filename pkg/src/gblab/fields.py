"""Classical shift-field kernels of a uniformly moving smeared charge.

The interacting four-vector potential of the model is a free field plus a
charge-diagonal c-number shift.  Per unit charge, the shift at rest is the
cone-interior truncated smeared Coulomb kernel

    F0(x, t; y) = integral d3z rho(|x - y - z|) chi_{|z| < |t|} / (4 pi |z|),

its cone-exterior complement G = F - V (with V the smeared static Coulomb
potential) appears in the asymptotic field, and the compensating free fields
C added by the Gauss-restoring automorphism are sign-reversed exterior
kernels.  For a Gaussian form factor everything reduces to error functions:

    F0(r, t) = [2 E(r) + E(T - r) - E(T + r)] / (8 pi r),    T = |t|,
    V(r)     = E(r) / (4 pi r),
    C0(r, t) = [E(r + T) + E(r - T)] / (8 pi r),             E(x) = erf(x / sqrt(2) sigma),

and G = F0 - V = -C0.  For a moving charge the kernels are evaluated in the
lab frame as direction-resolved integrals: with w = x - y - u t,
kappa(n) = sqrt((u.n)^2 + 1 - |u|^2) and the cone radius
r_cone(n, t) = |t| kappa(n) - t (u.n),

    S_cone(x, t; u) = (1/4pi) integral dOmega(n) kappa(n)^-1
                      integral_0^{r_cone} r rho(|w - r n|) dr,

whose radial part is closed-form for the Gaussian; the point-charge kernel is
the uniform-velocity Lienard-Wiechert potential truncated to the interior of
the lightcone of the emission event (0, y), and the r -> infinity range gives
the full traveling potential.  The four-vector shift is u^mu S_cone with
u = (1, u).  A momentum-space route evaluates the same kernels as

    S_cone~(k, s) = rho~(k) e^{-i k.y} [ (e^{-i a s} - cos m s)
                     + i (a/m) sin m s ] / (m^2 - a^2),    m = |k|, a = k.u,

which reduces at u = 0 to rho~(k) e^{-i k.y} (1 - cos m s) / m^2; the closed
forms above are exactly its Fourier transform under the symmetric convention,
which is the identity the cross-checks in this package test.

Two structural facts used throughout (both verifiable with the evaluators
here): the four-divergence of the cone-interior shift equals the form-factor
smearing of the lightcone shell distribution (the smeared Pauli-Jordan
function) independently of the velocity, and consequently the compensator
divergence cancels the shift divergence exactly for any velocity pair.

Charge bookkeeping: all kernels are per unit charge; the factor e enters once
at the state level (A = A0 + e F), never inside the kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum

import numpy as np
from scipy.special import j0

from .formfactor import GaussianFormFactor, TWO_PI_POW_MINUS_3_2
from .quadrature import QuadratureSpec, composite_gl, oscillatory_sine_tail, panel_nodes, sphere_rule

SQRT_PI_OVER_2 = np.sqrt(np.pi / 2.0)


class NumericFailure(RuntimeError):
    """Raised when a quadrature or limit fails to meet its tolerance."""


@dataclass(frozen=True)
class ParticleSpec:
    """Charged-particle data: position, incoming/outgoing velocity, charge.

    The two-branch current uses velocity_in for t < 0 and velocity_out for
    t >= 0.  Optional packet nodes/weights describe a position-space wave
    packet |psi(y)|^2 replacing the point localization.
    """

    position: np.ndarray = dc_field(default_factory=lambda: np.zeros(3))
    velocity_in: np.ndarray = dc_field(default_factory=lambda: np.zeros(3))
    velocity_out: np.ndarray = dc_field(default_factory=lambda: np.zeros(3))
    charge: float = 1.0
    packet_nodes: np.ndarray | None = None
    packet_weights: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, "position", np.asarray(self.position, dtype=float))
        object.__setattr__(self, "velocity_in", np.asarray(self.velocity_in, dtype=float))
        object.__setattr__(self, "velocity_out", np.asarray(self.velocity_out, dtype=float))
        for v in (self.velocity_in, self.velocity_out):
            if np.linalg.norm(v) >= 1.0:
                raise ValueError("particle velocities must satisfy |v| < 1")
        if (self.packet_nodes is None) != (self.packet_weights is None):
            raise ValueError("packet nodes and weights must be given together")
        if self.packet_weights is not None:
            w = np.asarray(self.packet_weights, dtype=float)
            if w.ndim != 1 or not np.isclose(w.sum(), 1.0, atol=1e-12):
                raise ValueError("packet weights must be 1d and sum to 1")
            object.__setattr__(self, "packet_nodes", np.asarray(self.packet_nodes, dtype=float))
            object.__setattr__(self, "packet_weights", w)

    def branch_velocity(self, t: float) -> np.ndarray:
        """Velocity of the current branch at time t (t = 0 uses the out branch)."""
        return self.velocity_out if t >= 0.0 else self.velocity_in

    def localization_nodes(self):
        """(positions, weights) of the particle localization average."""
        if self.packet_nodes is None:
            return self.position[None, :], np.ones(1)
        return self.packet_nodes, self.packet_weights


@dataclass(frozen=True)
class DiffSpec:
    """Central-difference step and Richardson depth for derivative evaluators."""

    step: float = 4e-3
    richardson_levels: int = 2

    def __post_init__(self):
        if not self.step > 0.0:
            raise ValueError("step must be positive")
        if self.richardson_levels < 1:
            raise ValueError("richardson_levels must be >= 1")


class EvalMethod(Enum):
    CLOSED_REST = "CLOSED_REST"
    CLOSED_BOOSTED = "CLOSED_BOOSTED"
    K_QUADRATURE = "K_QUADRATURE"


# ---------------------------------------------------------------------------
# mode-space source amplitude (solution of the driven mode equation)
# ---------------------------------------------------------------------------

def mode_source_amplitude(k, t: float, particle: ParticleSpec, ff: GaussianFormFactor) -> np.ndarray:
    """Source part of the annihilation-operator solution at momentum k.

    Returns the complex four-tuple

        f^mu(k, t; y) = e u^mu rho~(|k|) / sqrt(2 |k|)
                        * (exp(i u.k t) - 1) / (u.k) * exp(-i k.y),

    with u = (1, u) the branch four-velocity (out for t >= 0, in for t < 0)
    and u.k = |k| - u.k_vec > 0.  The full interaction-picture reconstruction
    of the position-space shift attaches the free phase exp(-i |k| t) to this
    amplitude; the kernels in this module book that phase explicitly.
    """
    k = np.asarray(k, dtype=float)
    m = float(np.linalg.norm(k))
    if m <= 0.0:
        raise ValueError("mode momentum must be nonzero")
    u3 = particle.branch_velocity(t)
    udotk = m - float(np.dot(u3, k))
    u4 = np.concatenate(([1.0], u3))
    phase = np.exp(-1j * float(np.dot(k, particle.position)))
    if abs(udotk * t) < 1e-8:
        ratio = 1j * t * (1.0 + 0.5j * udotk * t)
    else:
        ratio = (np.exp(1j * udotk * t) - 1.0) / udotk
    return particle.charge * u4 * float(ff.rho_tilde(m)) / np.sqrt(2.0 * m) * ratio * phase


# ---------------------------------------------------------------------------
# characteristic-function kernel
# ---------------------------------------------------------------------------

def chi_kernel_closed(r: float, t: float) -> float:
    """sqrt(pi/2) * chi_{|x| < |t|} / |x| (open-region convention on the cone)."""
    if r <= 0.0:
        raise ValueError("r must be positive")
    return SQRT_PI_OVER_2 / r if r < abs(t) else 0.0


def chi_kernel_quadrature(r: float, t: float, tol: float = 1e-8) -> tuple[float, float]:
    """(2 pi)^(-3/2) integral d3k exp(i k.x) (1 - cos |k| t) / |k|^2 at |x| = r,
    by radial oscillatory quadrature with accelerated half-period tails.

    Returns (value, residual_tail_estimate).  Raises NumericFailure when the
    tail estimate exceeds tol.
    """
    if r <= 0.0:
        raise ValueError("r must be positive")
    T = abs(t)
    if T == 0.0:
        return 0.0, 0.0

    def integrand(k):
        return np.sin(k * r) * (1.0 - np.cos(k * T)) / k

    freqs = [r, r + T, abs(r - T)]
    coefs = [1.0, -0.5, -0.5 * np.sign(r - T)]
    positive = [f for f in freqs if f > 1e-12]
    fmin = min(positive)
    k0 = max(60.0 / fmin, 40.0)
    n_panels = int(np.ceil(k0 * max(freqs) / np.pi)) + 8
    head = composite_gl(integrand, 0.0, k0, n_panels, 12)

    tail = 0.0
    tail_err = 0.0
    for f, c in zip(freqs, coefs):
        if f <= 1e-12 or c == 0.0:
            continue
        val, err = oscillatory_sine_tail(lambda k: 1.0 / k, f, k0, half_periods=48)
        tail += c * val
        tail_err += abs(c) * err
    if tail_err > tol:
        raise NumericFailure(f"oscillatory tail estimate {tail_err:.2e} exceeds tolerance {tol:.2e}")
    prefactor = TWO_PI_POW_MINUS_3_2 * 4.0 * np.pi / r
    return prefactor * (head + tail), prefactor * tail_err


# ---------------------------------------------------------------------------
# closed rest-frame scalars (Gaussian form factor)
# ---------------------------------------------------------------------------

def _rest_interior_scalar(ff: GaussianFormFactor, r, t):
    """Cone-interior kernel at rest: [2E(r) + E(T-r) - E(T+r)] / (8 pi r)."""
    r = np.asarray(r, dtype=float)
    T = abs(t)
    small = r < 1e-7
    safe_r = np.where(small, 1.0, r)
    num = 2.0 * ff.erf_scaled(safe_r) + ff.erf_scaled(T - safe_r) - ff.erf_scaled(T + safe_r)
    val = num / (8.0 * np.pi * safe_r)
    limit = (ff.erf_scaled_deriv(0.0) - ff.erf_scaled_deriv(T)) / (4.0 * np.pi)
    return np.where(small, limit, val)


def _coulomb_compensator_scalar(ff: GaussianFormFactor, r, t):
    """Exterior compensator at rest: [E(r+T) + E(r-T)] / (8 pi r), a free wave."""
    r = np.asarray(r, dtype=float)
    T = abs(t)
    small = r < 1e-7
    safe_r = np.where(small, 1.0, r)
    num = ff.erf_scaled(safe_r + T) + ff.erf_scaled(safe_r - T)
    val = num / (8.0 * np.pi * safe_r)
    limit = ff.erf_scaled_deriv(T) / (4.0 * np.pi)
    return np.where(small, limit, val)


def _coulomb_compensator_scalar_dt(ff: GaussianFormFactor, r, t):
    r = np.asarray(r, dtype=float)
    T = abs(t)
    sign = np.sign(t)
    small = r < 1e-7
    safe_r = np.where(small, 1.0, r)
    num = ff.erf_scaled_deriv(safe_r + T) - ff.erf_scaled_deriv(safe_r - T)
    val = sign * num / (8.0 * np.pi * safe_r)
    # d/dT E'(r+T) - E'(r-T) -> 2 r E''(T) as r -> 0, E''(x) = -x/sigma^2 E'(x)
    limit = sign * (-T / ff.sigma**2) * ff.erf_scaled_deriv(T) / (4.0 * np.pi)
    return np.where(small, limit, val)


def smeared_coulomb(x, y, ff: GaussianFormFactor) -> float:
    """Static smeared Coulomb potential integral rho(|x-y-z|)/(4 pi |z|) d3z."""
    r = float(np.linalg.norm(np.asarray(x, dtype=float) - np.asarray(y, dtype=float)))
    return float(ff.coulomb_potential(r))


def smeared_pauli_jordan_radial(ff: GaussianFormFactor, r, t: float) -> np.ndarray:
    """Vectorized radial profile of the smeared lightcone shell distribution."""
    r = np.asarray(r, dtype=float)
    T = abs(t)
    if T == 0.0:
        return np.zeros_like(r)
    sign = 1.0 if t > 0 else -1.0
    small = r < 1e-7
    safe_r = np.where(small, 1.0, r)
    vals = sign * ff.first_moment_integral(np.abs(safe_r - T), safe_r + T) / (2.0 * safe_r)
    return np.where(small, sign * T * ff.rho(T), vals)


def smeared_pauli_jordan(x, t: float, y, ff: GaussianFormFactor) -> float:
    """Form-factor smearing of the lightcone shell distribution.

    integral d3z rho(|x - y - z|) Delta(z, t) with
    Delta(z, t) = eps(t) delta(t^2 - z^2) / (2 pi), reduced to the radial
    shell integral eps(t) [integral_{|r-T|}^{r+T} s rho(s) ds] / (2 r).
    Supported on the smeared cone shell | |x-y| - |t| | <~ width; odd in t.
    """
    r = float(np.linalg.norm(np.asarray(x, dtype=float) - np.asarray(y, dtype=float)))
    T = abs(t)
    if T == 0.0:
        return 0.0
    sign = 1.0 if t > 0 else -1.0
    if r < 1e-7:
        # H(|t|)/(2r) -> T rho(T) as r -> 0
        return sign * T * float(ff.rho(T))
    return sign * float(ff.first_moment_integral(abs(r - T), r + T)) / (2.0 * r)


def _smeared_pauli_jordan_grad(x, t: float, y, ff: GaussianFormFactor) -> np.ndarray:
    """(d/dt pj, grad_x pj) as a length-4 array (lower-index derivatives).

    With H(r, T) = sigma^2 (rho(r - T) - rho(r + T)) and pj = eps(t) H / (2r):
    d_t pj = H_T / (2r) (the eps factors square away) and
    grad pj = eps(t) (H_r r - H) / (2 r^2) * w / r.
    """
    w = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    r = float(np.linalg.norm(w))
    T = abs(t)
    sign = 1.0 if t >= 0 else -1.0
    if T == 0.0 or r < 1e-7:
        raise ValueError("analytic pj gradient needs t != 0 and x != y")
    rho_m = float(ff.rho(abs(r - T)))
    rho_p = float(ff.rho(r + T))
    h = ff.sigma**2 * (rho_m - rho_p)
    dh_dr = -(r - T) * rho_m + (r + T) * rho_p
    dh_dT = (r - T) * rho_m + (r + T) * rho_p
    out = np.empty(4)
    out[0] = dh_dT / (2.0 * r)
    out[1:] = sign * (dh_dr * r - h) / (2.0 * r**2) * w / r
    return out


# ---------------------------------------------------------------------------
# direction-resolved kernels for a moving charge
# ---------------------------------------------------------------------------

def _kappa_hat(u: np.ndarray, dirs: np.ndarray) -> np.ndarray:
    un = dirs @ u
    return np.sqrt(un**2 + 1.0 - float(np.dot(u, u)))


def _cone_radius(u: np.ndarray, dirs: np.ndarray, t: float) -> np.ndarray:
    return abs(t) * _kappa_hat(u, dirs) - t * (dirs @ u)


def _directional_scalar(ff: GaussianFormFactor, x, t: float, u, y, spec: QuadratureSpec,
                        part: str) -> float:
    """Angular quadrature of the analytic radial integrals.

    part selects the radial range: "cone" -> [0, r_cone], "full" -> [0, inf),
    "exterior" -> [r_cone, inf).
    """
    x = np.asarray(x, dtype=float)
    u = np.asarray(u, dtype=float)
    y = np.asarray(y, dtype=float)
    w = x - y - u * t
    dirs, wts = sphere_rule(spec.theta_nodes, spec.phi_nodes)
    kap = _kappa_hat(u, dirs)
    b = dirs @ w
    w2 = float(np.dot(w, w))
    envelope = ff._norm * np.exp(-(w2 - b**2) / (2.0 * ff.sigma**2))
    if part == "cone":
        lo, hi = np.zeros_like(b), _cone_radius(u, dirs, t)
    elif part == "full":
        lo, hi = np.zeros_like(b), np.full_like(b, np.inf)
    elif part == "exterior":
        lo, hi = _cone_radius(u, dirs, t), np.full_like(b, np.inf)
    else:
        raise ValueError(f"unknown radial part {part!r}")
    radial = envelope * ff.segment_mass(b, lo, hi)
    return float(np.sum(wts * radial / kap)) / (4.0 * np.pi)


def _kquad_scalar(ff: GaussianFormFactor, x, t: float, u, y, spec: QuadratureSpec,
                  part: str) -> float:
    """Momentum-space evaluation of the same kernels (oracle route).

    Reduces the 3d integral to (kappa, cos theta) with the azimuthal integral
    done analytically via J0.  part "cone" gives the truncated kernel,
    "exterior" its complement relative to the full traveling potential.
    """
    x = np.asarray(x, dtype=float)
    u = np.asarray(u, dtype=float)
    y = np.asarray(y, dtype=float)
    w = x - y
    umag = float(np.linalg.norm(u))
    if umag > 1e-14:
        axis = u / umag
    elif np.linalg.norm(w) > 1e-14:
        axis = w / np.linalg.norm(w)
    else:
        axis = np.array([0.0, 0.0, 1.0])
    wz = float(w @ axis)
    wperp = float(np.linalg.norm(w - wz * axis))

    kmax = min(spec.k_max, 8.8 / ff.sigma)
    total_freq = abs(wz) + wperp + (1.0 + umag) * abs(t)
    n_panels = max(spec.radial_panels, int(np.ceil(kmax * total_freq / np.pi)) + 8)
    kn, kw = panel_nodes(max(spec.k_min, 0.0), kmax, n_panels, spec.radial_nodes)
    n_c = max(spec.theta_nodes, int(np.ceil(0.8 * kmax * (abs(wz) + umag * abs(t)))) + 16)
    from .quadrature import gauss_legendre

    cn, cw = gauss_legendre(n_c)

    kk = kn[:, None]
    cc = cn[None, :]
    a = kk * umag * cc
    if part == "cone":
        bracket = (np.exp(-1j * a * t) - np.cos(kk * t)) + 1j * umag * cc * np.sin(kk * t)
    elif part == "exterior":
        bracket = -(np.cos(kk * t) - 1j * umag * cc * np.sin(kk * t))
    else:
        raise ValueError(f"unknown part {part!r}")
    phase = np.exp(1j * kk * cc * wz) * j0(kk * wperp * np.sqrt(np.maximum(0.0, 1.0 - cc**2)))
    vals = ff.rho_tilde(kk) * bracket * phase / (1.0 - (umag * cc) ** 2)
    inner = vals @ cw
    total = float(np.real(np.sum(kw * inner)))
    return TWO_PI_POW_MINUS_3_2 * 2.0 * np.pi * total


def _rest_interior_kquad(ff: GaussianFormFactor, r: float, t: float, spec: QuadratureSpec) -> float:
    """1d momentum quadrature of the rest kernel (exact angular reduction)."""
    kmax = min(spec.k_max, 8.8 / ff.sigma)
    n_panels = max(spec.radial_panels, int(np.ceil(kmax * (r + abs(t)) / np.pi)) + 8)

    def integrand(k):
        return ff.rho_tilde(k) * (1.0 - np.cos(k * t)) * np.sinc(k * r / np.pi)

    val = composite_gl(integrand, max(spec.k_min, 0.0), kmax, n_panels, spec.radial_nodes)
    return TWO_PI_POW_MINUS_3_2 * 4.0 * np.pi * float(val)


def divergence_kquad(x, t: float, y, ff: GaussianFormFactor, spec: QuadratureSpec) -> float:
    """Momentum quadrature of the shift divergence,
    (2 pi)^(-3/2) integral d3k exp(i k.(x-y)) rho~(k) sin(|k| t)/|k|.

    Velocity independent: the divergence of the cone-interior kernel is the
    free wave with Cauchy data (0, rho(|x-y|)) for every branch velocity.
    """
    r = float(np.linalg.norm(np.asarray(x, dtype=float) - np.asarray(y, dtype=float)))
    kmax = min(spec.k_max, 8.8 / ff.sigma)
    n_panels = max(spec.radial_panels, int(np.ceil(kmax * (r + abs(t)) / np.pi)) + 8)

    def integrand(k):
        return k * ff.rho_tilde(k) * np.sin(k * t) * np.sinc(k * r / np.pi)

    val = composite_gl(integrand, max(spec.k_min, 0.0), kmax, n_panels, spec.radial_nodes)
    return TWO_PI_POW_MINUS_3_2 * 4.0 * np.pi * float(val)


# ---------------------------------------------------------------------------
# tagged shift fields
# ---------------------------------------------------------------------------

class ShiftField:
    """Tagged classical c-number field, evaluable pointwise with divergence
    and field-strength evaluators.  Linear combinations evaluate linearly."""

    tag = "ABSTRACT"
    has_mode_form = False

    def potential(self, x, t: float) -> np.ndarray:
        raise NotImplementedError

    @property
    def feature_scale(self) -> float | None:
        """Smallest position-space length scale of the field (None if flat)."""
        ff = getattr(self, "ff", None)
        return ff.sigma if ff is not None else None

    def radial_scalar(self, r: np.ndarray, s: float) -> np.ndarray:
        """Vectorized time component on radii about the field center, for
        radially symmetric fields only."""
        raise NotImplementedError(f"{self.tag} is not radially symmetric")

    def radial_scalar_dt(self, r: np.ndarray, s: float) -> np.ndarray:
        raise NotImplementedError(f"{self.tag} is not radially symmetric")

    def dt_potential(self, x, t: float, diff: DiffSpec | None = None) -> np.ndarray:
        diff = diff or DiffSpec()
        return _richardson_first(lambda s: self.potential(x, s), t, diff)

    def mode_amplitude(self, kvecs: np.ndarray, s: float) -> np.ndarray:
        """Momentum amplitude Phi~^mu(k, s) including the exp(-i k.y) phase."""
        raise NotImplementedError(f"{self.tag} has no momentum-space form")

    def mode_amplitude_dt(self, kvecs: np.ndarray, s: float) -> np.ndarray:
        raise NotImplementedError(f"{self.tag} has no momentum-space form")

    def divergence(self, x, t: float, method: str = "auto",
                   spec: QuadratureSpec | None = None, diff: DiffSpec | None = None) -> float:
        if method in ("auto", "analytic"):
            try:
                return self._divergence_analytic(x, t)
            except NotImplementedError:
                if method == "analytic":
                    raise
        if method in ("auto", "kquad"):
            try:
                return self._divergence_kquad(x, t, spec or QuadratureSpec())
            except NotImplementedError:
                if method == "kquad":
                    raise
        return _fd_divergence(self, x, t, diff or DiffSpec())

    def _divergence_analytic(self, x, t: float) -> float:
        raise NotImplementedError

    def _divergence_kquad(self, x, t: float, spec: QuadratureSpec) -> float:
        raise NotImplementedError

    def __add__(self, other: "ShiftField") -> "SumField":
        return SumField((self, other), (1.0, 1.0))

    def scaled(self, c: float) -> "SumField":
        return SumField((self,), (c,))


class ZeroField(ShiftField):
    tag = "ZERO"
    has_mode_form = True

    def potential(self, x, t):
        return np.zeros(4)

    def radial_scalar(self, r, s):
        return np.zeros_like(np.asarray(r, dtype=float))

    radial_scalar_dt = radial_scalar

    def dt_potential(self, x, t, diff=None):
        return np.zeros(4)

    def mode_amplitude(self, kvecs, s):
        return np.zeros((len(np.atleast_2d(kvecs)), 4), dtype=complex)

    mode_amplitude_dt = mode_amplitude

    def _divergence_analytic(self, x, t):
        return 0.0


def _mode_prefactor(ff, y, kvecs):
    kvecs = np.atleast_2d(np.asarray(kvecs, dtype=float))
    m = np.linalg.norm(kvecs, axis=1)
    phase = np.exp(-1j * (kvecs @ np.asarray(y, dtype=float)))
    return kvecs, m, ff.rho_tilde(m) * phase


@dataclass(frozen=True)
class StaticCoulombField(ShiftField):
    """Time component equal to the static smeared Coulomb potential."""

    ff: GaussianFormFactor
    center: np.ndarray

    tag = "COULOMB_STATIC"
    has_mode_form = True

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))

    def potential(self, x, t):
        out = np.zeros(4)
        out[0] = smeared_coulomb(x, self.center, self.ff)
        return out

    def dt_potential(self, x, t, diff=None):
        return np.zeros(4)

    def radial_scalar(self, r, s):
        return self.ff.coulomb_potential(r)

    def radial_scalar_dt(self, r, s):
        return np.zeros_like(np.asarray(r, dtype=float))

    def mode_amplitude(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        out = np.zeros((len(kvecs), 4), dtype=complex)
        out[:, 0] = pre / m**2
        return out

    def mode_amplitude_dt(self, kvecs, s):
        return np.zeros((len(np.atleast_2d(kvecs)), 4), dtype=complex)

    def _divergence_analytic(self, x, t):
        return 0.0


@dataclass(frozen=True)
class RestInteriorField(ShiftField):
    """Cone-interior shift of a charge at rest (closed error-function form)."""

    ff: GaussianFormFactor
    center: np.ndarray

    tag = "F_INTERIOR"
    has_mode_form = True

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))

    def _r(self, x):
        return float(np.linalg.norm(np.asarray(x, dtype=float) - self.center))

    def potential(self, x, t):
        out = np.zeros(4)
        out[0] = float(_rest_interior_scalar(self.ff, self._r(x), t))
        return out

    def dt_potential(self, x, t, diff=None):
        out = np.zeros(4)
        out[0] = smeared_pauli_jordan(x, t, self.center, self.ff)
        return out

    def radial_scalar(self, r, s):
        return _rest_interior_scalar(self.ff, r, s)

    def radial_scalar_dt(self, r, s):
        return smeared_pauli_jordan_radial(self.ff, r, s)

    def mode_amplitude(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        out = np.zeros((len(kvecs), 4), dtype=complex)
        out[:, 0] = pre * (1.0 - np.cos(m * s)) / m**2
        return out

    def mode_amplitude_dt(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        out = np.zeros((len(kvecs), 4), dtype=complex)
        out[:, 0] = pre * np.sin(m * s) / m
        return out

    def _divergence_analytic(self, x, t):
        return smeared_pauli_jordan(x, t, self.center, self.ff)

    def _divergence_kquad(self, x, t, spec):
        return divergence_kquad(x, t, self.center, self.ff, spec)


@dataclass(frozen=True)
class RestExteriorField(ShiftField):
    """Cone-exterior field at rest: interior kernel minus smeared Coulomb."""

    ff: GaussianFormFactor
    center: np.ndarray

    tag = "G_EXTERIOR"
    has_mode_form = True

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))

    def potential(self, x, t):
        r = float(np.linalg.norm(np.asarray(x, dtype=float) - self.center))
        out = np.zeros(4)
        out[0] = float(_rest_interior_scalar(self.ff, r, t)) - float(self.ff.coulomb_potential(r))
        return out

    def dt_potential(self, x, t, diff=None):
        out = np.zeros(4)
        out[0] = smeared_pauli_jordan(x, t, self.center, self.ff)
        return out

    def radial_scalar(self, r, s):
        return _rest_interior_scalar(self.ff, r, s) - self.ff.coulomb_potential(r)

    def radial_scalar_dt(self, r, s):
        return smeared_pauli_jordan_radial(self.ff, r, s)

    def mode_amplitude(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        out = np.zeros((len(kvecs), 4), dtype=complex)
        out[:, 0] = -pre * np.cos(m * s) / m**2
        return out

    def mode_amplitude_dt(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        out = np.zeros((len(kvecs), 4), dtype=complex)
        out[:, 0] = pre * np.sin(m * s) / m
        return out

    def _divergence_analytic(self, x, t):
        # G = F - static Coulomb; the static part has zero divergence
        return smeared_pauli_jordan(x, t, self.center, self.ff)


@dataclass(frozen=True)
class CoulombCompensatorField(ShiftField):
    """Free compensating field restoring Gauss law for a charge at rest.

    Initial data: time component equal to the smeared Coulomb potential,
    vanishing time derivative and spatial components; solves the free wave
    equation exactly ([E(r+T) + E(r-T)] / (8 pi r) is a spherical wave)."""

    ff: GaussianFormFactor
    center: np.ndarray

    tag = "C_COUL"
    has_mode_form = True

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))

    def _r(self, x):
        return float(np.linalg.norm(np.asarray(x, dtype=float) - self.center))

    def potential(self, x, t):
        out = np.zeros(4)
        out[0] = float(_coulomb_compensator_scalar(self.ff, self._r(x), t))
        return out

    def dt_potential(self, x, t, diff=None):
        out = np.zeros(4)
        out[0] = float(_coulomb_compensator_scalar_dt(self.ff, self._r(x), t))
        return out

    def radial_scalar(self, r, s):
        return _coulomb_compensator_scalar(self.ff, r, s)

    def radial_scalar_dt(self, r, s):
        return _coulomb_compensator_scalar_dt(self.ff, r, s)

    def mode_amplitude(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        out = np.zeros((len(kvecs), 4), dtype=complex)
        out[:, 0] = pre * np.cos(m * s) / m**2
        return out

    def mode_amplitude_dt(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        out = np.zeros((len(kvecs), 4), dtype=complex)
        out[:, 0] = -pre * np.sin(m * s) / m
        return out

    def _divergence_analytic(self, x, t):
        return -smeared_pauli_jordan(x, t, self.center, self.ff)


def _boosted_mode_bracket(m, a, s, part: str):
    """Time factors of the moving-charge kernels in momentum space."""
    if part == "cone":
        return (np.exp(-1j * a * s) - np.cos(m * s)) + 1j * (a / m) * np.sin(m * s)
    if part == "exterior":
        return -(np.cos(m * s) - 1j * (a / m) * np.sin(m * s))
    raise ValueError(part)


@dataclass(frozen=True)
class BoostedInteriorField(ShiftField):
    """Cone-interior shift of a uniformly moving charge (direction-resolved)."""

    ff: GaussianFormFactor
    center: np.ndarray
    velocity: np.ndarray
    spec: QuadratureSpec = dc_field(default_factory=QuadratureSpec)

    tag = "F_INTERIOR_BOOSTED"
    has_mode_form = True

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))
        object.__setattr__(self, "velocity", np.asarray(self.velocity, dtype=float))
        if np.linalg.norm(self.velocity) >= 1.0:
            raise ValueError("|velocity| must be < 1")

    def potential(self, x, t):
        scalar = _directional_scalar(self.ff, x, t, self.velocity, self.center, self.spec, "cone")
        return np.concatenate(([1.0], self.velocity)) * scalar

    def mode_amplitude(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        a = kvecs @ self.velocity
        scalar = pre * _boosted_mode_bracket(m, a, s, "cone") / (m**2 - a**2)
        return scalar[:, None] * np.concatenate(([1.0], self.velocity))[None, :]

    def mode_amplitude_dt(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        a = kvecs @ self.velocity
        num = -1j * a * np.exp(-1j * a * s) + m * np.sin(m * s) + 1j * a * np.cos(m * s)
        scalar = pre * num / (m**2 - a**2)
        return scalar[:, None] * np.concatenate(([1.0], self.velocity))[None, :]

    def _divergence_analytic(self, x, t):
        # velocity independence of the cone-kernel divergence
        return smeared_pauli_jordan(x, t, self.center, self.ff)

    def _divergence_kquad(self, x, t, spec):
        return divergence_kquad(x, t, self.center, self.ff, spec)


@dataclass(frozen=True)
class BoostedExteriorField(ShiftField):
    """Cone-exterior field of a moving charge: truncated minus full kernel."""

    ff: GaussianFormFactor
    center: np.ndarray
    velocity: np.ndarray
    spec: QuadratureSpec = dc_field(default_factory=QuadratureSpec)

    tag = "G_EXTERIOR_BOOSTED"
    has_mode_form = True

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))
        object.__setattr__(self, "velocity", np.asarray(self.velocity, dtype=float))
        if np.linalg.norm(self.velocity) >= 1.0:
            raise ValueError("|velocity| must be < 1")

    def potential(self, x, t):
        scalar = -_directional_scalar(self.ff, x, t, self.velocity, self.center, self.spec, "exterior")
        return np.concatenate(([1.0], self.velocity)) * scalar

    def mode_amplitude(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        a = kvecs @ self.velocity
        scalar = pre * _boosted_mode_bracket(m, a, s, "exterior") / (m**2 - a**2)
        return scalar[:, None] * np.concatenate(([1.0], self.velocity))[None, :]

    def mode_amplitude_dt(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        a = kvecs @ self.velocity
        num = m * np.sin(m * s) + 1j * a * np.cos(m * s)
        scalar = pre * num / (m**2 - a**2)
        return scalar[:, None] * np.concatenate(([1.0], self.velocity))[None, :]

    def _divergence_analytic(self, x, t):
        return smeared_pauli_jordan(x, t, self.center, self.ff)


@dataclass(frozen=True)
class LWCompensatorField(ShiftField):
    """Compensating free field with Lienard-Wiechert spacelike asymptotics.

    Sign-reversed exterior kernel of velocity c; reduces to the Coulomb
    compensator at c = 0.  Supported (up to form-factor tails) outside the
    lightcone of the emission event."""

    ff: GaussianFormFactor
    center: np.ndarray
    lw_velocity: np.ndarray
    spec: QuadratureSpec = dc_field(default_factory=QuadratureSpec)

    tag = "C_LW"
    has_mode_form = True

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))
        object.__setattr__(self, "lw_velocity", np.asarray(self.lw_velocity, dtype=float))
        if np.linalg.norm(self.lw_velocity) >= 1.0:
            raise ValueError("|c| must be < 1")

    def _rest(self) -> bool:
        return float(np.linalg.norm(self.lw_velocity)) < 1e-14

    def potential(self, x, t):
        if self._rest():
            out = np.zeros(4)
            out[0] = float(_coulomb_compensator_scalar(self.ff, float(np.linalg.norm(np.asarray(x) - self.center)), t))
            return out
        scalar = _directional_scalar(self.ff, x, t, self.lw_velocity, self.center, self.spec, "exterior")
        return np.concatenate(([1.0], self.lw_velocity)) * scalar

    def dt_potential(self, x, t, diff=None):
        if self._rest():
            out = np.zeros(4)
            out[0] = float(_coulomb_compensator_scalar_dt(self.ff, float(np.linalg.norm(np.asarray(x) - self.center)), t))
            return out
        return super().dt_potential(x, t, diff)

    def mode_amplitude(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        a = kvecs @ self.lw_velocity
        scalar = -pre * _boosted_mode_bracket(m, a, s, "exterior") / (m**2 - a**2)
        return scalar[:, None] * np.concatenate(([1.0], self.lw_velocity))[None, :]

    def mode_amplitude_dt(self, kvecs, s):
        kvecs, m, pre = _mode_prefactor(self.ff, self.center, kvecs)
        a = kvecs @ self.lw_velocity
        num = m * np.sin(m * s) + 1j * a * np.cos(m * s)
        scalar = -pre * num / (m**2 - a**2)
        return scalar[:, None] * np.concatenate(([1.0], self.lw_velocity))[None, :]

    def _divergence_analytic(self, x, t):
        return -smeared_pauli_jordan(x, t, self.center, self.ff)


@dataclass(frozen=True)
class BranchInteriorField(ShiftField):
    """Interior shift with the two-branch current: out velocity for t >= 0,
    in velocity for t < 0 (the t = 0 branch choice is the outgoing one)."""

    ff: GaussianFormFactor
    particle: ParticleSpec
    spec: QuadratureSpec = dc_field(default_factory=QuadratureSpec)

    tag = "F_INTERIOR"
    has_mode_form = True

    def _branch(self, t: float) -> ShiftField:
        u = self.particle.branch_velocity(t)
        if float(np.linalg.norm(u)) < 1e-14:
            return RestInteriorField(self.ff, self.particle.position)
        return BoostedInteriorField(self.ff, self.particle.position, u, self.spec)

    def potential(self, x, t):
        return self._branch(t).potential(x, t)

    def dt_potential(self, x, t, diff=None):
        return self._branch(t).dt_potential(x, t, diff)

    def radial_scalar(self, r, s):
        return self._branch(s).radial_scalar(r, s)

    def radial_scalar_dt(self, r, s):
        return self._branch(s).radial_scalar_dt(r, s)

    def mode_amplitude(self, kvecs, s):
        return self._branch(s).mode_amplitude(kvecs, s)

    def mode_amplitude_dt(self, kvecs, s):
        return self._branch(s).mode_amplitude_dt(kvecs, s)

    def _divergence_analytic(self, x, t):
        return smeared_pauli_jordan(x, t, self.particle.position, self.ff)

    def _divergence_kquad(self, x, t, spec):
        return divergence_kquad(x, t, self.particle.position, self.ff, spec)


@dataclass(frozen=True)
class SumField(ShiftField):
    """Linear combination; evaluation of the combination equals the
    combination of evaluations by construction."""

    fields: tuple
    coefficients: tuple

    tag = "LINEAR_COMBINATION"

    @property
    def has_mode_form(self):
        return all(f.has_mode_form for f in self.fields)

    @property
    def feature_scale(self):
        scales = [f.feature_scale for f in self.fields if f.feature_scale is not None]
        return min(scales) if scales else None

    def radial_scalar(self, r, s):
        return sum(c * f.radial_scalar(r, s) for c, f in zip(self.coefficients, self.fields))

    def radial_scalar_dt(self, r, s):
        return sum(c * f.radial_scalar_dt(r, s) for c, f in zip(self.coefficients, self.fields))

    def potential(self, x, t):
        return sum(c * f.potential(x, t) for c, f in zip(self.coefficients, self.fields))

    def dt_potential(self, x, t, diff=None):
        return sum(c * f.dt_potential(x, t, diff) for c, f in zip(self.coefficients, self.fields))

    def mode_amplitude(self, kvecs, s):
        return sum(c * f.mode_amplitude(kvecs, s) for c, f in zip(self.coefficients, self.fields))

    def mode_amplitude_dt(self, kvecs, s):
        return sum(c * f.mode_amplitude_dt(kvecs, s) for c, f in zip(self.coefficients, self.fields))

    def _divergence_analytic(self, x, t):
        return sum(c * f._divergence_analytic(x, t) for c, f in zip(self.coefficients, self.fields))


# ---------------------------------------------------------------------------
# derivative evaluators
# ---------------------------------------------------------------------------

def _richardson_first(f, t0: float, diff: DiffSpec):
    """Richardson-extrapolated first central difference of a vector function."""
    h = diff.step
    est = None
    prev = None
    for level in range(diff.richardson_levels):
        step = h / 2**level
        d = (np.asarray(f(t0 + step)) - np.asarray(f(t0 - step))) / (2.0 * step)
        est = d if prev is None else (4.0 * d - prev) / 3.0
        prev = d
    return est


def _fd_divergence(fld: ShiftField, x, t: float, diff: DiffSpec) -> float:
    x = np.asarray(x, dtype=float)
    dt = _richardson_first(lambda s: fld.potential(x, s), t, diff)[0]
    div = dt
    for i in range(3):
        def shifted(s, i=i):
            xi = x.copy()
            xi[i] = s
            return fld.potential(xi, t)[i + 1]

        div += float(_richardson_first(shifted, x[i], diff))
    return float(div)


def field_strength(fld: ShiftField, x, t: float, diff: DiffSpec | None = None,
                   shell_clearance: float | None = None) -> np.ndarray:
    """Antisymmetric H^{mu nu} = d^mu A^nu - d^nu A^mu by Richardson-extrapolated
    central differences of the potential (index raised: d^0 = d_t, d^i = -d_i).
    """
    diff = diff or DiffSpec()
    if shell_clearance is not None and shell_clearance < 4.0 * diff.step:
        raise ValueError(f"evaluation point within 4h of the cone shell (clearance {shell_clearance})")
    x = np.asarray(x, dtype=float)
    grad = np.empty((4, 4))
    grad[0] = _richardson_first(lambda s: fld.potential(x, s), t, diff)
    for i in range(3):
        def shifted(s, i=i):
            xi = x.copy()
            xi[i] = s
            return fld.potential(xi, t)

        grad[i + 1] = -_richardson_first(shifted, x[i], diff)
    return grad - grad.T


def _box_once(fld: ShiftField, x, t: float, h: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    center = fld.potential(x, t)
    res = (np.asarray(fld.potential(x, t + h)) - 2.0 * center + np.asarray(fld.potential(x, t - h))) / h**2
    for i in range(3):
        xp = x.copy()
        xm = x.copy()
        xp[i] += h
        xm[i] -= h
        res -= (np.asarray(fld.potential(xp, t)) - 2.0 * center + np.asarray(fld.potential(xm, t))) / h**2
    return res


def box_residual(fld: ShiftField, x, t: float, diff: DiffSpec | None = None,
                 shell_clearance: float | None = None) -> dict:
    """Discrete d'Alembertian at two step sizes with Richardson extrapolation.

    Returns a dict with residuals at h and h/2, the extrapolated value and the
    observed convergence order (2 for a smooth free solution).
    """
    diff = diff or DiffSpec()
    if shell_clearance is not None and shell_clearance < 4.0 * diff.step:
        raise ValueError(f"evaluation point within 4h of the cone shell (clearance {shell_clearance})")
    r1 = _box_once(fld, x, t, diff.step)
    r2 = _box_once(fld, x, t, diff.step / 2.0)
    extrapolated = (4.0 * r2 - r1) / 3.0
    n1 = float(np.max(np.abs(r1)))
    n2 = float(np.max(np.abs(r2)))
    order = np.log2(n1 / n2) if n2 > 0 else np.inf
    return {
        "residual_h": r1,
        "residual_h2": r2,
        "extrapolated": extrapolated,
        "order": float(order),
        "norm_h": n1,
        "norm_h2": n2,
    }


# ---------------------------------------------------------------------------
# module-level operations in spec vocabulary
# ---------------------------------------------------------------------------

def interior_potential(x, t: float, particle: ParticleSpec, method: EvalMethod,
                       ff: GaussianFormFactor, spec: QuadratureSpec | None = None) -> np.ndarray:
    """Cone-interior shift (per unit charge) by the selected evaluation route."""
    spec = spec or QuadratureSpec()
    u = particle.branch_velocity(t)
    umag = float(np.linalg.norm(u))
    y = particle.position
    if method is EvalMethod.CLOSED_REST:
        if umag > 1e-14:
            raise ValueError("CLOSED_REST requires vanishing branch velocity")
        return RestInteriorField(ff, y).potential(x, t)
    if method is EvalMethod.CLOSED_BOOSTED:
        return BoostedInteriorField(ff, y, u, spec).potential(x, t)
    if method is EvalMethod.K_QUADRATURE:
        if umag < 1e-14:
            r = float(np.linalg.norm(np.asarray(x, dtype=float) - y))
            out = np.zeros(4)
            out[0] = _rest_interior_kquad(ff, r, t, spec)
            return out
        scalar = _kquad_scalar(ff, x, t, u, y, spec, "cone")
        return np.concatenate(([1.0], u)) * scalar
    raise ValueError(f"unknown method {method}")


def exterior_potential(x, t: float, particle: ParticleSpec, ff: GaussianFormFactor,
                       spec: QuadratureSpec | None = None) -> np.ndarray:
    """Cone-exterior asymptotic shift built from the outgoing velocity."""
    spec = spec or QuadratureSpec()
    u = particle.velocity_out
    if float(np.linalg.norm(u)) < 1e-14:
        return RestExteriorField(ff, particle.position).potential(x, t)
    return BoostedExteriorField(ff, particle.position, u, spec).potential(x, t)


def coulomb_compensator(x, t: float, y, ff: GaussianFormFactor) -> np.ndarray:
    """Free compensating field of the Coulomb solution (rest charge)."""
    return CoulombCompensatorField(ff, np.asarray(y, dtype=float)).potential(x, t)


def lw_compensator(x, t: float, c, y, ff: GaussianFormFactor,
                   spec: QuadratureSpec | None = None) -> np.ndarray:
    """Compensating field with Lienard-Wiechert asymptotics of velocity c."""
    return LWCompensatorField(ff, np.asarray(y, dtype=float), np.asarray(c, dtype=float),
                              spec or QuadratureSpec()).potential(x, t)
