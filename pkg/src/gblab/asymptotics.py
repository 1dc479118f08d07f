"""Klein-Gordon smearing against free wave packets and late-time limits.

A packet is a free solution g(x, t) built from a smooth momentum profile
supported in an annulus 0 < k_lo <= |k| <= k_hi,

    g(x, t) = A (2 pi)^(-3/2) integral d3k h(|k|) e^{i (k.(x - a) - s |k| t)},

(s = +-1 the frequency sign), evaluated radially about its center a.  The
smearing of a classical field Phi against g is the Klein-Gordon pairing

    (g, Phi)(x0, t) = integral d3x  conj(g)(x, x0) <d/dx0> Phi(x, x0 + t),

with f <d> g = f dg - (df) g.  Two evaluation routes are provided: direct
position-space quadrature (radial, for fields concentric with the packet) and
the Parseval form

    integral d3k conj(g~)(k) e^{i s |k| x0} [ dPhi~/ds - i s |k| Phi~ ](k, x0 + t),

which uses the analytic momentum amplitudes of the tagged fields.  For a free
field the pairing is independent of x0; for the interacting cone-interior
shift it converges as x0 -> +inf to the pairing with the cone-exterior field,
at a superpolynomial rate fixed by the smoothness of the profile (the
oscillatory remainder is the transform of a compactly supported smooth
function).  Annular support keeps every integral absolutely convergent; an
infrared-soft profile (support reaching k = 0) is available for exploratory
runs but carries no convergence contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .fields import ShiftField, NumericFailure
from .formfactor import TWO_PI_POW_MINUS_3_2
from .quadrature import QuadratureSpec, gauss_legendre, panel_nodes, sphere_rule


@dataclass(frozen=True)
class WavePacket:
    """Free solution with smooth annular momentum profile.

    frequency_sign +1 selects e^{-i|k|t} time dependence (positive frequency);
    conjugated() flips both the sign and the amplitude phase, producing the
    packet whose smears are the complex conjugates of the original ones.
    """

    k_lo: float
    k_hi: float
    center: np.ndarray = dc_field(default_factory=lambda: np.zeros(3))
    amplitude: complex = 1.0
    frequency_sign: int = 1
    profile: str = "bump"
    ir_soft: bool = False

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))
        if not self.ir_soft and not 0.0 < self.k_lo < self.k_hi:
            raise ValueError("annulus requires 0 < k_lo < k_hi")
        if self.ir_soft and not 0.0 <= self.k_lo < self.k_hi:
            raise ValueError("empty profile support")
        if self.frequency_sign not in (1, -1):
            raise ValueError("frequency_sign must be +1 or -1")
        if self.profile not in ("bump", "cosine"):
            raise ValueError(f"unknown profile {self.profile!r}")

    def momentum_profile(self, kappa):
        """Smooth real profile h(kappa), compactly supported in the annulus."""
        kappa = np.asarray(kappa, dtype=float)
        u = (2.0 * kappa - self.k_lo - self.k_hi) / (self.k_hi - self.k_lo)
        inside = np.abs(u) < 1.0
        safe = np.where(inside, u, 0.0)
        if self.profile == "bump":
            vals = np.exp(1.0 - 1.0 / np.maximum(1e-300, 1.0 - safe**2))
        else:
            vals = np.cos(0.5 * np.pi * safe) ** 2
        return np.where(inside, vals, 0.0)

    def k_rule(self, oscillation_scale: float = 0.0, nodes: int = 12):
        """Radial Gauss-Legendre rule over the profile support."""
        panels = max(8, int(np.ceil((self.k_hi - self.k_lo) * oscillation_scale / np.pi)) + 4)
        return panel_nodes(self.k_lo, self.k_hi, panels, nodes)

    def profile_transforms(self, xi, xi_cut: float = 180.0, nodes: int = 12):
        """I(xi) = integral dk k h(k) e^{i k xi} and I1 with an extra factor k.

        Clamped to zero for |xi| > xi_cut, where the transform of the smooth
        compactly supported profile is superpolynomially small."""
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        live = np.abs(xi) <= xi_cut
        out0 = np.zeros(len(xi), dtype=complex)
        out1 = np.zeros(len(xi), dtype=complex)
        if np.any(live):
            kn, kw = self.k_rule(oscillation_scale=float(np.max(np.abs(xi[live]))), nodes=nodes)
            h = self.momentum_profile(kn)
            phases = np.exp(1j * np.outer(xi[live], kn))
            out0[live] = phases @ (kw * kn * h)
            out1[live] = phases @ (kw * kn**2 * h)
        return out0, out1

    def spatial(self, r, t: float, derivative: bool = False, xi_cut: float = 180.0) -> np.ndarray:
        """g (or its time derivative) on radii r about the packet center.

        Uses sin(kr) = (e^{ikr} - e^{-ikr}) / 2i, so each radius needs the
        profile transform at xi = r -+ s t only; contributions with
        |xi| > xi_cut are dropped (superpolynomially small)."""
        r = np.atleast_1d(np.asarray(r, dtype=float))
        a = self.frequency_sign * t
        i_plus, i1_plus = self.profile_transforms(r - a, xi_cut)
        i_minus, i1_minus = self.profile_transforms(-r - a, xi_cut)
        pref = self.amplitude * TWO_PI_POW_MINUS_3_2 * 4.0 * np.pi
        if derivative:
            num = i1_plus - i1_minus
            small = np.abs(r) < 1e-9
            safe_r = np.where(small, 1.0, r)
            vals = num / (2j * safe_r) * (-1j * self.frequency_sign)
            if np.any(small):
                # r -> 0 limit requires the next moment; fall back to sinc form
                kn, kw = self.k_rule(oscillation_scale=abs(t))
                h = self.momentum_profile(kn)
                limit = np.sum(kw * kn**3 * h * np.exp(-1j * self.frequency_sign * kn * t))
                vals = np.where(small, (-1j * self.frequency_sign) * limit, vals)
            return pref * vals
        num = i_plus - i_minus
        small = np.abs(r) < 1e-9
        safe_r = np.where(small, 1.0, r)
        vals = num / (2j * safe_r)
        if np.any(small):
            kn, kw = self.k_rule(oscillation_scale=abs(t))
            h = self.momentum_profile(kn)
            limit = np.sum(kw * kn**2 * h * np.exp(-1j * self.frequency_sign * kn * t))
            vals = np.where(small, limit, vals)
        return pref * vals

    def conjugated(self) -> "WavePacket":
        return WavePacket(self.k_lo, self.k_hi, self.center, np.conj(self.amplitude),
                          -self.frequency_sign, self.profile, self.ir_soft)

    def kg_norm(self, t: float = 0.0) -> complex:
        """Conserved Klein-Gordon pairing of the packet with itself,
        integral d3k |g~|^2 (2 i s |k|); time independent for a free solution."""
        kn, kw = self.k_rule()
        h = self.momentum_profile(kn)
        val = np.sum(kw * 4.0 * np.pi * kn**2 * np.abs(self.amplitude * h) ** 2 * 2j * self.frequency_sign * kn)
        return complex(val)


def make_wave_packet(k_lo: float, k_hi: float, center=(0.0, 0.0, 0.0), amplitude=1.0,
                     frequency_sign: int = 1, profile: str = "bump", ir_soft: bool = False) -> WavePacket:
    """Validated packet constructor (raises on an empty annulus)."""
    return WavePacket(k_lo, k_hi, np.asarray(center, dtype=float), amplitude, frequency_sign,
                      profile, ir_soft)


@dataclass(frozen=True)
class LimitSchedule:
    """Strictly increasing evaluation points with extrapolation settings."""

    x0_values: tuple
    order: int = 2
    tolerance: float = 1e-5

    def __post_init__(self):
        vals = tuple(float(v) for v in self.x0_values)
        if len(vals) < 3:
            raise ValueError("schedule needs at least 3 points")
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise ValueError("schedule must be strictly increasing")
        object.__setattr__(self, "x0_values", vals)
        if self.order < 1:
            raise ValueError("order must be >= 1")


@dataclass(frozen=True)
class ConvergenceReport:
    status: str
    raw_values: tuple
    extrapolants: tuple
    final_change: float
    tolerance: float
    decay_exponent: float | None

    @property
    def converged(self) -> bool:
        return self.status == "CONVERGED"


def _segmented_radial_rule(r_lo: float, r_max: float, wavelength_panel: float, fine_windows,
                           fine_panel: float, nodes: int):
    """Composite rule on [r_lo, r_max], refined inside the given (lo, hi) windows."""
    cuts = {r_lo, r_max}
    windows = []
    for lo, hi in fine_windows:
        lo, hi = max(r_lo, lo), min(r_max, hi)
        if hi > lo:
            windows.append((lo, hi))
            cuts.update((lo, hi))
    edges = sorted(cuts)
    all_nodes, all_weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (a + b)
        plen = fine_panel if any(lo <= mid <= hi for lo, hi in windows) else wavelength_panel
        n_panels = max(1, int(np.ceil((b - a) / plen)))
        rn, rw = panel_nodes(a, b, n_panels, nodes)
        all_nodes.append(rn)
        all_weights.append(rw)
    return np.concatenate(all_nodes), np.concatenate(all_weights)


def _radial_scalar_pair(field: ShiftField, r: np.ndarray, s: float):
    """(Phi0(r, s), dPhi0/ds(r, s)) for radially symmetric rest-family fields."""
    try:
        return np.asarray(field.radial_scalar(r, s)), np.asarray(field.radial_scalar_dt(r, s))
    except NotImplementedError:
        pass
    pots = np.empty(len(r))
    dots = np.empty(len(r))
    center = getattr(field, "center", None)
    for i, ri in enumerate(r):
        x = np.array([ri, 0.0, 0.0]) + (center if center is not None else 0.0)
        pots[i] = field.potential(x, s)[0]
        dots[i] = field.dt_potential(x, s)[0]
    return pots, dots


def kg_smear_position(field: ShiftField, packet: WavePacket, x0: float, t: float,
                      xi_cut: float = 180.0, nodes_per_panel: int = 10) -> np.ndarray:
    """Position-space Klein-Gordon smear for fields concentric with the packet.

    Radial quadrature of 4 pi r^2 [conj(g) dPhi/ds - conj(dg/dx0) Phi]; only
    the time component is populated (rest-family fields are radial).  The
    packet is superpolynomially small outside |r - |x0|| < xi_cut, which fixes
    the domain; the rule is refined around r = |s| where the field carries its
    smeared lightcone shell, and around the origin where the smeared Coulomb
    core sits (both of width set by the form factor).
    """
    s = x0 + t
    r_lo = max(0.0, abs(x0) - xi_cut)
    r_max = abs(x0) + xi_cut
    wavelength_panel = np.pi / packet.k_hi
    scale = field.feature_scale
    if scale is None:
        rn, rw = _segmented_radial_rule(r_lo, r_max, wavelength_panel, (), wavelength_panel,
                                        nodes_per_panel)
    else:
        windows = ((0.0, 12.0 * scale), (abs(s) - 12.0 * scale, abs(s) + 12.0 * scale))
        rn, rw = _segmented_radial_rule(r_lo, r_max, wavelength_panel, windows,
                                        min(wavelength_panel, scale), nodes_per_panel)
    g = packet.spatial(rn, x0, xi_cut=xi_cut)
    gdot = packet.spatial(rn, x0, derivative=True, xi_cut=xi_cut)
    phi, phi_dot = _radial_scalar_pair(field, rn, s)
    integrand = np.conj(g) * phi_dot - np.conj(gdot) * phi
    val = 4.0 * np.pi * np.sum(rw * rn**2 * integrand)
    out = np.zeros(4, dtype=complex)
    out[0] = val
    return out


def kg_smear_momentum(field: ShiftField, packet: WavePacket, x0: float, t: float,
                      spec: QuadratureSpec | None = None) -> np.ndarray:
    """Parseval-form Klein-Gordon smear using analytic momentum amplitudes."""
    if not field.has_mode_form:
        raise NumericFailure(f"field {field.tag} has no momentum-space form")
    spec = spec or QuadratureSpec()
    s = x0 + t
    sgn = packet.frequency_sign
    kn, kw = packet.k_rule(oscillation_scale=abs(x0) + abs(s) + float(np.linalg.norm(packet.center)))
    dirs, dw = sphere_rule(max(12, spec.theta_nodes // 4), max(8, spec.phi_nodes // 4))
    kvecs = (kn[:, None, None] * dirs[None, :, :]).reshape(-1, 3)
    amp = field.mode_amplitude(kvecs, s).reshape(len(kn), len(dirs), 4)
    amp_dt = field.mode_amplitude_dt(kvecs, s).reshape(len(kn), len(dirs), 4)
    h = packet.momentum_profile(kn)
    centre_phase = np.exp(1j * (dirs @ packet.center)[None, :] * kn[:, None])
    radial = np.conj(packet.amplitude) * h * kn**2 * np.exp(1j * sgn * kn * x0)
    weight = (radial * kw)[:, None] * dw[None, :] * centre_phase
    bracket = amp_dt - 1j * sgn * kn[:, None, None] * amp
    return np.tensordot(weight, bracket, axes=([0, 1], [0, 1]))


def kg_smear(field: ShiftField, packet: WavePacket, x0: float, t: float,
             route: str = "position", **kwargs) -> np.ndarray:
    """Klein-Gordon smear of a tagged field by the selected route."""
    if route == "position":
        return kg_smear_position(field, packet, x0, t, **kwargs)
    if route == "momentum":
        return kg_smear_momentum(field, packet, x0, t, **kwargs)
    raise ValueError(f"unknown route {route!r}")


def _neville_at_zero(zs: np.ndarray, vals: np.ndarray) -> complex:
    """Neville tableau evaluated at z = 0."""
    v = np.array(vals, dtype=complex)
    z = np.array(zs, dtype=float)
    n = len(z)
    for level in range(1, n):
        for i in range(n - level):
            v[i] = ((0.0 - z[i + level]) * v[i] + (z[i] - 0.0) * v[i + 1]) / (z[i] - z[i + level])
    return v[0]


def out_limit(field: ShiftField, packet: WavePacket, t: float, schedule: LimitSchedule,
              route: str = "position", **kwargs):
    """Extrapolated x0 -> infinity limit of the Klein-Gordon smear.

    Returns (limit four-tuple, ConvergenceReport).  Use a schedule of negative
    x0 values (decreasingly ordered via their magnitudes) by passing negative
    entries; the extrapolation variable is 1/x0 either way.
    """
    xs = np.asarray(schedule.x0_values, dtype=float)
    raws = [kg_smear(field, packet, x, t, route=route, **kwargs) for x in xs]
    raws_arr = np.array(raws)
    extrapolants = []
    for m in range(len(xs)):
        take = min(schedule.order + 1, m + 1)
        zs = 1.0 / xs[m + 1 - take: m + 1]
        ext = np.array([_neville_at_zero(zs, raws_arr[m + 1 - take: m + 1, mu]) for mu in range(4)])
        extrapolants.append(ext)
    final = extrapolants[-1]
    change = float(np.max(np.abs(extrapolants[-1] - extrapolants[-2])))
    scale = max(float(np.max(np.abs(final))), float(np.max(np.abs(raws_arr))), 1e-300)
    status = "CONVERGED" if change <= schedule.tolerance * scale else "NOT_CONVERGED"

    diffs = np.max(np.abs(raws_arr - final[None, :]), axis=1)
    mask = diffs > 1e-14 * scale
    exponent = None
    if np.count_nonzero(mask) >= 2:
        slope = np.polyfit(np.log(np.abs(xs[mask])), np.log(diffs[mask]), 1)[0]
        exponent = float(slope)
    report = ConvergenceReport(
        status=status,
        raw_values=tuple(map(tuple, raws_arr.tolist())),
        extrapolants=tuple(map(tuple, np.array(extrapolants).tolist())),
        final_change=change,
        tolerance=schedule.tolerance,
        decay_exponent=exponent,
    )
    return final, report
