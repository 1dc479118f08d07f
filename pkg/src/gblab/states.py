"""Quasi-free charged states and their verification probes.

A state is a free Fock vacuum dressed with a coherent classical shift: the
interacting potential is the free field plus a charge-diagonal c-number, so
every expectation factorizes into Wick contractions of the free modes plus
products of classical shift values,

    omega( prod_i (Q_i + s_i) ) = sum_{S} < prod_{i in S} Q_i >_vac
                                  * omega_ch( prod_{i not in S} s_i(y^) ),

with the particle average taken jointly over the position distribution (the
shifts are multiplication operators in the particle variable).  The catalog:

    GUPTA    shift = e * cone-interior kernel (branch velocity per time sign);
    COULOMB  adds the free Coulomb compensator, restoring Gauss' law;
    LW(c)    adds the compensator with Lienard-Wiechert asymptotics of
             velocity c (equal to COULOMB at c = 0);
    CUSTOM   any caller-supplied shift (ZERO gives the free vacuum state).

Asymptotic-potential factors see the cone-exterior kernel (plus compensator)
instead of the interior one.  Gauss-law deviation, subsidiary-condition
residuals, infrared-regularized Dirac shifts and lightcone charge-class
probes are all computed from this single expectation engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace

import numpy as np

from .fields import (BoostedExteriorField, BranchInteriorField, CoulombCompensatorField,
                     DiffSpec, LWCompensatorField, ParticleSpec, RestExteriorField,
                     ShiftField, SumField, ZeroField, _richardson_first, _box_once,
                     _smeared_pauli_jordan_grad, field_strength, smeared_pauli_jordan)
from .fock import ModeSet, FockVector, ModeOperator, smear_free_field, wick_inner_product
from .formfactor import GaussianFormFactor, TWO_PI_POW_MINUS_3_2
from .quadrature import QuadratureSpec, panel_nodes


@dataclass(frozen=True)
class FieldFactor:
    """One smeared-field factor of an observable: a kind, Lorentz indices, a
    spacetime point with an optional Gaussian mollifier, and a localization
    tag used by region-restricted probes."""

    kind: str  # "A" | "F" | "dA" | "A_out"
    indices: tuple
    point: np.ndarray
    time: float
    mollifier_width: float = 0.0
    region: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "point", np.asarray(self.point, dtype=float))
        object.__setattr__(self, "indices", tuple(self.indices))
        if self.kind not in ("A", "F", "dA", "A_out"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        n_expected = {"A": 1, "A_out": 1, "F": 2, "dA": 0}[self.kind]
        if len(self.indices) != n_expected:
            raise ValueError(f"{self.kind} takes {n_expected} indices")


@dataclass(frozen=True)
class QuasiFreeState:
    """Particle descriptor plus coherent shift over a finite mode set."""

    label: str  # GUPTA | COULOMB | LW | CUSTOM
    particle: ParticleSpec
    ff: GaussianFormFactor
    modes: ModeSet
    quad: QuadratureSpec = dc_field(default_factory=QuadratureSpec)
    lw_velocity: np.ndarray | None = None
    custom_shift: ShiftField | None = None
    degree_cap: int = 8

    def _compensator(self, y: np.ndarray, ff: GaussianFormFactor) -> ShiftField | None:
        if self.label == "GUPTA":
            return None
        if self.label == "COULOMB":
            return CoulombCompensatorField(ff, y)
        if self.label == "LW":
            return LWCompensatorField(ff, y, self.lw_velocity, self.quad)
        return None

    def interacting_shift(self, y: np.ndarray, ff: GaussianFormFactor | None = None) -> ShiftField:
        """Classical shift of the interacting potential, per unit charge."""
        ff = ff or self.ff
        if self.label == "CUSTOM":
            return self.custom_shift if self.custom_shift is not None else ZeroField()
        base = BranchInteriorField(ff, replace(self.particle, position=y,
                                               packet_nodes=None, packet_weights=None), self.quad)
        comp = self._compensator(y, ff)
        return base if comp is None else SumField((base, comp), (1.0, 1.0))

    def out_shift(self, y: np.ndarray, ff: GaussianFormFactor | None = None) -> ShiftField:
        """Classical shift of the outgoing asymptotic potential."""
        ff = ff or self.ff
        if self.label == "CUSTOM":
            return self.custom_shift if self.custom_shift is not None else ZeroField()
        u = self.particle.velocity_out
        if float(np.linalg.norm(u)) < 1e-14:
            base = RestExteriorField(ff, y)
        else:
            base = BoostedExteriorField(ff, y, u, self.quad)
        comp = self._compensator(y, ff)
        return base if comp is None else SumField((base, comp), (1.0, 1.0))


def make_state(kind: str, particle: ParticleSpec, ff: GaussianFormFactor, modes: ModeSet,
               lw_velocity=None, quad: QuadratureSpec | None = None,
               custom_shift: ShiftField | None = None, degree_cap: int = 8) -> QuasiFreeState:
    """State constructor; LW requires a timelike label velocity |c| < 1."""
    kind = kind.upper()
    if kind not in ("GUPTA", "COULOMB", "LW", "CUSTOM"):
        raise ValueError(f"unknown state kind {kind!r}")
    c = None
    if kind == "LW":
        c = np.asarray(lw_velocity, dtype=float)
        if np.linalg.norm(c) >= 1.0:
            raise ValueError("LW label velocity must satisfy |c| < 1")
    return QuasiFreeState(kind, particle, ff, modes, quad or QuadratureSpec(), c,
                          custom_shift, degree_cap)


def vacuum_state(particle: ParticleSpec, ff: GaussianFormFactor, modes: ModeSet,
                 quad: QuadratureSpec | None = None) -> QuasiFreeState:
    """Free Fock vacuum (zero coherent shift) over the same mode set."""
    return make_state("CUSTOM", particle, ff, modes, quad=quad, custom_shift=ZeroField())


# ---------------------------------------------------------------------------
# factor evaluation
# ---------------------------------------------------------------------------

def _mollified_ff(ff: GaussianFormFactor, width: float) -> GaussianFormFactor:
    """Gaussian mollification of a Gaussian form factor widens it exactly."""
    if width <= 0.0:
        return ff
    return GaussianFormFactor(float(np.hypot(ff.sigma, width)))


def _factor_operator(factor: FieldFactor, modes: ModeSet) -> ModeOperator:
    """Free-field part of a factor, discretized on the state's mode set."""
    k = modes.momenta
    omega = modes.omegas
    packet = TWO_PI_POW_MINUS_3_2 * np.exp(
        1j * (k @ factor.point - omega * factor.time)
        - 0.5 * (factor.mollifier_width * omega) ** 2
    )
    kind = {"A": "A0", "A_out": "A0", "F": "F0", "dA": "B0"}[factor.kind]
    return smear_free_field(kind, packet, modes, factor.indices)


def _factor_shift(state: QuasiFreeState, factor: FieldFactor, y: np.ndarray,
                  extra: ShiftField | None = None, diff: DiffSpec | None = None) -> complex:
    """Classical shift value of a factor at particle position y (charge included)."""
    ff = _mollified_ff(state.ff, factor.mollifier_width)
    base = state.out_shift(y, ff) if factor.kind == "A_out" else state.interacting_shift(y, ff)
    shift = base if extra is None else SumField((base, extra), (1.0, 1.0))
    e = state.particle.charge
    x, t = factor.point, factor.time
    if factor.kind in ("A", "A_out"):
        return e * float(shift.potential(x, t)[factor.indices[0]])
    if factor.kind == "dA":
        return e * float(shift.divergence(x, t))
    mu, nu = factor.indices
    return e * float(field_strength(shift, x, t, diff)[mu, nu])


def expect(state: QuasiFreeState, factors: list[FieldFactor],
           extra_shifts: list[ShiftField | None] | None = None,
           diff: DiffSpec | None = None) -> tuple[complex, float]:
    """Expectation of an ordered product of factors.

    Wick pairings of the free parts plus products of classical one-point
    shifts, jointly averaged over the particle localization.  Returns
    (value, error_estimate); the estimate reflects the particle-average and
    factor-count growth of rounding, the closed-form kernels themselves are
    exact to rounding.
    """
    n = len(factors)
    if n > state.degree_cap:
        raise ValueError(f"factor count {n} exceeds degree cap {state.degree_cap}")
    if extra_shifts is None:
        extra_shifts = [None] * n
    nodes, weights = state.particle.localization_nodes()
    shift_table = np.empty((n, len(nodes)), dtype=complex)
    for i, factor in enumerate(factors):
        for m, y in enumerate(nodes):
            shift_table[i, m] = _factor_shift(state, factor, y, extra_shifts[i], diff)
    ops = [_factor_operator(f, state.modes) for f in factors]
    vacuum = FockVector.vacuum()

    total = 0.0 + 0.0j
    for mask in range(1 << n):
        chosen = [i for i in range(n) if mask & (1 << i)]
        rest = [i for i in range(n) if not mask & (1 << i)]
        classical = np.ones(len(nodes), dtype=complex)
        for i in rest:
            classical = classical * shift_table[i]
        classical_avg = complex(np.sum(weights * classical))
        if classical_avg == 0.0:
            continue
        vec = vacuum
        for i in reversed(chosen):
            vec = ops[i].apply(vec, state.modes, state.degree_cap)
        wick = vec.terms.get((), 0.0)
        if chosen and wick == 0.0:
            continue
        total += classical_avg * (wick if chosen else 1.0)
    err = 1e-14 * (1.0 + abs(total)) * (1 + n)
    return complex(total), float(err)


# ---------------------------------------------------------------------------
# Gauss law and subsidiary condition
# ---------------------------------------------------------------------------

def current_density(state: QuasiFreeState, nu: int, x, t: float) -> float:
    """Charge-current expectation of the two-branch uniform-velocity current."""
    u = state.particle.branch_velocity(t)
    u4 = np.concatenate(([1.0], u))
    nodes, weights = state.particle.localization_nodes()
    vals = [state.particle.charge * u4[nu] * float(state.ff.rho(np.linalg.norm(np.asarray(x) - y - u * t)))
            for y in nodes]
    return float(np.sum(weights * np.asarray(vals)))


def gauss_deviation(state: QuasiFreeState, nu: int, x, t: float,
                    diff: DiffSpec | None = None) -> float:
    """omega(d_mu F^{mu nu}(x, t)) - omega(j^nu(x, t)) by finite differences.

    Evaluated as e [ box(shift^nu) - d^nu(d . shift) ] - j^nu with Richardson
    second differences of the coherent shift; off-shell points only.
    """
    diff = diff or DiffSpec()
    x = np.asarray(x, dtype=float)
    nodes, weights = state.particle.localization_nodes()
    total = 0.0
    for w, y in zip(weights, nodes):
        shift = state.interacting_shift(y)
        box1 = _box_once(shift, x, t, diff.step)[nu]
        box2 = _box_once(shift, x, t, diff.step / 2.0)[nu]
        box = (4.0 * box2 - box1) / 3.0
        if nu == 0:
            dnu_div = _richardson_first(lambda s: shift.divergence(x, s, method="analytic"), t, diff)
        else:
            def shifted(s, i=nu - 1):
                xi = x.copy()
                xi[i] = s
                return shift.divergence(xi, t, method="analytic")

            dnu_div = -_richardson_first(shifted, x[nu - 1], diff)
        total += w * state.particle.charge * (box - float(dnu_div))
    return float(total) - current_density(state, nu, x, t)


def gauss_deviation_oracle(state: QuasiFreeState, nu: int, x, t: float) -> float:
    """Independent route: -e d^nu (d . F) from the analytic gradient of the
    smeared lightcone shell distribution; identically zero for states whose
    compensator cancels the shift divergence (COULOMB, LW)."""
    if state.label in ("COULOMB", "LW"):
        return 0.0
    if state.label == "CUSTOM":
        raise ValueError("no oracle for CUSTOM states")
    nodes, weights = state.particle.localization_nodes()
    total = 0.0
    for w, y in zip(weights, nodes):
        grad = _smeared_pauli_jordan_grad(x, t, y, state.ff)
        raised = grad[nu] if nu == 0 else -grad[nu]
        total += w * (-state.particle.charge * raised)
    return float(total)


def subsidiary_residual(state: QuasiFreeState, x, t: float, method: str = "analytic") -> float:
    """omega(d . A (x, t)) = e * divergence of the coherent shift."""
    nodes, weights = state.particle.localization_nodes()
    total = 0.0
    for w, y in zip(weights, nodes):
        shift = state.interacting_shift(y)
        total += w * state.particle.charge * shift.divergence(x, t, method=method, spec=state.quad)
    return float(total)


# ---------------------------------------------------------------------------
# regularized Dirac-factor shifts and infrared-cutoff removal
# ---------------------------------------------------------------------------

def smooth_cutoff(s):
    """Smooth profile: 1 on [0, 1/2], 0 on [1, inf), C-infinity bridge between."""
    s = np.asarray(s, dtype=float)
    u = np.clip((s - 0.5) * 2.0, 0.0, 1.0)

    def f(v):
        with np.errstate(divide="ignore", over="ignore"):
            return np.where(v > 0.0, np.exp(-1.0 / np.maximum(v, 1e-300)), 0.0)

    return f(1.0 - u) / (f(u) + f(1.0 - u))


@dataclass(frozen=True)
class DiracShiftSpec:
    """Infrared regularization of a compensating field: radius R and a smooth
    cutoff profile chi_R(x) = chi(|x - y| / R), identically 1 on [0, R/2]."""

    radius: float
    base: ShiftField
    center: np.ndarray

    def __post_init__(self):
        if not self.radius > 0.0:
            raise ValueError("cutoff radius must be positive")
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))

    def chi(self, x) -> float:
        r = np.linalg.norm(np.asarray(x, dtype=float) - self.center, axis=-1)
        return smooth_cutoff(r / self.radius)

    def truncated(self) -> "TruncatedField":
        return TruncatedField(self.base, self.center, self.radius)


@dataclass(frozen=True)
class TruncatedField(ShiftField):
    """chi_R-truncated compensating field (not free where grad chi != 0)."""

    base: ShiftField
    center: np.ndarray
    radius: float

    tag = "C_TRUNCATED"
    has_mode_form = False

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))

    @property
    def feature_scale(self):
        return self.base.feature_scale

    def _chi(self, x) -> float:
        r = float(np.linalg.norm(np.asarray(x, dtype=float) - self.center))
        return float(smooth_cutoff(np.array(r / self.radius)))

    def potential(self, x, t):
        return self._chi(x) * self.base.potential(x, t)

    def dt_potential(self, x, t, diff=None):
        return self._chi(x) * self.base.dt_potential(x, t, diff)

    def _divergence_analytic(self, x, t):
        # d.(chi C) = chi (d.C) + C^i d_i chi; the gradient of the smooth
        # profile is evaluated by central differences (scale R, benign)
        chi = self._chi(x)
        div = chi * self.base._divergence_analytic(x, t)
        pot = self.base.potential(x, t)
        if np.max(np.abs(pot[1:])) > 0.0:
            h = 1e-4 * self.radius
            x = np.asarray(x, dtype=float)
            for i in range(3):
                xp, xm = x.copy(), x.copy()
                xp[i] += h
                xm[i] -= h
                div += pot[i + 1] * (self._chi(xp) - self._chi(xm)) / (2.0 * h)
        return div


def dirac_shift_expect(state: QuasiFreeState, spec: DiracShiftSpec,
                       factors: list[FieldFactor], diff: DiffSpec | None = None) -> tuple[complex, float]:
    """Expectation under the shift automorphism of the regularized Dirac
    factor: every factor of the algebra gains the classical field derived from
    e * C_R (potential, field strength, or divergence per its kind)."""
    truncated = spec.truncated()
    return expect(state, factors, extra_shifts=[truncated] * len(factors), diff=diff)


def ir_limit_expect(state: QuasiFreeState, base: ShiftField, center, radii,
                    factors: list[FieldFactor], stabilization_tol: float = 1e-12):
    """Expectations over an increasing cutoff-radius schedule.

    Returns (value, r0, table, status): the final value, the smallest radius
    beyond which successive values agree within stabilization_tol (scaled),
    the per-radius table, and CONVERGED / NOT_STABILIZED.
    """
    radii = [float(r) for r in radii]
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be strictly increasing")
    values = []
    for r in radii:
        spec = DiracShiftSpec(r, base, center)
        val, _ = dirac_shift_expect(state, spec, factors)
        values.append(val)
    scale = max(max(abs(v) for v in values), 1.0)
    r0 = None
    for i in range(1, len(values)):
        if all(abs(values[j] - values[j - 1]) <= stabilization_tol * scale
               for j in range(i, len(values))):
            r0 = radii[i - 1]
            break
    status = "STABILIZED" if r0 is not None else "NOT_STABILIZED"
    table = list(zip(radii, values))
    return values[-1], r0, table, status


# ---------------------------------------------------------------------------
# charge-class probes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProbeRecord:
    description: str
    point: tuple
    time: float
    value_a: complex
    value_b: complex
    deviation: float
    error_estimate: float


@dataclass(frozen=True)
class ProbeReport:
    region: str
    verdict: str
    one_point_max: float
    truncated_max: float
    tolerance: float
    records: tuple

    @property
    def is_fock(self) -> bool:
        return self.verdict == "FOCK"


def charge_class_probe(state_a: QuasiFreeState, state_b: QuasiFreeState, region: str,
                       points: list, times: list, mollifier_width: float = 0.0,
                       tolerance: float = 1e-8, index: int = 0) -> ProbeReport:
    """Compare one-point asymptotic-potential expectations and truncated
    two-point functions of two states on a family of probe points.

    Verdict FOCK when every one-point deviation and every truncated two-point
    deviation is below tolerance; the coherent one-point shift is the
    discriminator, truncated data checks the quasi-free structure.
    """
    records = []
    one_max = 0.0
    factors = []
    for (x, t) in zip(points, times):
        f = FieldFactor("A_out", (index,), np.asarray(x, dtype=float), float(t),
                        mollifier_width, region)
        factors.append(f)
        va, _ = expect(state_a, [f])
        vb, eb = expect(state_b, [f])
        dev = abs(va - vb)
        one_max = max(one_max, dev)
        records.append(ProbeRecord("one-point A_out", tuple(np.asarray(x).tolist()), float(t),
                                   va, vb, dev, eb))
    trunc_max = 0.0
    for f1, f2 in zip(factors[:-1], factors[1:]):
        ta = _truncated_two_point(state_a, f1, f2)
        tb = _truncated_two_point(state_b, f1, f2)
        dev = abs(ta - tb)
        trunc_max = max(trunc_max, dev)
        records.append(ProbeRecord("truncated two-point", f1.point.shape and tuple(f1.point.tolist()),
                                   f1.time, ta, tb, dev, 1e-13))
    verdict = "FOCK" if max(one_max, trunc_max) < tolerance else "NON_FOCK"
    return ProbeReport(region, verdict, one_max, trunc_max, tolerance, tuple(records))


def _truncated_two_point(state: QuasiFreeState, f1: FieldFactor, f2: FieldFactor) -> complex:
    v12, _ = expect(state, [f1, f2])
    v1, _ = expect(state, [f1])
    v2, _ = expect(state, [f2])
    return v12 - v1 * v2


# ---------------------------------------------------------------------------
# mode-level subsidiary-condition eigenvalue
# ---------------------------------------------------------------------------

def divergence_negative_frequency(state: QuasiFreeState, x, t: float,
                                  mollifier_width: float = 0.0) -> complex:
    """Mode-discretized negative-frequency part of the shift divergence,

        e (d.F)^(-)(x, t) = e (2 pi)^(-3/2) sum_j w_j rho~_j
                            * (i / (2 w_j)) e^{-i w_j t} e^{i k_j.(x - y)},

    on the state's mode set (the eigenvalue by which the annihilation part of
    the gauge generator acts on the positive subspace)."""
    k = state.modes.momenta
    omega = state.modes.omegas
    w = state.modes.weights
    nodes, weights = state.particle.localization_nodes()
    total = 0.0 + 0.0j
    moll = np.exp(-0.5 * (mollifier_width * omega) ** 2)
    for wy, y in zip(weights, nodes):
        phase = np.exp(1j * (k @ (np.asarray(x, dtype=float) - y)))
        total += wy * np.sum(w * state.ff.rho_tilde(omega) * (1j / (2.0 * omega))
                             * np.exp(-1j * omega * t) * phase * moll)
    return complex(state.particle.charge * TWO_PI_POW_MINUS_3_2 * total)


def divergence_negative_frequency_continuum(state: QuasiFreeState, x, t: float) -> complex:
    """Continuum radial-quadrature oracle for the same negative-frequency part
    (point particle only)."""
    y = state.particle.position
    r = float(np.linalg.norm(np.asarray(x, dtype=float) - y))
    kmax = 8.8 / state.ff.sigma
    panels = max(64, int(np.ceil(kmax * (r + abs(t)) / np.pi)) + 8)
    kn, kw = panel_nodes(0.0, kmax, panels, 16)
    vals = state.ff.rho_tilde(kn) * (0.5j) * np.exp(-1j * kn * t) * kn * np.sinc(kn * r / np.pi)
    return complex(state.particle.charge * TWO_PI_POW_MINUS_3_2 * 4.0 * np.pi * np.sum(kw * vals))


def bminus_word_residual(state: QuasiFreeState, x, t: float,
                         words: list[ModeOperator], mollifier_width: float = 0.0) -> float:
    """Largest coefficient magnitude of B0^(-)(x, t) applied through observable
    words on the vacuum; exactly zero when the words are field-strength
    generated (the quantum half of the multiplication-eigenvalue relation)."""
    k = state.modes.momenta
    omega = state.modes.omegas
    packet = TWO_PI_POW_MINUS_3_2 * np.exp(
        1j * (k @ np.asarray(x, dtype=float) - omega * t) - 0.5 * (mollifier_width * omega) ** 2)
    bminus = smear_free_field("B0_minus", packet, state.modes)
    worst = 0.0
    for word in words:
        vec = word.apply(FockVector.vacuum(), state.modes, state.degree_cap)
        image = bminus.apply(vec, state.modes, state.degree_cap, zero_tol=0.0)
        worst = max(worst, image.coefficient_norm())
    return worst
