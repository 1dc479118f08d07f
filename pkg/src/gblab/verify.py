"""Verification suites: every structural identity of the library turned into
a named, tolerance-carrying check.

Each suite function returns a list of CheckRecords; run_verify composes them
into a deterministic report.  Tolerances are fixed here (scaled by the run's
tolerance_scale); randomness is drawn from per-suite generators seeded from
the configured seed, so reports are byte-identical for a fixed configuration.
"""

from __future__ import annotations

import time

import numpy as np

from . import fields as fl
from . import fock as fk
from . import states as stt
from .asymptotics import LimitSchedule, WavePacket, kg_smear, out_limit
from .config import ScenarioConfig
from .formfactor import GaussianFormFactor, TWO_PI_POW_MINUS_3_2
from .minkowski import METRIC, boost_from_velocity, minkowski_dot
from .quadrature import QuadratureSpec, composite_gl, gauss_legendre, panel_nodes
from .regions import Region, RegionSpec
from .reports import CheckRecord, Report, check

SUITE_ORDER = ("kernel", "chi", "fields-rest", "fields-boosted", "fock", "states",
               "asymptotics", "dirac", "charge-class", "wave-residual")


def _rng(cfg: ScenarioConfig, suite: str) -> np.random.Generator:
    return np.random.default_rng([cfg.run.seed, SUITE_ORDER.index(suite)])


def _ff(cfg) -> GaussianFormFactor:
    return GaussianFormFactor(cfg.form_factor.sigma)


def _ff_boost(cfg) -> GaussianFormFactor:
    return GaussianFormFactor(cfg.form_factor.boosted_sigma)


def _particle(cfg, charge=None) -> fl.ParticleSpec:
    return fl.ParticleSpec(np.asarray(cfg.particle.y0), np.asarray(cfg.particle.v_in),
                           np.asarray(cfg.particle.v_out),
                           cfg.particle.charge if charge is None else charge)


def _modes(cfg, measure="continuum") -> fk.ModeSet:
    x, w = gauss_legendre(cfg.modes.radial_nodes)
    mid = 0.5 * (cfg.modes.k_lo + cfg.modes.k_hi)
    half = 0.5 * (cfg.modes.k_hi - cfg.modes.k_lo)
    radii = mid + half * x
    base_dirs = np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0],
                          [0, 0, 1], [0, 0, -1], [1, 1, 1], [-1, -1, 1]], dtype=float)
    reps = int(np.ceil(cfg.modes.directions / len(base_dirs)))
    dirs = []
    for rep in range(reps):
        rot = rep * 0.37
        c, s = np.cos(rot), np.sin(rot)
        mat = np.array([[c, -s, 0], [s, c, 0], [0, 0, 1.0]])
        dirs.extend((base_dirs @ mat.T).tolist())
    dirs = np.array(dirs[: cfg.modes.directions])
    return fk.product_mode_set(radii, dirs, half * w, measure=measure)


def _deep_axis_modes(ff: GaussianFormFactor) -> fk.ModeSet:
    """Dense momentum rule for continuum-grade classical mode sums (points on
    the z axis; azimuthally symmetric integrands)."""
    kmax = 8.8 / ff.sigma
    rn, rw = panel_nodes(1e-9, kmax, 48, 12)
    cn, cw = gauss_legendre(96)
    s = np.sqrt(1.0 - cn**2)
    dirs = np.stack([s, np.zeros_like(s), cn], axis=1)
    return fk.product_mode_set(rn, dirs, rw, cw * 2.0 * np.pi)


# ---------------------------------------------------------------------------
# kernel suite
# ---------------------------------------------------------------------------

def suite_kernel(cfg: ScenarioConfig) -> list:
    rng = _rng(cfg, "kernel")
    tol = 1e-12 * cfg.run.tolerance_scale
    out = []

    worst = 0.0
    for _ in range(200):
        v = rng.uniform(-0.6, 0.6, 3)
        lam = boost_from_velocity(v)
        a = rng.normal(size=(50, 4))
        b = rng.normal(size=(50, 4))
        la = a @ lam.T
        lb = b @ lam.T
        worst = max(worst, float(np.max(np.abs(minkowski_dot(la, lb) - minkowski_dot(a, b)))))
    out.append(check("kernel.boost-isometry", "kernel",
                     "Minkowski product preserved by 10^4 random boosted pairs",
                     worst < tol, expected=0.0, actual=worst, tolerance=tol,
                     provenance="closed-form"))

    e0 = np.array([1.0, 0, 0, 0])
    lightlike = np.array([1.0, 1.0, 0, 0])
    v = rng.uniform(-0.5, 0.5, 3)
    fourv = np.concatenate(([1.0], v))
    out.append(check("kernel.dot-examples", "kernel", "timelike/lightlike/velocity norms",
                     abs(minkowski_dot(e0, e0) - 1.0) == 0.0
                     and minkowski_dot(lightlike, lightlike) == 0.0
                     and abs(minkowski_dot(fourv, fourv) - (1.0 - v @ v)) < 1e-15,
                     provenance="closed-form"))

    lam = boost_from_velocity(np.array([0.6, 0.0, 0.0]))
    out.append(check("kernel.boost-example", "kernel", "boost of the rest four-velocity",
                     np.allclose(lam @ e0, [1.25, 0.75, 0.0, 0.0], atol=1e-15),
                     expected=[1.25, 0.75, 0.0, 0.0], actual=(lam @ e0),
                     provenance="closed-form"))
    out.append(check("kernel.boost-identity", "kernel", "zero velocity gives the identity",
                     np.array_equal(boost_from_velocity(np.zeros(3)), np.eye(4))))
    try:
        boost_from_velocity(np.array([1.0, 0, 0]))
        ok = False
    except ValueError:
        ok = True
    out.append(check("kernel.boost-domain", "kernel", "|v| >= 1 rejected", ok))

    ff = _ff(cfg)
    norm = composite_gl(lambda r: 4.0 * np.pi * r**2 * ff.rho(r), 0.0, 12.0 * ff.sigma, 48)
    out.append(check("kernel.formfactor-normalization", "kernel",
                     "3d quadrature of the charge density equals 1",
                     abs(norm - 1.0) < 1e-12, expected=1.0, actual=norm, tolerance=1e-12,
                     provenance="quadrature"))
    kprobe = 1.7
    quad_ft = composite_gl(
        lambda r: 4.0 * np.pi * r**2 * ff.rho(r) * np.sinc(kprobe * r / np.pi),
        0.0, 12.0 * ff.sigma, 64) * TWO_PI_POW_MINUS_3_2
    out.append(check("kernel.formfactor-transform", "kernel",
                     "analytic radial transform against direct quadrature",
                     abs(quad_ft - ff.rho_tilde(kprobe)) < 1e-12,
                     expected=float(ff.rho_tilde(kprobe)), actual=float(quad_ft),
                     tolerance=1e-12, provenance="quadrature"))
    out.append(check("kernel.formfactor-zero-mode", "kernel",
                     "transform at k = 0 is the normalization constant",
                     abs(ff.rho_tilde(0.0) - TWO_PI_POW_MINUS_3_2) < 1e-16,
                     expected=TWO_PI_POW_MINUS_3_2, actual=float(ff.rho_tilde(0.0))))
    narrow = GaussianFormFactor(1e-6)
    out.append(check("kernel.formfactor-point-limit", "kernel",
                     "vanishing width reproduces the point-charge transform",
                     abs(narrow.rho_tilde(2.0) - TWO_PI_POW_MINUS_3_2) < 1e-10))
    r_eff = ff.effective_radius(cfg.form_factor.support_epsilon)
    out.append(check("kernel.effective-radius", "kernel",
                     "tail mass below epsilon at the effective radius",
                     ff.tail_mass(r_eff) <= cfg.form_factor.support_epsilon
                     and ff.tail_mass(0.9 * r_eff) > cfg.form_factor.support_epsilon,
                     actual=r_eff, inputs={"epsilon": cfg.form_factor.support_epsilon}))

    spec = RegionSpec(np.zeros(3), r_eff, 0.05)
    classifications = [
        spec.classify(np.zeros(3), 10.0) is Region.INTERIOR,
        spec.classify(np.array([10.0, 0, 0]), 1.0) is Region.SPACELIKE,
        spec.classify(np.array([1.0, 0, 0]), 1.0) is Region.SHELL,
    ]
    pts = rng.uniform(-4, 4, size=(500, 3))
    ts = rng.uniform(-4, 4, 500)
    tags = [spec.classify(p, t) for p, t in zip(pts, ts)]
    out.append(check("kernel.region-classify", "kernel",
                     "region examples and totality of the classification",
                     all(classifications) and all(t in Region for t in tags),
                     provenance="closed-form"))
    return out


# ---------------------------------------------------------------------------
# characteristic-function suite
# ---------------------------------------------------------------------------

def suite_chi(cfg: ScenarioConfig) -> list:
    rng = _rng(cfg, "chi")
    out = []
    rel_tol = 1e-5 * cfg.run.tolerance_scale
    abs_tol = 1e-6 * cfg.run.tolerance_scale
    band = 0.05
    n = cfg.probes.chi_points
    started = time.time()

    worst_rel = 0.0
    worst_abs = 0.0
    n_int = n // 2
    for i in range(n):
        t = rng.uniform(0.4, 2.5) * rng.choice([-1.0, 1.0])
        if i < n_int:
            r = rng.uniform(0.08, max(0.1, abs(t) - band))
        else:
            r = abs(t) + rng.uniform(band, 2.0)
        lhs, _ = fl.chi_kernel_quadrature(r, t)
        rhs = fl.chi_kernel_closed(r, t)
        if rhs != 0.0:
            worst_rel = max(worst_rel, abs(lhs - rhs) / abs(rhs))
        else:
            worst_abs = max(worst_abs, abs(lhs))
    elapsed = time.time() - started
    out.append(check("chi.identity-interior", "fields",
                     f"quadrature kernel against sqrt(pi/2)/r on {n_int} interior points",
                     worst_rel < rel_tol, expected=0.0, actual=worst_rel, tolerance=rel_tol,
                     provenance="quadrature", inputs={"points": n_int}))
    out.append(check("chi.identity-exterior", "fields",
                     f"quadrature kernel vanishes on {n - n_int} exterior points",
                     worst_abs < abs_tol, expected=0.0, actual=worst_abs, tolerance=abs_tol,
                     provenance="quadrature", inputs={"points": n - n_int}))
    val, err = fl.chi_kernel_quadrature(0.5, 1.0)
    out.append(check("chi.interior-value", "fields", "kernel value at r = 0.5, t = 1",
                     abs(val - np.sqrt(np.pi / 2.0) / 0.5) < rel_tol * 5.0,
                     expected=float(np.sqrt(np.pi / 2.0) / 0.5), actual=val,
                     tolerance=rel_tol, error_estimate=err, provenance="quadrature"))
    val2, err2 = fl.chi_kernel_quadrature(2.0, 1.0)
    out.append(check("chi.exterior-value", "fields", "kernel vanishes at r = 2, t = 1",
                     abs(val2) < abs_tol, expected=0.0, actual=val2, tolerance=abs_tol,
                     error_estimate=err2, provenance="quadrature"))
    out.append(check("chi.zero-time", "fields", "kernel vanishes identically at t = 0",
                     fl.chi_kernel_quadrature(0.7, 0.0) == (0.0, 0.0)))
    out.append(check("chi.timing", "fields", "chi identity scan runtime below 10 s",
                     elapsed < 10.0, actual=elapsed, tolerance=10.0))
    return out


# ---------------------------------------------------------------------------
# rest-frame field suite
# ---------------------------------------------------------------------------

def _rest_probe_points(cfg, rng, n):
    """Off-shell probe points: mix of interior and spacelike, shell excluded."""
    band = cfg.probes.shell_exclusion_sigmas * cfg.form_factor.sigma
    pts = []
    while len(pts) < n:
        t = rng.uniform(0.4, 2.8) * rng.choice([-1.0, 1.0])
        if rng.uniform() < 0.7:
            hi = abs(t) - band
            if hi < 0.06:
                continue
            r = rng.uniform(0.05, hi)
        else:
            r = abs(t) + rng.uniform(band, 2.0)
        pts.append((r, t))
    return pts


def suite_fields_rest(cfg: ScenarioConfig) -> list:
    rng = _rng(cfg, "fields-rest")
    out = []
    ff = _ff(cfg)
    sigma = ff.sigma
    y = np.asarray(cfg.particle.y0, dtype=float)
    p0 = fl.ParticleSpec(position=y)
    quad = QuadratureSpec()
    scale = cfg.run.tolerance_scale

    started = time.time()
    n = cfg.probes.rest_points
    worst = 0.0
    for (r, t) in _rest_probe_points(cfg, rng, n):
        direction = rng.normal(size=3)
        x = y + r * direction / np.linalg.norm(direction)
        closed = fl.interior_potential(x, t, p0, fl.EvalMethod.CLOSED_REST, ff)[0]
        kq = fl.interior_potential(x, t, p0, fl.EvalMethod.K_QUADRATURE, ff, quad)[0]
        worst = max(worst, abs(closed - kq) / max(abs(closed), 1e-10))
    elapsed = time.time() - started
    tol = 1e-4 * scale
    out.append(check("fields.rest-closed-vs-kquad", "fields",
                     f"closed interior kernel against momentum quadrature on {n} off-shell points",
                     worst < tol, expected=0.0, actual=worst, tolerance=tol,
                     provenance="quadrature", inputs={"points": n, "seconds": elapsed}))

    # decomposition and localization grids (shell included for the identity)
    r_eff = ff.effective_radius(cfg.form_factor.support_epsilon)
    spec = RegionSpec(y, r_eff, 0.02)
    grid_r = np.linspace(0.05, 4.0, 36)
    times = cfg.probes.grid_times
    dec_worst = 0.0
    comp_worst = 0.0
    gi_worst = 0.0
    gs_worst = 0.0
    margin = cfg.probes.interior_margin_sigmas * sigma
    for t in times:
        for r in grid_r:
            x = y + np.array([r, 0.0, 0.0])
            F = fl.RestInteriorField(ff, y).potential(x, t)[0]
            V = fl.smeared_coulomb(x, y, ff)
            G = fl.exterior_potential(x, t, p0, ff)[0]
            C = fl.coulomb_compensator(x, t, y, ff)[0]
            dec_worst = max(dec_worst, abs(F - V - G))
            comp_worst = max(comp_worst, abs(C + G))
            region = spec.classify(x, t)
            if region is Region.INTERIOR and (abs(t) - r) > margin:
                gi_worst = max(gi_worst, abs(G))
            if region is Region.SPACELIKE and (r - abs(t)) > margin:
                gs_worst = max(gs_worst, abs(G + V))
    out.append(check("fields.decomposition", "fields",
                     "interior minus smeared Coulomb equals exterior, shell included",
                     dec_worst < 1e-8 * scale, expected=0.0, actual=dec_worst,
                     tolerance=1e-8 * scale, provenance="closed-form"))
    out.append(check("fields.compensator-sign", "fields",
                     "Coulomb compensator is the sign-reversed exterior field",
                     comp_worst < 1e-8 * scale, expected=0.0, actual=comp_worst,
                     tolerance=1e-8 * scale, provenance="closed-form"))
    out.append(check("fields.exterior-interior-vanishing", "fields",
                     "exterior field vanishes at interior points with margin",
                     gi_worst < 1e-10 * scale, expected=0.0, actual=gi_worst,
                     tolerance=1e-10 * scale, provenance="closed-form"))
    out.append(check("fields.exterior-spacelike-coulomb", "fields",
                     "exterior field equals minus the smeared Coulomb potential at "
                     "spacelike points", gs_worst < 1e-8 * scale, expected=0.0,
                     actual=gs_worst, tolerance=1e-8 * scale, provenance="closed-form"))

    # compensator initial data and rest specialization of the moving kernel
    x = y + np.array([0.8, 0.3, -0.2])
    C0 = fl.coulomb_compensator(x, 0.0, y, ff)
    out.append(check("fields.compensator-initial-data", "fields",
                     "compensator at t = 0: smeared Coulomb in the time slot, zero space part",
                     abs(C0[0] - fl.smeared_coulomb(x, y, ff)) < 1e-14
                     and np.all(C0[1:] == 0.0), provenance="closed-form"))
    clw = fl.lw_compensator(x, 0.9, np.zeros(3), y, ff)
    out.append(check("fields.lw-rest-specialization", "fields",
                     "zero-velocity compensator with asymptotics label reduces to Coulomb",
                     np.allclose(clw, fl.coulomb_compensator(x, 0.9, y, ff), atol=1e-14),
                     provenance="closed-form"))

    # point-charge value of the interior kernel
    ff_fine = GaussianFormFactor(0.05)
    val = fl.interior_potential(y + np.array([0.5, 0, 0]), 1.0, p0,
                                fl.EvalMethod.CLOSED_REST, ff_fine)[0]
    out.append(check("fields.interior-point-value", "fields",
                     "interior kernel at r = 0.5, t = 1 equals 1/(4 pi 0.5) for a narrow source",
                     abs(val - 1.0 / (2.0 * np.pi)) < 1e-4,
                     expected=1.0 / (2.0 * np.pi), actual=val, tolerance=1e-4,
                     provenance="closed-form"))
    out.append(check("fields.interior-zero-time", "fields", "interior kernel vanishes at t = 0",
                     fl.RestInteriorField(ff, y).potential(x, 0.0)[0] == 0.0))
    spatial = [fl.interior_potential(x, 1.3, p0, fl.EvalMethod.CLOSED_REST, ff)[i]
               for i in (1, 2, 3)]
    out.append(check("fields.interior-spatial-components", "fields",
                     "rest kernel has no spatial components", all(s == 0.0 for s in spatial)))

    # static sum: time derivative of interior + compensator vanishes
    dt_worst = 0.0
    total = fl.SumField((fl.RestInteriorField(ff, y), fl.CoulombCompensatorField(ff, y)),
                        (1.0, 1.0))
    for t in (0.6, 1.4):
        for r in (0.3, 0.9, 1.8):
            xr = y + np.array([r, 0, 0])
            d = fl._richardson_first(lambda s: total.potential(xr, s), t, fl.DiffSpec())[0]
            dt_worst = max(dt_worst, abs(d))
    out.append(check("fields.static-sum", "fields",
                     "time derivative of interior plus compensator vanishes (static total)",
                     dt_worst < 1e-8 * scale, expected=0.0, actual=dt_worst,
                     tolerance=1e-8 * scale, provenance="quadrature"))

    # divergence compensation by two independent routes
    div_worst = 0.0
    for t in (0.7, 1.1):
        for r in (0.5, abs(t), 1.9):
            xr = y + np.array([r, 0, 0])
            d_f = fl.divergence_kquad(xr, t, y, ff, quad)
            d_c = fl.CoulombCompensatorField(ff, y).divergence(xr, t, method="analytic")
            div_worst = max(div_worst, abs(d_f + d_c))
    out.append(check("fields.divergence-compensation", "fields",
                     "compensator divergence cancels the shift divergence (quadrature route)",
                     div_worst < 1e-8 * scale, expected=0.0, actual=div_worst,
                     tolerance=1e-8 * scale, provenance="quadrature"))

    # shell distribution: divergence ratio and support
    ratios = []
    for _ in range(20):
        t = rng.uniform(0.5, 2.0)
        r = t + rng.uniform(-4.0, 4.0) * sigma
        if r <= 0.05:
            continue
        xr = y + np.array([r, 0, 0])
        pj = fl.smeared_pauli_jordan(xr, t, y, ff)
        if abs(pj) < 1e-6:
            continue
        dq = fl.divergence_kquad(xr, t, y, ff, quad)
        ratios.append(dq / pj)
    ratios = np.array(ratios)
    out.append(check("fields.divergence-shell-ratio", "fields",
                     "shift divergence over smeared shell distribution is the constant 1",
                     np.max(np.abs(ratios - 1.0)) < 1e-8 * scale,
                     expected=1.0, actual=float(np.mean(ratios)),
                     tolerance=1e-8 * scale, provenance="quadrature",
                     inputs={"points": len(ratios)}))
    pj_t0 = fl.smeared_pauli_jordan(y + np.array([1.0, 0, 0]), 0.0, y, ff)
    sup_worst = 0.0
    for t in (0.8, 1.6):
        for r in np.linspace(0.05, 3.0, 40):
            if abs(r - abs(t)) > r_eff + 0.02:
                sup_worst = max(sup_worst, abs(fl.smeared_pauli_jordan(y + np.array([r, 0, 0]),
                                                                        t, y, ff)))
    out.append(check("fields.shell-support", "fields",
                     "smeared shell distribution odd in t and cone-shell supported",
                     pj_t0 == 0.0 and sup_worst < 1e-10 * scale,
                     expected=0.0, actual=sup_worst, tolerance=1e-10 * scale))

    # mode-space source amplitude
    k = np.array([0.4, -0.7, 1.1])
    f0 = fl.mode_source_amplitude(k, 0.0, p0, ff)
    m = np.linalg.norm(k)
    fd = fl.mode_source_amplitude(k, 0.8, p0, ff)
    expected_f0 = float(ff.rho_tilde(m)) / np.sqrt(2.0 * m) * (np.exp(1j * m * 0.8) - 1.0) / m \
        * np.exp(-1j * k @ y)
    growth = abs(fl.mode_source_amplitude(k, 2e-4, p0, ff)[0]) \
        / abs(fl.mode_source_amplitude(k, 1e-4, p0, ff)[0])
    out.append(check("fields.mode-source", "fields",
                     "driven-mode amplitude: zero at t = 0, explicit rest value, linear growth",
                     np.all(f0 == 0.0) and abs(fd[0] - expected_f0) < 1e-14
                     and np.all(fd[1:] == 0.0) and abs(growth - 2.0) < 1e-3,
                     actual={"growth_ratio": growth}, provenance="closed-form"))

    # smeared Coulomb values
    v_far = fl.smeared_coulomb(y + np.array([3.0, 0, 0]), y, ff)
    v_origin = fl.smeared_coulomb(y, y, ff)
    expected_origin = np.sqrt(2.0 / np.pi) / (4.0 * np.pi * sigma)
    narrow = GaussianFormFactor(1e-5)
    v_pt = fl.smeared_coulomb(y + np.array([0.7, 0, 0]), y, narrow)
    out.append(check("fields.smeared-coulomb", "fields",
                     "far field, origin value and point-charge limit of the smeared Coulomb",
                     abs(v_far - 1.0 / (4.0 * np.pi * 3.0)) < 1e-12
                     and abs(v_origin - expected_origin) < 1e-12
                     and abs(v_pt - 1.0 / (4.0 * np.pi * 0.7)) < 1e-12,
                     provenance="closed-form"))

    # field strength: antisymmetry, interior Coulomb field, time independence
    diff = fl.DiffSpec(step=4e-3)
    xf = y + np.array([1.1, 0.4, 0.2])
    H = fl.field_strength(fl.RestInteriorField(ff, y), xf, 3.0, diff)
    anti = np.max(np.abs(H + H.T))
    r = np.linalg.norm(xf - y)
    grad_oracle = float(ff.erf_scaled_deriv(r) / (4.0 * np.pi * r)
                        - ff.erf_scaled(r) / (4.0 * np.pi * r**2))
    radial = (xf - y) / r
    elec = np.array([H[0, i + 1] for i in range(3)])
    H2 = fl.field_strength(fl.RestInteriorField(ff, y), xf, 3.6, diff)
    out.append(check("fields.field-strength-interior", "fields",
                     "antisymmetry, Coulomb gradient at deep interior, static in time",
                     anti == 0.0 and np.max(np.abs(elec - grad_oracle * radial)) < 1e-7
                     and np.max(np.abs(H - H2)) < 1e-8,
                     actual={"electric_radial": float(elec @ radial),
                             "oracle": grad_oracle}, tolerance=1e-7,
                     provenance="quadrature"))
    return out


# ---------------------------------------------------------------------------
# boosted field suite
# ---------------------------------------------------------------------------

def suite_fields_boosted(cfg: ScenarioConfig) -> list:
    rng = _rng(cfg, "fields-boosted")
    out = []
    ff = _ff_boost(cfg)
    y = np.zeros(3)
    quad = QuadratureSpec(theta_nodes=cfg.quadrature.theta_nodes,
                          phi_nodes=cfg.quadrature.phi_nodes)
    scale = cfg.run.tolerance_scale
    tol = 1e-4 * scale
    started = time.time()

    for speed in cfg.probes.boost_magnitudes:
        u = np.array([0.0, 0.0, speed])
        p = fl.ParticleSpec(position=y, velocity_out=u)
        worst = 0.0
        npts = cfg.probes.boosted_points
        count = 0
        while count < npts:
            t = rng.uniform(0.4, 1.6)
            x = rng.uniform(-1.4, 1.4, 3)
            d = np.linalg.norm(x - u * t)
            if d < 8.0 * ff.sigma:
                continue  # keep clear of the moving source core
            closed = fl.interior_potential(x, t, p, fl.EvalMethod.CLOSED_BOOSTED, ff, quad)
            kq = fl.interior_potential(x, t, p, fl.EvalMethod.K_QUADRATURE, ff, quad)
            ref = max(float(np.max(np.abs(closed))), 1e-8)
            worst = max(worst, float(np.max(np.abs(closed - kq))) / ref)
            count += 1
        out.append(check(f"fields.boosted-cross-route-{speed}", "fields",
                         f"direction-resolved kernel against momentum quadrature at |v| = {speed}",
                         worst < tol, expected=0.0, actual=worst, tolerance=tol,
                         provenance="quadrature", inputs={"points": npts}))

    # rest specialization of the moving-kernel machinery
    p_rest = fl.ParticleSpec(position=y)
    xr = np.array([0.8, 0.2, -0.5])
    closed_rest = fl.interior_potential(xr, 1.1, p_rest, fl.EvalMethod.CLOSED_REST, ff)
    boosted0 = fl.interior_potential(xr, 1.1, p_rest, fl.EvalMethod.CLOSED_BOOSTED, ff, quad)
    out.append(check("fields.boosted-rest-limit", "fields",
                     "direction-resolved kernel at zero velocity equals the closed rest form",
                     float(np.max(np.abs(closed_rest - boosted0))) < 1e-10 * scale,
                     expected=float(closed_rest[0]), actual=float(boosted0[0]),
                     tolerance=1e-10 * scale, provenance="quadrature"))

    # exterior relation: lw compensator is the sign-reversed boosted exterior
    c = np.array([0.4, 0.0, 0.2])
    ext = fl.BoostedExteriorField(ff, y, c, quad)
    comp = fl.LWCompensatorField(ff, y, c, quad)
    worst = 0.0
    for _ in range(6):
        x = rng.uniform(-1.5, 1.5, 3)
        t = rng.uniform(0.3, 1.4)
        worst = max(worst, float(np.max(np.abs(ext.potential(x, t) + comp.potential(x, t)))))
    out.append(check("fields.boosted-compensator-sign", "fields",
                     "moving compensator is the sign-reversed exterior kernel",
                     worst < 1e-13, expected=0.0, actual=worst, tolerance=1e-13))

    clw0 = fl.LWCompensatorField(ff, y, np.array([1e-16, 0, 0]), quad)
    ccoul = fl.CoulombCompensatorField(ff, y)
    worst = 0.0
    for _ in range(4):
        x = rng.uniform(-1.2, 1.2, 3)
        t = rng.uniform(0.2, 1.2)
        worst = max(worst, abs(clw0.potential(x, t)[0] - ccoul.potential(x, t)[0]))
    out.append(check("fields.lw-angular-rest-route", "fields",
                     "angular quadrature route at negligible velocity matches the closed "
                     "Coulomb compensator", worst < 1e-9 * scale,
                     expected=0.0, actual=worst, tolerance=1e-9 * scale,
                     provenance="quadrature"))
    elapsed = time.time() - started
    out.append(check("fields.boosted-timing", "fields", "boosted cross-checks within budget",
                     elapsed < 120.0, actual=elapsed, tolerance=120.0))
    return out


# ---------------------------------------------------------------------------
# Fock-algebra suite
# ---------------------------------------------------------------------------

def suite_fock(cfg: ScenarioConfig) -> list:
    rng = _rng(cfg, "fock")
    out = []
    started = time.time()
    modes = _modes(cfg, measure="raw")
    n_modes = len(modes)

    ccr_ok = True
    for j in (0, n_modes // 2):
        for mu in range(4):
            for nu in range(4):
                a = fk.ModeOperator({((), ((j, mu),)): 1.0})
                adag = fk.ModeOperator({(((j, nu),), ()): 1.0})
                comm = fk.commutator(a, adag, modes)
                expected = -METRIC[mu, nu]
                val = comm.terms.get(((), ()), 0.0)
                ccr_ok &= (abs(val - expected) == 0.0
                           and all(k == ((), ()) for k in comm.terms))
    out.append(check("fock.ccr", "fock",
                     "mode commutators reproduce -g^{mu nu} with unit measure exactly",
                     ccr_ok, provenance="symbolic"))

    vac = fk.FockVector.vacuum()
    scalar = fk.ModeOperator({(((0, 0),), ()): 1.0}).apply(vac, modes)
    pair = fk.ModeOperator({(((0, 1), (1, 2)), ()): 1.0}).apply(vac, modes)
    out.append(check("fock.norms", "fock",
                     "vacuum norm 1, scalar-mode norm -1, transverse pair norm +1",
                     fk.wick_inner_product(vac, vac, modes) == 1.0
                     and fk.wick_inner_product(scalar, scalar, modes) == -1.0
                     and fk.wick_inner_product(pair, pair, modes) == 1.0,
                     provenance="symbolic"))

    worst = 0.0
    for _ in range(1000):
        u = _random_vector(rng, n_modes)
        v = _random_vector(rng, n_modes)
        worst = max(worst, abs(fk.wick_inner_product(u, v, modes)
                               - np.conj(fk.wick_inner_product(v, u, modes))))
    out.append(check("fock.hermiticity", "fock",
                     "inner product hermitian on 10^3 random vector pairs",
                     worst < 1e-12, expected=0.0, actual=worst, tolerance=1e-12))

    f = rng.normal(size=n_modes) + 1j * rng.normal(size=n_modes)
    g = rng.normal(size=n_modes) + 1j * rng.normal(size=n_modes)
    comm_ok = True
    for (mu, nu) in ((0, 1), (0, 3), (1, 2), (2, 3)):
        F0 = fk.smear_free_field("F0", g, modes, (mu, nu))
        B0 = fk.smear_free_field("B0", f, modes)
        comm_ok &= fk.commutator(F0, B0, modes).is_zero()
    A1 = fk.smear_free_field("A0", f, modes, (1,))
    comm_ok &= fk.commutator(A1, A1, modes).is_zero()
    out.append(check("fock.fieldstrength-gauge-commutant", "fock",
                     "field-strength smears commute with the gauge generator, exactly",
                     comm_ok, provenance="symbolic"))

    bminus_ok = True
    F0 = fk.smear_free_field("F0", g, modes, (0, 1))
    word = F0.apply(vac, modes)
    for j in range(n_modes):
        packet = {j: 1.0}
        bm = fk.smear_free_field("B0_minus", packet, modes)
        bminus_ok &= fk.commutator(bm, F0, modes).is_zero()
        bminus_ok &= bm.apply(word, modes, zero_tol=0.0).coefficient_norm() < 1e-12
    out.append(check("fock.onshell-transversality", "fock",
                     "annihilation part of the gauge generator passes through "
                     "field-strength words for every mode", bminus_ok, provenance="symbolic"))

    gb_vac = fk.gb_condition_check(vac, modes)
    gb_word = fk.gb_condition_check(word, modes)
    outside = fk.ModeOperator({(((0, 0),), ()): 1.0}).apply(vac, modes)
    gb_out = fk.gb_condition_check(outside, modes)
    out.append(check("fock.subsidiary-condition", "fock",
                     "subsidiary residual zero on the positive subspace, nonzero outside",
                     gb_vac == 0.0 and gb_word < 1e-10 and gb_out > 1e-3,
                     actual={"vacuum": gb_vac, "word": gb_word, "outside": gb_out},
                     provenance="symbolic"))

    # Gram positivity, degree up to 4 over the full mode set
    family = []
    for (mu, nu) in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
        packet = rng.normal(size=n_modes) + 1j * rng.normal(size=n_modes)
        family.append(fk.smear_free_field("F0", packet, modes, (mu, nu)))
    for (j1, j2) in ((0, 1), (2, 5), (4, 7)):
        p1 = {j1: 1.0}
        p2 = {j2: 0.7 - 0.2j}
        w1 = fk.smear_free_field("F0", p1, modes, (0, 1))
        w2 = fk.smear_free_field("F0", p2, modes, (0, 2))
        family.append(fk.multiply(w1, w2, modes))
    w3 = fk.multiply(fk.smear_free_field("F0", {1: 1.0}, modes, (0, 3)),
                     fk.smear_free_field("F0", {3: 1.0}, modes, (1, 2)), modes)
    w4 = fk.multiply(w3, fk.multiply(fk.smear_free_field("F0", {5: 0.5}, modes, (0, 1)),
                                     fk.smear_free_field("F0", {6: 1.2}, modes, (2, 3)),
                                     modes), modes)
    family.append(w4)  # degree-4 word
    gram, min_eig = fk.observable_gram(family, modes)
    out.append(check("fock.gram-positivity", "fock",
                     f"field-strength family Gram over {n_modes} modes is positive "
                     "semidefinite up to degree 4", min_eig >= -1e-10,
                     expected=0.0, actual=min_eig, tolerance=1e-10,
                     inputs={"family": len(family), "modes": n_modes}))

    scalar_fam = [fk.smear_free_field("A0", np.eye(n_modes)[0], modes, (0,))]
    _, min_scalar = fk.observable_gram(scalar_fam, modes)
    empty_gram, empty_eig = fk.observable_gram([], modes)
    out.append(check("fock.scalar-negative-norm", "fock",
                     "scalar-potential family carries a negative Gram eigenvalue; empty "
                     "family reports the +inf sentinel",
                     min_scalar < -0.5 and empty_eig == np.inf and empty_gram.shape == (0, 0),
                     actual=min_scalar))

    worst = 0.0
    for _ in range(25):
        A, B, C = (_random_operator(rng, n_modes) for _ in range(3))
        j1 = fk.commutator(A, fk.commutator(B, C, modes), modes)
        j2 = fk.commutator(B, fk.commutator(C, A, modes), modes)
        j3 = fk.commutator(C, fk.commutator(A, B, modes), modes)
        total = j1.add_scaled(j2, 1.0).add_scaled(j3, 1.0).cleaned(0.0)
        worst = max(worst, max((abs(c) for c in total.terms.values()), default=0.0))
    out.append(check("fock.jacobi", "fock", "Jacobi identity on random degree-2 triples",
                     worst < 1e-10, expected=0.0, actual=worst, tolerance=1e-10))

    elapsed = time.time() - started
    out.append(check("fock.timing", "fock", "algebra suite within 60 s budget",
                     elapsed < 60.0, actual=elapsed, tolerance=60.0))
    return out


def _random_vector(rng, n_modes) -> fk.FockVector:
    terms = {}
    for _ in range(4):
        deg = int(rng.integers(0, 3))
        mon = tuple(sorted((int(rng.integers(0, n_modes)), int(rng.integers(0, 4)))
                           for _ in range(deg)))
        terms[mon] = complex(rng.normal(), rng.normal())
    return fk.FockVector(terms)


def _random_operator(rng, n_modes) -> fk.ModeOperator:
    terms = {}
    for _ in range(3):
        nc, na = int(rng.integers(0, 2)), int(rng.integers(0, 2))
        cre = tuple(sorted((int(rng.integers(0, n_modes)), int(rng.integers(0, 4)))
                           for _ in range(nc)))
        ann = tuple(sorted((int(rng.integers(0, n_modes)), int(rng.integers(0, 4)))
                           for _ in range(na)))
        terms[(cre, ann)] = complex(rng.normal(), rng.normal())
    return fk.ModeOperator(terms)


# ---------------------------------------------------------------------------
# state suite: Gauss law, subsidiary condition, positivity, agreement
# ---------------------------------------------------------------------------

def suite_states(cfg: ScenarioConfig) -> list:
    rng = _rng(cfg, "states")
    out = []
    started = time.time()
    ff = _ff(cfg)
    sigma = ff.sigma
    modes = _modes(cfg)
    p = _particle(cfg)
    y = p.position
    gupta = stt.make_state("GUPTA", p, ff, modes)
    coulomb = stt.make_state("COULOMB", p, ff, modes)
    scale = cfg.run.tolerance_scale

    # one-point contracts
    x = y + np.array([0.4, 0.1, -0.2])
    t = 1.5
    vA, _ = stt.expect(gupta, [stt.FieldFactor("A", (0,), x, t)])
    F = fl.RestInteriorField(ff, y).potential(x, t)[0]
    far = y + np.array([5.0, 0, 0])
    vfar, _ = stt.expect(gupta, [stt.FieldFactor("A", (0,), far, 1.0)])
    vout, _ = stt.expect(gupta, [stt.FieldFactor("A_out", (0,), y + np.array([3.0, 0, 0]), 0.5)])
    expected_out = -p.charge * float(ff.coulomb_potential(3.0))
    out.append(check("states.one-point", "states",
                     "interacting one-point equals e times the interior kernel; spacelike "
                     "one-points vanish; asymptotic one-point equals minus e times Coulomb",
                     abs(vA - p.charge * F) < 1e-14 and abs(vfar) < 1e-12
                     and abs(vout - expected_out) < 1e-12,
                     actual={"interacting": vA.real, "asymptotic": vout.real},
                     provenance="closed-form"))

    # two-point free part against the direct mode-sum oracle
    f1 = stt.FieldFactor("F", (0, 1), x, 0.7)
    f2 = stt.FieldFactor("F", (0, 2), y + np.array([-0.3, 0.5, 0.1]), 0.9)
    v12, _ = stt.expect(gupta, [f1, f2])
    op1 = stt._factor_operator(f1, modes)
    op2 = stt._factor_operator(f2, modes)
    vec2 = op2.apply(fk.FockVector.vacuum(), modes)
    vec1 = op1.adjoint().apply(fk.FockVector.vacuum(), modes)
    wick = fk.wick_inner_product(vec1, vec2, modes)
    shift1, _ = stt.expect(gupta, [f1])
    shift2, _ = stt.expect(gupta, [f2])
    out.append(check("states.wick-oracle", "states",
                     "product expectation equals mode-sum contraction plus shift product",
                     abs(v12 - (wick + shift1 * shift2)) < 1e-12,
                     expected=complex(wick + shift1 * shift2), actual=complex(v12),
                     tolerance=1e-12, provenance="symbolic"))

    # Gauss deviation against the independent shell-gradient oracle
    n_dev = cfg.probes.deviation_points
    worst = 0.0
    dev_scale = 0.0
    for _ in range(n_dev):
        t = rng.uniform(0.5, 2.0)
        r = t + rng.uniform(-5.0, 5.0) * sigma
        r = max(r, 0.15)
        nu = int(rng.integers(0, 4))
        direction = rng.normal(size=3)
        xp = y + r * direction / np.linalg.norm(direction)
        dev = stt.gauss_deviation(gupta, nu, xp, t)
        oracle = stt.gauss_deviation_oracle(gupta, nu, xp, t)
        worst = max(worst, abs(dev - oracle))
        dev_scale = max(dev_scale, abs(oracle))
    tol = 1e-6 * max(dev_scale, 1.0) * scale
    out.append(check("states.gauss-deviation-oracle", "states",
                     f"finite-difference Gauss deviation matches the shell-gradient oracle "
                     f"on {n_dev} points", worst < tol, expected=0.0, actual=worst,
                     tolerance=tol, inputs={"scale": dev_scale}, provenance="quadrature"))

    worst_fut = 0.0
    margin = cfg.probes.interior_margin_sigmas * sigma
    for _ in range(10):
        t = rng.uniform(1.9, 2.8)
        r = rng.uniform(max(0.6, 8.0 * sigma), t - margin)
        xp = y + r * _random_dir(rng)
        for nu in range(4):
            worst_fut = max(worst_fut, abs(stt.gauss_deviation(gupta, nu, xp, t)))
    out.append(check("states.gauss-future-tangent", "states",
                     "Gauss law holds inside the future tangent region",
                     worst_fut < 1e-8 * scale, expected=0.0, actual=worst_fut,
                     tolerance=1e-8 * scale))

    worst_coul = 0.0
    for _ in range(10):
        t = rng.uniform(0.4, 2.2)
        r = rng.uniform(0.15, 2.4)
        if abs(r - t) < 4.0 * 4e-3:
            continue
        xp = y + r * _random_dir(rng)
        nu = int(rng.integers(0, 4))
        worst_coul = max(worst_coul, abs(stt.gauss_deviation(coulomb, nu, xp, t)))
    out.append(check("states.gauss-coulomb", "states",
                     "Coulomb-state deviation vanishes off shell at rest",
                     worst_coul < 1e-8 * scale, expected=0.0, actual=worst_coul,
                     tolerance=1e-8 * scale))

    # subsidiary residuals
    xs = y + np.array([0.9, 0.3, 0.1])
    ts = 1.0
    sub_g = stt.subsidiary_residual(gupta, xs, ts, method="kquad")
    pj = p.charge * fl.smeared_pauli_jordan(xs, ts, y, ff)
    sub_c = stt.subsidiary_residual(coulomb, xs, ts, method="analytic")
    sub_c_fd = stt.subsidiary_residual(coulomb, xs, ts, method="fd")
    out.append(check("states.subsidiary", "states",
                     "gauge-divergence expectation equals e times the shell distribution for "
                     "the bare state and cancels for the Coulomb state",
                     abs(sub_g - pj) < 1e-6 * scale and abs(sub_c) < 1e-12
                     and abs(sub_c_fd) < 1e-8 * scale,
                     actual={"bare": sub_g, "coulomb_fd": sub_c_fd},
                     expected={"bare": pj, "coulomb_fd": 0.0},
                     tolerance=1e-6 * scale, provenance="quadrature"))

    lw_residuals = {}
    for speed in cfg.probes.lw_speeds:
        if speed == 0.0:
            continue
        lw = stt.make_state("LW", p, ff, modes, lw_velocity=[speed, 0.0, 0.0])
        lw_residuals[speed] = stt.subsidiary_residual(lw, xs, ts, method="fd")
    out.append(check("states.subsidiary-lw-measured", "states",
                     "mismatched-velocity compensator residual measured (not asserted)",
                     True, actual={str(k): v for k, v in lw_residuals.items()},
                     provenance="quadrature",
                     detail="residuals are finite-difference level; the cancellation is exact "
                            "for the uniform two-branch current at any label velocity"))

    # LW states agree with the bare state on the future tangent
    agree_worst = 0.0
    probe_pts = [y + rr * _random_dir(rng) for rr in (0.05, 0.12, 0.2)]
    for speed in cfg.probes.lw_speeds:
        lw = stt.make_state("LW", p, ff, modes, lw_velocity=[speed, 0.0, 0.0])
        for xp in probe_pts:
            for factor in (stt.FieldFactor("A", (0,), xp, 3.0),
                           stt.FieldFactor("A", (2,), xp, 3.0),
                           stt.FieldFactor("A_out", (0,), xp, 3.0)):
                va, _ = stt.expect(lw, [factor])
                vb, _ = stt.expect(gupta, [factor])
                agree_worst = max(agree_worst, abs(va - vb))
    out.append(check("states.future-tangent-agreement", "states",
                     "LW states agree with the bare state on future-tangent observables "
                     "for every label velocity", agree_worst < 1e-10 * scale,
                     expected=0.0, actual=agree_worst, tolerance=1e-10 * scale))

    # automorphism consistency: field-strength difference equals the
    # compensator's field strength obtained by independent differentiation
    lw = stt.make_state("LW", p, ff, modes, lw_velocity=[0.3, 0.0, 0.0])
    comp = fl.LWCompensatorField(ff, y, np.array([0.3, 0.0, 0.0]), lw.quad)
    worst_auto = 0.0
    for xp, tp in ((y + np.array([1.6, 0.2, 0.0]), 0.6), (y + np.array([0.4, -0.9, 0.3]), 0.8)):
        for (mu, nu) in ((0, 1), (0, 2), (1, 2)):
            fac = stt.FieldFactor("F", (mu, nu), xp, tp)
            va, _ = stt.expect(lw, [fac])
            vb, _ = stt.expect(gupta, [fac])
            hc = p.charge * fl.field_strength(comp, xp, tp)[mu, nu]
            worst_auto = max(worst_auto, abs((va - vb) - hc))
    out.append(check("states.automorphism-consistency", "states",
                     "field-strength expectation difference equals e times the compensator "
                     "field strength", worst_auto < 1e-7 * scale,
                     expected=0.0, actual=worst_auto, tolerance=1e-7 * scale,
                     provenance="quadrature"))

    # positivity of the state on observable words
    words = []
    for xp, tp, idx in ((y + np.array([0.8, 0, 0]), 0.7, (0, 1)),
                        (y + np.array([-0.4, 0.6, 0]), 1.1, (0, 2)),
                        (y + np.array([0.2, 0.3, -0.7]), 0.9, (1, 2)),
                        (y + np.array([1.2, -0.1, 0.4]), 1.4, (0, 3))):
        words.append([stt.FieldFactor("F", idx, xp, tp, mollifier_width=0.05)])
    gram = np.zeros((len(words), len(words)), dtype=complex)
    for i, wi in enumerate(words):
        for l, wl in enumerate(words):
            val, _ = stt.expect(gupta, list(reversed(wi)) + wl)
            gram[i, l] = val
    gram = 0.5 * (gram + gram.conj().T)
    min_eig = float(np.linalg.eigvalsh(gram).min())
    out.append(check("states.positivity", "states",
                     "Gram of observable words under the charged state is positive "
                     "semidefinite", min_eig >= -1e-10 * scale,
                     expected=0.0, actual=min_eig, tolerance=1e-10 * scale))

    # multiplication eigenvalue of the gauge generator's annihilation part
    deep_ff = ff
    deep_modes = _deep_axis_modes(deep_ff)
    deep_state = stt.make_state("GUPTA", p, deep_ff, deep_modes)
    xe = y + np.array([0.0, 0.0, 0.95])
    te = 1.1
    lam_modes = stt.divergence_negative_frequency(deep_state, xe, te)
    lam_cont = stt.divergence_negative_frequency_continuum(deep_state, xe, te)
    packet = np.zeros(len(modes), dtype=complex)
    packet[3] = 1.0
    packet[min(11, len(modes) - 1)] = 0.3 - 0.2j
    word1 = fk.smear_free_field("F0", packet, modes, (0, 1))
    word2 = fk.multiply(word1, fk.smear_free_field("F0", {1: 1.0}, modes, (0, 2)), modes)
    quantum_res = stt.bminus_word_residual(gupta, xe, te, [word1, word2])
    out.append(check("states.gauge-eigenvalue", "states",
                     "annihilation part of the gauge generator acts as multiplication: "
                     "words pass through exactly, mode eigenvalue matches the continuum",
                     quantum_res < 1e-12 and abs(lam_modes - lam_cont) < 1e-8 * scale,
                     actual={"word_residual": quantum_res,
                             "eigenvalue_mismatch": abs(lam_modes - lam_cont)},
                     tolerance=1e-8 * scale, provenance="quadrature"))

    # wave-packet particle: shifts averaged over |psi|^2
    nodes = y[None, :] + np.array([[0.05, 0, 0], [-0.05, 0, 0], [0.0, 0.08, 0]])
    weights = np.array([0.4, 0.35, 0.25])
    packet_particle = fl.ParticleSpec(position=y, packet_nodes=nodes, packet_weights=weights)
    st_packet = stt.make_state("GUPTA", packet_particle, ff, modes)
    v_pack, _ = stt.expect(st_packet, [stt.FieldFactor("A", (0,), x, 1.5)])
    manual = sum(w * fl.RestInteriorField(ff, yn).potential(x, 1.5)[0]
                 for w, yn in zip(weights, nodes)) * packet_particle.charge
    out.append(check("states.packet-average", "states",
                     "wave-packet particle averages the shift over the position density",
                     abs(v_pack - manual) < 1e-14, expected=manual, actual=complex(v_pack).real,
                     tolerance=1e-14))

    elapsed = time.time() - started
    out.append(check("states.timing", "states", "state suite within 60 s budget",
                     elapsed < 60.0, actual=elapsed, tolerance=60.0))
    return out


def _random_dir(rng) -> np.ndarray:
    d = rng.normal(size=3)
    return d / np.linalg.norm(d)


# ---------------------------------------------------------------------------
# asymptotics suite
# ---------------------------------------------------------------------------

def _packet_family(cfg) -> list:
    fams = [WavePacket(1.0, 2.2), WavePacket(1.4, 2.8), WavePacket(0.8, 2.4),
            WavePacket(1.2, 3.0), WavePacket(1.0, 2.2).conjugated()]
    return fams


def suite_asymptotics(cfg: ScenarioConfig) -> list:
    out = []
    started = time.time()
    ff = _ff(cfg)
    y = np.asarray(cfg.particle.y0, dtype=float)
    F = fl.RestInteriorField(ff, y)
    G = fl.RestExteriorField(ff, y)
    schedule = LimitSchedule(cfg.limits.x0_schedule, cfg.limits.extrapolation_order,
                             cfg.limits.tolerance)
    scale_tol = 1e-4 * cfg.run.tolerance_scale

    worst = 0.0
    all_converged = True
    exponents = []
    for packet in _packet_family(cfg):
        for t in cfg.limits.times:
            limit, report = out_limit(F, packet, t, schedule)
            direct = kg_smear(G, packet, 0.0, t)
            ref = max(abs(direct[0]), 1e-10)
            worst = max(worst, abs(limit[0] - direct[0]) / ref)
            all_converged &= report.converged
            if report.decay_exponent is not None:
                exponents.append(report.decay_exponent)
    elapsed = time.time() - started
    out.append(check("asymptotics.out-limit", "asymptotics",
                     "late-time limit of the smeared interior kernel equals the direct "
                     "exterior smear for 5 packets x 5 times",
                     worst < scale_tol and all_converged,
                     expected=0.0, actual=worst, tolerance=scale_tol,
                     inputs={"converged": all_converged, "seconds": elapsed},
                     provenance="extrapolated"))
    out.append(check("asymptotics.decay-exponent", "asymptotics",
                     "fitted decay exponents recorded (negative expected, not asserted)",
                     True, actual={"min": min(exponents), "max": max(exponents)},
                     provenance="extrapolated"))

    packet = _packet_family(cfg)[0]
    lim0, rep0 = out_limit(fl.ZeroField(), packet, 1.0, schedule)
    out.append(check("asymptotics.zero-field", "asymptotics",
                     "zero field smears to zero with a trivially converged report",
                     abs(lim0[0]) == 0.0 and rep0.converged))

    S = fl.SumField((F, G), (0.7, -1.3))
    lhs = kg_smear(S, packet, 3.0, 0.5)
    rhs = 0.7 * kg_smear(F, packet, 3.0, 0.5) - 1.3 * kg_smear(G, packet, 3.0, 0.5)
    out.append(check("asymptotics.bilinearity", "asymptotics",
                     "smearing is linear in the field argument",
                     abs(lhs[0] - rhs[0]) < 1e-12, expected=0.0,
                     actual=abs(lhs[0] - rhs[0]), tolerance=1e-12))

    gs = kg_smear(G, packet, 5.0, 1.0)
    gc = kg_smear(G, packet.conjugated(), 5.0, 1.0)
    out.append(check("asymptotics.conjugate-packet", "asymptotics",
                     "conjugate-profile packet gives complex-conjugate smears",
                     abs(gc[0] - np.conj(gs[0])) == 0.0))

    # packet solves the free wave equation; its Klein-Gordon norm is conserved
    class _PacketField(fl.ShiftField):
        tag = "PACKET"

        def potential(self, x, t):
            r = float(np.linalg.norm(np.asarray(x) - packet.center))
            val = packet.spatial(np.array([r]), t)[0]
            return np.array([val.real, 0.0, 0.0, 0.0])

        @property
        def feature_scale(self):
            return None

    res = fl.box_residual(_PacketField(), packet.center + np.array([2.0, 0.5, 0.3]), 1.2,
                          fl.DiffSpec(step=2e-2))
    order_ok = 1.5 < res["order"] < 2.6 or res["norm_h2"] < 1e-9
    kg0 = packet.kg_norm(0.0)
    # conservation cross-check: position-space pairing at two times
    one = kg_smear(_FreePacketAsField(packet, ff), packet, 0.0, 0.0)
    two = kg_smear(_FreePacketAsField(packet, ff), packet, 7.0, 0.0)
    out.append(check("asymptotics.packet-free-evolution", "asymptotics",
                     "packet solves the wave equation (order-2 residual) and its conserved "
                     "pairing is time independent",
                     order_ok and abs(one[0] - two[0]) < 1e-6 * max(abs(kg0), 1.0),
                     actual={"box_order": res["order"],
                             "pairing_drift": abs(one[0] - two[0])},
                     provenance="quadrature"))

    try:
        WavePacket(2.0, 1.0)
        empty_ok = False
    except ValueError:
        empty_ok = True
    out.append(check("asymptotics.annulus-validation", "asymptotics",
                     "empty or inverted annulus rejected", empty_ok))

    # in-field analogue: negative-time limit built from the incoming velocity
    vin = np.array([0.0, 0.0, 0.3])
    p_in = fl.ParticleSpec(position=y, velocity_in=vin, velocity_out=np.zeros(3))
    Fb = fl.BranchInteriorField(ff, p_in)
    Gin = fl.BoostedExteriorField(ff, y, vin)
    sched_neg = LimitSchedule(tuple(-x for x in reversed(cfg.limits.x0_schedule)),
                              cfg.limits.extrapolation_order, cfg.limits.tolerance)
    lim_in, rep_in = out_limit(Fb, packet, -1.0, sched_neg, route="momentum")
    direct_in = kg_smear(Gin, packet, 0.0, -1.0, route="momentum")
    rel = float(np.max(np.abs(lim_in - direct_in))) / max(float(np.max(np.abs(direct_in))), 1e-10)
    out.append(check("asymptotics.in-field-branch", "asymptotics",
                     "negative-time limit reproduces the exterior kernel built from the "
                     "incoming velocity", rel < 5e-4 * cfg.run.tolerance_scale and rep_in.converged,
                     expected=0.0, actual=rel, tolerance=5e-4 * cfg.run.tolerance_scale,
                     provenance="extrapolated"))

    elapsed = time.time() - started
    out.append(check("asymptotics.timing", "asymptotics",
                     "asymptotics suite within 180 s budget", elapsed < 180.0,
                     actual=elapsed, tolerance=180.0))
    return out


class _FreePacketAsField(fl.ShiftField):
    """Adapter: a wave packet viewed as a radial classical field (time slot)."""

    tag = "PACKET_FIELD"
    has_mode_form = False

    def __init__(self, packet, ff):
        self._packet = packet
        self._ff = ff

    @property
    def feature_scale(self):
        return None

    def radial_scalar(self, r, s):
        return self._packet.spatial(np.asarray(r, dtype=float), s)

    def radial_scalar_dt(self, r, s):
        return self._packet.spatial(np.asarray(r, dtype=float), s, derivative=True)

    def potential(self, x, t):
        r = float(np.linalg.norm(np.asarray(x) - self._packet.center))
        val = self._packet.spatial(np.array([r]), t)[0]
        return np.array([val.real, 0.0, 0.0, 0.0])


# ---------------------------------------------------------------------------
# Dirac-factor / infrared-cutoff suite
# ---------------------------------------------------------------------------

def suite_dirac(cfg: ScenarioConfig) -> list:
    out = []
    started = time.time()
    ff = _ff(cfg)
    modes = _modes(cfg)
    p = _particle(cfg)
    y = p.position
    gupta = stt.make_state("GUPTA", p, ff, modes)
    base = fl.CoulombCompensatorField(ff, y)
    scale = cfg.run.tolerance_scale

    obs_point = y + np.array([0.3, 0.1, 0.0])
    factor = stt.FieldFactor("A", (0,), obs_point, 0.8)
    plain, _ = stt.expect(gupta, [factor])
    tiny, _ = stt.dirac_shift_expect(gupta, stt.DiracShiftSpec(1e-6, base, y), [factor])
    out.append(check("dirac.small-radius-limit", "states",
                     "vanishing cutoff radius reproduces the unshifted expectation",
                     abs(tiny - plain) < 1e-14, expected=complex(plain), actual=complex(tiny),
                     tolerance=1e-14))

    r_obs = float(np.linalg.norm(obs_point - y))
    vr1, _ = stt.dirac_shift_expect(gupta, stt.DiracShiftSpec(2.5 * r_obs + 0.5, base, y), [factor])
    vr2, _ = stt.dirac_shift_expect(gupta, stt.DiracShiftSpec(5.0 * r_obs + 1.0, base, y), [factor])
    out.append(check("dirac.exact-stabilization", "states",
                     "bounded observables stabilize exactly once the cutoff plateau covers "
                     "their support", abs(vr1 - vr2) < 1e-12 * scale,
                     expected=0.0, actual=abs(vr1 - vr2), tolerance=1e-12 * scale))

    fdA = stt.FieldFactor("dA", (), y + np.array([0.9, 0.3, 0.1]), 1.0)
    residuals = []
    for R in (0.8, 1.6, 3.2, 6.4):
        vd, _ = stt.dirac_shift_expect(gupta, stt.DiracShiftSpec(R, base, y), [fdA])
        residuals.append(abs(vd))
    out.append(check("dirac.gauge-divergence-removal", "states",
                     "gauge-divergence expectation under the shift automorphism vanishes "
                     "with growing cutoff radius at matched velocity",
                     residuals[-1] < 1e-10 * scale and residuals[-1] <= residuals[0],
                     actual=residuals, tolerance=1e-10 * scale,
                     provenance="closed-form"))

    val, r0, table, status = stt.ir_limit_expect(gupta, base, y, cfg.dirac.radii, [factor],
                                                 cfg.dirac.stabilization_tol)
    out.append(check("dirac.ir-limit-bounded", "states",
                     "bounded observable stabilizes within the radius schedule",
                     status == "STABILIZED" and r0 is not None and r0 <= 4.0 * max(r_obs, 1.0),
                     actual={"r0": r0, "status": status},
                     inputs={"radii": list(cfg.dirac.radii)}))

    probe2 = y + np.array([0.1, 0.2, 0.1])
    fac2 = stt.FieldFactor("A_out", (0,), probe2, 3.0)
    val2, r02, _, status2 = stt.ir_limit_expect(gupta, base, y, cfg.dirac.radii, [fac2],
                                                cfg.dirac.stabilization_tol)
    vg, _ = stt.expect(gupta, [fac2])
    out.append(check("dirac.ir-limit-future-tangent", "states",
                     "the infrared limit preserves expectations inside the future tangent",
                     status2 == "STABILIZED" and abs(val2 - vg) < 1e-10 * scale,
                     expected=complex(vg), actual=complex(val2), tolerance=1e-10 * scale))

    # unbounded-support observable: pairing against the raw Coulomb tail
    tail_values = []
    for R in cfg.dirac.radii:
        spec = stt.DiracShiftSpec(R, base, y)
        trunc = spec.truncated()

        def tail_integrand(r):
            vals = np.array([trunc.potential(y + np.array([ri, 0, 0]), 0.0)[0] for ri in r])
            return 4.0 * np.pi * r**2 * vals / (4.0 * np.pi * np.maximum(r, 1e-6))

        tail_values.append(float(composite_gl(tail_integrand, 0.1, 2.0 * R, 40)))
    diffs = [abs(b - a) for a, b in zip(tail_values, tail_values[1:])]
    out.append(check("dirac.ir-limit-unbounded-flagged", "states",
                     "an observable with a raw Coulomb tail never stabilizes (motivates the "
                     "cutoff profile)", all(d > 0.05 for d in diffs),
                     actual=tail_values, provenance="quadrature"))

    # positivity preserved under the shift automorphism
    words = [[stt.FieldFactor("F", (0, 1), y + np.array([0.6, 0, 0]), 0.5, 0.05)],
             [stt.FieldFactor("F", (0, 2), y + np.array([-0.3, 0.4, 0]), 0.7, 0.05)]]
    spec = stt.DiracShiftSpec(4.0, base, y)
    gram = np.zeros((2, 2), dtype=complex)
    for i, wi in enumerate(words):
        for l, wl in enumerate(words):
            combined = list(reversed(wi)) + wl
            gram[i, l], _ = stt.dirac_shift_expect(gupta, spec, combined)
    min_eig = float(np.linalg.eigvalsh(0.5 * (gram + gram.conj().T)).min())
    out.append(check("dirac.positivity-preserved", "states",
                     "shifted functionals stay positive on observable words",
                     min_eig >= -1e-10 * scale, expected=0.0, actual=min_eig,
                     tolerance=1e-10 * scale))

    elapsed = time.time() - started
    out.append(check("dirac.timing", "states", "Dirac-shift suite within 60 s budget",
                     elapsed < 60.0, actual=elapsed, tolerance=60.0))
    return out


# ---------------------------------------------------------------------------
# charge-class suite
# ---------------------------------------------------------------------------

def suite_charge_class(cfg: ScenarioConfig) -> list:
    rng = _rng(cfg, "charge-class")
    out = []
    started = time.time()
    ff = _ff(cfg)
    modes = _modes(cfg)
    p = _particle(cfg)
    y = p.position
    gupta = stt.make_state("GUPTA", p, ff, modes)
    vac = stt.vacuum_state(p, ff, modes)
    scale = cfg.run.tolerance_scale

    interior_pts = [y + rr * _random_dir(rng) for rr in (0.06, 0.1, 0.16, 0.2)]

    agree_worst = 0.0
    for speed in cfg.probes.lw_speeds:
        lw = stt.make_state("LW", p, ff, modes, lw_velocity=[speed, 0.0, 0.0])
        for xp in interior_pts:
            for fac in (stt.FieldFactor("A_out", (0,), xp, 3.0),
                        stt.FieldFactor("F", (0, 1), xp, 3.0)):
                va, _ = stt.expect(lw, [fac])
                vb, _ = stt.expect(gupta, [fac])
                agree_worst = max(agree_worst, abs(va - vb))
    out.append(check("charge-class.future-tangent-agreement", "states",
                     "LW and bare states agree on future-tangent observables for all label "
                     "velocities", agree_worst < 1e-10 * scale,
                     expected=0.0, actual=agree_worst, tolerance=1e-10 * scale))

    times_fut = [3.0] * len(interior_pts)
    rep_fut = stt.charge_class_probe(gupta, vac, "future-tangent", interior_pts, times_fut,
                                     tolerance=1e-8 * scale)
    rep_past = stt.charge_class_probe(gupta, vac, "past-tangent", interior_pts,
                                      [-3.0] * len(interior_pts), tolerance=1e-8 * scale)
    out.append(check("charge-class.bare-fock-tangents", "states",
                     "bare charged state is Fock on both lightcone tangents",
                     rep_fut.is_fock and rep_past.is_fock,
                     actual={"future_one_point": rep_fut.one_point_max,
                             "past_one_point": rep_past.one_point_max},
                     tolerance=1e-8 * scale))

    lw_ok = True
    lw_max = 0.0
    for speed in (0.3, 0.6):
        lw = stt.make_state("LW", p, ff, modes, lw_velocity=[0.0, 0.0, speed])
        for (region, tt) in (("future-tangent", 3.0), ("past-tangent", -3.0)):
            rep = stt.charge_class_probe(lw, vac, region, interior_pts,
                                         [tt] * len(interior_pts), tolerance=1e-8 * scale)
            lw_ok &= rep.is_fock
            lw_max = max(lw_max, rep.one_point_max)
    out.append(check("charge-class.lw-fock-tangents", "states",
                     "LW states are Fock on both lightcone tangents",
                     lw_ok, actual=lw_max, tolerance=1e-8 * scale))

    space_pts = [y + np.array([4.0, 0, 0]), y + np.array([0, 3.2, 0])]
    rep_sp = stt.charge_class_probe(gupta, vac, "spacelike", space_pts, [0.5, 0.4],
                                    tolerance=1e-8 * scale)
    expected_val = p.charge * float(ff.coulomb_potential(4.0))
    got = abs(rep_sp.records[0].value_a + expected_val)
    out.append(check("charge-class.spacelike-non-fock", "states",
                     "bare state is non-Fock on the spacelike region with the sign-reversed "
                     "Coulomb one-point value", (not rep_sp.is_fock) and got < 1e-8 * scale,
                     expected=-expected_val, actual=complex(rep_sp.records[0].value_a).real,
                     tolerance=1e-8 * scale))

    elapsed = time.time() - started
    out.append(check("charge-class.timing", "states",
                     "charge-class suite within 120 s budget", elapsed < 120.0,
                     actual=elapsed, tolerance=120.0))
    return out


# ---------------------------------------------------------------------------
# free-wave residual suite
# ---------------------------------------------------------------------------

def suite_wave_residual(cfg: ScenarioConfig) -> list:
    out = []
    started = time.time()
    ff = _ff(cfg)
    y = np.asarray(cfg.particle.y0, dtype=float)
    scale = cfg.run.tolerance_scale
    diff = fl.DiffSpec(step=6e-3)

    cc = fl.CoulombCompensatorField(ff, y)
    worst_ext = 0.0
    orders = []
    for (xp, tp) in ((y + np.array([2.4, 0.3, 0.0]), 0.8),
                     (y + np.array([0.4, 0.2, 0.1]), 2.4),
                     (y + np.array([-1.9, 0.8, 0.4]), 0.5)):
        res = fl.box_residual(cc, xp, tp, diff)
        worst_ext = max(worst_ext, float(np.max(np.abs(res["extrapolated"]))))
        if res["norm_h2"] > 1e-11:
            orders.append(res["order"])
    order_ok = all(1.6 < o < 2.4 for o in orders)
    out.append(check("wave.coulomb-compensator-free", "fields",
                     "d'Alembertian of the Coulomb compensator vanishes at order h^2 with "
                     "Richardson confirmation", worst_ext < 1e-6 * scale and order_ok,
                     expected=0.0, actual={"extrapolated": worst_ext, "orders": orders},
                     tolerance=1e-6 * scale, provenance="quadrature"))

    ffb = _ff_boost(cfg)
    quad = QuadratureSpec(theta_nodes=160, phi_nodes=96)
    clw = fl.LWCompensatorField(ffb, y, np.array([0.0, 0.0, 0.4]), quad)
    res = fl.box_residual(clw, y + np.array([2.0, 0.4, 0.3]), 0.7, fl.DiffSpec(step=2e-2))
    ratio = res["norm_h2"] / max(res["norm_h"], 1e-300)
    out.append(check("wave.lw-compensator-free", "fields",
                     "d'Alembertian of the moving compensator shrinks at second order",
                     res["norm_h2"] < 0.45 * res["norm_h"] and float(np.max(np.abs(res["extrapolated"]))) < 2e-4 * scale,
                     actual={"h": res["norm_h"], "h/2": res["norm_h2"], "ratio": ratio},
                     tolerance=2e-4 * scale, provenance="quadrature"))

    Fr = fl.RestInteriorField(ff, y)
    res_int = fl.box_residual(Fr, y + np.array([1.2, 0.3, 0.2]), 4.0, diff)
    source = float(ff.rho(np.linalg.norm(np.array([1.2, 0.3, 0.2]))))
    out.append(check("wave.interior-source", "fields",
                     "interior kernel satisfies the sourced wave equation; away from the "
                     "charge the source term is negligible",
                     float(np.max(np.abs(res_int["extrapolated"][0] - source))) < 1e-6 * scale,
                     expected=source, actual=float(res_int["extrapolated"][0]),
                     tolerance=1e-6 * scale, provenance="quadrature"))

    res_zero = fl.box_residual(fl.ZeroField(), y + np.array([1.0, 0, 0]), 1.0, diff)
    out.append(check("wave.zero-field", "fields", "zero field has exactly zero residual",
                     res_zero["norm_h"] == 0.0 and res_zero["norm_h2"] == 0.0))

    try:
        fl.box_residual(cc, y + np.array([1.0, 0, 0]), 1.0, diff, shell_clearance=1e-3)
        prox_ok = False
    except ValueError:
        prox_ok = True
    out.append(check("wave.proximity-guard", "fields",
                     "evaluation too close to the cone shell is rejected", prox_ok))

    elapsed = time.time() - started
    out.append(check("wave.timing", "fields", "wave-residual suite within 60 s budget",
                     elapsed < 60.0, actual=elapsed, tolerance=60.0))
    return out


# ---------------------------------------------------------------------------
# runner and scans
# ---------------------------------------------------------------------------

SUITES = {
    "kernel": suite_kernel,
    "chi": suite_chi,
    "fields-rest": suite_fields_rest,
    "fields-boosted": suite_fields_boosted,
    "fock": suite_fock,
    "states": suite_states,
    "asymptotics": suite_asymptotics,
    "dirac": suite_dirac,
    "charge-class": suite_charge_class,
    "wave-residual": suite_wave_residual,
}


def run_verify(cfg: ScenarioConfig, suites=None, jobs: int | None = None) -> Report:
    """Execute the verification suites and assemble the deterministic report."""
    from concurrent.futures import ThreadPoolExecutor
    from .config import config_echo

    names = [n for n in SUITE_ORDER if suites is None or n in suites]
    jobs = jobs if jobs is not None else cfg.run.jobs
    records = []
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(SUITES[n], cfg) for n in names]
            for fut in futures:
                records.extend(fut.result())
    else:
        for n in names:
            records.extend(SUITES[n](cfg))
    return Report("verify", records, config_echo(cfg))


def scan_field_profile(cfg: ScenarioConfig):
    """Radial profiles of the tagged fields with region tags and error data."""
    ff = _ff(cfg)
    y = np.asarray(cfg.particle.y0, dtype=float)
    p0 = fl.ParticleSpec(position=y)
    r_eff = ff.effective_radius(cfg.form_factor.support_epsilon)
    spec = RegionSpec(y, r_eff, 0.02)
    ray = np.asarray(cfg.scan.ray, dtype=float)
    ray = ray / np.linalg.norm(ray)
    t = cfg.scan.time
    rows = []
    for r in np.linspace(0.05, cfg.scan.r_max, cfg.scan.points):
        x = y + r * ray
        F = fl.RestInteriorField(ff, y).potential(x, t)[0]
        G = fl.exterior_potential(x, t, p0, ff)[0]
        C = fl.coulomb_compensator(x, t, y, ff)[0]
        V = fl.smeared_coulomb(x, y, ff)
        pj = fl.smeared_pauli_jordan(x, t, y, ff)
        rows.append([r, t, spec.classify(x, t).value, F, G, C, V, pj,
                     abs(F - V - G)])
    header = ["r", "t", "region", "interior", "exterior", "compensator",
              "coulomb", "shell_distribution", "decomposition_residual"]
    return header, rows


def scan_asymptotic_convergence(cfg: ScenarioConfig):
    """Smear values against the late-time coordinate with fitted decay."""
    ff = _ff(cfg)
    y = np.asarray(cfg.particle.y0, dtype=float)
    F = fl.RestInteriorField(ff, y)
    G = fl.RestExteriorField(ff, y)
    packet = _packet_family(cfg)[0]
    t = 1.0
    direct = kg_smear(G, packet, 0.0, t)[0]
    rows = []
    xs = cfg.limits.x0_schedule
    vals = []
    for x0 in xs:
        v = kg_smear(F, packet, x0, t)[0]
        vals.append(v)
        rows.append([x0, v.real, v.imag, abs(v - direct)])
    diffs = np.array([abs(v - direct) for v in vals])
    mask = diffs > 1e-14
    slope = float(np.polyfit(np.log(np.array(xs)[mask]), np.log(diffs[mask]), 1)[0]) \
        if np.count_nonzero(mask) >= 2 else float("nan")
    for row in rows:
        row.append(slope)
    header = ["x0", "smear_re", "smear_im", "distance_to_limit", "fitted_decay_exponent"]
    return header, rows


def scan_subsidiary_vs_sigma(cfg: ScenarioConfig):
    """Mismatched-compensator gauge-divergence residual as a function of the
    form-factor width (finite-difference route; measured, not asserted)."""
    modes_cache = {}
    rows = []
    c = np.array([cfg.scan.lw_speed, 0.0, 0.0])
    x = np.array([0.9, 0.3, 0.1])
    t = 1.0
    for sigma in cfg.scan.sigmas:
        ff = GaussianFormFactor(sigma)
        p = _particle(cfg)
        modes = modes_cache.setdefault(sigma, _modes(cfg))
        lw = stt.make_state("LW", p, ff, modes, lw_velocity=c)
        res_fd = stt.subsidiary_residual(lw, x, t, method="fd")
        res_matched = stt.subsidiary_residual(stt.make_state("COULOMB", p, ff, modes), x, t,
                                              method="analytic")
        rows.append([sigma, cfg.scan.lw_speed, res_fd, res_matched])
    header = ["sigma", "lw_speed", "mismatched_residual_fd", "matched_residual"]
    return header, rows


def scan_charge_class(cfg: ScenarioConfig):
    """One-point asymptotic data per region for the state catalog."""
    ff = _ff(cfg)
    modes = _modes(cfg)
    p = _particle(cfg)
    y = p.position
    states = {"GUPTA": stt.make_state("GUPTA", p, ff, modes),
              "COULOMB": stt.make_state("COULOMB", p, ff, modes),
              "LW(0.3)": stt.make_state("LW", p, ff, modes, lw_velocity=[0.3, 0, 0])}
    probes = [("future-tangent", y + np.array([0.1, 0.05, 0.0]), 3.0),
              ("past-tangent", y + np.array([0.1, 0.05, 0.0]), -3.0),
              ("spacelike", y + np.array([3.5, 0.0, 0.0]), 0.5)]
    rows = []
    for label, st in states.items():
        for region, xp, tp in probes:
            v, err = stt.expect(st, [stt.FieldFactor("A_out", (0,), xp, tp)])
            rows.append([label, region, xp[0], xp[1], xp[2], tp, v.real, v.imag, err])
    header = ["state", "region", "x", "y", "z", "t", "one_point_re", "one_point_im",
              "error_estimate"]
    return header, rows


SCANS = {
    "field-profile": scan_field_profile,
    "asymptotic-convergence": scan_asymptotic_convergence,
    "subsidiary-vs-sigma": scan_subsidiary_vs_sigma,
    "charge-class": scan_charge_class,
}
