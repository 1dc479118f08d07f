"""Scenario configuration: dataclass defaults plus a strict INI reader.

Sections mirror the library layout ([run], [form_factor], [particle],
[modes], [quadrature], [probes], [limits], [dirac], [scan]); unknown sections
or keys are hard errors with line diagnostics, as are domain violations such
as a non-positive form-factor width.  A fixed seed makes every report
byte-identical across runs.
"""

from __future__ import annotations

import configparser
import dataclasses
from dataclasses import dataclass, field, fields


class ConfigError(ValueError):
    """Configuration parse or validation failure (CLI exit code 2)."""


@dataclass(frozen=True)
class RunConfig:
    seed: int = 20260810
    out_dir: str = "gblab-out"
    tolerance_scale: float = 1.0
    jobs: int = 1


@dataclass(frozen=True)
class FormFactorConfig:
    sigma: float = 0.1
    boosted_sigma: float = 0.2
    support_epsilon: float = 1e-10


@dataclass(frozen=True)
class ParticleConfig:
    y0: tuple = (0.0, 0.0, 0.0)
    v_in: tuple = (0.0, 0.0, 0.0)
    v_out: tuple = (0.0, 0.0, 0.0)
    charge: float = 1.0


@dataclass(frozen=True)
class ModesConfig:
    radial_nodes: int = 4
    k_lo: float = 0.5
    k_hi: float = 3.0
    directions: int = 8
    degree_cap: int = 8


@dataclass(frozen=True)
class QuadratureConfig:
    radial_panels: int = 64
    radial_nodes: int = 16
    theta_nodes: int = 128
    phi_nodes: int = 64
    target_tol: float = 1e-9


@dataclass(frozen=True)
class ProbesConfig:
    chi_points: int = 100
    rest_points: int = 1000
    boosted_points: int = 24
    deviation_points: int = 50
    grid_times: tuple = (0.6, 1.0, 2.4)
    shell_exclusion_sigmas: float = 12.0
    interior_margin_sigmas: float = 10.0
    boost_magnitudes: tuple = (0.25, 0.5)
    lw_speeds: tuple = (0.0, 0.3, 0.6)


@dataclass(frozen=True)
class LimitsConfig:
    x0_schedule: tuple = (100.0, 150.0, 225.0, 340.0, 512.0)
    extrapolation_order: int = 2
    tolerance: float = 1e-4
    times: tuple = (0.0, 1.0, -1.0, 5.0, -5.0)


@dataclass(frozen=True)
class DiracConfig:
    radii: tuple = (2.0, 4.0, 8.0, 16.0)
    stabilization_tol: float = 1e-12


@dataclass(frozen=True)
class ScanConfig:
    kind: str = "field-profile"
    ray: tuple = (1.0, 0.0, 0.0)
    r_max: float = 4.0
    points: int = 80
    time: float = 1.0
    sigmas: tuple = (0.08, 0.1, 0.14, 0.2)
    lw_speed: float = 0.4


@dataclass(frozen=True)
class ScenarioConfig:
    run: RunConfig = field(default_factory=RunConfig)
    form_factor: FormFactorConfig = field(default_factory=FormFactorConfig)
    particle: ParticleConfig = field(default_factory=ParticleConfig)
    modes: ModesConfig = field(default_factory=ModesConfig)
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    probes: ProbesConfig = field(default_factory=ProbesConfig)
    limits: LimitsConfig = field(default_factory=LimitsConfig)
    dirac: DiracConfig = field(default_factory=DiracConfig)
    scan: ScanConfig = field(default_factory=ScanConfig)


def _coerce(raw: str, default_value, where: str):
    target = type(default_value)
    try:
        if target is bool:
            return raw.strip().lower() in ("1", "true", "yes", "on")
        if target is int:
            return int(raw)
        if target is float:
            return float(raw)
        if target is str:
            return raw.strip()
        if target is tuple:
            parts = raw.replace(",", " ").split()
            if default_value and isinstance(default_value[0], str):
                return tuple(parts)
            return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise ConfigError(f"cannot parse value for {where}: {raw!r} ({exc})") from None
    raise ConfigError(f"unsupported config type for {where}")


def _line_of(text: str, token: str) -> int | None:
    for i, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith(f"[{token}]") or stripped.lower().startswith(f"{token.lower()} ") \
                or stripped.lower().startswith(f"{token.lower()}="):
            return i
    return None


def load_config(path: str | None = None, text: str | None = None) -> ScenarioConfig:
    """Read a scenario configuration; None gives the defaults."""
    if path is None and text is None:
        return validate(ScenarioConfig())
    if text is None:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"config parse error: {exc}") from None

    section_types = {f.name: type(getattr(ScenarioConfig(), f.name)) for f in fields(ScenarioConfig)}
    sections = {}
    for section in parser.sections():
        if section not in section_types:
            line = _line_of(text, section)
            raise ConfigError(f"unknown config section [{section}]"
                              + (f" at line {line}" if line else ""))
        cls = section_types[section]
        defaults = cls()
        known = {f.name for f in fields(cls)}
        values = {}
        for key, raw in parser.items(section):
            if key not in known:
                line = _line_of(text, key)
                raise ConfigError(f"unknown key {key!r} in section [{section}]"
                                  + (f" at line {line}" if line else ""))
            values[key] = _coerce(raw, getattr(defaults, key), f"[{section}] {key}")
        sections[section] = dataclasses.replace(defaults, **values)
    return validate(dataclasses.replace(ScenarioConfig(), **sections))


def validate(cfg: ScenarioConfig) -> ScenarioConfig:
    """Domain checks beyond parsing; raises ConfigError."""
    if not cfg.form_factor.sigma > 0.0:
        raise ConfigError(f"form factor width must be positive, got sigma = {cfg.form_factor.sigma}")
    if not cfg.form_factor.boosted_sigma > 0.0:
        raise ConfigError("boosted_sigma must be positive")
    if not 0.0 < cfg.form_factor.support_epsilon < 1.0:
        raise ConfigError("support_epsilon must lie in (0, 1)")
    for name, v in (("v_in", cfg.particle.v_in), ("v_out", cfg.particle.v_out)):
        if sum(c * c for c in v) >= 1.0:
            raise ConfigError(f"particle {name} must satisfy |v| < 1")
    if any(abs(c) >= 1.0 for c in cfg.probes.lw_speeds):
        raise ConfigError("lw_speeds must satisfy |c| < 1")
    if any(not 0.0 < b < 1.0 for b in cfg.probes.boost_magnitudes):
        raise ConfigError("boost_magnitudes must lie in (0, 1)")
    if cfg.run.tolerance_scale <= 0.0:
        raise ConfigError("tolerance_scale must be positive")
    if cfg.run.jobs < 1:
        raise ConfigError("jobs must be >= 1")
    if not cfg.modes.k_lo > 0.0 or cfg.modes.k_hi <= cfg.modes.k_lo:
        raise ConfigError("modes require 0 < k_lo < k_hi")
    if len(cfg.limits.x0_schedule) < 3:
        raise ConfigError("x0_schedule needs at least 3 points")
    if abs(cfg.scan.lw_speed) >= 1.0:
        raise ConfigError("scan lw_speed must satisfy |c| < 1")
    return cfg


def config_echo(cfg: ScenarioConfig) -> dict:
    """Plain-dict echo of the configuration for report embedding."""
    return dataclasses.asdict(cfg)
