"""Verification laboratory for covariant-gauge electrodynamics of a uniformly
moving smeared charge: indefinite-metric Fock algebra, closed-form shift-field
kernels with quadrature cross-checks, late-time asymptotic limits, and the
construction and probing of physical charged states."""

__version__ = "0.1.0"

from .formfactor import GaussianFormFactor
from .fields import (EvalMethod, ParticleSpec, DiffSpec, ShiftField, ZeroField,
                     RestInteriorField, RestExteriorField, CoulombCompensatorField,
                     BoostedInteriorField, BoostedExteriorField, LWCompensatorField,
                     BranchInteriorField, StaticCoulombField, SumField)
from .fock import ModeSet, FockVector, ModeOperator, product_mode_set
from .asymptotics import WavePacket, LimitSchedule, make_wave_packet
from .states import QuasiFreeState, FieldFactor, make_state, vacuum_state
from .config import ScenarioConfig, load_config
from .regions import Region, RegionSpec
from .quadrature import QuadratureSpec
