"""Single-particle quantum Carnot engine in a Poschl-Teller well."""

from .carnot_cycle import CycleResult, CycleSpec, build, efficiency, verify, work_quadrature
from .model import (
    LambdaSpec,
    PhysicalParams,
    energy_level,
    lambda_of,
    mu_of,
    pressure_exact,
    pressure_hf,
    pressure_literal,
    scale_energy,
)
from .processes import CycleGeometry, LegKind, LegSample, l2_of, l4_of, sample_leg
from .superposition import TwoLevelMix, cold_isotherm_mix, hot_isotherm_mix, mix_energy

__version__ = "0.1.0"
