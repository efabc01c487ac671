"""Energy spectrum and wall pressure of a particle in a Poschl-Teller well.

The well of width ``L`` has levels

    E_n(L) = W(L) * (n**2 + lam * (2n + 1)),   W(L) = pi**2 hbar**2 / (2 m L**2)

where ``lam`` is the anharmonicity parameter (``lam = 0`` is the infinite
square well). The wall pressure is ``P_n = -dE_n/dL``; three routes are
offered:

* :func:`pressure_exact` - ``2 E_n / L``, exact when ``lam`` does not depend on L;
* :func:`pressure_hf` - numeric ``-dE_n/dL``, valid in every lambda mode;
* :func:`pressure_literal` - the literal form carrying a ``(1 - mu)`` factor on the
  lambda term, kept only as a comparator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Union

from .errors import ConfigError, DomainError, SingularityError, UnsupportedModeError
from .numerics import derivative

# CODATA 2018
HBAR_SI = 1.054571817e-34
ELECTRON_MASS_SI = 9.1093837015e-31


@dataclass(frozen=True)
class PhysicalParams:
    """Physical constants fixing the energy scale.

    ``units`` is a label: ``natural`` means hbar = m = 1, ``si`` means the
    widths are metres and energies come out in joules.
    """

    hbar: float = 1.0
    mass: float = 1.0
    units: Literal["natural", "si"] = "natural"

    def __post_init__(self):
        if self.units not in ("natural", "si"):
            raise DomainError(f"units must be 'natural' or 'si', got {self.units!r}")
        if not (self.hbar > 0 and math.isfinite(self.hbar)):
            raise DomainError(f"hbar must be positive, got {self.hbar!r}")
        if not (self.mass > 0 and math.isfinite(self.mass)):
            raise DomainError(f"mass must be positive, got {self.mass!r}")
        if self.units == "natural" and (self.hbar != 1.0 or self.mass != 1.0):
            raise DomainError("natural units fix hbar = mass = 1; use units='si' for other values")

    @classmethod
    def natural(cls) -> PhysicalParams:
        return cls()

    @classmethod
    def si(cls, hbar: float = HBAR_SI, mass: float = ELECTRON_MASS_SI) -> PhysicalParams:
        return cls(hbar=hbar, mass=mass, units="si")


NATURAL = PhysicalParams()


@dataclass(frozen=True)
class LambdaSpec:
    """How the anharmonicity parameter is obtained.

    ``frozen``
        constant ``value`` independent of L.
    ``free_particle``
        same as ``frozen(0)``.
    ``from_zeta``
        ``zeta(L) = value / L`` and ``lam(L) = sqrt((2 / (pi zeta))**2 + 1) - 1``.
        Experimental: the zeta(L) scaling is an assumption, and only
        :func:`pressure_hf` gives the true pressure in this mode.
    """

    mode: Literal["frozen", "free_particle", "from_zeta"] = "free_particle"
    value: float = 0.0

    def __post_init__(self):
        if self.mode == "frozen":
            if not (self.value >= 0 and math.isfinite(self.value)):
                raise DomainError(f"frozen lambda must be finite and >= 0, got {self.value!r}")
        elif self.mode == "free_particle":
            if self.value != 0.0:
                raise DomainError("free_particle mode carries no value")
        elif self.mode == "from_zeta":
            if not (self.value > 0 and math.isfinite(self.value)):
                raise DomainError(f"zeta constant c must be positive, got {self.value!r}")
        else:
            raise DomainError(f"unknown lambda mode {self.mode!r}")

    @classmethod
    def frozen(cls, lam: float) -> LambdaSpec:
        return cls("frozen", float(lam))

    @classmethod
    def free_particle(cls) -> LambdaSpec:
        return cls("free_particle", 0.0)

    @classmethod
    def from_zeta(cls, c: float) -> LambdaSpec:
        return cls("from_zeta", float(c))

    @property
    def is_constant(self) -> bool:
        return self.mode != "from_zeta"


LambdaLike = Union[LambdaSpec, float, int]


def as_lambda_spec(spec: LambdaLike) -> LambdaSpec:
    """Accept a bare number as shorthand for ``LambdaSpec.frozen(number)``."""
    if isinstance(spec, LambdaSpec):
        return spec
    if isinstance(spec, (int, float)) and not isinstance(spec, bool):
        return LambdaSpec.frozen(spec)
    raise TypeError(f"expected LambdaSpec or number, got {type(spec).__name__}")


def check_width(L: float, name: str = "L") -> float:
    if not (L > 0 and math.isfinite(L)):
        raise DomainError(f"{name} must be a positive finite width, got {L!r}")
    return float(L)


def check_level(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"quantum number n must be an integer >= 1, got {n!r}")
    return n


def scale_energy(L: float, params: PhysicalParams = NATURAL) -> float:
    """``W(L) = pi**2 hbar**2 / (2 m L**2)``."""
    L = check_width(L)
    return math.pi**2 * params.hbar**2 / (2.0 * params.mass * L * L)


def lambda_of(L: float, spec: LambdaLike) -> float:
    spec = as_lambda_spec(spec)
    if spec.mode == "frozen":
        return spec.value
    if spec.mode == "free_particle":
        return 0.0
    L = check_width(L)
    zeta = spec.value / L
    return math.sqrt((2.0 / (math.pi * zeta)) ** 2 + 1.0) - 1.0


def mu_of(lam: float) -> float:
    """``mu = 1 - (lam - 1) / (2 lam - 1)``; pole at ``lam = 1/2``."""
    denom = 2.0 * lam - 1.0
    if denom == 0.0:
        raise SingularityError("mu(lambda) has a pole at lambda = 1/2")
    return 1.0 - (lam - 1.0) / denom


def level_factor(n: int, lam: float) -> float:
    """Dimensionless bracket ``n**2 + lam (2n + 1)``; 1 + 3 lam for n=1, 4 + 5 lam for n=2."""
    return n * n + lam * (2 * n + 1)


def energy_level(n: int, L: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> float:
    n = check_level(n)
    return scale_energy(L, params) * level_factor(n, lambda_of(L, spec))


def pressure_literal(n: int, L: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> float:
    """Literal ``2W/L * [n**2 + 2 lam (n + 1/2) (1 - mu)]``.

    The ``(1 - mu)`` factor wipes out the lambda term at ``lam = 1``, so this
    disagrees with ``-dE/dL`` whenever ``lam != 0``. Not used by the cycle.
    """
    n = check_level(n)
    lam = lambda_of(L, spec)
    mu = mu_of(lam)
    return 2.0 * scale_energy(L, params) / L * (n * n + 2.0 * lam * (n + 0.5) * (1.0 - mu))


def pressure_exact(n: int, L: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> float:
    """``2 E_n / L``, the exact wall force when lambda is independent of L."""
    spec = as_lambda_spec(spec)
    if not spec.is_constant:
        raise UnsupportedModeError("pressure_exact needs a constant lambda; use pressure_hf for from_zeta")
    return 2.0 * energy_level(n, L, spec, params) / L


def pressure_hf(
    n: int,
    L: float,
    spec: LambdaLike = 0.0,
    params: PhysicalParams = NATURAL,
    step: float = 1e-6,
) -> float:
    """Wall pressure ``-dE_n/dL`` by Richardson-extrapolated central differences.

    ``step`` is relative to L and must not exceed 1e-2.
    """
    n = check_level(n)
    L = check_width(L)
    spec = as_lambda_spec(spec)
    if not 0.0 < step <= 1e-2:
        raise ConfigError(f"relative step must lie in (0, 1e-2], got {step!r}")
    return -derivative(lambda x: energy_level(n, x, spec, params), L, rel_step=step)


def isotherm_ratio(lam: float) -> float:
    """``(4 + 5 lam) / (1 + 3 lam)``: E_2/E_1 at equal width, and (L2/L1)**2 of the hot isotherm."""
    return level_factor(2, lam) / level_factor(1, lam)
