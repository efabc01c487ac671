"""The four strokes of the cycle as pressure curves P(L), plus diagram sampling.

Legs, in order::

    1  hot_isotherm       L1 -> L2   E = E_H,  n=1 -> n=2
    2  adiabat_expand     L2 -> L3   n = 2
    3  cold_isotherm      L3 -> L4   E = E_C,  n=2 -> n=1
    4  adiabat_compress   L4 -> L1   n = 1

With lambda constant the pressure is ``2E/L`` throughout, so ``L*P`` is
constant on the isotherms and ``L**3 * P`` on the adiabats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import model, superposition
from .errors import DegenerateCycleError, DomainError, OutOfRangeError
from .model import NATURAL, LambdaLike, LambdaSpec, PhysicalParams


class LegKind(enum.Enum):
    HOT_ISOTHERM = "hot_isotherm"
    ADIABAT_EXPAND = "adiabat_expand"
    COLD_ISOTHERM = "cold_isotherm"
    ADIABAT_COMPRESS = "adiabat_compress"

    @property
    def number(self) -> int:
        return _LEG_ORDER.index(self) + 1


_LEG_ORDER = (LegKind.HOT_ISOTHERM, LegKind.ADIABAT_EXPAND, LegKind.COLD_ISOTHERM, LegKind.ADIABAT_COMPRESS)
LEGS = _LEG_ORDER


@dataclass(frozen=True)
class LegSample:
    L: float
    P: float
    E: float
    a1sq: float


def l2_of(L1: float, spec: LambdaLike = 0.0) -> float:
    """End of the hot isotherm: ``L1 * sqrt((4 + 5 lam) / (1 + 3 lam))``."""
    return superposition.hot_isotherm_end(L1, spec)


def l4_of(L3: float, spec: LambdaLike = 0.0) -> float:
    """End of the cold isotherm: ``L3 * sqrt((1 + 3 lam) / (4 + 5 lam))``."""
    return superposition.cold_isotherm_end(L3, spec)


def _mixed_pressure(mix, L, spec, params):
    # lambda(L) varies: weight the numeric -dE_n/dL by the occupations
    return mix.a1sq * model.pressure_hf(1, L, spec, params) + mix.a2sq * model.pressure_hf(2, L, spec, params)


def hot_isotherm_pressure(L: float, L1: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> float:
    """``2 E_H / L`` with ``E_H = E_1(L1)``; L must lie on ``[L1, L2]``."""
    spec = model.as_lambda_spec(spec)
    L = model.check_width(L)
    L1 = model.check_width(L1, "L1")
    if not spec.is_constant:
        return _mixed_pressure(superposition.hot_isotherm_mix(L, L1, spec, params), L, spec, params)
    L2 = l2_of(L1, spec)
    if not L1 <= L <= L2:
        raise OutOfRangeError(f"L={L!r} outside the hot isotherm [{L1!r}, {L2!r}]")
    return 2.0 * model.energy_level(1, L1, spec, params) / L


def cold_isotherm_pressure(L: float, L3: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> float:
    """``2 E_C / L`` with ``E_C = E_2(L3)``; L must lie on ``[L4, L3]``."""
    spec = model.as_lambda_spec(spec)
    L = model.check_width(L)
    L3 = model.check_width(L3, "L3")
    if not spec.is_constant:
        return _mixed_pressure(superposition.cold_isotherm_mix(L, L3, spec, params), L, spec, params)
    L4 = l4_of(L3, spec)
    if not L4 <= L <= L3:
        raise OutOfRangeError(f"L={L!r} outside the cold isotherm [{L4!r}, {L3!r}]")
    return 2.0 * model.energy_level(2, L3, spec, params) / L


def adiabat_pressure(L: float, n: int, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> float:
    """Pressure at fixed level n: ``2 E_n(L) / L`` (``pi**2 hbar**2 / (m L**3) * bracket``)."""
    if n not in (1, 2):
        raise DomainError(f"adiabats run in n=1 or n=2, got n={n!r}")
    spec = model.as_lambda_spec(spec)
    if not spec.is_constant:
        return model.pressure_hf(n, L, spec, params)
    return model.pressure_exact(n, L, spec, params)


@dataclass(frozen=True)
class CycleGeometry:
    """Corner widths of one cycle plus the model it runs on."""

    L1: float
    L2: float
    L3: float
    L4: float
    spec: LambdaSpec
    params: PhysicalParams = NATURAL

    @classmethod
    def from_widths(
        cls, L1: float, L3: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL
    ) -> CycleGeometry:
        """Fill in L2 and L4.

        Raises:
            DegenerateCycleError: ``L3 <= L2``.
        """
        spec = model.as_lambda_spec(spec)
        L1 = model.check_width(L1, "L1")
        L3 = model.check_width(L3, "L3")
        L2 = superposition.hot_isotherm_end(L1, spec, params)
        if not L3 > L2:
            raise DegenerateCycleError(f"L3={L3!r} must exceed L2={L2!r}")
        L4 = superposition.cold_isotherm_end(L3, spec, params)
        return cls(L1, L2, L3, L4, spec, params)

    @property
    def e_hot(self) -> float:
        return model.energy_level(1, self.L1, self.spec, self.params)

    @property
    def e_cold(self) -> float:
        return model.energy_level(2, self.L3, self.spec, self.params)

    def leg_bounds(self, kind: LegKind) -> tuple[float, float]:
        return {
            LegKind.HOT_ISOTHERM: (self.L1, self.L2),
            LegKind.ADIABAT_EXPAND: (self.L2, self.L3),
            LegKind.COLD_ISOTHERM: (self.L3, self.L4),
            LegKind.ADIABAT_COMPRESS: (self.L4, self.L1),
        }[kind]

    def corner(self, index: int) -> LegSample:
        """Canonical sample at corner 1..4, shared by the two legs meeting there."""
        # Anchored on the isotherm values so both neighbouring legs report identical numbers.
        if index == 1:
            L, E, a1sq = self.L1, self.e_hot, 1.0
        elif index == 2:
            L, E, a1sq = self.L2, self.e_hot, 0.0
        elif index == 3:
            L, E, a1sq = self.L3, self.e_cold, 0.0
        elif index == 4:
            L, E, a1sq = self.L4, self.e_cold, 1.0
        else:
            raise DomainError(f"corner index must be 1..4, got {index!r}")
        if self.spec.is_constant:
            P = 2.0 * E / L
        elif a1sq == 1.0:
            P = model.pressure_hf(1, L, self.spec, self.params)
        else:
            P = model.pressure_hf(2, L, self.spec, self.params)
        return LegSample(L, P, E, a1sq)

    def sample_at(self, kind: LegKind, L: float) -> LegSample:
        """Sample of leg ``kind`` at an interior width L."""
        spec, params = self.spec, self.params
        if kind is LegKind.HOT_ISOTHERM:
            mix = superposition.hot_isotherm_mix(L, self.L1, spec, params)
            P = hot_isotherm_pressure(L, self.L1, spec, params)
            return LegSample(L, P, superposition.mix_energy(mix, L, spec, params), mix.a1sq)
        if kind is LegKind.COLD_ISOTHERM:
            mix = superposition.cold_isotherm_mix(L, self.L3, spec, params)
            P = cold_isotherm_pressure(L, self.L3, spec, params)
            return LegSample(L, P, superposition.mix_energy(mix, L, spec, params), mix.a1sq)
        n = 2 if kind is LegKind.ADIABAT_EXPAND else 1
        return LegSample(L, adiabat_pressure(L, n, spec, params), model.energy_level(n, L, spec, params), 2.0 - n)


def sample_leg(kind: LegKind, geometry: CycleGeometry, count: int) -> list[LegSample]:
    """``count`` samples uniform in L along one leg, endpoints included.

    End samples are the shared corner samples, so consecutive legs agree
    bit for bit where they meet.
    """
    if isinstance(count, bool) or not isinstance(count, int) or count < 2:
        raise DomainError(f"count must be an integer >= 2, got {count!r}")
    if not geometry.L3 > geometry.L2:
        raise DegenerateCycleError(f"L3={geometry.L3!r} must exceed L2={geometry.L2!r}")
    kind = LegKind(kind)
    start, stop = geometry.leg_bounds(kind)
    first = geometry.corner(kind.number)
    last = geometry.corner(kind.number % 4 + 1)
    out = [first]
    for i in range(1, count - 1):
        out.append(geometry.sample_at(kind, start + (stop - start) * i / (count - 1)))
    out.append(last)
    return out


def sample_cycle(geometry: CycleGeometry, count: int) -> list[tuple[int, LegSample]]:
    """All four legs in order, tagged with their leg number."""
    return [(kind.number, s) for kind in LEGS for s in sample_leg(kind, geometry, count)]
