"""Two-level occupation bookkeeping along the isothermal legs.

On an isotherm the state is ``a1 phi_1 + a2 phi_2`` and the walls move while
the energy expectation stays pinned: at ``E_H = E_1(L1)`` on the hot leg,
``E_C = E_2(L3)`` on the cold one. Given L, the pinned energy is linear in
``|a1|**2``, so the occupations follow in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import model
from .errors import DomainError, OutOfRangeError
from .model import NATURAL, LambdaLike, PhysicalParams
from .numerics import RootConfig, bisect

NORM_TOL = 1e-12


@dataclass(frozen=True)
class TwoLevelMix:
    """Occupation probabilities of the two lowest levels."""

    a1sq: float
    a2sq: float

    def __post_init__(self):
        for name in ("a1sq", "a2sq"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise DomainError(f"{name} must lie in [0, 1], got {v!r}")
        if abs(self.a1sq + self.a2sq - 1.0) > NORM_TOL:
            raise DomainError(f"mix not normalized: a1sq + a2sq = {self.a1sq + self.a2sq!r}")

    @classmethod
    def from_a1sq(cls, a1sq: float) -> TwoLevelMix:
        return cls(a1sq, 1.0 - a1sq)

    @classmethod
    def from_a2sq(cls, a2sq: float) -> TwoLevelMix:
        return cls(1.0 - a2sq, a2sq)


def mix_energy(mix: TwoLevelMix, L: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> float:
    """Energy expectation ``|a1|**2 E_1(L) + |a2|**2 E_2(L)``."""
    return mix.a1sq * model.energy_level(1, L, spec, params) + mix.a2sq * model.energy_level(2, L, spec, params)


# Endpoint search brackets grow by this factor until the pinned energy is crossed.
_BRACKET_GROWTH = 2.0
_MAX_BRACKET_STEPS = 200


def _crossing(f, start: float, grow: float) -> float:
    """Bisect ``f`` from ``start`` outward (``grow`` > 1 widens, < 1 narrows)."""
    other = start
    for _ in range(_MAX_BRACKET_STEPS):
        other *= grow
        if (f(other) < 0.0) != (f(start) < 0.0):
            break
    lo, hi = sorted((start, other))
    return bisect(f, lo, hi, RootConfig(abs_tol=1e-15 * hi))


def hot_isotherm_end(L1: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> float:
    """Width at which the hot isotherm reaches the pure n=2 state."""
    L1 = model.check_width(L1, "L1")
    spec = model.as_lambda_spec(spec)
    if spec.is_constant:
        return L1 * math.sqrt(model.isotherm_ratio(spec.value))
    e_hot = model.energy_level(1, L1, spec, params)
    return _crossing(lambda x: model.energy_level(2, x, spec, params) - e_hot, L1, _BRACKET_GROWTH)


def cold_isotherm_end(L3: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> float:
    """Width at which the cold isotherm reaches the pure ground state."""
    L3 = model.check_width(L3, "L3")
    spec = model.as_lambda_spec(spec)
    if spec.is_constant:
        return L3 * math.sqrt(1.0 / model.isotherm_ratio(spec.value))
    e_cold = model.energy_level(2, L3, spec, params)
    return _crossing(lambda x: model.energy_level(1, x, spec, params) - e_cold, L3, 1.0 / _BRACKET_GROWTH)


def _clip_unit(x: float) -> float:
    return min(1.0, max(0.0, x))


def hot_isotherm_mix(L: float, L1: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> TwoLevelMix:
    """Occupations at width L on the hot isotherm that starts in n=1 at L1.

    Raises:
        OutOfRangeError: L outside ``[L1, L2]``.
    """
    L = model.check_width(L)
    spec = model.as_lambda_spec(spec)
    L2 = hot_isotherm_end(L1, spec, params)
    if not L1 <= L <= L2:
        raise OutOfRangeError(f"L={L!r} outside the hot isotherm [{L1!r}, {L2!r}]")
    if L == L1:
        return TwoLevelMix(1.0, 0.0)
    if L == L2:
        return TwoLevelMix(0.0, 1.0)
    lam = model.lambda_of(L, spec)
    # E_H / W(L) in units of the level brackets
    pinned = (L / L1) ** 2 * model.level_factor(1, model.lambda_of(L1, spec))
    f1, f2 = model.level_factor(1, lam), model.level_factor(2, lam)
    return TwoLevelMix.from_a1sq(_clip_unit((f2 - pinned) / (f2 - f1)))


def cold_isotherm_mix(L: float, L3: float, spec: LambdaLike = 0.0, params: PhysicalParams = NATURAL) -> TwoLevelMix:
    """Occupations at width L on the cold isotherm that starts in n=2 at L3.

    The returned mix has ``a2sq = |b2|**2``.

    Raises:
        OutOfRangeError: L outside ``[L4, L3]``.
    """
    L = model.check_width(L)
    spec = model.as_lambda_spec(spec)
    L4 = cold_isotherm_end(L3, spec, params)
    if not L4 <= L <= L3:
        raise OutOfRangeError(f"L={L!r} outside the cold isotherm [{L4!r}, {L3!r}]")
    if L == L3:
        return TwoLevelMix(0.0, 1.0)
    if L == L4:
        return TwoLevelMix(1.0, 0.0)
    lam = model.lambda_of(L, spec)
    pinned = (L / L3) ** 2 * model.level_factor(2, model.lambda_of(L3, spec))
    f1, f2 = model.level_factor(1, lam), model.level_factor(2, lam)
    return TwoLevelMix.from_a2sq(_clip_unit((pinned - f1) / (f2 - f1)))
