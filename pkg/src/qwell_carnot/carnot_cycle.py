"""Full Carnot cycle: per-leg work, heat intake, efficiency, and a report that
sets the closed forms against quadrature and against the log-free printed forms.

Sign convention: work done *by* the particle on the walls is positive, so the
two expansion legs give positive work and the compressions negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from . import model, processes
from .errors import UnsupportedModeError
from .model import NATURAL, LambdaSpec, PhysicalParams
from .numerics import QuadratureConfig, integrate
from .processes import CycleGeometry, LegKind


@dataclass(frozen=True)
class CycleSpec:
    """The two free knobs of the cycle (L1, L3) plus the model.

    ``L3 > L2`` is checked by :func:`build`, not here, so that
    :func:`efficiency` can still be queried on the boundary.
    """

    L1: float
    L3: float
    lambda_spec: LambdaSpec = field(default_factory=LambdaSpec.free_particle)
    params: PhysicalParams = NATURAL

    def __post_init__(self):
        model.check_width(self.L1, "L1")
        model.check_width(self.L3, "L3")
        object.__setattr__(self, "lambda_spec", model.as_lambda_spec(self.lambda_spec))

    @property
    def lam(self) -> float:
        _require_constant(self.lambda_spec)
        return self.lambda_spec.value

    def geometry(self) -> CycleGeometry:
        return CycleGeometry.from_widths(self.L1, self.L3, self.lambda_spec, self.params)


def _require_constant(spec: LambdaSpec) -> None:
    if not spec.is_constant:
        raise UnsupportedModeError("cycle closed forms assume a constant lambda; from_zeta is not supported")


@dataclass(frozen=True)
class ReportRow:
    """One comparison. ``reference`` is the trusted value, ``comparator`` the one under test."""

    key: str
    reference_source: str
    reference: float
    comparator_source: str
    comparator: float

    @property
    def abs_dev(self) -> float:
        return abs(self.comparator - self.reference)

    @property
    def rel_dev(self) -> float:
        return self.abs_dev / abs(self.reference) if self.reference != 0.0 else math.inf


@dataclass(frozen=True)
class VerifyReport:
    rows: tuple[ReportRow, ...]
    # Side values: doubled-prefactor energies and the (1 - mu) adiabat pressure.
    notes: tuple[ReportRow, ...] = ()

    def row(self, key: str) -> ReportRow:
        for r in self.rows + self.notes:
            if r.key == key:
                return r
        raise KeyError(key)


@dataclass(frozen=True)
class CycleResult:
    L1: float
    L2: float
    L3: float
    L4: float
    E_H: float
    E_C: float
    W12: float
    W23: float
    W34: float
    W41: float
    W_total: float
    Q_H: float
    eta: float
    oracle_report: VerifyReport | None = None

    @property
    def W_leg(self) -> tuple[float, float, float, float]:
        return (self.W12, self.W23, self.W34, self.W41)

    def summary(self) -> dict[str, float]:
        """Fields emitted by the CLI, in their fixed order."""
        keys = ("L2", "L4", "E_H", "E_C", "W12", "W23", "W34", "W41", "W_total", "Q_H", "eta")
        return {k: getattr(self, k) for k in keys}


def _closed_form(spec: CycleSpec) -> CycleResult:
    geo = spec.geometry()
    lam = spec.lam
    e_hot, e_cold = geo.e_hot, geo.e_cold
    log_ratio = math.log(model.isotherm_ratio(lam))
    w12 = e_hot * log_ratio
    w23 = e_hot - e_cold
    w34 = -e_cold * log_ratio
    w41 = e_cold - e_hot
    # adiabatic pair summed separately: w23 + w41 == 0 exactly
    w_total = (w12 + w34) + (w23 + w41)
    return CycleResult(
        L1=geo.L1, L2=geo.L2, L3=geo.L3, L4=geo.L4,
        E_H=e_hot, E_C=e_cold,
        W12=w12, W23=w23, W34=w34, W41=w41,
        W_total=w_total, Q_H=w12, eta=w_total / w12,
    )


def build(spec: CycleSpec, with_report: bool = True) -> CycleResult:
    """Run the cycle in closed form.

    ``W12 = E_H ln r`` and ``W34 = -E_C ln r`` with ``r = (4+5 lam)/(1+3 lam)``
    integrate the ``1/L`` isotherm pressure; the adiabats contribute
    ``E_H - E_C`` and ``E_C - E_H``. The heat taken in is ``Q_H = W12``.

    Raises:
        DegenerateCycleError: ``L3 <= L2``.
        UnsupportedModeError: lambda is ``from_zeta``.
    """
    _require_constant(spec.lambda_spec)
    result = _closed_form(spec)
    if with_report:
        result = replace(result, oracle_report=_report(spec, result))
    return result


def efficiency(spec: CycleSpec) -> float:
    """``1 - (L1/L3)**2 * (4 + 5 lam) / (1 + 3 lam)``.

    A pure formula: the boundary ``L3 == L2`` gives 0 instead of raising.
    """
    lam = spec.lam
    return 1.0 - (spec.L1 * spec.L1) / (spec.L3 * spec.L3) * model.isotherm_ratio(lam)


def free_particle_efficiency(L1: float, L3: float) -> float:
    """Infinite-square-well limit ``1 - 4 L1**2 / L3**2``."""
    return 1.0 - 4.0 * L1 * L1 / (L3 * L3)


def work_quadrature(spec: CycleSpec, tol: float = 1e-10) -> tuple[float, float, float, float]:
    """Per-leg work by adaptive quadrature of the leg pressure curves.

    Limits follow the direction of travel, so compressions come out negative.
    """
    _require_constant(spec.lambda_spec)
    cfg = QuadratureConfig(rel_tol=tol)
    geo = spec.geometry()
    lam_spec, params = spec.lambda_spec, spec.params
    curves = {
        LegKind.HOT_ISOTHERM: lambda L: processes.hot_isotherm_pressure(L, geo.L1, lam_spec, params),
        LegKind.ADIABAT_EXPAND: lambda L: processes.adiabat_pressure(L, 2, lam_spec, params),
        LegKind.COLD_ISOTHERM: lambda L: processes.cold_isotherm_pressure(L, geo.L3, lam_spec, params),
        LegKind.ADIABAT_COMPRESS: lambda L: processes.adiabat_pressure(L, 1, lam_spec, params),
    }
    out = []
    for kind in processes.LEGS:
        a, b = geo.leg_bounds(kind)
        out.append(integrate(curves[kind], a, b, cfg))
    return tuple(out)


def log_free_work(spec: CycleSpec) -> float:
    """Cycle work in the printed closed form that lacks the isotherm logarithms.

    ``hbar**2 pi**2 / m * { [f1**1.5 / f2**0.5 - (f1 f2)**0.5] / L1**2
    - [f2**1.5 / f1**0.5 - (f1 f2)**0.5] / L3**2 }`` with ``f1 = 1 + 3 lam``,
    ``f2 = 4 + 5 lam``. Comparator only; it does not equal the cycle work.
    """
    f1, f2 = model.level_factor(1, spec.lam), model.level_factor(2, spec.lam)
    pref = math.pi**2 * spec.params.hbar**2 / spec.params.mass
    cross = math.sqrt(f1 * f2)
    hot = (f1**1.5 / math.sqrt(f2) - cross) / spec.L1**2
    cold = (f2**1.5 / math.sqrt(f1) - cross) / spec.L3**2
    return pref * (hot - cold)


def log_free_heat(spec: CycleSpec) -> float:
    """Heat intake in the printed log-free form ``pi**2 hbar**2 / (m L1**2) * [f1**1.5 / f2**0.5 - f1]``."""
    f1, f2 = model.level_factor(1, spec.lam), model.level_factor(2, spec.lam)
    pref = math.pi**2 * spec.params.hbar**2 / (spec.params.mass * spec.L1**2)
    return pref * (f1**1.5 / math.sqrt(f2) - f1)


def cubic_free_particle_efficiency(L1: float, L3: float) -> float:
    """Free-particle efficiency as printed with cubed widths, ``1 - 4 L1**3 / L3**3``."""
    return 1.0 - 4.0 * L1**3 / L3**3


def _report(spec: CycleSpec, result: CycleResult, tol: float = 1e-10) -> VerifyReport:
    legs = work_quadrature(spec, tol)
    w_quad = (legs[0] + legs[2]) + (legs[1] + legs[3])
    rows = (
        ReportRow("a_work_total", "closed_form", result.W_total, "quadrature", w_quad),
        ReportRow("b_heat_hot", "closed_form", result.Q_H, "quadrature_leg1", legs[0]),
        ReportRow("c_work_total_log_free", "quadrature", w_quad, "log_free_form", log_free_work(spec)),
        ReportRow("d_heat_hot_log_free", "quadrature_leg1", legs[0], "log_free_form", log_free_heat(spec)),
        ReportRow("e_eta_cubic", "closed_form", result.eta, "cubic_free_particle_form",
                  cubic_free_particle_efficiency(spec.L1, spec.L3)),
    )
    notes = [
        ReportRow("e_hot_doubled_prefactor", "E_1(L1)", result.E_H, "2*W(L1)*(1+3lam)", 2.0 * result.E_H),
        ReportRow("e_cold_doubled_prefactor", "E_2(L3)", result.E_C, "2*W(L3)*(4+5lam)", 2.0 * result.E_C),
    ]
    if 2.0 * spec.lam - 1.0 != 0.0:
        notes.append(ReportRow(
            "p_adiabat_mu_factor", "2*E_2(L2)/L2", processes.adiabat_pressure(result.L2, 2, spec.lambda_spec, spec.params),
            "mu_factor_form", _mu_adiabat_pressure(result.L2, spec),
        ))
    return VerifyReport(rows=rows, notes=tuple(notes))


def _mu_adiabat_pressure(L: float, spec: CycleSpec) -> float:
    # n=2 adiabat with (1 - mu) applied to the lambda term
    lam = spec.lam
    w = model.scale_energy(L, spec.params)
    return 2.0 * w / L * (4.0 + 5.0 * lam * (1.0 - model.mu_of(lam)))


def verify(spec: CycleSpec, tol: float = 1e-10) -> VerifyReport:
    """Comparison report; discrepancies are findings, never errors."""
    _require_constant(spec.lambda_spec)
    return _report(spec, _closed_form(spec), tol)


def sweep(
    L1: float,
    L3_values,
    lam_values,
    params: PhysicalParams = NATURAL,
) -> list[dict]:
    """Efficiency over the cartesian product of widths and lambdas, in input order.

    Degenerate points (``L3 <= L2``) are kept with ``eta = None``.
    """
    rows = []
    for lam in lam_values:
        for L3 in L3_values:
            spec = CycleSpec(L1, L3, LambdaSpec.frozen(lam), params)
            fp = free_particle_efficiency(L1, L3)
            if not L3 > processes.l2_of(L1, spec.lambda_spec):
                rows.append({"lambda": lam, "l3": L3, "eta": None, "eta_free_particle": fp,
                             "delta": None, "status": "degenerate"})
                continue
            eta = build(spec, with_report=False).eta
            rows.append({"lambda": lam, "l3": L3, "eta": eta, "eta_free_particle": fp,
                         "delta": eta - fp, "status": "ok"})
    return rows

