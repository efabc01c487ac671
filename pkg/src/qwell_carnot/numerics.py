"""Small numerical kernels: adaptive Simpson quadrature, Richardson-extrapolated
central differences and bisection.

Everything here is deterministic and written against plain floats, so results
do not depend on evaluation order or on any optional dependency.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

from .errors import BracketError, ConfigError, NonConvergenceError, NumericalError

RealFunc = Callable[[float], float]


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    max_depth: int = 50

    def __post_init__(self):
        if not 1e-14 <= self.rel_tol <= 1e-4:
            raise ConfigError(f"rel_tol must lie in [1e-14, 1e-4], got {self.rel_tol!r}")
        if self.max_depth < 10:
            raise ConfigError(f"max_depth must be >= 10, got {self.max_depth!r}")


@dataclass(frozen=True)
class RootConfig:
    abs_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ConfigError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if self.max_iter < 1:
            raise ConfigError(f"max_iter must be >= 1, got {self.max_iter!r}")


def _finite(value: float, where: float) -> float:
    if not math.isfinite(value):
        raise NumericalError(f"non-finite function value {value!r} at x={where!r}")
    return value


def _simpson(fa: float, fm: float, fb: float, width: float) -> float:
    return width / 6.0 * (fa + 4.0 * fm + fb)


def integrate(f: RealFunc, a: float, b: float, cfg: QuadratureConfig | None = None) -> float:
    """Oriented integral of ``f`` from ``a`` to ``b`` by adaptive Simpson.

    The tolerance is relative to a composite-Simpson estimate of the integral
    of ``|f|``, which keeps the criterion meaningful for sign-changing
    integrands. Each accepted panel gets the usual ``(S2 - S1) / 15``
    Richardson correction.

    Raises:
        NonConvergenceError: a panel still misses its tolerance at
            ``cfg.max_depth``; ``err.interval`` is that panel.
        NumericalError: ``f`` returned a non-finite value.
    """
    cfg = cfg or QuadratureConfig()
    if a == b:
        return 0.0
    if b < a:
        return -integrate(f, b, a, cfg)

    def g(x: float) -> float:
        return _finite(float(f(x)), x)

    # Scale estimate: 16-panel composite Simpson of |f|.
    panels = 16
    xs = [a + (b - a) * i / (2 * panels) for i in range(2 * panels + 1)]
    xs[-1] = b
    fs = [g(x) for x in xs]
    scale = sum(
        _simpson(abs(fs[2 * i]), abs(fs[2 * i + 1]), abs(fs[2 * i + 2]), xs[2 * i + 2] - xs[2 * i])
        for i in range(panels)
    )
    tol = cfg.rel_tol * scale if scale > 0.0 else cfg.rel_tol

    def refine(lo, hi, flo, fmid, fhi, whole, tol, depth):
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm = g(lm)
        frm = g(rm)
        left = _simpson(flo, flm, fmid, mid - lo)
        right = _simpson(fmid, frm, fhi, hi - mid)
        delta = left + right - whole
        if abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        if depth >= cfg.max_depth or lm in (lo, mid) or rm in (mid, hi):
            raise NonConvergenceError(
                f"adaptive Simpson did not converge on [{lo!r}, {hi!r}] "
                f"(depth {depth}, |S2 - S1| = {abs(delta):.3e}, target {15.0 * tol:.3e})",
                interval=(lo, hi),
            )
        return refine(lo, mid, flo, flm, fmid, left, 0.5 * tol, depth + 1) + refine(
            mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth + 1
        )

    fa, fb = fs[0], fs[-1]
    fm = g(0.5 * (a + b))
    return refine(a, b, fa, fm, fb, _simpson(fa, fm, fb, b - a), tol, 0)


def derivative(
    f: RealFunc,
    x: float,
    rel_step: float = 1e-6,
    abs_step: float | None = None,
) -> float:
    """First derivative of ``f`` at ``x``.

    Central differences at steps ``h`` and ``h/2`` are combined by one
    Richardson step, cancelling the ``h**2`` term. ``h = rel_step * |x|``
    unless ``abs_step`` is given (required at ``x == 0``).
    """
    if not 0.0 < rel_step <= 1e-2:
        raise ConfigError(f"rel_step must lie in (0, 1e-2], got {rel_step!r}")
    if abs_step is not None:
        if not abs_step > 0.0:
            raise ConfigError(f"abs_step must be positive, got {abs_step!r}")
        h = abs_step
    elif x == 0.0:
        raise ConfigError("x == 0 has no relative scale; pass abs_step")
    else:
        h = rel_step * abs(x)

    def central(step: float) -> float:
        up = _finite(float(f(x + step)), x + step)
        down = _finite(float(f(x - step)), x - step)
        return (up - down) / (2.0 * step)

    coarse = central(h)
    fine = central(0.5 * h)
    return (4.0 * fine - coarse) / 3.0


def bisect(f: RealFunc, lo: float, hi: float, cfg: RootConfig | None = None) -> float:
    """Root of ``f`` in ``[lo, hi]`` by plain bisection.

    Returns the midpoint of the final bracket once its width is at most
    ``cfg.abs_tol`` (or the bracket can no longer be split in floating point).
    """
    cfg = cfg or RootConfig()
    if hi < lo:
        lo, hi = hi, lo
    flo = _finite(float(f(lo)), lo)
    fhi = _finite(float(f(hi)), hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]: f = {flo!r}, {fhi!r}")

    for _ in range(cfg.max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= cfg.abs_tol or mid in (lo, hi):
            return mid
        fmid = _finite(float(f(mid)), mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0.0) == (flo < 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    if hi - lo <= cfg.abs_tol:
        return 0.5 * (lo + hi)
    raise NonConvergenceError(
        f"bisection did not reach abs_tol={cfg.abs_tol!r} in {cfg.max_iter} iterations",
        interval=(lo, hi),
    )
