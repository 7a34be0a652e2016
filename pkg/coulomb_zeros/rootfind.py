"""Bracketed Newton iteration with bisection fallback."""

import logging
import math
from typing import Callable, NamedTuple

from .errors import DomainError, NumericalError

logger = logging.getLogger(__name__)


class Root(NamedTuple):
    x: float
    f: float
    df: float
    iterations: int
    bisections: int


def safeguarded_newton(
    func: Callable[[float], tuple[float, float]],
    lo: float,
    hi: float,
    x0: float | None = None,
    xtol: float = 0.0,
    ftol: float = 0.0,
    max_iter: int = 100,
) -> Root:
    """Find a root of func bracketed by [lo, hi].

    ``func(x)`` returns ``(f, df)``. A Newton step is taken when it lands
    inside the current bracket and shrinks |f| fast enough, otherwise the
    bracket is bisected. Iteration stops when a step is below ``xtol``, when
    |f| <= ``ftol`` or when the bracket collapses to adjacent floats.
    """
    f_lo, _ = func(lo)
    f_hi, _ = func(hi)
    if f_lo == 0.0:
        return Root(lo, 0.0, func(lo)[1], 0, 0)
    if f_hi == 0.0:
        return Root(hi, 0.0, func(hi)[1], 0, 0)
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise DomainError(f"[{lo}, {hi}] does not bracket a root (f = {f_lo:.3e}, {f_hi:.3e})")

    # orient so that f(xlo) < 0 < f(xhi)
    xlo, xhi = (lo, hi) if f_lo < 0.0 else (hi, lo)
    x = 0.5 * (lo + hi) if x0 is None or not (min(lo, hi) < x0 < max(lo, hi)) else x0
    dx_old = abs(hi - lo)
    dx = dx_old
    f, df = func(x)
    bisections = 0

    for iteration in range(1, max_iter + 1):
        if f == 0.0 or abs(f) <= ftol:
            return Root(x, f, df, iteration, bisections)
        newton_out = df == 0.0 or ((x - xhi) * df - f) * ((x - xlo) * df - f) >= 0.0
        if newton_out or abs(2.0 * f) > abs(dx_old * df):
            dx_old = dx
            dx = 0.5 * (xhi - xlo)
            x = xlo + dx
            bisections += 1
        else:
            dx_old = dx
            dx = f / df
            x = x - dx
        f, df = func(x)
        if f < 0.0:
            xlo = x
        else:
            xhi = x
        if abs(dx) <= xtol or math.nextafter(min(xlo, xhi), math.inf) >= max(xlo, xhi):
            logger.debug("root %.17g after %d steps (%d bisections)", x, iteration, bisections)
            return Root(x, f, df, iteration, bisections)

    raise NumericalError(f"no convergence after {max_iter} iterations (last x = {x!r}, f = {f!r})")
