"""
Independent evaluation of F, F', G, G' for rho > 0.

F comes from its Frobenius series at the origin, carried outward by local
Taylor steps of w'' = q(rho) w, q = -1 + 2 eta / rho + lambda(lambda+1) / rho^2.
G comes from the large-rho amplitude/phase form at an anchor point, carried
inward by the same stepper. Nothing here depends on the McMahon machinery.
"""

import logging
import math
from functools import lru_cache
from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from .asym_coeffs import CoeffTable, build_table, eval_pqrs, theta
from .config import settings
from .errors import DomainError, NumericalError
from .gamma_phase import log_f_norm_constant
from .models import Params

logger = logging.getLogger(__name__)

SERIES_TAIL = 1e-17
SERIES_MAX_TERMS = 2000
MIN_STEP_FRACTION = 1e-14


class CoulombState(BaseModel):
    """Values of the Coulomb pair and their derivatives at one rho."""
    model_config = ConfigDict(frozen=True)

    rho: float
    F: float
    dF: float
    G: float
    dG: float

    @property
    def wronskian(self) -> float:
        """F'G - FG', equal to 1 for the normalised pair."""
        return self.dF * self.G - self.F * self.dG


def q_value(params: Params, rho: float) -> float:
    return -1.0 + 2.0 * params.eta / rho + params.centrifugal / (rho * rho)


def turning_point(params: Params) -> float | None:
    """Outer root of q(rho) = 0, beyond which the solutions oscillate."""
    disc = params.eta * params.eta + params.centrifugal
    if disc < 0.0:
        return None
    root = params.eta + math.sqrt(disc)
    return root if root > 0.0 else None


def r_switch(params: Params) -> float:
    """Radius up to which the origin series is summed directly.

    For eta < 0 the series alternates with terms growing like
    exp(sqrt(8 |eta| rho)), so the radius is held at 2 |eta| rho <= 2 (lambda + 1).
    """
    eta_pos = max(params.eta, 0.0)
    radius = 0.5 + 0.5 * (eta_pos + math.sqrt(eta_pos * eta_pos + max(params.centrifugal, 0.0)))
    if params.eta < 0.0:
        radius = min(radius, (params.lam + 1.0) / -params.eta)
    return radius


def f_series_origin(params: Params, rho: float) -> tuple[float, float]:
    """(F, F') from C rho^(lambda+1) sum c_k rho^k.

    c_0 = 1, c_1 = eta / (lambda + 1),
    c_{k+1} = (2 eta c_k - c_{k-1}) / ((k + 1)(k + 2 lambda + 2)).
    """
    if not 0.0 < rho <= r_switch(params) * (1.0 + 1e-12):
        raise DomainError(f"origin series is used for 0 < rho <= {r_switch(params):.6g}, got {rho}")
    lam, eta = params.lam, params.eta

    # a_k = c_k rho^k
    a_prev = 1.0
    a_curr = eta / (lam + 1.0) * rho
    total = a_prev + a_curr
    d_total = (lam + 1.0) * a_prev + (lam + 2.0) * a_curr
    small = 0
    k = 1
    while small < 3:
        if k > SERIES_MAX_TERMS:
            raise NumericalError(f"origin series did not converge at rho = {rho}")
        a_next = (2.0 * eta * rho * a_curr - rho * rho * a_prev) / ((k + 1) * (k + 2.0 * lam + 2.0))
        total += a_next
        d_total += (k + 1 + lam + 1.0) * a_next
        small = small + 1 if abs(a_next) < SERIES_TAIL * abs(total) else 0
        a_prev, a_curr = a_curr, a_next
        k += 1

    log_c = log_f_norm_constant(params)
    log_rho = math.log(rho)
    F = math.exp(log_c + (lam + 1.0) * log_rho) * total
    dF = math.exp(log_c + lam * log_rho) * d_total
    return F, dF


def _local_coefficients(params: Params, center: float, w: float, dw: float, order: int) -> list[float]:
    """Taylor coefficients of w about ``center`` up to s^order."""
    inv = 1.0 / center
    two_eta = 2.0 * params.eta
    centrifugal = params.centrifugal
    q = []
    # 1/rho = inv sum (-inv s)^m,  1/rho^2 = inv^2 sum (m+1)(-inv s)^m
    power = inv
    for m in range(order - 1):
        q.append(two_eta * power + centrifugal * (m + 1) * power * inv)
        power *= -inv
    q[0] -= 1.0

    a = [w, dw]
    for k in range(order - 1):
        acc = 0.0
        for m in range(k + 1):
            acc += q[m] * a[k - m]
        a.append(acc / ((k + 1) * (k + 2)))
    return a


def _evaluate_taylor(a: list[float], h: float) -> tuple[float, float]:
    w = 0.0
    dw = 0.0
    for k in range(len(a) - 1, 0, -1):
        w = w * h + a[k]
        dw = dw * h + k * a[k]
    return w * h + a[0], dw


def integrate_ode(params: Params, rho_from: float, w: float, dw: float, rho_to: float) -> tuple[float, float]:
    """Carry (w, w') of a solution from ``rho_from`` to ``rho_to``."""
    if not rho_from > 0.0 or not rho_to > 0.0:
        raise DomainError(f"integration endpoints must be positive, got {rho_from} -> {rho_to}")
    order = settings.taylor_order
    tol = settings.ode_tolerance
    rho = rho_from
    steps = 0
    while rho != rho_to:
        a = _local_coefficients(params, rho, w, dw, order)
        direction = 1.0 if rho_to > rho else -1.0
        h = min(0.5 * rho, 1.0, abs(rho_to - rho))
        scale = abs(w) + abs(dw)
        while True:
            tail = abs(a[order]) * h ** order + abs(a[order - 1]) * h ** (order - 1)
            if tail <= tol * scale:
                break
            h *= 0.5
            if h < MIN_STEP_FRACTION * rho:
                raise NumericalError(f"Taylor step underflow at rho = {rho}")
        target = rho_to if h == abs(rho_to - rho) else rho + direction * h
        w, dw = _evaluate_taylor(a, target - rho)
        rho = target
        steps += 1
    logger.debug("integrated %s from %.6g to %.6g in %d steps", params, rho_from, rho_to, steps)
    return w, dw


@lru_cache(maxsize=64)
def _anchor_table(params: Params) -> CoeffTable:
    return build_table(params, settings.table_order)


@lru_cache(maxsize=256)
def anchor_at_infinity(params: Params, rho_anchor: float | None = None) -> CoulombState:
    """Full state from the amplitude/phase form at a point where the series are accurate.

    The anchor is doubled until the error proxy of the P/Q sums drops below
    ``settings.anchor_tolerance``.
    """
    rho = settings.anchor_start if rho_anchor is None else rho_anchor
    if not rho > 0.0:
        raise DomainError(f"anchor must be positive, got {rho}")
    table = _anchor_table(params)
    while True:
        pqrs = eval_pqrs(table, rho)
        if pqrs.err_est < settings.anchor_tolerance:
            break
        rho *= 2.0
        if rho > settings.anchor_cap:
            raise NumericalError(f"asymptotic anchor not reached below {settings.anchor_cap:g} for {params}")
        logger.debug("anchor escalated to %.6g (error proxy %.2e)", rho, pqrs.err_est)
    th = theta(params, rho)
    s, c = math.sin(th), math.cos(th)
    return CoulombState(
        rho=rho,
        F=s * pqrs.P + c * pqrs.Q,
        dF=c * pqrs.R + s * pqrs.S,
        G=c * pqrs.P - s * pqrs.Q,
        dG=-s * pqrs.R + c * pqrs.S,
    )


def regular(params: Params, rho: float) -> tuple[float, float]:
    """(F, F') at rho."""
    if not rho > 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    start = r_switch(params)
    if rho <= start:
        return f_series_origin(params, rho)
    F, dF = f_series_origin(params, start)
    return integrate_ode(params, start, F, dF, rho)


def irregular(params: Params, rho: float, rho_anchor: float | None = None) -> tuple[float, float]:
    """(G, G') at rho."""
    if not rho > 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    anchor = anchor_at_infinity(params, rho_anchor)
    if rho > anchor.rho:
        # the point itself may already be in the asymptotic regime
        anchor = anchor_at_infinity(params, rho)
    return integrate_ode(params, anchor.rho, anchor.G, anchor.dG, rho)


def evaluate(params: Params, rho: float) -> CoulombState:
    """F, F', G, G' at rho."""
    F, dF = regular(params, rho)
    G, dG = irregular(params, rho)
    return CoulombState(rho=rho, F=F, dF=dF, G=G, dG=dG)


def sweep(params: Params, rhos: Sequence[float], irregular_solution: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """(w, w') on an increasing grid, in a single integration pass.

    The regular solution is carried outward from the origin, the irregular one
    inward from the anchor.
    """
    grid = np.asarray(rhos, dtype=np.float64)
    if grid.size == 0:
        return np.empty(0), np.empty(0)
    if grid[0] <= 0.0 or np.any(np.diff(grid) <= 0.0):
        raise DomainError("sweep needs a strictly increasing grid of positive points")
    values = np.empty(grid.size)
    slopes = np.empty(grid.size)

    if irregular_solution:
        anchor = anchor_at_infinity(params)
        if grid[-1] > anchor.rho:
            anchor = anchor_at_infinity(params, float(grid[-1]))
        rho, w, dw = anchor.rho, anchor.G, anchor.dG
        for i in range(grid.size - 1, -1, -1):
            w, dw = integrate_ode(params, rho, w, dw, float(grid[i]))
            rho = float(grid[i])
            values[i], slopes[i] = w, dw
        return values, slopes

    start = r_switch(params)
    rho = None
    w = dw = 0.0
    for i, point in enumerate(grid):
        point = float(point)
        if point <= start:
            values[i], slopes[i] = f_series_origin(params, point)
            continue
        if rho is None:
            rho = start
            w, dw = f_series_origin(params, start)
        w, dw = integrate_ode(params, rho, w, dw, point)
        rho = point
        values[i], slopes[i] = w, dw
    return values, slopes
