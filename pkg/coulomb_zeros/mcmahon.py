"""
McMahon-type expansions of the large zeros.

For every kind the zero is written rho = rho0 + eps with

    rho0 - eta ln(rho0) = eta ln 2 + lambda pi / 2 - sigma + m pi,

m = n or n - 1/2, and eps ~ sum eps_k / rho0^k. The eps_k come from
inverting the zero condition order by order in t = 1/rho0.
"""

import logging
import math
from functools import lru_cache

from pydantic import BaseModel, ConfigDict

from .asym_coeffs import build_table, eval_pqrs
from .config import settings
from .errors import DomainError, IndexTooSmallError, NumericalError
from .gamma_phase import sigma
from .models import Kind, Params
from .rootfind import safeguarded_newton
from .series import TruncSeries, arctan, log1p, mul, polyval, reciprocal

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)


class Expansion(BaseModel):
    """A derived expansion for the n-th zero of one kind.

    Attributes:
        params: the (lambda, eta) pair.
        kind: F, G, dF or dG.
        n: zero index, n >= 1.
        rho0: leading approximation, on the branch rho0 > max(eta, 0).
        eps: eps_1..eps_K (the hatted coefficients for dF and dG).
        K: number of coefficients.
    """
    model_config = ConfigDict(frozen=True)

    params: Params
    kind: Kind
    n: int
    rho0: float
    eps: tuple[float, ...]
    K: int

    def zero(self, terms: int | None = None) -> float:
        """rho0 + sum_{k<terms} eps_k / rho0^k.

        rho0 counts as the first term, so ``terms=6`` adds eps_1..eps_5.
        """
        terms = self.K + 1 if terms is None else terms
        if not 1 <= terms <= self.K + 1:
            raise DomainError(f"terms must lie in [1, {self.K + 1}], got {terms}")
        t = 1.0 / self.rho0
        correction = 0.0
        for e in reversed(self.eps[:terms - 1]):
            correction = (correction + e) * t
        return self.rho0 + correction


def rho0_rhs(params: Params, kind: Kind, n: int) -> float:
    """Right-hand side c of rho0 - eta ln(rho0) = c."""
    if n < 1:
        raise DomainError(f"zero index must be >= 1, got {n}")
    return (
        params.eta * LN2
        + 0.5 * params.lam * math.pi
        - sigma(params)
        + kind.phase_multiple(n) * math.pi
    )


def solve_rho0(params: Params, c: float, n: int = 0) -> float:
    """Solve rho0 - eta ln(rho0) = c on the increasing branch rho0 > max(eta, 0)."""
    eta = params.eta
    if eta == 0.0:
        if c <= 0.0:
            raise IndexTooSmallError(n)
        return c

    def g(rho: float) -> tuple[float, float]:
        return rho - eta * math.log(rho) - c, 1.0 - eta / rho

    if eta > 0.0:
        lo = eta
        if g(lo)[0] >= 0.0:
            raise IndexTooSmallError(
                n, f"index too small for these parameters: c = {c:.6g} <= {eta - eta * math.log(eta):.6g}"
            )
    else:
        lo = 1.0
        while g(lo)[0] >= 0.0:
            lo *= 0.5
            if lo < 1e-300:
                raise IndexTooSmallError(n)

    c_pos = max(c, 0.0)
    hi = c_pos + abs(eta) * math.log(c_pos + abs(eta) + 2.0) + 10.0
    while g(hi)[0] <= 0.0:
        hi *= 2.0

    guess = c + eta * math.log(max(c, 2.0))
    root = safeguarded_newton(
        g, lo, hi, x0=guess, xtol=4.0 * math.ulp(hi), max_iter=settings.newton_max_iter
    )
    residual = abs(g(root.x)[0])
    if residual > 1e-13 * (1.0 + abs(c)):
        raise NumericalError(f"rho0 residual {residual:.3e} above tolerance for c = {c!r}")
    logger.debug("rho0 = %.17g for c = %.17g in %d iterations", root.x, c, root.iterations)
    return root.x


def _eps_sweep(
    eps: TruncSeries, t_half: TruncSeries, num: tuple, den: tuple, negate: bool, eta: float
) -> TruncSeries:
    t_eps = eps.shift()
    x = mul(t_half, reciprocal(t_eps + 1.0))
    w = mul(polyval(num, x), reciprocal(polyval(den, x)))
    if negate:
        w = -w
    return arctan(w) + log1p(t_eps).scale(eta)


@lru_cache(maxsize=512)
def _eps_coefficients(lam: float, eta: float, derivative: bool, K: int) -> tuple[float, ...]:
    params = Params(lam=lam, eta=eta)
    table = build_table(params, K)
    # F, G:  tan(delta) = -Q/P.   dF, dG: tan(delta) = S/R.
    if derivative:
        num, den, negate = tuple(table.s), tuple(table.r), False
    else:
        num, den, negate = tuple(table.q), tuple(table.p), True
    t_half = TruncSeries.variable(K).scale(0.5)

    eps = TruncSeries.zero(K)
    for _ in range(K + 1):
        eps = _eps_sweep(eps, t_half, num, den, negate, eta)

    check = _eps_sweep(eps, t_half, num, den, negate, eta)
    for k in range(1, K + 1):
        if abs(check[k] - eps[k]) > 1e-12 * max(abs(eps[k]), 1.0):
            raise NumericalError(f"eps_{k} did not stabilise ({eps[k]!r} -> {check[k]!r})")
    logger.debug("eps coefficients for %s derivative=%s: %s", params, derivative, eps.coeffs[1:])
    return eps.coeffs[1:]


def derive_eps(params: Params, kind: Kind, rho0: float, K: int | None = None) -> tuple[float, ...]:
    """eps_1..eps_K for this kind.

    The coefficients depend on (lambda, eta) and on whether the kind is a
    derivative only; ``rho0`` is validated but does not enter them.
    """
    K = settings.series_order if K is None else K
    if K < 1 or K > settings.series_order:
        raise DomainError(f"K must lie in [1, {settings.series_order}], got {K}")
    if not rho0 > 0.0:
        raise DomainError(f"rho0 must be positive, got {rho0}")
    return _eps_coefficients(params.lam, params.eta, kind.is_derivative, K)


def closed_form_eps(params: Params, kind: Kind) -> tuple[float, float, float]:
    """eps_1..eps_3 in closed form."""
    v0 = params.v0
    eta = params.eta
    eta2 = eta * eta
    if kind.is_derivative:
        return (
            0.5 * v0,
            0.25 * eta * (3.0 * v0 - 1.0),
            (22.0 * eta2 * v0 - 19.0 * eta2 - 7.0 * v0 * v0 + 6.0 * v0) / 24.0,
        )
    return (
        0.5 * v0,
        0.25 * eta * (3.0 * v0 + 1.0),
        (22.0 * eta2 * v0 + 17.0 * eta2 - 7.0 * v0 * v0 - 6.0 * v0) / 24.0,
    )


def expand(params: Params, kind: Kind, n: int, K: int | None = None) -> Expansion:
    K = settings.series_order if K is None else K
    rho0 = solve_rho0(params, rho0_rhs(params, kind, n), n)
    eps = derive_eps(params, kind, rho0, K)
    return Expansion(params=params, kind=kind, n=n, rho0=rho0, eps=eps, K=K)


def mcmahon_zero(params: Params, kind: Kind, n: int, terms: int | None = None) -> float:
    """McMahon-type approximation of the n-th positive zero, rho0 plus terms - 1 corrections."""
    terms = settings.default_terms if terms is None else terms
    if not 1 <= terms <= settings.series_order:
        raise DomainError(f"terms must lie in [1, {settings.series_order}], got {terms}")
    return expand(params, kind, n).zero(terms)


def abramowitz_iterate(params: Params, n: int, start: float | None = None, sweeps: int = 8) -> float:
    """Fixed-point iteration for the n-th zero of F.

    rho_s = eta ln(2 rho_{s-1}) + lambda pi / 2 - sigma + n pi - arctan(Q/P),
    with P and Q summed at rho_{s-1}. ``start`` defaults to rho0.
    """
    if start is None:
        start = solve_rho0(params, rho0_rhs(params, Kind.F, n), n)
    floor = max(params.eta, 0.0)
    if not start > floor:
        raise DomainError(f"start must exceed {floor}, got {start}")
    if sweeps < 0:
        raise DomainError(f"sweeps must be non-negative, got {sweeps}")

    table = build_table(params, settings.table_order)
    base = 0.5 * params.lam * math.pi - sigma(params) + n * math.pi
    rho = start
    for sweep in range(1, sweeps + 1):
        pqrs = eval_pqrs(table, rho)
        if pqrs.err_est > settings.abramowitz_tolerance:
            raise NumericalError(
                f"asymptotic series too inaccurate at rho = {rho:.6g} (error proxy {pqrs.err_est:.2e})"
            )
        rho = params.eta * math.log(2.0 * rho) + base - math.atan(pqrs.Q / pqrs.P)
        if not rho > floor:
            raise NumericalError(f"Abramowitz iteration left rho > {floor} at sweep {sweep}")
        logger.debug("abramowitz sweep %d: rho = %.17g", sweep, rho)
    return rho


def negative_axis_zero(params: Params, kind: Kind, n: int, terms: int | None = None) -> float:
    """The n-th zero on the negative axis, via eta -> -eta."""
    return -mcmahon_zero(params.reflected(), kind, n, terms)
