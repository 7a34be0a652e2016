"""
Refinement of McMahon approximations against the ODE oracle.
"""

import logging
import math
from typing import Literal, NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from . import oracle
from .asym_coeffs import theta_prime
from .config import settings
from .errors import DomainError, GuessTooFarError, IndexTooSmallError, IndexVerificationError, NumericalError
from .mcmahon import abramowitz_iterate, mcmahon_zero, rho0_rhs, solve_rho0
from .models import Kind, Params
from .rootfind import safeguarded_newton

logger = logging.getLogger(__name__)

Method = Literal["mcmahon", "abramowitz"]


class RefinedZero(NamedTuple):
    rho: float
    residual: float
    iterations: int


class ZeroRecord(BaseModel):
    """One zero: its approximation, its refined value and their relative distance.

    ``flag`` carries a per-row failure message and is not serialised.
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: Kind
    lam: float = Field(alias="lambda")
    eta: float
    n: int
    terms: int
    rho_mc: float | None = None
    rho_refined: float | None = None
    residual: float | None = None
    rel_error: float | None = None
    flag: str | None = Field(default=None, exclude=True)


def target(params: Params, kind: Kind, rho: float) -> tuple[float, float, float]:
    """(f, f', residual scale) of the function whose zeros are sought.

    The second derivative of F or G is q(rho) times the function itself.
    """
    if kind.uses_irregular:
        w, dw = oracle.irregular(params, rho)
    else:
        w, dw = oracle.regular(params, rho)
    if kind.is_derivative:
        f, df = dw, oracle.q_value(params, rho) * w
    else:
        f, df = w, dw
    wavenumber = max(abs(theta_prime(params, rho)), 1e-3)
    return f, df, abs(f) + abs(df) / wavenumber


def residual(params: Params, kind: Kind, rho: float) -> float:
    """|f| scaled by the local amplitude |f| + |f'| / theta'."""
    f, _, scale = target(params, kind, rho)
    return abs(f) / scale if scale > 0.0 else 0.0


def refine(params: Params, kind: Kind, guess: float) -> RefinedZero:
    """Newton iteration inside a sign-change bracket of half-width 0.6 pi / theta'."""
    if not guess > 0.0:
        raise DomainError(f"guess must be positive, got {guess}")
    wavenumber = theta_prime(params, guess)
    if wavenumber <= 0.0:
        raise GuessTooFarError(f"guess {guess} lies inside the turning region (theta' = {wavenumber:.3g})")
    half_width = settings.bracket_fraction * math.pi / wavenumber
    lo = max(guess - half_width, 0.5 * guess)
    hi = guess + half_width

    def func(rho: float) -> tuple[float, float]:
        f, df, _ = target(params, kind, rho)
        return f, df

    f_mid, df_mid = func(guess)
    if f_mid == 0.0:
        return RefinedZero(guess, 0.0, 0)
    f_lo, _ = func(lo)
    f_hi, _ = func(hi)
    left = (f_lo > 0.0) != (f_mid > 0.0)
    right = (f_hi > 0.0) != (f_mid > 0.0)
    estimate = guess - f_mid / df_mid if df_mid != 0.0 else guess
    if left and right:
        bracket = (lo, guess) if estimate < guess else (guess, hi)
    elif left:
        bracket = (lo, guess)
    elif right:
        bracket = (guess, hi)
    else:
        raise GuessTooFarError(f"no sign change of {kind.value} in [{lo:.6g}, {hi:.6g}]")

    x0 = estimate if bracket[0] < estimate < bracket[1] else None
    root = safeguarded_newton(
        func, bracket[0], bracket[1], x0=x0, xtol=1e-14 * guess, max_iter=settings.newton_max_iter
    )
    res = residual(params, kind, root.x)
    logger.debug("refined %s zero %.17g -> %.17g (%d iterations)", kind.value, guess, root.x, root.iterations)
    return RefinedZero(root.x, res, root.iterations)


def zero_record(
    params: Params,
    kind: Kind,
    n: int,
    terms: int | None = None,
    refine_zero: bool = True,
    method: Method = "mcmahon",
) -> ZeroRecord:
    terms = settings.default_terms if terms is None else terms
    if method == "abramowitz":
        if kind is not Kind.F:
            raise DomainError("the Abramowitz iteration applies to zeros of F only")
        rho_mc = abramowitz_iterate(params, n)
    else:
        rho_mc = mcmahon_zero(params, kind, n, terms)
    record = ZeroRecord(kind=kind, lam=params.lam, eta=params.eta, n=n, terms=terms, rho_mc=rho_mc)
    return refine_record(params, record) if refine_zero else record


def refine_record(params: Params, record: ZeroRecord) -> ZeroRecord:
    """The record with its refined zero, residual and relative error filled in."""
    refined = refine(params, record.kind, record.rho_mc)
    return record.model_copy(
        update={
            "rho_refined": refined.rho,
            "residual": refined.residual,
            "rel_error": abs(record.rho_mc - refined.rho) / refined.rho,
        }
    )


def _sampling_grid(params: Params, start: float, end: float) -> np.ndarray:
    """Points from start to end, at least ``samples_per_wavelength`` per local wavelength."""
    density = settings.samples_per_wavelength
    points = []
    rho = start
    while rho < end:
        points.append(rho)
        wavenumber = max(
            math.sqrt(abs(oracle.q_value(params, rho))),
            abs(theta_prime(params, rho)),
            0.1,
        )
        rho += 2.0 * math.pi / (density * wavenumber)
    points.append(end)
    return np.array(points)


def count_sign_changes(params: Params, kind: Kind, start: float, end: float) -> int:
    grid = _sampling_grid(params, start, end)
    w, dw = oracle.sweep(params, grid, irregular_solution=kind.uses_irregular)
    values = dw if kind.is_derivative else w
    signs = np.sign(values)
    signs = signs[signs != 0.0]
    return int(np.count_nonzero(np.diff(signs) != 0.0))


def verify_index(params: Params, kind: Kind, upto_n: int, terms: int | None = None) -> list[ZeroRecord]:
    """Refine zeros 1..upto_n and confirm their indices by counting sign changes."""
    if upto_n < 1:
        raise DomainError(f"upto_n must be >= 1, got {upto_n}")
    records = [zero_record(params, kind, n, terms) for n in range(1, upto_n + 1)]
    for prev, curr in zip(records, records[1:]):
        if not curr.rho_refined > prev.rho_refined:
            raise IndexVerificationError(upto_n, curr.n - 1, (prev.rho_refined, curr.rho_refined))

    first = records[0].rho_refined
    last = records[-1].rho_refined
    # F and F' keep one sign where q > 0; the sampled range starts inside that region
    tp = oracle.turning_point(params)
    start = 0.5 * min(tp, first) if tp is not None else 0.05 * first
    # a quarter wavelength past the last zero stays clear of the next one
    end = last + 0.5 * math.pi / theta_prime(params, last)
    counted = count_sign_changes(params, kind, start, end)
    if counted != upto_n:
        raise IndexVerificationError(upto_n, counted, (start, end))
    return records


def min_n_for_accuracy(
    params: Params,
    kind: Kind,
    tol: float,
    terms: int | None = None,
    n_cap: int = 50,
) -> int | None:
    """Smallest n <= n_cap whose McMahon approximation has relative error below tol.

    Returns None when the cap is reached.
    """
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    for n in range(1, n_cap + 1):
        try:
            record = zero_record(params, kind, n, terms)
        except (IndexTooSmallError, GuessTooFarError) as exc:
            logger.debug("n = %d skipped: %s", n, exc)
            continue
        if record.rel_error < tol:
            return n
    return None


def expansion_drift(params: Params, kind: Kind, n: int, rho_mc: float) -> str | None:
    """Why rho_mc cannot be the n-th zero, or None when it stays near rho0.

    The corrections may move rho0 by at most the refinement half-bracket
    ``bracket_fraction`` pi / theta'(rho0); beyond that the expansion has broken
    down and refinement would land on some other zero.
    """
    rho0 = solve_rho0(params, rho0_rhs(params, kind, n), n)
    wavenumber = theta_prime(params, rho0)
    if wavenumber <= 0.0:
        return f"rho0 = {rho0:.6g} lies inside the turning region"
    limit = settings.bracket_fraction * math.pi / wavenumber
    if abs(rho_mc - rho0) > limit:
        return f"expansion breaks down: rho_mc = {rho_mc:.6g} is {abs(rho_mc - rho0):.3g} from rho0 = {rho0:.6g}"
    return None


def records(
    params: Params,
    kind: Kind,
    n_start: int,
    n_end: int,
    terms: int | None = None,
    refine_zero: bool = True,
    method: Method = "mcmahon",
) -> list[ZeroRecord]:
    """One record per n in n_start..n_end.

    Indices without an admissible rho0, numerical failures, approximations
    that drift away from rho0 and refined zeros out of increasing order become
    flagged rows instead of aborting the run.
    """
    terms = settings.default_terms if terms is None else terms
    out = []
    for n in range(n_start, n_end + 1):
        try:
            record = zero_record(params, kind, n, terms, refine_zero=False, method=method)
            drift = expansion_drift(params, kind, n, record.rho_mc)
            if drift is not None:
                logger.warning("%s zero n = %d flagged: %s", kind.value, n, drift)
                record = record.model_copy(update={"flag": drift})
            elif refine_zero:
                record = refine_record(params, record)
        except IndexTooSmallError:
            record = ZeroRecord(kind=kind, lam=params.lam, eta=params.eta, n=n, terms=terms, flag="index too small")
        except NumericalError as exc:
            logger.warning("%s zero n = %d failed: %s", kind.value, n, exc)
            record = ZeroRecord(kind=kind, lam=params.lam, eta=params.eta, n=n, terms=terms, flag=str(exc))
        out.append(record)

    refined = [i for i, r in enumerate(out) if r.flag is None and r.rho_refined is not None]
    for i, j in zip(refined, refined[1:]):
        if out[j].rho_refined <= out[i].rho_refined:
            message = (
                f"refined zeros out of order: n = {out[i].n} at {out[i].rho_refined:.6g}, "
                f"n = {out[j].n} at {out[j].rho_refined:.6g}"
            )
            logger.warning("%s", message)
            for k in (i, j):
                if out[k].flag is None:
                    out[k] = out[k].model_copy(update={"flag": message})
    return out
