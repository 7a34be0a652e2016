"""
Coulomb phase shift and log-modulus of Gamma(lambda + 1 + i eta).

The argument is shifted upward until its real part reaches 10 and the Stirling
series is summed there. The phase is assembled from atan2 increments of the
shift plus the imaginary part of the Stirling sum, so it is continuous in eta
instead of being reduced modulo 2 pi.
"""

import cmath
import logging
import math

from .models import Params

logger = logging.getLogger(__name__)

SHIFT_THRESHOLD = 10.0
HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# B_2, B_4, ..., B_16
BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)

# B_2k / (2k (2k - 1))
STIRLING_COEFFS = tuple(b / ((2 * k) * (2 * k - 1)) for k, b in enumerate(BERNOULLI, start=1))


def _stirling(w: complex) -> complex:
    """log Gamma(w) for Re w >= SHIFT_THRESHOLD."""
    inv = 1.0 / w
    inv2 = inv * inv
    tail = 0.0j
    for c in reversed(STIRLING_COEFFS):
        tail = tail * inv2 + c
    return (w - 0.5) * cmath.log(w) - w + HALF_LOG_TWO_PI + tail * inv


def log_gamma_parts(a: float, b: float) -> tuple[float, float]:
    """(Re, Im) of log Gamma(a + i b) for a > 0, with the continuous phase."""
    real_shift = 0.0
    phase_shift = 0.0
    x = a
    while x < SHIFT_THRESHOLD:
        real_shift += math.log(math.hypot(x, b))
        phase_shift += math.atan2(b, x)
        x += 1.0
    tail = _stirling(complex(x, b))
    return tail.real - real_shift, tail.imag - phase_shift


def sigma(params: Params) -> float:
    """The Coulomb phase shift ph Gamma(lambda + 1 + i eta)."""
    if params.eta == 0.0:
        return 0.0
    return log_gamma_parts(params.lam + 1.0, params.eta)[1]


def log_abs_gamma(params: Params) -> float:
    """log |Gamma(lambda + 1 + i eta)|."""
    if params.eta == 0.0:
        return math.lgamma(params.lam + 1.0)
    return log_gamma_parts(params.lam + 1.0, params.eta)[0]


def log_f_norm_constant(params: Params) -> float:
    """log C_lambda(eta), C = 2^lambda e^(-pi eta/2) |Gamma(lambda+1+i eta)| / Gamma(2 lambda + 2)."""
    return (
        params.lam * math.log(2.0)
        - 0.5 * math.pi * params.eta
        + log_abs_gamma(params)
        - math.lgamma(2.0 * params.lam + 2.0)
    )


def f_norm_constant(params: Params) -> float:
    """C_lambda(eta) with F = C rho^(lambda+1) (1 + O(rho)) near the origin."""
    value = math.exp(log_f_norm_constant(params))
    if value == 0.0:
        logger.debug("normalisation constant underflows for %s", params)
    return value
