"""
Large-rho expansions of the amplitude functions P, Q, R, S.

    F = sin(theta) P + cos(theta) Q        F' =  cos(theta) R + sin(theta) S
    G = cos(theta) P - sin(theta) Q        G' = -sin(theta) R + cos(theta) S

with P ~ sum p_k / (2 rho)^k and likewise for Q, R, S.
"""

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .gamma_phase import sigma
from .models import Params

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoeffTable:
    """p_k, q_k, r_k, s_k for k = 0..K."""
    params: Params
    K: int
    p: np.ndarray
    q: np.ndarray
    r: np.ndarray
    s: np.ndarray


class PQRS(NamedTuple):
    P: float
    Q: float
    R: float
    S: float
    err_est: float


def _readonly(values: list[float]) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


def build_table(params: Params, K: int) -> CoeffTable:
    """Run the coefficient recurrences up to index K.

    (k+1) p_{k+1} = u_k p_k + v_k q_k,   (k+1) q_{k+1} = -v_k p_k + u_k q_k,
    r_{k+1} = p_{k+1} - 2 eta p_k - 2k q_k,   s_{k+1} = -q_{k+1} + 2 eta q_k - 2k p_k,
    u_k = eta (2k+1),   v_k = k + k^2 - lambda^2 - lambda - eta^2.
    """
    if K < 0:
        raise DomainError(f"table order must be non-negative, got {K}")
    eta = params.eta
    v0 = params.v0
    p, q, r, s = [1.0], [0.0], [1.0], [0.0]
    for k in range(K):
        u_k = eta * (2 * k + 1)
        v_k = k + k * k + v0
        p_next = (u_k * p[k] + v_k * q[k]) / (k + 1)
        q_next = (-v_k * p[k] + u_k * q[k]) / (k + 1)
        p.append(p_next)
        q.append(q_next)
        r.append(p_next - 2.0 * eta * p[k] - 2.0 * k * q[k])
        s.append(-q_next + 2.0 * eta * q[k] - 2.0 * k * p[k])
    return CoeffTable(params=params, K=K, p=_readonly(p), q=_readonly(q), r=_readonly(r), s=_readonly(s))


def eval_pqrs(table: CoeffTable, rho: float) -> PQRS:
    """Sum the four series in powers of 1/(2 rho) with optimal truncation.

    The cut is placed before the first local minimum of the combined term size
    |p_k| + |q_k| + |r_k| + |s_k| over (2 rho)^k. ``err_est`` is the size of the
    first omitted P/Q term.
    """
    if not rho > 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    x = 1.0 / (2.0 * rho)
    powers = x ** np.arange(table.K + 1, dtype=np.float64)
    tp, tq, tr, ts = table.p * powers, table.q * powers, table.r * powers, table.s * powers
    size = np.abs(tp) + np.abs(tq) + np.abs(tr) + np.abs(ts)

    cut = table.K + 1
    for k in range(1, table.K + 1):
        if size[k] == 0.0 or k == table.K or size[k + 1] > size[k]:
            cut = k
            break
    if cut <= table.K:
        err_est = max(abs(tp[cut]), abs(tq[cut]))
    else:
        err_est = 0.0
    return PQRS(
        P=math.fsum(tp[:cut]),
        Q=math.fsum(tq[:cut]),
        R=math.fsum(tr[:cut]),
        S=math.fsum(ts[:cut]),
        err_est=float(err_est),
    )


def theta(params: Params, rho: float) -> float:
    """theta = rho - eta ln(2 rho) - lambda pi / 2 + sigma."""
    if not rho > 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    return rho - params.eta * math.log(2.0 * rho) - 0.5 * params.lam * math.pi + sigma(params)


def theta_prime(params: Params, rho: float) -> float:
    """theta' = 1 - eta / rho."""
    if not rho > 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    return 1.0 - params.eta / rho
