"""
Truncated power series in one formal variable t.

All arithmetic is in floating point; every binary operation truncates to the
smaller order of its operands. Elementary functions of a series are built from
the coefficient recurrences that follow from f' = g(u) u'.
"""

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError


@dataclass(frozen=True)
class TruncSeries:
    """c_0 + c_1 t + ... + c_K t^K, with K = ``order``."""
    coeffs: tuple[float, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value: float, order: int) -> "TruncSeries":
        return cls((value,) + (0.0,) * order)

    @classmethod
    def variable(cls, order: int) -> "TruncSeries":
        """The series t itself."""
        if order == 0:
            return cls((0.0,))
        return cls((0.0, 1.0) + (0.0,) * (order - 1))

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls((0.0,) * (order + 1))

    def __getitem__(self, k: int) -> float:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise DomainError(f"cannot raise truncation order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1])

    def derivative(self) -> "TruncSeries":
        """d/dt, keeping the order (the top coefficient becomes unknown and is set to 0)."""
        shifted = [k * self.coeffs[k] for k in range(1, len(self.coeffs))]
        return TruncSeries(tuple(shifted) + (0.0,))

    def scale(self, factor: float) -> "TruncSeries":
        return TruncSeries(tuple(factor * c for c in self.coeffs))

    def shift(self) -> "TruncSeries":
        """Multiply by t, keeping the order."""
        return TruncSeries((0.0,) + self.coeffs[:-1])

    def __add__(self, other):
        if isinstance(other, (int, float)):
            return TruncSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1.0)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__


def _common_order(a: TruncSeries, b: TruncSeries) -> int:
    return min(a.order, b.order)


def _require_zero_constant(u: TruncSeries, name: str):
    if u.coeffs[0] != 0.0:
        raise DomainError(f"{name} needs a series without constant term, got {u.coeffs[0]!r}")


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    order = _common_order(a, b)
    return TruncSeries(tuple(a.coeffs[k] + b.coeffs[k] for k in range(order + 1)))


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product, truncated at the smaller order."""
    order = _common_order(a, b)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(order + 1):
        acc = 0.0
        for j in range(k + 1):
            acc += ac[j] * bc[k - j]
        out.append(acc)
    return TruncSeries(tuple(out))


def reciprocal(a: TruncSeries) -> TruncSeries:
    a0 = a.coeffs[0]
    if a0 == 0.0:
        raise DomainError("reciprocal of a series with zero constant term")
    inv = 1.0 / a0
    out = [inv]
    for k in range(1, a.order + 1):
        acc = 0.0
        for j in range(1, k + 1):
            acc += a.coeffs[j] * out[k - j]
        out.append(-inv * acc)
    return TruncSeries(tuple(out))


def log1p(u: TruncSeries) -> TruncSeries:
    """ln(1 + u) from (1 + u) f' = u'."""
    _require_zero_constant(u, "log1p")
    uc = u.coeffs
    f = [0.0]
    for k in range(1, u.order + 1):
        acc = 0.0
        for j in range(1, k):
            acc += (k - j) * uc[j] * f[k - j]
        f.append(uc[k] - acc / k)
    return TruncSeries(tuple(f))


def arctan(u: TruncSeries) -> TruncSeries:
    """arctan(u) from (1 + u^2) f' = u'."""
    _require_zero_constant(u, "arctan")
    d = mul(u, u).coeffs
    uc = u.coeffs
    f = [0.0]
    for k in range(1, u.order + 1):
        # d_0 = 1 because u has no constant term
        acc = 0.0
        for j in range(1, k):
            acc += d[j] * (k - j) * f[k - j]
        f.append(uc[k] - acc / k)
    return TruncSeries(tuple(f))


def sin_cos(u: TruncSeries) -> tuple[TruncSeries, TruncSeries]:
    """(sin u, cos u) from s' = c u', c' = -s u'."""
    _require_zero_constant(u, "sin_cos")
    uc = u.coeffs
    s = [0.0]
    c = [1.0]
    for k in range(1, u.order + 1):
        acc_s = 0.0
        acc_c = 0.0
        for j in range(1, k + 1):
            acc_s += j * uc[j] * c[k - j]
            acc_c += j * uc[j] * s[k - j]
        s.append(acc_s / k)
        c.append(-acc_c / k)
    return TruncSeries(tuple(s)), TruncSeries(tuple(c))


def polyval(coeffs: Sequence[float], x: TruncSeries) -> TruncSeries:
    """sum_k coeffs[k] x^k by Horner's rule; x must have no constant term.

    Coefficients beyond the order of x cannot contribute and are skipped.
    """
    _require_zero_constant(x, "polyval")
    top = min(len(coeffs) - 1, x.order)
    result = TruncSeries.constant(float(coeffs[top]), x.order)
    for k in range(top - 1, -1, -1):
        result = mul(result, x) + float(coeffs[k])
    return result
