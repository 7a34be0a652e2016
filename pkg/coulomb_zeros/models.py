"""Parameter and kind types shared by every module."""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Kind(str, Enum):
    """Which Coulomb function's zeros are targeted."""
    F = "F"
    G = "G"
    dF = "dF"
    dG = "dG"

    @property
    def half_offset(self) -> bool:
        """True when the leading phase is (n - 1/2)pi instead of n pi."""
        return self in (Kind.G, Kind.dF)

    @property
    def is_derivative(self) -> bool:
        """True for the kinds whose zero condition is -sin(d)R + cos(d)S = 0."""
        return self in (Kind.dF, Kind.dG)

    @property
    def uses_irregular(self) -> bool:
        return self in (Kind.G, Kind.dG)

    def phase_multiple(self, n: int) -> float:
        return n - 0.5 if self.half_offset else float(n)


class Params(BaseModel):
    """The real parameter pair (lambda, eta).

    Attributes:
        lam: the angular parameter lambda, serialised as ``lambda``; must exceed -1.
        eta: the Coulomb parameter.

    Results are validated for |lambda| <= 50 and |eta| <= 50; outside that
    range they are best effort.
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lam: float = Field(alias="lambda")
    eta: float

    @field_validator("lam", "eta")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("parameters must be finite")
        return value

    @field_validator("lam")
    @classmethod
    def _above_minus_one(cls, value: float) -> float:
        if value <= -1.0:
            raise ValueError(f"lambda must exceed -1, got {value}")
        return value

    @property
    def v0(self) -> float:
        """v_0 = -lambda^2 - lambda - eta^2."""
        return -self.lam * self.lam - self.lam - self.eta * self.eta

    @property
    def centrifugal(self) -> float:
        """lambda(lambda + 1)."""
        return self.lam * (self.lam + 1.0)

    def reflected(self) -> "Params":
        """The parameters with eta -> -eta."""
        return Params(lam=self.lam, eta=-self.eta)
