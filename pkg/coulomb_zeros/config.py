import os
import json
import re

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator


load_dotenv()

with open(os.path.join(os.path.dirname(__file__), "defaults.json"), "r") as f:
    defaults = json.load(f)


# Fallbacks for ${VAR} placeholders that are unset in the environment.
ENV_FALLBACKS = {
    "COULOMB_ZEROS_LOG_LEVEL": "WARNING",
}


def resolve_env_vars(config: dict) -> dict:
    """Resolve ${VAR} placeholders in the packaged defaults"""
    resolved = {}
    for key, value in config.items():
        if isinstance(value, str):
            def replace_env_var(match):
                env_var = match.group(1)
                env_value = os.environ.get(env_var, "")
                if env_value == "":
                    if env_var in ENV_FALLBACKS:
                        return ENV_FALLBACKS[env_var]
                    raise ValueError(f"Environment variable {env_var} is not set")
                return env_value

            value = re.sub(r'\$\{([^}]+)\}', replace_env_var, value)
        resolved[key] = value
    return resolved


class Settings(BaseModel):
    """Numerical defaults shared by the library and the CLI.

    Attributes:
        series_order: truncation order K of the formal series in t = 1/rho0.
        default_terms: terms of a McMahon approximation, counting rho0 as the first.
        table_order: length of the P/Q/R/S coefficient tables used for evaluation.
        taylor_order: order of the local Taylor steps of the ODE oracle.
        ode_tolerance: relative tail bound for one Taylor step.
        anchor_tolerance: error proxy required at the large-rho anchor.
        anchor_start: first anchor tried for the irregular solution.
        anchor_cap: the anchor is doubled up to this value.
        bracket_fraction: refinement half-bracket, in half local wavelengths.
        samples_per_wavelength: sampling density of index verification.
        newton_max_iter: iteration cap of the safeguarded Newton solver.
        abramowitz_tolerance: largest error proxy accepted inside the Abramowitz iteration.
        log_level: logging verbosity; the only setting read from the environment.
    """
    model_config = ConfigDict(frozen=True)

    series_order: int = Field(12, ge=1)
    default_terms: int = Field(6, ge=1)
    table_order: int = Field(80, ge=1)
    taylor_order: int = Field(20, ge=4)
    ode_tolerance: float = Field(1e-16, gt=0)
    anchor_tolerance: float = Field(1e-15, gt=0)
    anchor_start: float = Field(50.0, gt=0)
    anchor_cap: float = Field(1e6, gt=0)
    bracket_fraction: float = Field(0.6, gt=0, lt=1)
    samples_per_wavelength: int = Field(40, ge=4)
    newton_max_iter: int = Field(100, ge=1)
    abramowitz_tolerance: float = Field(1e-6, gt=0)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        return value.upper()


settings = Settings(**resolve_env_vars(defaults))
