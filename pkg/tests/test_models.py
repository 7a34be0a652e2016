import pytest
from pydantic import ValidationError

from coulomb_zeros.config import Settings, resolve_env_vars, settings
from coulomb_zeros.models import Kind, Params


class TestKind:
    def test_offsets(self):
        assert [k.phase_multiple(3) for k in (Kind.F, Kind.G, Kind.dF, Kind.dG)] == [3.0, 2.5, 2.5, 3.0]

    def test_zero_conditions(self):
        assert {k for k in Kind if k.is_derivative} == {Kind.dF, Kind.dG}
        assert {k for k in Kind if k.uses_irregular} == {Kind.G, Kind.dG}

    def test_values(self):
        assert Kind("dG") is Kind.dG


class TestParams:
    def test_alias(self):
        params = Params.model_validate({"lambda": 1.3, "eta": 2.1})
        assert params.lam == 1.3
        assert params.model_dump(by_alias=True) == {"lambda": 1.3, "eta": 2.1}

    def test_v0(self, params):
        assert params.v0 == pytest.approx(-7.40)
        assert params.centrifugal == pytest.approx(2.99)

    def test_reflected(self, params):
        assert params.reflected() == Params(lam=1.3, eta=-2.1)

    def test_frozen_and_hashable(self, params):
        with pytest.raises(ValidationError):
            params.eta = 0.0
        assert hash(params) == hash(Params(lam=1.3, eta=2.1))


class TestSettings:
    def test_defaults(self):
        assert settings.series_order == 12
        assert settings.default_terms == 6
        assert settings.bracket_fraction == 0.6

    def test_log_level_from_environment(self, monkeypatch):
        monkeypatch.setenv("COULOMB_ZEROS_LOG_LEVEL", "debug")
        resolved = resolve_env_vars({"log_level": "${COULOMB_ZEROS_LOG_LEVEL}"})
        assert Settings(**resolved).log_level == "DEBUG"

    def test_log_level_fallback(self, monkeypatch):
        monkeypatch.delenv("COULOMB_ZEROS_LOG_LEVEL", raising=False)
        assert resolve_env_vars({"log_level": "${COULOMB_ZEROS_LOG_LEVEL}"}) == {"log_level": "WARNING"}

    def test_unknown_placeholder(self, monkeypatch):
        monkeypatch.delenv("COULOMB_ZEROS_UNSET", raising=False)
        with pytest.raises(ValueError):
            resolve_env_vars({"x": "${COULOMB_ZEROS_UNSET}"})

    def test_constraints(self):
        with pytest.raises(ValidationError):
            Settings(bracket_fraction=1.5)
