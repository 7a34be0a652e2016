import math

import pytest

from coulomb_zeros.errors import DomainError, GuessTooFarError, IndexVerificationError
from coulomb_zeros.mcmahon import mcmahon_zero
from coulomb_zeros.models import Kind, Params
from coulomb_zeros.refiner import (
    RefinedZero,
    count_sign_changes,
    expansion_drift,
    min_n_for_accuracy,
    records,
    refine,
    residual,
    verify_index,
    zero_record,
)
from tests.conftest import F0_ZEROS, PUBLISHED_ZEROS


class TestRefine:
    def test_sine(self, bessel_params):
        result = refine(bessel_params, Kind.F, 3.0)
        assert result.rho == pytest.approx(math.pi, rel=1e-13)
        assert result.residual <= 1e-10

    def test_first_zero_of_f(self, params):
        result = refine(params, Kind.F, mcmahon_zero(params, Kind.F, 1))
        assert result.rho == pytest.approx(9.276226087098264, rel=1e-14)

    def test_tenth_zero_of_derivative_of_g(self, params):
        result = refine(params, Kind.dG, mcmahon_zero(params, Kind.dG, 10))
        assert result.rho == pytest.approx(41.02038500317911, rel=1e-14)

    def test_idempotent(self, params):
        once = refine(params, Kind.G, mcmahon_zero(params, Kind.G, 3)).rho
        twice = refine(params, Kind.G, once).rho
        assert abs(twice - once) < 1e-14 * once

    def test_guess_too_far(self, bessel_params):
        # the bracket is [0.5, 1 + 0.6 pi], where sin keeps its sign
        with pytest.raises(GuessTooFarError):
            refine(bessel_params, Kind.F, 1.0)

    def test_nonpositive_guess(self, params):
        with pytest.raises(DomainError):
            refine(params, Kind.F, -1.0)

    def test_residual_scale(self, params):
        rho = PUBLISHED_ZEROS[Kind.dF][4][0]
        assert residual(params, Kind.dF, rho) < 1e-10
        assert residual(params, Kind.dF, rho + 0.5) > 1e-3


class TestZeroRecord:
    def test_fields(self, params):
        record = zero_record(params, Kind.F, 10)
        assert record.rho_refined == pytest.approx(41.02118854245900, rel=1e-14)
        assert record.rel_error == pytest.approx(1.7e-8, rel=0.5)
        assert record.residual <= 1e-10
        assert record.terms == 6
        assert record.flag is None

    def test_unrefined(self, params):
        record = zero_record(params, Kind.G, 2, refine_zero=False)
        assert record.rho_refined is None and record.rel_error is None
        assert record.rho_mc == mcmahon_zero(params, Kind.G, 2)

    def test_abramowitz_method(self):
        params = Params(lam=0.0, eta=2.0)
        record = zero_record(params, Kind.F, 3, method="abramowitz")
        assert record.rel_error < 1e-6

    def test_abramowitz_method_needs_f(self, params):
        with pytest.raises(DomainError):
            zero_record(params, Kind.G, 3, method="abramowitz")

    def test_serialises_with_alias(self, params):
        data = zero_record(params, Kind.dF, 5).model_dump(mode="json", by_alias=True)
        assert list(data) == ["kind", "lambda", "eta", "n", "terms", "rho_mc", "rho_refined", "residual", "rel_error"]
        assert data["kind"] == "dF"

    def test_records_run(self, params):
        run = records(params, Kind.F, 1, 3)
        assert [r.n for r in run] == [1, 2, 3]
        assert all(r.flag is None for r in run)

    def test_drifting_expansion_is_flagged(self):
        params = Params(lam=0.5, eta=-5.0)
        run = records(params, Kind.F, 1, 8)
        for record in run[:2]:
            assert record.flag.startswith("expansion breaks down")
            assert record.rho_refined is None
        zeros = [r.rho_refined for r in run if r.flag is None]
        assert all(b > a for a, b in zip(zeros, zeros[1:]))

    def test_drift_within_bracket(self, params):
        for n in (1, 5, 10):
            assert expansion_drift(params, Kind.G, n, mcmahon_zero(params, Kind.G, n)) is None

    def test_out_of_order_zeros_are_flagged(self, params, monkeypatch):
        import coulomb_zeros.refiner as refiner

        monkeypatch.setattr(refiner, "refine", lambda params, kind, guess: RefinedZero(100.0 - guess, 0.0, 1))
        run = records(params, Kind.F, 1, 3)
        assert all(r.flag.startswith("refined zeros out of order") for r in run)


class TestPublishedTables:
    @pytest.mark.slow
    @pytest.mark.parametrize("kind", list(Kind))
    def test_table(self, params, kind):
        run = records(params, kind, 1, 10)
        for record, (rho, printed_error) in zip(run, PUBLISHED_ZEROS[kind]):
            assert record.rho_refined == pytest.approx(rho, rel=1e-14), f"n = {record.n}"
            assert printed_error / 1.5 < record.rel_error < printed_error * 1.5, f"n = {record.n}"
            assert record.residual <= 1e-10
        errors = [record.rel_error for record in run]
        assert all(b < a for a, b in zip(errors, errors[1:]))

    @pytest.mark.parametrize("eta, n", list(F0_ZEROS))
    def test_f0_zeros(self, eta, n):
        printed = F0_ZEROS[(eta, n)]
        places = len(printed.split(".")[1])
        record = zero_record(Params(lam=0.0, eta=eta), Kind.F, n)
        assert abs(record.rho_refined - float(printed)) < 10.0 ** -places

    def test_f_and_g_interlace(self, params):
        merged = sorted(
            [(rho, "F") for rho, _ in PUBLISHED_ZEROS[Kind.F]] + [(rho, "G") for rho, _ in PUBLISHED_ZEROS[Kind.G]]
        )
        assert [label for _, label in merged] == ["G", "F"] * 10
        refined = [zero_record(params, kind, 1).rho_refined for kind in (Kind.G, Kind.F)]
        assert refined[0] < refined[1]


class TestVerifyIndex:
    def test_sine(self, bessel_params):
        run = verify_index(bessel_params, Kind.F, 5)
        for n, record in enumerate(run, start=1):
            assert record.rho_refined == pytest.approx(n * math.pi, rel=1e-13)

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", list(Kind))
    def test_published_tables(self, params, kind):
        run = verify_index(params, kind, 10)
        expected = [rho for rho, _ in PUBLISHED_ZEROS[kind]]
        assert [r.rho_refined for r in run] == pytest.approx(expected, rel=1e-14)
        assert max(r.residual for r in run) <= 1e-10

    def test_irregular(self, params):
        run = verify_index(params, Kind.G, 3)
        assert [r.rho_refined for r in run] == pytest.approx(
            [6.925107084382577, 11.35971565567721, 15.20913702648054], rel=1e-14
        )

    def test_derivative(self, params):
        run = verify_index(params, Kind.dF, 3)
        assert len(run) == 3

    def test_count(self, bessel_params):
        assert count_sign_changes(bessel_params, Kind.F, 0.1, 10.0) == 3
        assert count_sign_changes(bessel_params, Kind.dF, 0.1, 10.0) == 3

    def test_mismatch_reported(self, params, monkeypatch):
        import coulomb_zeros.refiner as refiner

        monkeypatch.setattr(refiner, "count_sign_changes", lambda *args: 4)
        with pytest.raises(IndexVerificationError) as info:
            verify_index(params, Kind.F, 3)
        assert info.value.expected == 3
        assert info.value.counted == 4

    def test_rejects_empty_run(self, params):
        with pytest.raises(DomainError):
            verify_index(params, Kind.F, 0)


class TestMinN:
    def test_function(self, params):
        assert min_n_for_accuracy(params, Kind.F, 1e-6, 6) == 5

    def test_irregular(self, params):
        assert min_n_for_accuracy(params, Kind.G, 1e-6, 6) == 6

    def test_exact_expansion(self, bessel_params):
        assert min_n_for_accuracy(bessel_params, Kind.F, 1e-6) == 1

    def test_cap_reached(self, params):
        assert min_n_for_accuracy(params, Kind.F, 1e-12, 6, n_cap=3) is None

    def test_rejects_nonpositive_tolerance(self, params):
        with pytest.raises(DomainError):
            min_n_for_accuracy(params, Kind.F, 0.0)
