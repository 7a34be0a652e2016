import math

import numpy as np
import pytest

from coulomb_zeros.asym_coeffs import build_table, eval_pqrs, theta, theta_prime
from coulomb_zeros.errors import DomainError
from coulomb_zeros.models import Params


def second_recurrence(lam: float, eta: float, K: int):
    """p_k, q_k from the complex form (k+1) f_{k+1} = (u_k - i v_k) f_k, f = p + i q."""
    v0 = -lam * lam - lam - eta * eta
    f = [1.0 + 0.0j]
    for k in range(K):
        f.append((eta * (2 * k + 1) - 1j * (k + k * k + v0)) * f[k] / (k + 1))
    return [z.real for z in f], [z.imag for z in f]


class TestBuildTable:
    def test_seeds_and_first_step(self):
        for lam, eta in [(0.0, 0.0), (1.3, 2.1), (-0.4, -3.0)]:
            table = build_table(Params(lam=lam, eta=eta), 3)
            assert (table.p[0], table.q[0], table.r[0], table.s[0]) == (1.0, 0.0, 1.0, 0.0)
            assert table.p[1] == pytest.approx(eta)
            assert table.q[1] == pytest.approx(lam * lam + lam + eta * eta)

    def test_free_particle_collapses(self):
        table = build_table(Params(lam=0.0, eta=0.0), 20)
        assert not np.any(table.p[1:]) and not np.any(table.q[1:])
        assert not np.any(table.r[1:]) and not np.any(table.s[1:])

    def test_matches_complex_recurrence(self):
        table = build_table(Params(lam=1.3, eta=2.1), 10)
        p, q = second_recurrence(1.3, 2.1, 10)
        np.testing.assert_allclose(table.p, p, rtol=1e-13)
        np.testing.assert_allclose(table.q, q, rtol=1e-13)

    def test_prefix_stable(self):
        params = Params(lam=1.3, eta=2.1)
        short, long = build_table(params, 12), build_table(params, 17)
        for name in "pqrs":
            assert np.array_equal(getattr(short, name), getattr(long, name)[:13])

    def test_odd_p_vanish_without_field(self):
        rng = np.random.default_rng(1)
        for lam in rng.uniform(0.0, 10.0, 5):
            table = build_table(Params(lam=lam, eta=0.0), 5)
            assert table.p[1] == 0.0
            assert table.p[3] == 0.0
            assert table.q[1] == pytest.approx(lam * lam + lam)

    def test_table_is_read_only(self):
        table = build_table(Params(lam=1.0, eta=1.0), 4)
        with pytest.raises(ValueError):
            table.p[0] = 2.0

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            build_table(Params(lam=0.0, eta=0.0), -1)


class TestEvalPQRS:
    def test_free_particle(self):
        table = build_table(Params(lam=0.0, eta=0.0), 30)
        for rho in [0.1, 1.0, 37.5]:
            assert eval_pqrs(table, rho) == (1.0, 0.0, 1.0, 0.0, 0.0)

    def test_error_proxy_decreases_with_rho(self):
        table = build_table(Params(lam=1.3, eta=2.1), 80)
        errors = [eval_pqrs(table, rho).err_est for rho in [5, 10, 20, 40, 80, 160, 320]]
        assert all(b < a for a, b in zip(errors, errors[1:]))
        assert errors[-1] < 1e-15

    def test_amplitude_identity(self):
        # the Wronskian of the amplitude form is P R - Q S
        table = build_table(Params(lam=1.3, eta=2.1), 80)
        P, Q, R, S, _ = eval_pqrs(table, 200.0)
        assert P * R - Q * S == pytest.approx(1.0, abs=1e-13)

    def test_nonpositive_rho_rejected(self):
        table = build_table(Params(lam=0.0, eta=0.0), 4)
        with pytest.raises(DomainError):
            eval_pqrs(table, 0.0)


class TestTheta:
    def test_free_particle_phase(self):
        assert theta(Params(lam=0.0, eta=0.0), math.pi) == pytest.approx(math.pi)

    def test_phase_at_first_rho0(self):
        assert theta(Params(lam=2.0, eta=1.5), 9.186) == pytest.approx(math.pi, abs=2e-3)

    def test_derivative_vanishes_at_eta(self):
        assert theta_prime(Params(lam=0.0, eta=1.0), 1.0) == 0.0

    @pytest.mark.parametrize("func", [theta, theta_prime])
    def test_nonpositive_rho_rejected(self, func):
        with pytest.raises(DomainError):
            func(Params(lam=0.0, eta=0.0), -1.0)
