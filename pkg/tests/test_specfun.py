import math

import numpy as np
import pytest

from fracbk import (
    DomainError,
    beta,
    binomial,
    log_binomial,
    log_gamma,
    moment_coeff,
)
from fracbk.specfun import LOG_ZERO


class TestLogGamma:
    def test_integer_argument(self):
        assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-15)

    def test_half_argument(self):
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-15)

    def test_one(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
    def test_nonpositive_rejected(self, x):
        with pytest.raises(DomainError):
            log_gamma(x)


class TestBeta:
    def test_known_value(self):
        assert beta(2.5, 1.5) == pytest.approx(math.pi / 16.0, rel=1e-14)

    def test_symmetry(self, rng):
        a = rng.uniform(0.1, 10.0, size=50)
        b = rng.uniform(0.1, 10.0, size=50)
        for ai, bi in zip(a, b):
            assert beta(ai, bi) == pytest.approx(beta(bi, ai), rel=1e-14)

    def test_gamma_identity(self, rng):
        for _ in range(1000):
            a = float(rng.uniform(0.0, 10.0)) or 1e-3
            b = float(rng.uniform(0.0, 10.0)) or 1e-3
            if a <= 0.0 or b <= 0.0:
                continue
            expected = math.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b))
            assert beta(a, b) == pytest.approx(expected, rel=1e-13)


class TestBinomial:
    def test_small_coefficient(self):
        assert log_binomial(5, 2) == pytest.approx(math.log(10.0), rel=1e-14)
        assert binomial(5, 2) == pytest.approx(10.0, rel=1e-13)

    def test_out_of_range_is_log_zero(self):
        assert log_binomial(3, 5) == LOG_ZERO
        assert log_binomial(3, -1) == LOG_ZERO
        assert binomial(3, 5) == 0.0

    def test_negative_n_rejected(self):
        with pytest.raises(DomainError):
            log_binomial(-1, 0)

    def test_edges(self):
        assert log_binomial(7, 0) == pytest.approx(0.0, abs=1e-15)
        assert log_binomial(7, 7) == pytest.approx(0.0, abs=1e-15)

    def test_pascal_row(self):
        row = [binomial(6, k) for k in range(7)]
        assert row == pytest.approx([1, 6, 15, 20, 15, 6, 1], rel=1e-12)


class TestMomentCoeff:
    def test_order_zero(self):
        assert moment_coeff(3.0, 2.0, 0) == pytest.approx(1.0, rel=1e-15)

    def test_simple_weight(self):
        assert moment_coeff(1.0, 1.0, 1) == pytest.approx(0.5, rel=1e-14)

    def test_first_order(self):
        assert moment_coeff(2.0, 4.0, 1) == pytest.approx(1.0 / 15.0, rel=1e-13)

    def test_second_order(self):
        assert moment_coeff(2.0, 4.0, 2) == pytest.approx(1.0 / 45.0, rel=1e-13)

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            moment_coeff(2.0, 4.0, -1)

    def test_bounded_on_random_draws(self, rng):
        for _ in range(200):
            eta = float(rng.uniform(0.05, 8.0))
            gamma = float(rng.uniform(0.05, 8.0))
            k = int(rng.integers(0, 6))
            c = moment_coeff(eta, gamma, k)
            assert 0.0 < c <= 1.0

    def test_decreasing_in_order(self, rng):
        for _ in range(100):
            eta = float(rng.uniform(0.2, 6.0))
            gamma = float(rng.uniform(0.2, 6.0))
            values = [moment_coeff(eta, gamma, k) for k in range(5)]
            assert all(a >= b for a, b in zip(values, values[1:]))

    def test_quadrature_moment_identity(self):
        # eta * integral of t^(gamma*k) * (1-t)^(eta-1) equals
        # eta * B(gamma*k + 1, eta), which the coefficient encodes.
        eta, gamma, k = 2.5, 3.0, 2
        expected = eta * beta(gamma * k + 1.0, eta)
        assert moment_coeff(eta, gamma, k) == pytest.approx(expected, rel=1e-13)
