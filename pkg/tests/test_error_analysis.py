import math

import numpy as np
import pytest

from fracbk import (
    DomainError,
    OperatorParams,
    bound_kfunctional,
    bound_lipschitz,
    bound_t2,
    central_moments,
    error_table,
    max_error,
    modulus_continuity,
    parse_source,
    second_modulus,
)

from conftest import draw_params


class TestModulusContinuity:
    def test_identity_function_exact(self):
        est = modulus_continuity(lambda u: u, 0.2, grid_n=4001)
        assert est.value == pytest.approx(0.2, abs=1e-12)
        assert est.delta == 0.2
        assert est.grid_n == 4001

    def test_zero_delta(self):
        assert modulus_continuity(lambda u: np.sin(u), 0.0).value == 0.0

    def test_constant_function(self):
        assert modulus_continuity(lambda u: np.full_like(u, 3.0), 0.5).value == 0.0

    def test_monotone_in_delta(self):
        f = parse_source("z*(z-4/7)*sin(pi*z)")
        values = [modulus_continuity(f, d, grid_n=2001).value for d in (0.05, 0.1, 0.2, 0.4)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_negative_delta_rejected(self):
        with pytest.raises(DomainError):
            modulus_continuity(lambda u: u, -0.1)

    def test_tiny_grid_rejected(self):
        with pytest.raises(DomainError):
            modulus_continuity(lambda u: u, 0.1, grid_n=50)

    def test_grid_refinement_stable(self):
        f = parse_source("z*(z-4/7)*sin(pi*z)")
        coarse = modulus_continuity(f, 0.1, grid_n=4001).value
        fine = modulus_continuity(f, 0.1, grid_n=8001).value
        assert fine == pytest.approx(coarse, rel=1e-3)
        # the grid estimate approaches the modulus from below
        assert fine >= coarse - 1e-12

    def test_delta_above_one_saturates(self):
        f = parse_source("(1-z)*cos(2*pi*z)")
        full = modulus_continuity(f, 1.0, grid_n=2001).value
        over = modulus_continuity(f, 1.7, grid_n=2001).value
        assert over == pytest.approx(full, abs=1e-15)


class TestSecondModulus:
    def test_square_function(self):
        # (u+2h)^2 - 2(u+h)^2 + u^2 = 2h^2, so the supremum is 2*delta^2.
        est = second_modulus(lambda u: u * u, 0.25, grid_n=4001)
        assert est.value == pytest.approx(2.0 * 0.25**2, rel=1e-9)

    def test_affine_function_vanishes(self):
        est = second_modulus(lambda u: 3.0 * u - 1.0, 0.3)
        assert est.value == pytest.approx(0.0, abs=1e-13)

    def test_monotone_in_delta(self):
        f = parse_source("(1-z)*cos(2*pi*z)")
        values = [second_modulus(f, d, grid_n=2001).value for d in (0.05, 0.1, 0.2)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_validation(self):
        with pytest.raises(DomainError):
            second_modulus(lambda u: u, -0.1)
        with pytest.raises(DomainError):
            second_modulus(lambda u: u, 0.1, grid_n=10)


class TestBoundT2:
    def test_identity_function_formula(self):
        # omega(e1; delta) = delta, so the bound is 2*sqrt(xi2) up to
        # the grid snapping of the shift count.
        params = OperatorParams(m=25, eta=2.0, gamma=3.0, alpha=0.6, s=2)
        xi2 = central_moments(params, 0.4).xi2
        bound = bound_t2(params, lambda u: u, 0.4)
        assert bound == pytest.approx(2.0 * math.sqrt(xi2), rel=5e-3)

    def test_dominates_identity_error(self, rng):
        for _ in range(50):
            params = draw_params(rng, eta_range=(0.3, 5.0))
            z = float(rng.uniform(0.0, 1.0))
            cm = central_moments(params, z)
            actual = abs(cm.zeta)  # operator error for f = e1
            assert bound_t2(params, lambda u: u, z) + 1e-9 >= actual


class TestBoundLipschitz:
    def test_formula(self):
        params = OperatorParams(m=10, eta=1.0, gamma=1.0, alpha=1.0, s=2)
        xi2 = central_moments(params, 0.5).xi2
        assert bound_lipschitz(params, 2.0, 1.0, 0.5) == pytest.approx(
            2.0 * math.sqrt(xi2), rel=1e-14
        )

    def test_dominates_kink_function(self, rng):
        # |u - 1/2| is Lipschitz with M=1, kappa=1.
        from fracbk import apply

        f = lambda u: np.abs(u - 0.5)
        for _ in range(100):
            params = draw_params(rng, m_max=80, eta_range=(0.3, 5.0))
            z = float(rng.uniform(0.0, 1.0))
            actual = abs(apply(params, f, z) - abs(z - 0.5))
            assert bound_lipschitz(params, 1.0, 1.0, z) + 1e-12 >= actual

    def test_validation(self):
        params = OperatorParams(m=10, eta=1.0, gamma=1.0, alpha=1.0, s=2)
        with pytest.raises(DomainError):
            bound_lipschitz(params, 0.0, 1.0, 0.5)
        with pytest.raises(DomainError):
            bound_lipschitz(params, 1.0, 0.0, 0.5)
        with pytest.raises(DomainError):
            bound_lipschitz(params, 1.0, 1.5, 0.5)


class TestBoundKFunctional:
    def test_affine_reduces_to_first_modulus(self):
        # For affine f the second modulus vanishes and the bound is
        # |slope| * |zeta| up to grid snapping.
        params = OperatorParams(m=30, eta=2.0, gamma=4.0, alpha=0.8, s=2)
        cm = central_moments(params, 0.2)
        bound = bound_kfunctional(params, lambda u: 3.0 * u - 1.0, 0.2, C=5.0)
        assert bound == pytest.approx(3.0 * abs(cm.zeta), rel=5e-3)

    def test_nonnegative(self, rng):
        f = parse_source("(1-z)*cos(2*pi*z)")
        for _ in range(10):
            params = draw_params(rng, eta_range=(0.3, 5.0))
            z = float(rng.uniform(0.0, 1.0))
            assert bound_kfunctional(params, f, z, C=2.5) >= 0.0


class TestErrorTable:
    def test_known_column(self):
        # m=40 column of the first tabulated experiment.
        params = OperatorParams(m=40, eta=2.0, gamma=4.0, alpha=0.9, s=3)
        f = parse_source("z*(z-4/7)*sin(pi*z)")
        zs = [round(0.1 * k, 1) for k in range(1, 10)]
        expected = [
            0.00123805,
            0.00233038,
            0.00639784,
            0.00702828,
            0.00255941,
            0.00540837,
            0.01226355,
            0.01186536,
            0.00107304,
        ]
        table = error_table(params, f, zs)
        got = [row[3] for row in table.rows]
        assert np.allclose(got, expected, atol=5e-6)
        assert table.max_error == pytest.approx(max(got))

    def test_spot_cells(self):
        f2 = parse_source("(1-z)*cos(2*pi*z)")
        p2 = OperatorParams(m=90, eta=3.0, gamma=2.0, alpha=0.95, s=3)
        t2 = error_table(p2, f2, [0.5])
        assert t2.rows[0][3] == pytest.approx(0.02268652, abs=5e-6)

        f3 = parse_source("22*z*(z-0.9)*(z-0.3)")
        p3 = OperatorParams(m=70, eta=3.0, gamma=2.0, alpha=0.75, s=2)
        t3 = error_table(p3, f3, [0.8])
        assert t3.rows[0][3] == pytest.approx(0.00127291, abs=5e-6)

    def test_row_structure(self):
        params = OperatorParams(m=5, eta=1.0, gamma=1.0, alpha=1.0, s=2)
        table = error_table(params, lambda u: u, [0.25, 0.75])
        for z, exact, approx, err in table.rows:
            assert err == pytest.approx(abs(exact - approx), abs=1e-18)
        assert table.rows[0][0] == 0.25
        assert table.rows[0][1] == 0.25

    def test_csv_round_trip(self):
        params = OperatorParams(m=7, eta=2.0, gamma=3.0, alpha=0.4, s=2)
        f = parse_source("z*(z-2/5)*(z-7/8)")
        table = error_table(params, f, [0.1, 0.37, 0.9])
        text = table.to_csv(comments=("setting: demo",))
        lines = text.strip().split("\n")
        assert lines[0] == "# setting: demo"
        assert lines[1] == "z,exact,approx,abs_error"
        assert lines[-1] == f"# max_error={table.max_error!r}"
        for row, line in zip(table.rows, lines[2:-1]):
            parsed = tuple(float(tok) for tok in line.split(","))
            assert parsed == row


class TestMaxError:
    def test_constant_function_zero(self):
        params = OperatorParams(m=12, eta=2.0, gamma=3.0, alpha=0.5, s=2)
        assert max_error(params, lambda u: np.full_like(u, 2.5)) == pytest.approx(
            0.0, abs=1e-13
        )

    def test_consistent_with_error_table(self):
        params = OperatorParams(m=10, eta=2.0, gamma=3.0, alpha=0.9, s=2)
        f = parse_source("z*(z-2/5)*(z-7/8)")
        zs = np.linspace(0.0, 1.0, 101)
        table = error_table(params, f, zs)
        assert max_error(params, f, grid_n=101) == pytest.approx(table.max_error, abs=1e-15)
        # a finer grid can only reveal a larger supremum
        assert max_error(params, f, grid_n=1001) >= table.max_error - 1e-15

    def test_grid_validation(self):
        params = OperatorParams(m=10, eta=1.0, gamma=1.0, alpha=1.0, s=2)
        with pytest.raises(DomainError):
            max_error(params, lambda u: u, grid_n=10)
