import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nonlocal_osc.core import (
    LambdaField,
    ModeCoeffs,
    NonPositiveParameter,
    OccupationState,
    PhysicalParams,
    RealityViolation,
    Trajectory,
    extend_field,
    field_grid,
    validate_params,
)
from nonlocal_osc.modes import psi, synthesize_field


class TestValidateParams:
    def test_valid(self):
        p = validate_params(1.0, 1.0, 1.0)
        assert (p.m, p.alpha, p.hbar) == (1.0, 1.0, 1.0)

    @pytest.mark.parametrize("m,alpha,hbar", [
        (-1.0, 1.0, 1.0),
        (1.0, 0.0, 1.0),
        (1.0, 1.0, -2.0),
        (math.nan, 1.0, 1.0),
        (1.0, math.inf, 1.0),
    ])
    def test_rejects(self, m, alpha, hbar):
        with pytest.raises(NonPositiveParameter):
            validate_params(m, alpha, hbar)

    def test_hbar_defaults_to_one(self):
        assert validate_params(2.0, 3.0).hbar == 1.0

    @given(st.floats(allow_nan=True, allow_infinity=True),
           st.floats(allow_nan=True, allow_infinity=True),
           st.floats(allow_nan=True, allow_infinity=True))
    def test_total(self, m, alpha, hbar):
        try:
            p = validate_params(m, alpha, hbar)
        except NonPositiveParameter:
            assert not all(math.isfinite(v) and v > 0 for v in (m, alpha, hbar))
        else:
            assert p.m > 0 and p.alpha > 0 and p.hbar > 0


class TestModeCoeffs:
    def test_window_and_partners(self):
        x = ModeCoeffs.from_dict({0: 1.0, -1: 2.0, 2: 3j})
        assert x.n_max == 3
        assert list(x.indices) == [-3, -2, -1, 0, 1, 2]
        # partner of n sits at -(n+1)
        for n in x.indices:
            assert x.partners()[n + x.n_max] == x[-(n + 1)]

    def test_real_flag_enforced(self):
        ModeCoeffs.from_dict({0: 1.0, -1: 1.0}, real=True)
        with pytest.raises(RealityViolation):
            ModeCoeffs.from_dict({0: 1.0, -1: 0.0}, real=True)

    def test_immutable(self):
        x = ModeCoeffs.zeros(2)
        with pytest.raises(ValueError):
            x.coeffs[0] = 1.0

    def test_index_out_of_window(self):
        with pytest.raises(IndexError):
            ModeCoeffs.zeros(2)[2]

    def test_random_real_is_real(self, rng):
        x = ModeCoeffs.random_real(5, rng)
        assert x.reality_residual() == 0.0


def test_occupation_nonnegative():
    with pytest.raises(ValueError):
        OccupationState((0, -1))
    assert OccupationState([1, 2]).occ == (1, 2)


def test_trajectory_times_increasing():
    with pytest.raises(ValueError):
        Trajectory([0.0, 0.0], [1.0, 1.0])
    with pytest.raises(ValueError):
        Trajectory([0.0, 1.0], [1.0])


def test_field_grid_power_of_two():
    p = PhysicalParams(1.0, 1.0)
    with pytest.raises(ValueError):
        LambdaField(p, np.zeros(12))


class TestExtendField:
    """Antiperiodic extension Q(lambda + 2 alpha) = -Q(lambda)."""

    @pytest.fixture
    def linear_field(self, rng):
        p = PhysicalParams(1.0, 0.5)
        return LambdaField(p, rng.standard_normal(64) + 1j * rng.standard_normal(64))

    def test_grid_points_exact(self, linear_field):
        grid = linear_field.grid
        np.testing.assert_array_equal(extend_field(linear_field, grid), linear_field.samples)
        # alpha = 0.5 is dyadic, so lambda + 2 alpha is exact on the grid
        np.testing.assert_array_equal(extend_field(linear_field, grid + 1.0), -linear_field.samples)
        np.testing.assert_array_equal(extend_field(linear_field, grid + 2.0), linear_field.samples)
        np.testing.assert_array_equal(extend_field(linear_field, grid - 1.0), -linear_field.samples)

    def test_linear_interpolation_wraps_with_sign(self, linear_field):
        s = linear_field.samples
        h = linear_field.spacing
        last = linear_field.grid[-1]
        # halfway between the last sample and lambda = alpha, where Q = -Q(-alpha)
        np.testing.assert_allclose(extend_field(linear_field, last + h / 2), 0.5 * (s[-1] - s[0]), rtol=1e-15)

    def test_band_limited_psi0(self):
        # Q = Psi_0 sampled; Q(alpha) = -Psi_0(-alpha) via the extension
        p = PhysicalParams(1.0, 0.75)
        field = synthesize_field(ModeCoeffs.from_dict({0: 1.0}), p, 128)
        direct = psi(0, -0.75, 0.75)
        np.testing.assert_allclose(extend_field(field, 0.75), -direct, atol=1e-15)
        # and the raw basis value agrees too
        np.testing.assert_allclose(extend_field(field, 0.75), psi(0, 0.75, 0.75), atol=1e-15)

    @given(st.floats(-50, 50), st.integers(-5, 5))
    def test_antiperiodic_property(self, lam, k):
        p = PhysicalParams(1.0, 0.5)
        vals = np.linspace(-1, 1, 32) ** 3
        field = LambdaField(p, vals)
        a = extend_field(field, lam)
        b = extend_field(field, lam + 2 * 0.5 * k)
        # exact up to rounding of lam + 2 alpha k itself; slope of the data is O(1)
        assert abs(b - (-1) ** (k % 2) * a) <= 1e-12 * (1 + abs(lam))
