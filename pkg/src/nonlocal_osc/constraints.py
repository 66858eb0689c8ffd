"""Delta kernel, the variational density epsilon, momentum reconstruction and phi_2 residuals.

Sign convention: sgn(0) = 0, so the Delta rectangle carries half height at
lambda = 0 and lambda = alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import LambdaField, ModeCoeffs, PhysicalParams, _frozen, extend_field
from .modes import psi


def delta_kernel(lam, params: PhysicalParams):
    """(m / 2 alpha^2) (sgn(lambda - alpha) - sgn(lambda))."""
    alpha = params.alpha
    lam = np.asarray(lam, dtype=float)
    out = params.m / (2 * alpha ** 2) * (np.sign(lam - alpha) - np.sign(lam))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class EpsilonDensity:
    """epsilon(sigma, lambda) = sum_i weight_i * delta(sigma - shift_i).

    Stored as exactly two point masses; never sampled on a grid.
    """

    lam: np.ndarray
    shifts: np.ndarray   # shape (2, *lam.shape)
    weights: np.ndarray  # shape (2, *lam.shape)

    def integral(self):
        """Integral over sigma."""
        return self.weights[0] + self.weights[1]

    def sgn_weighted_integral(self):
        """(1/2) integral over sigma of (sgn(lambda) - sgn(sigma)) epsilon."""
        lam_sign = np.sign(self.lam)
        total = 0.0
        for s, w in zip(self.shifts, self.weights):
            total = total + 0.5 * (lam_sign - np.sign(s)) * w
        return total


def epsilon_density(field: LambdaField, lam) -> EpsilonDensity:
    """Functional derivative of -(m/alpha^2) Q(sigma) Q(sigma + alpha) with respect to Q(lambda)."""
    alpha = field.params.alpha
    c = field.params.m / alpha ** 2
    lam = np.asarray(lam, dtype=float)
    shifts = np.stack([lam, lam - alpha])
    weights = np.stack([
        -c * np.asarray(extend_field(field, lam + alpha)),
        -c * np.asarray(extend_field(field, lam - alpha)),
    ])
    return EpsilonDensity(_frozen(lam), _frozen(shifts), _frozen(weights))


@dataclass(frozen=True)
class MomentumField:
    """P(lambda) on the field grid; identically zero outside [0, alpha]."""

    params: PhysicalParams
    samples: np.ndarray
    source: LambdaField

    def at(self, lam):
        """P at arbitrary lambda, Delta(lambda) Q(lambda - alpha)."""
        return delta_kernel(lam, self.params) * extend_field(self.source, np.asarray(lam, dtype=float) - self.params.alpha)


def momentum_field(field: LambdaField, params: PhysicalParams = None) -> MomentumField:
    """Solve the primary constraint for P: P(lambda) = Delta(lambda) Q(lambda - alpha)."""
    params = field.params if params is None else params
    lam = field.grid
    samples = delta_kernel(lam, params) * extend_field(field, lam - params.alpha)
    return MomentumField(params, _frozen(samples), field)


def phi2_residual(coeffs: ModeCoeffs, lambda_samples, alpha: float, basis=psi,
                  relative: bool = True) -> float:
    """max |Q(lambda - alpha) + Q(lambda + alpha)| from raw basis sums.

    No antiperiodic reduction is applied: each shifted point is fed to the
    basis directly. With ``relative`` the result is divided by max|Q| over
    the same samples.
    """
    lam = np.atleast_1d(np.asarray(lambda_samples, dtype=float))
    n = coeffs.indices

    def q(x):
        return basis(n[None, :], x[:, None], alpha) @ coeffs.coeffs

    res = float(np.max(np.abs(q(lam - alpha) + q(lam + alpha))))
    if not relative:
        return res
    scale = float(np.max(np.abs(q(lam))))
    return res / scale if scale > 0 else res
