"""Exact time evolution, trajectories, the delayed equation of motion and the Hamiltonians."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import roots_legendre

from .core import (
    CVars,
    LambdaField,
    ModeCoeffs,
    NonRealEnergy,
    NonRealTrajectory,
    PhysicalParams,
    Trajectory,
    extend_field,
    mode_frequency,
    phase_turns,
    unit_phase,
)
from .modes import project


@dataclass(frozen=True)
class FrequencySpectrum:
    """omega_n = pi (2n+1) / (2 alpha) for every integer n.

    Subclasses may override ``turns`` to perturb the dispersion law; every
    evolution routine routes its phases through it.
    """

    alpha: float

    def omega(self, n):
        return mode_frequency(n, self.alpha)

    def turns(self, n, t):
        return phase_turns(n, t, self.alpha)

    def phase(self, n, t):
        """exp(i omega_n t)."""
        return unit_phase(self.turns(n, t))


def _spectrum(alpha, spectrum):
    return FrequencySpectrum(alpha) if spectrum is None else spectrum


def evolve_modes(coeffs: ModeCoeffs, t: float, alpha: float, spectrum: FrequencySpectrum = None) -> ModeCoeffs:
    sp = _spectrum(alpha, spectrum)
    return ModeCoeffs(coeffs.n_max, coeffs.coeffs * sp.phase(coeffs.indices, t))


def shift_evolve_field(field: LambdaField, t: float) -> LambdaField:
    """Q(t, lambda) = Q(0, lambda + t), resampled on the canonical grid."""
    samples = extend_field(field, field.grid + t)
    return LambdaField(field.params, samples, interpolant=lambda r: extend_field(field, r + t))


def complex_trajectory(coeffs: ModeCoeffs, times, alpha: float, sp: FrequencySpectrum = None) -> np.ndarray:
    """Q(t, 0) without discarding the imaginary part."""
    sp = _spectrum(alpha, sp)
    times = np.atleast_1d(np.asarray(times, dtype=float))
    n = coeffs.indices
    return (sp.phase(n[None, :], times[:, None]) @ coeffs.coeffs) / np.sqrt(2 * alpha)


def trajectory(coeffs: ModeCoeffs, times, alpha: float, spectrum: FrequencySpectrum = None,
               tol: float = 1e-10) -> Trajectory:
    """q(t) = Q(t, 0); raises NonRealTrajectory if Im q exceeds tol (relative to max|q|, floor 1)."""
    q = complex_trajectory(coeffs, times, alpha, _spectrum(alpha, spectrum))
    residue = float(np.max(np.abs(q.imag), initial=0.0))
    scale = max(1.0, float(np.max(np.abs(q.real), initial=0.0)))
    if residue > tol * scale:
        raise NonRealTrajectory(f"max |Im q| = {residue:.3e} exceeds {tol:.1e} * {scale:.3g}")
    return Trajectory(np.asarray(times, dtype=float), q.real)


def eom_residual(coeffs: ModeCoeffs, t, alpha: float, spectrum: FrequencySpectrum = None):
    """|q(t - alpha) + q(t + alpha)|.

    q(t +- alpha) is read off the state evolved by +-alpha, so the delay is
    applied through the same phase law as the evolution itself.
    """
    sp = _spectrum(alpha, spectrum)
    later = evolve_modes(coeffs, alpha, alpha, sp)
    earlier = evolve_modes(coeffs, -alpha, alpha, sp)
    r = np.abs(complex_trajectory(earlier, t, alpha, sp) + complex_trajectory(later, t, alpha, sp))
    return float(r[0]) if np.ndim(t) == 0 else r


def harmonic_approx_frequency(alpha: float) -> float:
    """Frequency sqrt(2)/alpha of the second-order (small alpha) expansion."""
    return float(np.sqrt(2.0) / alpha)


# -- Hamiltonians -----------------------------------------------------------

def _real_energy(value: complex, scale: float, tol: float) -> float:
    if abs(value.imag) > tol * max(1.0, scale):
        raise NonRealEnergy(f"imaginary energy residue {value.imag:.3e}")
    return float(value.real)


def hamiltonian_modes(coeffs: ModeCoeffs, params: PhysicalParams, tol: float = 1e-10) -> float:
    """(m / 2 alpha^2) sum_k (-1)^k omega_k a_k a_{-(k+1)} over the window."""
    k = coeffs.indices
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    terms = sign * mode_frequency(k, params.alpha) * coeffs.coeffs * coeffs.partners()
    pref = params.m / (2 * params.alpha ** 2)
    return _real_energy(pref * terms.sum(), pref * np.abs(terms).sum(), tol)


def hamiltonian_c(c: CVars, params: PhysicalParams) -> float:
    """sum_k (-1)^k omega_k |c_k|^2."""
    k = np.arange(c.k_max)
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    return float(np.sum(sign * mode_frequency(k, params.alpha) * np.abs(c.values) ** 2))


def _effective_window(a: ModeCoeffs, rtol: float) -> ModeCoeffs:
    """Narrowest symmetric window keeping every coefficient above rtol * max|a|."""
    mag = np.abs(a.coeffs)
    if mag.max() == 0:
        return ModeCoeffs.zeros(1)
    idx = a.indices[mag > rtol * mag.max()]
    n_eff = int(max(idx.max() + 1, -idx.min()))
    return ModeCoeffs(n_eff, a.coeffs[a.n_max - n_eff:a.n_max + n_eff])


def hamiltonian_field(field: LambdaField, params: PhysicalParams, band_rtol: float = 1e-15) -> float:
    """Integral of Delta(lambda) Q(lambda - alpha) Q'(lambda) plus (m/alpha^2) Q(0) Q(alpha).

    Delta vanishes outside (0, alpha) and equals -m/alpha^2 inside, so the
    integral runs over (0, alpha) only. Q and Q' come from the full-band
    trigonometric interpolant of the samples (Q' exact per mode); the integral
    uses Gauss-Legendre nodes sized to the occupied band. Spectral content
    below band_rtol relative to the largest coefficient is dropped.
    """
    alpha, m = params.alpha, params.m
    a = _effective_window(project(field, field.grid_size // 2), band_rtol)
    n = a.indices
    n_nodes = 4 * a.n_max + 32
    x, w = roots_legendre(n_nodes)
    lam = 0.5 * alpha * (x + 1)
    w = 0.5 * alpha * w
    sp = FrequencySpectrum(alpha)
    d_coeffs = 1j * sp.omega(n) * a.coeffs
    shifted = a.coeffs * sp.phase(n, -alpha)
    acc = 0j
    for start in range(0, n_nodes, 1024):
        sl = slice(start, start + 1024)
        basis = sp.phase(n[None, :], lam[sl, None]) / np.sqrt(2 * alpha)
        acc += np.sum(w[sl] * (basis @ shifted) * (basis @ d_coeffs))
    integral = -(m / alpha ** 2) * acc
    boundary = (m / alpha ** 2) * extend_field(field, 0.0) * extend_field(field, alpha)
    total = integral + boundary
    return _real_energy(complex(total), abs(integral) + abs(boundary), 1e-10)
