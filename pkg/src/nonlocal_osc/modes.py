"""Antiperiodic Fourier basis and the maps between fields, modes and c-variables."""

from __future__ import annotations

import numpy as np

from .core import (
    CVars,
    LambdaField,
    ModeCoeffs,
    PhysicalParams,
    RealityViolation,
    field_grid,
    phase_turns,
    unit_phase,
)


def psi(n, lam, alpha: float):
    """Basis function exp(i pi (2n+1) lambda / (2 alpha)) / sqrt(2 alpha).

    Broadcasts over ``n`` and ``lam``.
    """
    return unit_phase(phase_turns(n, lam, alpha)) / np.sqrt(2 * alpha)


def _basis_matrix(n_max: int, lam, alpha: float) -> np.ndarray:
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    n = np.arange(-n_max, n_max)
    return psi(n[None, :], lam[:, None], alpha)


def gram_matrix(n_max: int, alpha: float, grid_size: int) -> np.ndarray:
    """Inner products of the basis over [-alpha, alpha) by the periodic trapezoid rule."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    h = 2 * alpha / grid_size
    B = _basis_matrix(n_max, field_grid(alpha, grid_size), alpha)
    return h * (B.conj().T @ B)


def project(field: LambdaField, n_max: int) -> ModeCoeffs:
    """a_n = integral of conj(Psi_n) Q over the canonical window.

    Periodic trapezoid rule on the field grid, evaluated with one FFT.
    Requires grid_size >= 2 n_max so distinct modes do not alias.
    """
    N = field.grid_size
    alpha = field.params.alpha
    if 2 * n_max > N:
        raise ValueError(f"grid_size {N} cannot resolve n_max={n_max}")
    j = np.arange(N)
    # conj(Psi_n)(lambda_j) = i (-1)^n exp(-i pi j / N) exp(-2 pi i n j / N) / sqrt(2 alpha)
    spectrum = np.fft.fft(field.samples * unit_phase(-j / (2 * N)))
    n = np.arange(-n_max, n_max)
    sign = np.where(n % 2 == 0, 1j, -1j)
    h = 2 * alpha / N
    return ModeCoeffs(n_max, h / np.sqrt(2 * alpha) * sign * spectrum[n % N])


def synthesize(coeffs: ModeCoeffs, lam, alpha: float):
    """Q(lambda) = sum_n a_n Psi_n(lambda) over the stored window."""
    scalar = np.ndim(lam) == 0
    out = _basis_matrix(coeffs.n_max, lam, alpha) @ coeffs.coeffs
    return complex(out[0]) if scalar else out.reshape(np.shape(lam))


def synthesize_field(coeffs: ModeCoeffs, params: PhysicalParams, grid_size: int = 1024) -> LambdaField:
    alpha = params.alpha
    return LambdaField(
        params,
        synthesize(coeffs, field_grid(alpha, grid_size), alpha),
        interpolant=lambda r: synthesize(coeffs, r, alpha),
    )


def check_reality(coeffs: ModeCoeffs, tol: float = 1e-10) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return coeffs.reality_residual() <= tol


# c-variable map. For each k >= 0 the pair (a_k, a_{-(k+1)}) carries c_k:
#   k odd:  a_k = f c_k,        a_{-(k+1)} = f conj(c_k)
#   k even: a_k = f conj(c_k),  a_{-(k+1)} = f c_k
# with f = alpha / sqrt(m).

def _c_scale(params: PhysicalParams) -> float:
    return params.alpha / np.sqrt(params.m)


def to_c_vars(coeffs: ModeCoeffs, params: PhysicalParams, tol: float = 1e-10) -> CVars:
    f = _c_scale(params)
    k = np.arange(coeffs.n_max)
    pos = coeffs.coeffs[coeffs.n_max:] / f          # a_k, k = 0..n_max-1
    neg = coeffs.coeffs[:coeffs.n_max][::-1] / f    # a_{-(k+1)}
    odd = k % 2 == 1
    from_pos = np.where(odd, pos, np.conj(pos))
    from_neg = np.where(odd, np.conj(neg), neg)
    mismatch = np.abs(from_pos - from_neg)
    if np.any(mismatch > tol):
        bad = int(k[np.argmax(mismatch)])
        raise RealityViolation(
            f"c_{bad} read two ways differs by {mismatch.max():.3e} (tol {tol:.1e})"
        )
    return CVars(from_pos)


def from_c_vars(c: CVars, params: PhysicalParams) -> ModeCoeffs:
    f = _c_scale(params)
    v = c.values
    k = np.arange(c.k_max)
    odd = k % 2 == 1
    pos = f * np.where(odd, v, np.conj(v))
    neg = f * np.where(odd, np.conj(v), v)
    return ModeCoeffs(c.k_max, np.concatenate([neg[::-1], pos]), real=True)
