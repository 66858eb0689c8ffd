"""Shared domain types for the nonlocal oscillator L = -(m/alpha^2) q(t) q(t+alpha).

Every field in the lambda-representation lives on the canonical window
[-alpha, alpha); values elsewhere come from the antiperiodic extension
Q(lambda + 2 alpha) = -Q(lambda).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

DEFAULT_GRID_SIZE = 1024


class NonPositiveParameter(ValueError):
    """A physical constant was zero, negative or non-finite."""


class RealityViolation(ValueError):
    """Mode coefficients break conj(a_n) = a_{-(n+1)}."""


class NonRealTrajectory(ValueError):
    """A trajectory carried an imaginary part above tolerance."""


class NonRealEnergy(ValueError):
    """An energy evaluated to a complex number above tolerance."""


class BudgetExceeded(ValueError):
    """An enumeration would exceed the configured state budget."""


class DivergentZeroPoint(ArithmeticError):
    """Symmetric ordering asks for the divergent zero-point sum."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PhysicalParams:
    m: float
    alpha: float
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("m", "alpha", "hbar"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float, np.floating, np.integer)) and math.isfinite(v) and v > 0):
                raise NonPositiveParameter(f"{name} must be finite and > 0, got {v!r}")
            object.__setattr__(self, name, float(v))


def validate_params(m: float, alpha: float, hbar: float = 1.0) -> PhysicalParams:
    return PhysicalParams(m, alpha, hbar)


# -- phases ---------------------------------------------------------------
#
# exp(i omega_n t) with omega_n = pi (2n+1) / (2 alpha) is evaluated in units
# of full turns, (2n+1) * t / (4 alpha), reduced to [-1/2, 1/2] before the
# exponential. At t = alpha the turn count is an exact quarter-integer, so
# cos(omega_n alpha) is as close to zero as cos(pi/2) can be in float64.

def mode_frequency(n, alpha: float):
    """omega_n = pi (2n+1) / (2 alpha); negative for n < 0."""
    return np.pi * (2 * np.asarray(n) + 1) / (2 * alpha)


def phase_turns(n, t, alpha: float):
    """Phase omega_n * t in turns, reduced to [-1/2, 1/2]."""
    x = (2 * np.asarray(n) + 1) * (np.asarray(t, dtype=float) / (4 * alpha))
    return x - np.rint(x)


def unit_phase(turns):
    return np.exp(2j * np.pi * np.asarray(turns))


# -- coefficient containers -----------------------------------------------

@dataclass(frozen=True)
class ModeCoeffs:
    """Complex a_n on the window -n_max <= n <= n_max - 1.

    Storage position p holds n = p - n_max, so the reality partner
    -(n+1) of position p sits at 2*n_max - 1 - p: reversing the array
    lines every coefficient up with its partner.
    """

    n_max: int
    coeffs: np.ndarray
    real: bool = False
    tol: float = 1e-10

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise ValueError(f"n_max must be a positive integer, got {self.n_max!r}")
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (2 * self.n_max,):
            raise ValueError(f"expected {2 * self.n_max} coefficients, got shape {c.shape}")
        object.__setattr__(self, "n_max", int(self.n_max))
        object.__setattr__(self, "coeffs", _frozen(c))
        if self.real and self.reality_residual() > self.tol:
            raise RealityViolation(
                f"reality residual {self.reality_residual():.3e} exceeds {self.tol:.1e}"
            )

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.n_max, self.n_max)

    def __getitem__(self, n: int) -> complex:
        if not -self.n_max <= n < self.n_max:
            raise IndexError(f"mode index {n} outside [{-self.n_max}, {self.n_max - 1}]")
        return complex(self.coeffs[n + self.n_max])

    def partners(self) -> np.ndarray:
        """a_{-(n+1)} aligned with a_n."""
        return self.coeffs[::-1]

    def reality_residual(self) -> float:
        return float(np.max(np.abs(np.conj(self.coeffs) - self.partners())))

    @classmethod
    def zeros(cls, n_max: int) -> "ModeCoeffs":
        return cls(n_max, np.zeros(2 * n_max, dtype=complex))

    @classmethod
    def from_dict(cls, values: dict, n_max: Optional[int] = None, **kw) -> "ModeCoeffs":
        if n_max is None:
            # smallest window holding every index and its partner
            n_max = max([1] + [max(n + 1, -n) for n in values])
        c = np.zeros(2 * n_max, dtype=complex)
        for n, v in values.items():
            if not -n_max <= n < n_max:
                raise IndexError(f"mode index {n} outside window of n_max={n_max}")
            c[n + n_max] = v
        return cls(n_max, c, **kw)

    @classmethod
    def random_real(cls, n_max: int, rng: np.random.Generator, scale: float = 1.0) -> "ModeCoeffs":
        """Gaussian coefficients obeying the reality condition exactly."""
        upper = scale * (rng.standard_normal(n_max) + 1j * rng.standard_normal(n_max))
        c = np.concatenate([np.conj(upper[::-1]), upper])
        return cls(n_max, c, real=True)


@dataclass(frozen=True)
class CVars:
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("CVars needs a non-empty 1-d array")
        if not np.all(np.isfinite(v)):
            raise ValueError("CVars must be finite")
        object.__setattr__(self, "values", _frozen(v))

    @property
    def k_max(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class OccupationState:
    occ: tuple

    def __post_init__(self):
        occ = tuple(int(x) for x in self.occ)
        if any(x < 0 for x in occ):
            raise ValueError(f"occupations must be >= 0, got {occ}")
        object.__setattr__(self, "occ", occ)


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        v = np.asarray(self.values)
        if t.ndim != 1 or v.shape != t.shape:
            raise ValueError("times and values must be 1-d arrays of equal length")
        if t.size > 1 and not np.all(np.diff(t) > 0):
            raise ValueError("times must be strictly increasing")
        object.__setattr__(self, "times", _frozen(t))
        object.__setattr__(self, "values", _frozen(v))


# -- lambda field -----------------------------------------------------------

@dataclass(frozen=True)
class LambdaField:
    """Samples of Q(lambda) at lambda_j = -alpha + 2 alpha j / grid_size.

    ``interpolant`` evaluates Q anywhere inside [-alpha, alpha). Fields
    synthesized from modes carry the band-limited mode sum here; without
    one, extend_field interpolates linearly between samples.
    """

    params: PhysicalParams
    samples: np.ndarray
    interpolant: Optional[Callable[[np.ndarray], np.ndarray]] = field(default=None, compare=False)

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=complex)
        n = s.size
        if s.ndim != 1 or n < 2 or n & (n - 1):
            raise ValueError(f"grid_size must be a power of two >= 2, got {n}")
        object.__setattr__(self, "samples", _frozen(s))

    @property
    def grid_size(self) -> int:
        return self.samples.size

    @property
    def spacing(self) -> float:
        return 2 * self.params.alpha / self.grid_size

    @property
    def grid(self) -> np.ndarray:
        return field_grid(self.params.alpha, self.grid_size)


def field_grid(alpha: float, grid_size: int) -> np.ndarray:
    return -alpha + 2 * alpha * np.arange(grid_size) / grid_size


def reduce_to_window(lam, alpha: float):
    """Split lambda into (r, k) with lambda = r + 2 alpha k and r in [-alpha, alpha)."""
    lam = np.asarray(lam, dtype=float)
    k = np.floor((lam + alpha) / (2 * alpha))
    r = lam - 2 * alpha * k
    # rounding can leave r a hair outside the window
    hi = r >= alpha
    lo = r < -alpha
    r = np.where(hi, r - 2 * alpha, np.where(lo, r + 2 * alpha, r))
    k = k + hi - lo
    return r, k.astype(np.int64)


def extend_field(field: LambdaField, lam):
    """Q(lambda) for any finite lambda via the antiperiodic extension."""
    alpha = field.params.alpha
    r, k = reduce_to_window(lam, alpha)
    sign = 1 - 2 * (k % 2)
    if field.interpolant is not None:
        val = field.interpolant(r)
    else:
        s = field.samples
        pos = (r + alpha) / field.spacing
        j = np.minimum(np.floor(pos).astype(np.int64), s.size - 1)
        frac = pos - j
        ext = np.append(s, -s[0])
        val = (1 - frac) * ext[j] + frac * ext[j + 1]
    out = sign * val
    return complex(out) if np.ndim(out) == 0 else out
