"""Dirac-bracket kernel F, its smeared identities, and the bracket algebra of modes and c-variables.

F(lambda, lambda') = (alpha^2/m) sum_k (-1)^k delta(lambda - lambda' + (2k+1) alpha)
is a comb of point masses. It is only ever evaluated against compactly
supported test functions or in closed form on modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .constraints import delta_kernel
from .core import ModeCoeffs, PhysicalParams, mode_frequency
from .modes import psi

PANEL_ORDER = 8


@lru_cache(maxsize=None)
def _gl_rule(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def integrate(func: Callable, lo: float, hi: float, n_points: int, order: int = PANEL_ORDER):
    """Composite Gauss-Legendre integral of ``func`` over [lo, hi].

    Nodes are interior to every panel, so functions with jumps exactly at
    lo or hi are integrated as if the jump were absent.
    """
    if hi <= lo:
        return 0.0
    panels = max(1, math.ceil(n_points / order))
    x, w = _gl_rule(order)
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return np.sum(weights * func(nodes))


@dataclass(frozen=True)
class TestFunction:
    """A compactly supported smearing function on [lo, hi].

    ``resolution`` is the number of quadrature points per unit alpha.
    """

    __test__ = False  # not a pytest class

    lo: float
    hi: float
    func: Callable[[np.ndarray], np.ndarray]
    resolution: int = 4096

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo <= self.hi):
            raise ValueError(f"bad support [{self.lo}, {self.hi}]")

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=float)
        inside = (lam >= self.lo) & (lam <= self.hi)
        return np.where(inside, self.func(lam), 0.0)

    def shifted(self, tau: float) -> "TestFunction":
        """lambda -> f(lambda + tau)."""
        f = self.func
        return TestFunction(self.lo - tau, self.hi - tau, lambda x: f(x + tau), self.resolution)

    def weighted(self, weight: Callable, lo: float, hi: float) -> "TestFunction":
        """lambda -> weight(lambda) f(lambda), support cut to [lo, hi]."""
        f = self.func
        a, b = max(self.lo, lo), min(self.hi, hi)
        if a > b:
            a = b = lo
            return TestFunction(a, b, lambda x: np.zeros_like(x), self.resolution)
        return TestFunction(a, b, lambda x: weight(x) * f(x), self.resolution)


def indicator(lo: float, hi: float, resolution: int = 4096) -> TestFunction:
    return TestFunction(lo, hi, lambda x: np.ones_like(x), resolution)


def bump(center: float, half_width: float, height: float = 1.0, resolution: int = 4096) -> TestFunction:
    """C^2 bump height * (1 - u^2)^3, u = (lambda - center) / half_width."""
    def f(x):
        u = (x - center) / half_width
        return height * np.clip(1 - u * u, 0.0, None) ** 3
    return TestFunction(center - half_width, center + half_width, f, resolution)


def _comb_shifts(f: TestFunction, g: TestFunction, alpha: float) -> range:
    """Integers k whose shift (2k+1) alpha can overlap supp f with supp g - shift."""
    k_lo = math.ceil((g.lo - f.hi - alpha) / (2 * alpha))
    k_hi = math.floor((g.hi - f.lo - alpha) / (2 * alpha))
    return range(k_lo, k_hi + 1)


def f_kernel_smeared(f: TestFunction, g: TestFunction, params: PhysicalParams) -> float:
    """Double integral f(lambda) F(lambda, lambda') g(lambda').

    Equals (alpha^2/m) sum_k (-1)^k integral f(lambda) g(lambda + (2k+1) alpha);
    only finitely many k overlap.
    """
    alpha = params.alpha
    res = max(f.resolution, g.resolution)
    total = 0.0
    for k in _comb_shifts(f, g, alpha):
        s = (2 * k + 1) * alpha
        lo, hi = max(f.lo, g.lo - s), min(f.hi, g.hi - s)
        if hi <= lo:
            continue
        val = integrate(lambda x: f.func(x) * g.func(x + s), lo, hi, res * (hi - lo) / alpha)
        total += (-1) ** k * val
    return alpha ** 2 / params.m * total


def check_antisymmetry(f: TestFunction, g: TestFunction, params: PhysicalParams) -> float:
    return abs(f_kernel_smeared(f, g, params) + f_kernel_smeared(g, f, params))


def check_shift_identity(f: TestFunction, g: TestFunction, params: PhysicalParams) -> float:
    """|F(lambda - alpha, .) + F(lambda + alpha, .)| smeared; shifting f shifts the kernel argument."""
    a = params.alpha
    return abs(f_kernel_smeared(f.shifted(a), g, params) + f_kernel_smeared(f.shifted(-a), g, params))


def qp_bracket_smeared(f: TestFunction, g: TestFunction, params: PhysicalParams) -> float:
    """Smeared {Q(lambda), P(lambda')} = Delta(lambda') F(lambda, lambda' - alpha)."""
    a = params.alpha
    dg = g.weighted(lambda x: delta_kernel(x, params), 0.0, a)
    # integral over lambda' of F(lambda, lambda' - alpha) G(lambda') = F smeared with G(. + alpha)
    return f_kernel_smeared(f, dg.shifted(a), params)


def pp_bracket_smeared(f: TestFunction, g: TestFunction, params: PhysicalParams) -> float:
    """Smeared {P(lambda), P(lambda')} = Delta(lambda) Delta(lambda') F(lambda, lambda')."""
    a = params.alpha
    dk = lambda x: delta_kernel(x, params)
    return f_kernel_smeared(f.weighted(dk, 0.0, a), g.weighted(dk, 0.0, a), params)


# -- mode space -------------------------------------------------------------

def mode_bracket(m_idx: int, n_idx: int, params: PhysicalParams) -> complex:
    """{a_m, a_n} = (i alpha^2 / m) (-1)^m when m + n + 1 = 0, else 0."""
    if m_idx + n_idx + 1 != 0:
        return 0j
    return 1j * params.alpha ** 2 / params.m * (-1) ** (m_idx % 2)


def mode_bracket_from_kernel(m_idx: int, n_idx: int, params: PhysicalParams, grid_size: int = 512) -> complex:
    """{a_m, a_n} as the double integral of conj(Psi_m) F conj(Psi_n) over the canonical window.

    Inside (-alpha, alpha)^2 the comb fires only for k = 0 (lambda' = lambda + alpha,
    lambda in (-alpha, 0)) and k = -1 (lambda' = lambda - alpha, lambda in (0, alpha),
    sign -1). ``grid_size`` is the node count per half window.
    """
    a = params.alpha

    def k0(x):
        return np.conj(psi(m_idx, x, a)) * np.conj(psi(n_idx, x + a, a))

    def km1(x):
        return np.conj(psi(m_idx, x, a)) * np.conj(psi(n_idx, x - a, a))

    total = integrate(k0, -a, 0.0, grid_size) - integrate(km1, 0.0, a, grid_size)
    return complex(a ** 2 / params.m * total)


def mode_bracket_matrix(n_max: int, params: PhysicalParams) -> np.ndarray:
    """B[i, j] = {a_i, a_j} over the window -n_max..n_max-1."""
    idx = range(-n_max, n_max)
    return np.array([[mode_bracket(i, j, params) for j in idx] for i in idx])


def c_bracket(m_idx: int, n_idx: int) -> complex:
    """{c_m, conj(c_n)} = -i delta_mn."""
    if m_idx < 0 or n_idx < 0:
        raise ValueError("c-variable indices are nonnegative")
    return -1j if m_idx == n_idx else 0j


def _c_source(k: int) -> tuple[int, int]:
    """Mode indices holding (c_k, conj(c_k)) up to the factor alpha/sqrt(m)."""
    partner = -(k + 1)
    return (k, partner) if k % 2 else (partner, k)


def c_bracket_from_modes(m_idx: int, n_idx: int, params: PhysicalParams, conj_second: bool = True) -> complex:
    """{c_m, conj(c_n)} (or {c_m, c_n}) pushed through the mode bracket by index algebra."""
    i = _c_source(m_idx)[0]
    j = _c_source(n_idx)[1 if conj_second else 0]
    return params.m / params.alpha ** 2 * mode_bracket(i, j, params)


def hamiltonian_coefficients(n_max: int, params: PhysicalParams) -> np.ndarray:
    """Coefficient matrix h with H = sum_ij h[i, j] a_i a_j (window order)."""
    size = 2 * n_max
    h = np.zeros((size, size))
    pref = params.m / (2 * params.alpha ** 2)
    for p, k in enumerate(range(-n_max, n_max)):
        q = size - 1 - p  # position of -(k+1)
        h[p, q] = pref * (-1) ** (k % 2) * mode_frequency(k, params.alpha)
    return h


def poisson_with_hamiltonian(coeffs: ModeCoeffs, params: PhysicalParams, h: np.ndarray = None) -> np.ndarray:
    """{a_m, H} for H = sum h_ij a_i a_j, by the Leibniz rule on the mode bracket."""
    if h is None:
        h = hamiltonian_coefficients(coeffs.n_max, params)
    B = mode_bracket_matrix(coeffs.n_max, params)
    # {a_m, a_i a_j} = {a_m, a_i} a_j + a_i {a_m, a_j}
    return B @ (h @ coeffs.coeffs) + B @ (h.T @ coeffs.coeffs)


def hamiltonian_flow_check(coeffs: ModeCoeffs, params: PhysicalParams, h: np.ndarray = None) -> float:
    """max_m |{a_m, H} - i omega_m a_m|."""
    flow = poisson_with_hamiltonian(coeffs, params, h)
    expected = 1j * mode_frequency(coeffs.indices, params.alpha) * coeffs.coeffs
    return float(np.max(np.abs(flow - expected)))
