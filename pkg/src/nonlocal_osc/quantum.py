"""Truncated Fock space for the alternating-sign oscillator tower.

Energies are normal ordered: E = hbar sum_k (-1)^k omega_k n_k. Odd modes
enter with negative sign, so the spectrum is unbounded below as the local
truncation grows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
import sympy

from .core import BudgetExceeded, DivergentZeroPoint, OccupationState, PhysicalParams, mode_frequency

DEFAULT_BUDGET = 10 ** 6
DENSE_LIMIT = 4096


@dataclass(frozen=True)
class FockSpace:
    k_modes: int
    dim_per_mode: int

    def __post_init__(self):
        if self.k_modes < 1:
            raise ValueError(f"k_modes must be >= 1, got {self.k_modes}")
        if self.dim_per_mode < 2:
            raise ValueError(f"dim_per_mode must be >= 2, got {self.dim_per_mode}")

    @property
    def dim(self) -> int:
        return self.dim_per_mode ** self.k_modes

    def occupations(self) -> np.ndarray:
        """All occupation tuples in basis order (mode 0 most significant)."""
        d, K = self.dim_per_mode, self.k_modes
        return np.array(list(itertools.product(range(d), repeat=K)), dtype=np.int64).reshape(-1, K)


def omega(k: int, alpha: float) -> float:
    if k < 0:
        raise ValueError("oscillator index k must be >= 0")
    if alpha <= 0:
        raise ValueError("alpha must be > 0")
    return float(mode_frequency(k, alpha))


def mode_weights(k_modes: int, params: PhysicalParams) -> np.ndarray:
    """hbar (-1)^k omega_k for k = 0..k_modes-1."""
    k = np.arange(k_modes)
    return params.hbar * np.where(k % 2 == 0, 1.0, -1.0) * mode_frequency(k, params.alpha)


def energy(state: OccupationState, params: PhysicalParams, ordering: str = "normal") -> float:
    if ordering == "symmetric":
        raise DivergentZeroPoint(
            "symmetric ordering adds sum_k (-1)^k hbar omega_k / 2 over all k, which does not converge"
        )
    if ordering != "normal":
        raise ValueError(f"unknown ordering {ordering!r}")
    w = mode_weights(len(state.occ), params)
    e = 0.0
    for wk, nk in zip(w, state.occ):
        e += wk * nk
    return float(e)


@dataclass(frozen=True)
class Spectrum:
    energies: np.ndarray     # ascending
    occupations: np.ndarray  # row i labels energies[i]


def spectrum(space: FockSpace, params: PhysicalParams, budget: int = DEFAULT_BUDGET) -> Spectrum:
    if space.dim > budget:
        raise BudgetExceeded(f"{space.dim} states exceeds budget {budget}")
    occ = space.occupations()
    w = mode_weights(space.k_modes, params)
    e = np.zeros(len(occ))
    # same accumulation order as energy(), so values agree bit for bit
    for k in range(space.k_modes):
        e += w[k] * occ[:, k]
    order = np.argsort(e, kind="stable")
    return Spectrum(e[order], occ[order])


def _embed(space: FockSpace, k: int, local, kron, eye):
    ops = [eye(space.dim_per_mode)] * space.k_modes
    ops[k] = local
    out = ops[0]
    for op in ops[1:]:
        out = kron(out, op)
    return out


def _check_slot(space: FockSpace, k: int):
    if not 0 <= k < space.k_modes:
        raise IndexError(f"mode {k} outside 0..{space.k_modes - 1}")


def build_ladder(space: FockSpace, k: int, exact: bool = False):
    """(c_k, c_k^+) on the full space.

    Float matrices by default; ``exact=True`` returns sympy matrices with
    entries sqrt(n), for commutators free of rounding.
    """
    _check_slot(space, k)
    d = space.dim_per_mode
    if exact:
        low = sympy.zeros(d, d)
        for n in range(1, d):
            low[n - 1, n] = sympy.sqrt(n)
        c = _embed(space, k, low, sympy.kronecker_product, sympy.eye)
        return c, c.H
    if space.dim > DENSE_LIMIT:
        raise BudgetExceeded(f"dense operators limited to dimension {DENSE_LIMIT}")
    low = np.diag(np.sqrt(np.arange(1, d, dtype=float)), 1)
    c = _embed(space, k, low, np.kron, np.eye)
    return c, c.conj().T


def number_operator(space: FockSpace, k: int) -> np.ndarray:
    """Diagonal n_k with exact integer entries."""
    _check_slot(space, k)
    if space.dim > DENSE_LIMIT:
        raise BudgetExceeded(f"dense operators limited to dimension {DENSE_LIMIT}")
    return _embed(space, k, np.diag(np.arange(space.dim_per_mode, dtype=float)), np.kron, np.eye)


def build_hamiltonian_matrix(space: FockSpace, params: PhysicalParams) -> np.ndarray:
    """hbar sum_k (-1)^k omega_k c_k^+ c_k, with c_k^+ c_k taken as the exact number operator."""
    w = mode_weights(space.k_modes, params)
    H = np.zeros((space.dim, space.dim))
    for k in range(space.k_modes):
        H += w[k] * number_operator(space, k)
    return H
