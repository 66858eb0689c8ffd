"""Invariant suites run by ``nonlocal-osc verify``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy

from . import brackets, constraints, dynamics, modes, quantum
from .core import ModeCoeffs, PhysicalParams

SUITES = ("eom", "brackets", "hamiltonian", "quantum")


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tol)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<44s} residual={self.residual:.3e}  tol={self.tol:.1e}"


def _states(rng, count, n_max=8):
    return [ModeCoeffs.random_real(n_max, rng) for _ in range(count)]


def eom_suite(rng, tol=None):
    worst_eom = worst_phi2 = worst_revival = worst_pictures = 0.0
    for alpha in (0.5, 1.0, 2.0):
        t = np.linspace(0.0, 20 * alpha, 801)
        lam = np.linspace(-3 * alpha, 3 * alpha, 301)
        for x in _states(rng, 10):
            q = dynamics.trajectory(x, t, alpha).values
            worst_eom = max(worst_eom, dynamics.eom_residual(x, t, alpha).max() / np.abs(q).max())
            worst_phi2 = max(worst_phi2, constraints.phi2_residual(x, lam, alpha))
            back = dynamics.evolve_modes(x, 4 * alpha, alpha)
            worst_revival = max(worst_revival, np.abs(back.coeffs - x.coeffs).max())
        params = PhysicalParams(1.0, alpha)
        x = _states(rng, 1)[0]
        field = modes.synthesize_field(x, params, 256)
        for s in (0.3 * alpha, 1.7 * alpha, 5.1 * alpha):
            a = dynamics.shift_evolve_field(field, s).samples
            b = modes.synthesize(dynamics.evolve_modes(x, s, alpha), field.grid, alpha)
            worst_pictures = max(worst_pictures, np.abs(a - b).max())
    k = np.arange(33)
    cos_law = np.abs(dynamics.FrequencySpectrum(1.0).phase(k, 1.0).real).max()
    return [
        Check("delayed EOM |q(t-a)+q(t+a)|/max|q|", worst_eom, tol or 1e-12),
        Check("phi2 residual (raw basis)", worst_phi2, tol or 1e-12),
        Check("cos(omega_k alpha), k<=32", cos_law, tol or 1e-15),
        Check("revival at t = 4 alpha", worst_revival, tol or 1e-12),
        Check("shift picture vs mode picture", worst_pictures, tol or 1e-10),
    ]


def hamiltonian_suite(rng, tol=None):
    params = PhysicalParams(1.0, 1.0)
    field_gap = c_gap = drift = 0.0
    for x in _states(rng, 10):
        h = dynamics.hamiltonian_modes(x, params)
        field = modes.synthesize_field(x, params, 4096)
        field_gap = max(field_gap, abs(dynamics.hamiltonian_field(field, params) - h))
        c_gap = max(c_gap, abs(h - dynamics.hamiltonian_c(modes.to_c_vars(x, params), params)))
        for t in (0.37, 13.1, 100.0):
            drift = max(drift, abs(dynamics.hamiltonian_modes(dynamics.evolve_modes(x, t, 1.0), params) - h))
    return [
        Check("|H_field - H_modes| (grid 4096)", field_gap, tol or 1e-8),
        Check("|H_modes - H_c|", c_gap, tol or 1e-12),
        Check("energy drift up to t = 100 alpha", drift, tol or 1e-12),
    ]


def brackets_suite(rng, tol=None):
    params = PhysicalParams(1.0, 1.0)
    anti = shift = 0.0
    for _ in range(20):
        f = brackets.bump(rng.uniform(-2, 2), rng.uniform(0.1, 1.0), rng.uniform(0.5, 2))
        g = brackets.bump(rng.uniform(-2, 2), rng.uniform(0.1, 1.0), rng.uniform(0.5, 2))
        anti = max(anti, brackets.check_antisymmetry(f, g, params))
        shift = max(shift, brackets.check_shift_identity(f, g, params))
    kernel = max(
        abs(brackets.mode_bracket_from_kernel(i, j, params) - brackets.mode_bracket(i, j, params))
        for i in range(-8, 9) for j in range(-8, 9)
    )
    flow = 0.0
    for x in _states(rng, 10, n_max=6):
        flow = max(flow, brackets.hamiltonian_flow_check(x, params) / np.abs(x.coeffs).max())
    cgap = max(
        abs(brackets.c_bracket_from_modes(i, j, params) - brackets.c_bracket(i, j))
        for i in range(7) for j in range(7)
    )
    return [
        Check("F antisymmetry (smeared)", anti, tol or 1e-10),
        Check("F shift identity (smeared)", shift, tol or 1e-10),
        Check("mode bracket: kernel vs closed form", kernel, tol or 1e-10),
        Check("flow {a_m,H} - i omega_m a_m (rel.)", flow, tol or 1e-12),
        Check("c bracket from mode algebra", cgap, tol or 0.0),
    ]


def quantum_suite(rng, tol=None):
    params = PhysicalParams(1.0, 1.0)
    space = quantum.FockSpace(2, 2)
    H = quantum.build_hamiltonian_matrix(space, params)
    offdiag = float(np.abs(H - np.diag(np.diag(H))).max())
    expected = np.array([-1.5, -1.0, 0.0, 0.5]) * np.pi
    spec_gap = float(np.abs(np.sort(np.diag(H)) - expected).max())
    mins = [quantum.spectrum(quantum.FockSpace(2, d), params).energies[0] for d in range(2, 7)]
    ghost = 0.0 if all(b < a for a, b in zip(mins, mins[1:])) else 1.0
    comm = 0
    sp = quantum.FockSpace(2, 4)
    for j in range(2):
        cj, _ = quantum.build_ladder(sp, j, exact=True)
        for k in range(2):
            ck, ckd = quantum.build_ladder(sp, k, exact=True)
            C = cj * ckd - ckd * cj
            want = sympy.eye(sp.dim) if j == k else sympy.zeros(sp.dim)
            occ = sp.occupations()
            keep = [i for i in range(sp.dim) if occ[i, k] < sp.dim_per_mode - 1]
            comm += int(C.extract(keep, keep) != want.extract(keep, keep))
    return [
        Check("Hamiltonian off-diagonal", offdiag, 0.0),
        Check("K=2,d=2 spectrum vs {-3pi/2,-pi,0,pi/2}", spec_gap, tol or 1e-14),
        Check("ghost: min energy strictly decreasing d<=6", ghost, 0.0),
        Check("[c_j, c_k+] = delta_jk below top level", float(comm), 0.0),
    ]


_RUNNERS = {
    "eom": eom_suite,
    "hamiltonian": hamiltonian_suite,
    "brackets": brackets_suite,
    "quantum": quantum_suite,
}


def run_suite(name: str, seed: int = 0, tol: float = None) -> list[Check]:
    names = SUITES if name == "all" else (name,)
    if any(n not in _RUNNERS for n in names):
        raise KeyError(name)
    rng = np.random.default_rng(seed)
    out = []
    for n in names:
        out.extend(_RUNNERS[n](rng, tol))
    return out
