"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line with the measured residual; the lines are
printed in the pytest terminal summary.
"""

import math

import numpy as np

from nonlocal_osc.brackets import (
    bump,
    check_antisymmetry,
    check_shift_identity,
    hamiltonian_flow_check,
    mode_bracket,
    mode_bracket_from_kernel,
)
from nonlocal_osc.constraints import epsilon_density, momentum_field
from nonlocal_osc.core import ModeCoeffs, PhysicalParams
from nonlocal_osc.dynamics import (
    FrequencySpectrum,
    eom_residual,
    evolve_modes,
    hamiltonian_c,
    hamiltonian_field,
    hamiltonian_modes,
    harmonic_approx_frequency,
    trajectory,
)
from nonlocal_osc.modes import synthesize_field, to_c_vars
from nonlocal_osc.quantum import FockSpace, build_hamiltonian_matrix, build_ladder, spectrum

RESULTS = []
SEED = 1234


def record(number, name, ok, detail):
    RESULTS.append(f"[{number:2d}] {'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return ok


class OnePercentOff(FrequencySpectrum):
    def turns(self, n, t):
        x = 1.01 * (2 * np.asarray(n) + 1) * np.asarray(t) / (4 * self.alpha)
        return x - np.rint(x)


def worst_eom(states, alpha, spectrum=None, best=False):
    t = np.linspace(0.0, 20 * alpha, 2001)
    vals = []
    for x in states:
        q = trajectory(x, t, alpha).values
        vals.append(eom_residual(x, t, alpha, spectrum).max() / np.abs(q).max())
    return min(vals) if best else max(vals)


def test_01_delayed_eom():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for alpha in (0.5, 1.0, 2.0):
        states = [ModeCoeffs.random_real(8, rng) for _ in range(100)]
        worst = max(worst, worst_eom(states, alpha))
    ok = worst < 1e-12
    record(1, "delayed EOM, 100 states x 3 alphas", ok, f"max rel residual {worst:.3e} < 1e-12")
    assert ok


def test_02_frequency_law():
    worst_cos = 0.0
    for alpha in (0.5, 1.0, 2.0, 0.7):
        sp = FrequencySpectrum(alpha)
        k = np.arange(33)
        worst_cos = max(worst_cos, np.abs(sp.phase(k, alpha).real).max())
    rng = np.random.default_rng(SEED)
    states = [ModeCoeffs.random_real(8, rng) for _ in range(20)]
    mutated = min(worst_eom(states, a, OnePercentOff(a), best=True) for a in (0.5, 1.0, 2.0))
    ok = worst_cos < 1e-15 and mutated >= 1e-12 * 1e6
    record(2, "frequency law", ok,
           f"max |cos(omega_k alpha)| {worst_cos:.3e} < 1e-15; 1% mutation gives EOM residual >= {mutated:.3e} (>= 1e-6)")
    assert ok


def test_03_triple_hamiltonian():
    rng = np.random.default_rng(SEED)
    params = PhysicalParams(1.0, 1.0)
    gap_field = gap_c = 0.0
    for _ in range(50):
        x = ModeCoeffs.random_real(8, rng)
        h = hamiltonian_modes(x, params)
        gap_field = max(gap_field, abs(hamiltonian_field(synthesize_field(x, params, 4096), params) - h))
        gap_c = max(gap_c, abs(h - hamiltonian_c(to_c_vars(x, params), params)))
    ok = gap_field < 1e-8 and gap_c < 1e-12
    record(3, "triple Hamiltonian equality, 50 states", ok,
           f"|H_field-H_modes| {gap_field:.3e} < 1e-8; |H_modes-H_c| {gap_c:.3e} < 1e-12")
    assert ok


def test_04_conservation_and_revival():
    rng = np.random.default_rng(SEED)
    params = PhysicalParams(1.0, 1.0)
    drift = revival = 0.0
    for _ in range(50):
        x = ModeCoeffs.random_real(8, rng)
        h0 = hamiltonian_modes(x, params)
        for t in np.linspace(0.0, 100.0, 41):
            drift = max(drift, abs(hamiltonian_modes(evolve_modes(x, t, 1.0), params) - h0))
        for alpha in (0.5, 1.0, 2.0):
            revival = max(revival, np.abs(evolve_modes(x, 4 * alpha, alpha).coeffs - x.coeffs).max())
    ok = drift < 1e-12 and revival < 1e-12
    record(4, "conservation to 100 alpha, revival at 4 alpha", ok,
           f"energy drift {drift:.3e} < 1e-12; revival error {revival:.3e} < 1e-12")
    assert ok


def test_05_kernel_identities():
    rng = np.random.default_rng(SEED)
    anti = shift = 0.0
    for _ in range(100):
        p = PhysicalParams(rng.uniform(0.5, 2.0), rng.uniform(0.3, 2.0))
        f = bump(rng.uniform(-3, 3), rng.uniform(0.05, 1.5), rng.uniform(-2, 2))
        g = bump(rng.uniform(-3, 3), rng.uniform(0.05, 1.5), rng.uniform(-2, 2))
        anti = max(anti, check_antisymmetry(f, g, p))
        shift = max(shift, check_shift_identity(f, g, p))
    kernel = 0.0
    for params in (PhysicalParams(1.0, 1.0), PhysicalParams(0.6, 1.7)):
        for i in range(-8, 9):
            for j in range(-8, 9):
                kernel = max(kernel, abs(mode_bracket_from_kernel(i, j, params) - mode_bracket(i, j, params)))
    ok = anti < 1e-10 and shift < 1e-10 and kernel < 1e-10
    record(5, "Dirac kernel identities", ok,
           f"antisymmetry {anti:.3e}, shift {shift:.3e}, kernel-vs-closed {kernel:.3e} (all < 1e-10)")
    assert ok


def test_06_flow_closure():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(50):
        x = ModeCoeffs.random_real(6, rng)
        worst = max(worst, hamiltonian_flow_check(x, PhysicalParams(1.0, 1.0)) / np.abs(x.coeffs).max())
    ok = worst < 1e-12
    record(6, "Hamiltonian flow closure, n_max = 6", ok, f"max |{{a,H}} - i w a| / max|a| {worst:.3e} < 1e-12")
    assert ok


def test_07_quantum_spectrum():
    params = PhysicalParams(1.0, 1.0, 1.0)
    space = FockSpace(2, 2)
    H = build_hamiltonian_matrix(space, params)
    offdiag = np.count_nonzero(H - np.diag(np.diag(H)))
    diag = np.sort(np.diag(H))
    target = np.array([-3 * math.pi / 2, -math.pi, 0.0, math.pi / 2])
    gap = np.abs(diag - target).max()
    mins = [spectrum(FockSpace(2, d), params).energies[0] for d in range(2, 7)]
    decreasing = all(b < a for a, b in zip(mins, mins[1:]))
    ok = offdiag == 0 and gap < 1e-14 and decreasing
    record(7, "quantum spectrum K=2,d=2", ok,
           f"{offdiag} off-diagonal nonzeros; spectrum gap {gap:.1e}; min E for d=2..6 {np.round(mins, 4).tolist()}")
    assert ok


def test_08_commutators():
    bad = 0
    for K, d in [(1, 4), (2, 3), (2, 4)]:
        space = FockSpace(K, d)
        occ = space.occupations()
        for j in range(K):
            cj, _ = build_ladder(space, j, exact=True)
            for k in range(K):
                ck, ckd = build_ladder(space, k, exact=True)
                C = cj * ckd - ckd * cj
                for r in range(space.dim):
                    for c in range(space.dim):
                        if j != k:
                            want = 0
                        elif r != c:
                            want = 0
                        else:
                            want = 1 if occ[r, k] < d - 1 else 1 - d
                        bad += C[r, c] != want
    ok = bad == 0
    record(8, "commutators [c_j, c_k+]", ok, f"{bad} entries differ from delta_jk (top-level defect 1-d), exact arithmetic")
    assert ok


def test_09_harmonic_limit():
    worst = max(abs(harmonic_approx_frequency(a) - math.sqrt(2) / a) / (math.sqrt(2) / a) for a in (0.1, 0.5, 1.0, 2.0, 7.3))
    ratio = FrequencySpectrum(1.0).omega(0) / harmonic_approx_frequency(1.0)
    ok = worst <= 2.3e-16 and abs(ratio - math.pi / (2 * math.sqrt(2))) < 1e-12 and abs(ratio - 1.1107207345) < 1e-10
    record(9, "harmonic limit", ok, f"rel error {worst:.1e}; omega_0 / (sqrt2/alpha) = {ratio:.10f}")
    assert ok


def test_10_constraint_reconstruction():
    rng = np.random.default_rng(SEED)
    mismatches = 0
    plain = 0.0
    for m, alpha in [(1.0, 1.0), (2.3, 0.6), (0.4, 1.9)]:
        params = PhysicalParams(m, alpha)
        for _ in range(10):
            field = synthesize_field(ModeCoeffs.random_real(8, rng), params, 512)
            eps = epsilon_density(field, field.grid)
            mismatches += int(np.count_nonzero(momentum_field(field).samples != eps.sgn_weighted_integral()))
            plain = max(plain, np.abs(eps.integral()).max())
    ok = mismatches == 0 and plain < 1e-12
    record(10, "constraint reconstruction", ok,
           f"{mismatches} grid points where P routes differ; plain epsilon integral {plain:.3e} < 1e-12")
    assert ok
