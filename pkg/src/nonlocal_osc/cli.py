"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid input or budget.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import constraints, dynamics, modes, quantum
from .core import BudgetExceeded, CVars, ModeCoeffs, NonPositiveParameter, PhysicalParams, RealityViolation
from .verification import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class ConfigError(ValueError):
    pass


def _num(x: float) -> str:
    return format(float(x), ".17g")


def load_config(path) -> tuple[PhysicalParams, ModeCoeffs]:
    """Parse the JSON model description.

    {"m": .., "alpha": .., "hbar": .., "modes": [{"n": .., "re": .., "im": ..}],
     "complete_reality": true, "n_max": ..}
    or "c_vars": [{"k": .., "re": .., "im": ..}] in place of "modes".
    """
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    try:
        params = PhysicalParams(doc["m"], doc["alpha"], doc.get("hbar", 1.0))
    except KeyError as exc:
        raise ConfigError(f"missing key {exc}") from exc
    except (NonPositiveParameter, TypeError) as exc:
        raise ConfigError(str(exc)) from exc

    has_modes, has_c = "modes" in doc, "c_vars" in doc
    if has_modes == has_c:
        raise ConfigError('give exactly one of "modes" or "c_vars"')
    try:
        if has_c:
            entries = {int(e["k"]): complex(e.get("re", 0.0), e.get("im", 0.0)) for e in doc["c_vars"]}
            if not entries or min(entries) < 0:
                raise ConfigError("c_vars need nonnegative k")
            k_max = max(max(entries) + 1, int(doc.get("n_max", 0)))
            v = np.zeros(k_max, dtype=complex)
            for k, c in entries.items():
                v[k] = c
            return params, modes.from_c_vars(CVars(v), params)
        values = {}
        for e in doc["modes"]:
            values[int(e["n"])] = complex(e.get("re", 0.0), e.get("im", 0.0))
        if doc.get("complete_reality", False):
            for n, a in list(values.items()):
                partner = -(n + 1)
                if partner in values and abs(values[partner] - a.conjugate()) > 1e-12:
                    raise ConfigError(f"modes {n} and {partner} are given inconsistently")
                values[partner] = a.conjugate()
        coeffs = ModeCoeffs.from_dict(values, n_max=doc.get("n_max"))
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ConfigError(f"malformed modes: {exc}") from exc
    if not np.all(np.isfinite(coeffs.coeffs)):
        raise ConfigError("mode coefficients must be finite")
    return params, coeffs


def _sidecar_path(out: Path) -> Path:
    return out.with_suffix(".json") if out.suffix == ".csv" else out.with_name(out.name + ".json")


def cmd_simulate(args) -> int:
    params, x = load_config(args.config)
    if not (args.dt > 0 and args.t_max >= 0 and math.isfinite(args.t_max)):
        raise ConfigError("need dt > 0 and finite t_max >= 0")
    alpha = params.alpha
    steps = int(math.floor(args.t_max / args.dt + 1e-9))
    times = np.arange(steps + 1) * args.dt
    q = dynamics.complex_trajectory(x, times, alpha)
    scale = float(np.abs(q).max())
    eom = dynamics.eom_residual(x, times, alpha)
    eom_rel = float(eom.max() / scale) if scale > 0 else float(eom.max())
    reality = x.reality_residual()
    try:
        h_c = dynamics.hamiltonian_c(modes.to_c_vars(x, params), params)
    except RealityViolation:
        h_c = None
    try:
        h_modes = dynamics.hamiltonian_modes(x, params)
        h_field = dynamics.hamiltonian_field(modes.synthesize_field(x, params, 4096), params)
    except ValueError:
        h_modes = h_field = None

    out = Path(args.out)
    with open(out, "w", newline="") as fh:
        fh.write("t,q\n")
        for t, v in zip(times, q.real):
            fh.write(f"{_num(t)},{_num(v)}\n")
    report = {
        "m": params.m, "alpha": alpha, "hbar": params.hbar, "n_max": x.n_max,
        "H_field": h_field, "H_modes": h_modes, "H_c": h_c,
        "eom_max_residual": eom_rel,
        "reality_residual": reality,
        "imag_residual": float(np.abs(q.imag).max()),
        "tol": args.tol,
    }
    passed = eom_rel <= args.tol and reality <= args.tol
    report["passed"] = passed
    _sidecar_path(out).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_spectrum(args) -> int:
    if args.k_modes < 1 or args.max_occ < 1:
        raise ConfigError("need --k-modes >= 1 and --max-occ >= 1")
    try:
        params = PhysicalParams(1.0, args.alpha, args.hbar)
    except NonPositiveParameter as exc:
        raise ConfigError(str(exc)) from exc
    space = quantum.FockSpace(args.k_modes, args.max_occ + 1)
    spec = quantum.spectrum(space, params, budget=args.budget)
    doc = {
        "alpha": params.alpha,
        "hbar": params.hbar,
        "k_modes": space.k_modes,
        "dim_per_mode": space.dim_per_mode,
        "omega": [
            {"k": k, "omega": quantum.omega(k, params.alpha), "sign": 1 if k % 2 == 0 else -1}
            for k in range(space.k_modes)
        ],
        "states": [
            {"occupation": [int(v) for v in occ], "energy": float(e)}
            for e, occ in zip(spec.energies, spec.occupations)
        ],
    }
    Path(args.out).write_text(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES + ('all',))}", file=sys.stderr)
        return EXIT_INPUT
    checks = run_suite(args.suite, seed=args.seed, tol=args.tol)
    for c in checks:
        print(c.line())
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def cmd_field(args) -> int:
    params, x = load_config(args.config)
    n = args.grid
    if n < 2 or n & (n - 1):
        raise ConfigError("--grid must be a power of two >= 2")
    if 2 * x.n_max > n:
        raise ConfigError(f"--grid {n} too coarse for n_max={x.n_max}")
    field = dynamics.shift_evolve_field(modes.synthesize_field(x, params, n), args.t)
    p = constraints.momentum_field(field).samples
    with open(args.out, "w", newline="") as fh:
        fh.write("lambda,re_q,im_q,p\n")
        for lam, q, pv in zip(field.grid, field.samples, p):
            fh.write(f"{_num(lam)},{_num(q.real)},{_num(q.imag)},{_num(pv.real)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nonlocal-osc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="trajectory q(t) plus energy/residual sidecar")
    p.add_argument("--config", required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("spectrum", help="enumerate the truncated quantum spectrum")
    p.add_argument("--k-modes", type=int, required=True)
    p.add_argument("--max-occ", type=int, required=True, help="highest occupation per mode")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--budget", type=int, default=quantum.DEFAULT_BUDGET)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("field", help="snapshot Q(t, lambda) and P(t, lambda)")
    p.add_argument("--config", required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_field)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ConfigError, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
