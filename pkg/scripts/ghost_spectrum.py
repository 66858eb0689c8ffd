"""Lowest and highest truncated energies as the per-mode cutoff grows.

Odd modes carry negative energy, so the minimum keeps falling with the cutoff.
"""

import argparse

from nonlocal_osc import PhysicalParams
from nonlocal_osc.quantum import FockSpace, spectrum


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-modes", type=int, default=2)
    ap.add_argument("--max-d", type=int, default=8)
    ap.add_argument("--alpha", type=float, default=1.0)
    args = ap.parse_args()

    params = PhysicalParams(1.0, args.alpha)
    print(f"{'d':>3} {'states':>8} {'E_min':>12} {'E_max':>12}  lowest occupation")
    for d in range(2, args.max_d + 1):
        spec = spectrum(FockSpace(args.k_modes, d), params)
        print(f"{d:3d} {len(spec.energies):8d} {spec.energies[0]:12.5f} {spec.energies[-1]:12.5f}  "
              f"{spec.occupations[0].tolist()}")


if __name__ == "__main__":
    main()
