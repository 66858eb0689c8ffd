"""Compare the exact fundamental frequency with the small-alpha harmonic approximation."""

import argparse
import math

from nonlocal_osc.dynamics import FrequencySpectrum, harmonic_approx_frequency


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphas", type=float, nargs="+", default=[0.1, 0.5, 1.0, 2.0, 5.0])
    args = ap.parse_args()

    print(f"{'alpha':>8} {'omega_0':>14} {'sqrt2/alpha':>14} {'ratio':>14}")
    for a in args.alphas:
        w0 = float(FrequencySpectrum(a).omega(0))
        wh = harmonic_approx_frequency(a)
        print(f"{a:8.3f} {w0:14.8f} {wh:14.8f} {w0 / wh:14.10f}")
    print(f"\npi / (2 sqrt 2) = {math.pi / (2 * math.sqrt(2)):.10f}  (alpha independent)")


if __name__ == "__main__":
    main()
