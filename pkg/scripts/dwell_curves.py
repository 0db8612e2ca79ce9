"""Write dwell-time curves of both delta kinds and compare with the closed form.

    python3 scripts/dwell_curves.py [--out dwell.csv] [--emax 30]
"""

import argparse

import numpy as np

from semiharmonic.cli import main as cli_main
from semiharmonic.jost import PotentialSpec
from semiharmonic.rootfinder import find_resonances
from semiharmonic.timedelay import dwell_time_curve


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="dwell.csv")
    parser.add_argument("--emax", type=float, default=30.0)
    args = parser.parse_args()
    code = cli_main(["dwell", "--emax", str(args.emax), "--out", args.out])
    print(f"wrote {args.out} (exit {code})")
    for kind in ("delta_well", "delta_barrier"):
        spec = PotentialSpec(0.0, 1.0, kind)
        curve = dwell_time_curve(spec)
        m = curve.E >= 0.5
        gap = np.max(np.abs(curve.tau - curve.tau_analytic)[m])
        print(f"{kind}: max |numeric - closed form| on [0.5, {curve.E[-1]:g}] = {gap:.2e}")
        for (ep, tp), r in zip(curve.peaks, find_resonances(spec, 5)):
            print(f"  peak E={ep:8.3f} tau={tp:6.3f}   Re eps={r.energy:9.5f}  Gamma/2={r.width / 2:.4f}")


if __name__ == "__main__":
    main()
