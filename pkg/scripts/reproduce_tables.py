"""Print bound energies and the lowest resonances for the unit-area family.

    python3 scripts/reproduce_tables.py [-n 7]
"""

import argparse

from semiharmonic.jost import PotentialSpec, free_particle_bound_states
from semiharmonic.rootfinder import find_bound_states, find_resonances

BOUND_A = (0.0, 0.5, 1.0, 1.5, 2.0)
RESONANCE_A = (2.0, 1.5, 1.0, 0.5, 5e-4, 0.0)


def bound_table():
    print("bound states (unit area well)")
    print(f"{'a':>7} {'E_FP':>12} {'E_SH':>12}")
    for a in BOUND_A:
        spec = PotentialSpec.unit_area(a)
        fp = free_particle_bound_states(a, 1.0 if a == 0 else spec.V0)[0]
        (sh,) = find_bound_states(spec)
        print(f"{a:7g} {fp:12.6f} {sh.energy:12.6f}")


def resonance_table(barrier: bool, n: int):
    print(f"\nresonances (unit area {'barrier' if barrier else 'well'}), eps = E - i Gamma/2")
    for a in RESONANCE_A:
        roots = find_resonances(PotentialSpec.unit_area(a, barrier), n)
        cells = "  ".join(f"{r.epsilon.real:10.6f}{r.epsilon.imag:+10.6f}i" for r in roots)
        print(f"a={a:<7g} {cells}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-n", type=int, default=7, help="resonances per row")
    args = parser.parse_args()
    bound_table()
    resonance_table(False, args.n)
    resonance_table(True, args.n)


if __name__ == "__main__":
    main()
