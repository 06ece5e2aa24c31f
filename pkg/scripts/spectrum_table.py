"""Print energy levels, eigenvalues and multiplicities for the rank-one spaces.

Both multiplicity columns are shown; the script exits nonzero if they ever
disagree.

    python scripts/spectrum_table.py --n-max 4 --k-max 5
"""

import argparse
import sys

from symspec.catalog import lookup
from symspec.spectrum import spectrum


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--k-max", type=int, default=4)
    args = ap.parse_args(argv)

    spaces = [("S^n", n) for n in range(2, args.n_max + 1)]
    spaces += [("CP^n", n) for n in range(1, args.n_max + 1)]
    spaces += [("HP^n", n) for n in range(1, args.n_max + 1)]
    spaces += [("CaP2", None)]
    mismatches = 0
    print(f"{'space':>8} {'k':>2} {'energy':>8} {'eigenvalue':>10} {'closed':>10} {'weyl':>10}")
    for sid, n in spaces:
        d = lookup(sid, n)
        label = sid if n is None else sid.replace("^n", f"^{n}")
        for line in spectrum(d, args.k_max):
            closed = "-" if line.multiplicity_closed is None else str(line.multiplicity_closed)
            if line.multiplicity_closed not in (None, line.multiplicity):
                mismatches += 1
            print(f"{label:>8} {line.k:>2} {str(line.energy):>8} {str(line.eigenvalue):>10} "
                  f"{closed:>10} {line.multiplicity:>10}")
    print(f"mismatches: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
