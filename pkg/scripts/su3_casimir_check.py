"""Casimir eigenvalues of phi_a^p phitilde_b^q on SU(3), against the root-form values.

For each (p, q) the eigenvalue under g = Re Tr(Z W^*) is estimated from
special-unitary samples, converted to rational form, and compared with the
quadratic-form value divided by the metric constant 3.

    python scripts/su3_casimir_check.py --max-degree 2 --samples 200
"""

import argparse
import random
import sys
import time

from symspec import liediff
from symspec.eigenfun import sample_isotropic_pair, sun_family
from symspec.spectrum import su3_family_eigenvalue

SIGMA = 3


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=2, help="largest p and q")
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    a, b = sample_isotropic_pair(random.Random(args.seed), 3)
    samples = liediff.unitary_samples(3, args.samples, args.seed)
    failures = 0
    print(f"{'(p,q)':>6} {'eigenvalue':>10} {'predicted':>10} {'residual':>10} {'seconds':>8}")
    for p in range(args.max_degree + 1):
        for q in range(args.max_degree + 1):
            if not p and not q:
                continue
            t0 = time.perf_counter()
            est = liediff.eigenvalue(sun_family(a, b, p, q, 3), 3, samples)
            predicted = su3_family_eigenvalue(p, q) / SIGMA
            ok = est.rational == predicted and est.max_residual < liediff.GROUP_TOL
            failures += not ok
            print(f"{f'({p},{q})':>6} {str(est.rational):>10} {str(predicted):>10} "
                  f"{est.max_residual:>10.2e} {time.perf_counter() - t0:>8.2f}"
                  + ("" if ok else "  MISMATCH"))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
