"""Survey how often the SU(3)/SO(3) eigenspaces split into several modules.

For every Q up to ``--q-max`` the number of swap classes of solutions to
x^2 - xy + y^2 = Q is counted; values with two or more classes are listed.

    python scripts/splitting_survey.py --q-max 10000
"""

import argparse
import collections
import sys

from symspec.spectrum import splitting_count


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q-max", type=int, default=10_000)
    ap.add_argument("--show", type=int, default=15, help="how many split Q values to print")
    args = ap.parse_args(argv)

    histogram = collections.Counter()
    split = []
    for q in range(1, args.q_max + 1):
        sol = splitting_count(q)
        histogram[sol.count] += 1
        if sol.count >= 2:
            split.append((q, sol.pairs))
    for count in sorted(histogram):
        print(f"{count} classes: {histogram[count]} values of Q")
    print(f"first {min(args.show, len(split))} Q with a split eigenspace:")
    for q, pairs in split[: args.show]:
        print(f"  Q = {q}: {list(pairs)}")
    best = max(split, key=lambda t: len(t[1]), default=None)
    if best:
        print(f"most classes below {args.q_max}: Q = {best[0]} with {len(best[1])}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
