"""How rare is degeneracy?  Random scan over small rational 5-element sets.

Draws parameter sets with entries p/q, |p| <= B, q <= 3, runs the
semisimplicity test on each, and tallies which predicate families vanish.
Level-2 predicates never fire over Q (x^2 - xy + y^2 is positive definite),
so everything interesting starts at level 3.

    python3 scripts/degeneracy_scan.py --points 2000 --bound 6 --seed 7
"""

import argparse
import random
from collections import Counter
from fractions import Fraction

from braidreps import ParameterSet, rationals, semisimplicity


def random_set(rng, n, bound):
    while True:
        vals = []
        for _ in range(n):
            num = rng.choice([k for k in range(-bound, bound + 1) if k != 0])
            vals.append(Fraction(num, rng.choice((1, 1, 2, 3))))
        if len(set(vals)) == n:
            return vals


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=2000)
    ap.add_argument("--size", type=int, default=5, choices=(2, 3, 4, 5))
    ap.add_argument("--bound", type=int, default=6)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    q = rationals()
    rng = random.Random(args.seed)
    families = Counter()
    degenerate = 0

    for _ in range(args.points):
        X = ParameterSet.from_rationals(q, random_set(rng, args.size, args.bound))
        report = semisimplicity(X)
        if not report.semisimple_verdict:
            degenerate += 1
            for p in report.failing_predicates:
                families[p.family] += 1

    print(f"{args.points} random {args.size}-element sets, "
          f"entries p/q with |p| <= {args.bound}, q <= 3")
    print(f"degenerate: {degenerate} "
          f"({100.0 * degenerate / args.points:.1f}%)")
    if families:
        print("vanishing predicates by family:")
        for fam, count in families.most_common():
            print(f"  {fam}: {count}")


if __name__ == "__main__":
    main()
