"""Dimension census at the four anchor sizes.

Counts sum(dim^2) over the inequivalent irreducibles of the quotient for
|X| = 2..5 and compares with the algebra dimensions 6, 24, 96, 600.  The
size-5 census runs both over Q (where four fifth roots are deferred) and
over the cyclotomic extension where all of them exist.

    python3 scripts/census_demo.py
"""

from collections import Counter
from fractions import Fraction

from braidreps import (
    ParameterSet,
    cyclotomic5_context,
    dimension_census,
    rationals,
)

ANCHOR_SETS = [
    [1, 2],
    [1, 2, 3],
    [1, 2, 3, 6],                    # e4 = 36 is a perfect square
    [1, 2, 3, 4, Fraction(4, 3)],    # e5 = 32 = 2^5
]


def describe(X, context=None):
    report = dimension_census(X, context=context, mode="constructive")
    dims = Counter(e.spec.dim for e in report.entries)
    built = ", ".join(f"{count} of dim {d}" for d, count in sorted(dims.items()))
    print(f"  built: {built}")
    for d in report.deferred:
        print(f"  deferred: subset {d.subset}, dim {d.dim}, "
              f"{d.count} roots of order {d.root_order} "
              f"(modulus {list(map(str, (c.rational_value() for c in d.suggested_modulus.coeffs)))})")
    print(f"  sum of squares = {report.sum_of_squares} "
          f"(algebra dimension {report.algebra_dim})")


def main():
    q = rationals()
    for values in ANCHOR_SETS:
        X = ParameterSet.from_rationals(q, values)
        combo = dimension_census(X, mode="combinatorial")
        print(f"X = {list(map(str, values))}: combinatorial count "
              f"{combo.sum_of_squares}")
        describe(X)
        print()

    print("size-5 set again, over Q[t]/(t^4+t^3+t^2+t+1):")
    ctx = cyclotomic5_context()
    X = ParameterSet.from_rationals(ctx, ANCHOR_SETS[-1])
    describe(X, context=ctx)


if __name__ == "__main__":
    main()
