"""Tour of the degenerate fixtures: failing predicates and their witnesses.

For each fixture this builds the affected representation, searches for an
invariant subspace, re-verifies it, and checks that no invariant complement
exists (reducible but indecomposable).

    python3 scripts/witness_tour.py
"""

from fractions import Fraction

from braidreps import (
    ParameterSet,
    RepSpec,
    build_rep,
    decomposability_check,
    encode_element,
    invariant_subspace_witness,
    rationals,
    semisimplicity,
    verify_witness,
)

Q = rationals()

FIXTURES = [
    ("I3 vanishing", (2, 1, -4), {}, 3),
    ("I4 vanishing (h = 9)", (1, 2, Fraction(27, 2), 3), {"h": 9}, 4),
    ("J5 vanishing (f = 2)", (-4, 1, 2, 4, -1), {"f": 2}, 5),
    ("J6 vanishing, variant 5", (1, 2, 3, 4, 24), {"variant": 5}, 6),
    ("J6 vanishing, variant 3", (1, 2, 3, 4, 24), {"variant": 3}, 6),
    ("K6 vanishing, variant 5", (1, 2, -3, 6, 5), {"variant": 5}, 6),
    ("I6 vanishing, variant 5", (2, 3, -1, Fraction(1, 6), 1), {"variant": 5}, 6),
]


def main():
    for label, values, extra, dim in FIXTURES:
        X = ParameterSet.from_rationals(Q, values)
        kwargs = {k: (Q.from_rational(v) if k != "variant" else v)
                  for k, v in extra.items()}
        rep = build_rep(RepSpec(dim=dim, params=X, **kwargs))

        report = semisimplicity(X)
        failing = ", ".join(p.name for p in report.failing_predicates)

        print(f"{label}: X = {list(map(str, values))}")
        print(f"  vanishing predicates: {failing}")

        w = invariant_subspace_witness(rep)
        if w is None:
            print("  irreducible (this variant is not the affected one)")
            continue
        parts = [f"coordinates {set(w.index_set)}" if w.index_set else "no coordinates"]
        if w.extra_line is not None:
            a, b = w.extra_line
            parts.append(f"line ({encode_element(a)}, {encode_element(b)}) "
                         "in the doubled eigenspace")
        print(f"  witness: {' + '.join(parts)}")
        print(f"  re-verified: {verify_witness(rep, w)}, "
              f"decomposable: {decomposability_check(rep, w)}")
        print()


if __name__ == "__main__":
    main()
