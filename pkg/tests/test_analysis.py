"""Degeneracy predicates, invariant-subspace witnesses, and the census.

Witness tuples and failing-predicate names below are frozen observations,
cross-checked against the closure oracle at the time of freezing.  Where a
fixture makes several predicates vanish at once, tests assert membership of
the distinguished one rather than equality of the whole set.
"""

from fractions import Fraction

import pytest

from braidreps import (
    ALGEBRA_DIMS,
    BadLevel,
    DEFAULT_PROBE_WORDS,
    InvalidWitness,
    Matrix,
    NotSemisimple,
    ParameterSet,
    RepSpec,
    Representation,
    RootsUnavailable,
    Witness,
    build_rep,
    character,
    commutant_dim,
    cyclotomic5_context,
    decomposability_check,
    dimension_census,
    evaluate_predicates,
    intertwiner_exists,
    invariant_subspace_witness,
    irreducible_oracle,
    rationals,
    semisimplicity,
    verify_witness,
    witness_vectors,
)

Q = rationals()


def ps(*vals):
    return ParameterSet.from_rationals(Q, [Fraction(v) for v in vals])


def qv(v):
    return Q.from_rational(Fraction(v))


# The six degenerate fixtures, one per predicate family.
FIX_I3 = ps(2, 1, -4)
FIX_I4 = ps(1, 2, Fraction(27, 2), 3)           # with h = 9
FIX_J5 = ps(-4, 1, 2, 4, -1)                    # with f = 2
FIX_J6 = ps(1, 2, 3, 4, 24)
FIX_K6 = ps(1, 2, -3, 6, 5)
FIX_I6 = ps(2, 3, -1, Fraction(1, 6), 1)


class TestPredicateValues:
    def test_level2(self):
        (p,) = evaluate_predicates(ps(1, 2), 2)
        assert p.name == "I2(1,2)" and p.value == 3 and not p.is_zero

    def test_level2_never_vanishes_over_q(self):
        # x^2 - xy + y^2 = (x - y/2)^2 + 3y^2/4 > 0 for nonzero rationals.
        for a, b in ((1, 2), (-3, 5), (7, 7 * 2), (Fraction(1, 3), -2)):
            if a == b:
                continue
            (p,) = evaluate_predicates(ps(a, b), 2)
            assert not p.is_zero

    def test_level3_names_and_values(self):
        preds = evaluate_predicates(ps(1, 2, 3), 3)
        got = {p.name: p.value for p in preds}
        assert got["I3(1,2,3)"] == 7
        assert got["I3(2,1,3)"] == 7
        assert got["I3(3,1,2)"] == 11

    def test_level4_with_root(self):
        preds = evaluate_predicates(ps(1, 2, 3, 6), 4, root=qv(6))
        byname = {p.name: p.value for p in preds}
        assert byname["I4(1)"] == -5
        assert byname["I4(4)"] == 30
        assert byname["J4(1,2,3,4)"] == 14
        assert byname["J4(1,3,2,4)"] == 9
        assert byname["J4(1,4,2,3)"] == 6
        assert not any(p.quantified for p in preds)

    def test_level4_quantified_surrogates(self):
        # Res over both square roots of e4 = 24: I4 -> x^4 - 24 and
        # J4 -> (pair sum)^2 - 24; frozen from the closed forms.
        preds = evaluate_predicates(ps(1, 2, 3, 4), 4)
        byname = {p.name: p.value for p in preds}
        assert all(p.quantified for p in preds)
        assert [byname[f"I4({i})"].rational_value() for i in (1, 2, 3, 4)] == \
            [-23, -8, 57, 232]
        assert byname["J4(1,2,3,4)"] == 172
        assert byname["J4(1,3,2,4)"] == 97
        assert byname["J4(1,4,2,3)"] == 76

    def test_level5_with_root(self):
        preds = evaluate_predicates(ps(1, 2, 3, 4, Fraction(4, 3)), 5, root=qv(2))
        byname = {p.name: p.value for p in preds}
        assert byname["I5(1)"] == 7            # 1 + 2 + 4
        assert byname["I5(5)"] == Fraction(76, 9)
        assert byname["J5(1,2)"] == 6          # 2 + 4
        assert byname["J5(4,5)"] == Fraction(16, 3) + 4

    def test_level5_quantified_vanishing(self):
        preds = evaluate_predicates(FIX_J5, 5)
        zeros = sorted(p.name for p in preds if p.is_zero)
        assert zeros == ["J5(1,2)", "J5(4,5)"]

    def test_level6_vanishing_and_variant_attribution(self):
        preds = evaluate_predicates(FIX_J6, 6)
        zeros = {p.name: p for p in preds if p.is_zero}
        assert set(zeros) == {"J6(1,5)", "J6(4,3)"}
        assert zeros["J6(1,5)"].affects_variant == 5
        assert zeros["J6(4,3)"].affects_variant == 3

        preds = evaluate_predicates(FIX_K6, 6)
        zeros = {p.name: p for p in preds if p.is_zero}
        assert set(zeros) == {"K6(5;1,4,2,3)"}
        assert zeros["K6(5;1,4,2,3)"].affects_variant == 5

        preds = evaluate_predicates(FIX_I6, 6)
        assert any(p.name == "I6(5)" and p.is_zero and p.affects_variant == 5
                   for p in preds)

    def test_bad_level(self):
        with pytest.raises(BadLevel):
            evaluate_predicates(ps(1, 2), 7)
        with pytest.raises(BadLevel):
            evaluate_predicates(ps(1, 2, 3), 2)


class TestWitnessMachinery:
    def test_vectors_and_validation(self):
        rep = build_rep(RepSpec(dim=3, params=FIX_I3))
        vecs = witness_vectors(rep, Witness((2, 3)))
        assert len(vecs) == 2 and vecs[0][1] == 1 and vecs[1][2] == 1
        with pytest.raises(InvalidWitness):
            witness_vectors(rep, Witness((4,)))
        with pytest.raises(InvalidWitness):
            witness_vectors(rep, Witness((1,), extra_line=(qv(1), qv(0))))

    def test_verify_rejects_non_invariant(self):
        rep = build_rep(RepSpec(dim=3, params=FIX_I3))
        assert verify_witness(rep, Witness((2, 3)))
        assert not verify_witness(rep, Witness((1,)))
        assert not verify_witness(rep, Witness((1, 2)))

    def test_verify_rejects_improper(self):
        rep = build_rep(RepSpec(dim=3, params=FIX_I3))
        assert not verify_witness(rep, Witness((1, 2, 3)))  # full space
        assert not verify_witness(rep, Witness(()))         # zero space

    def test_decomposability_validates_first(self):
        rep = build_rep(RepSpec(dim=3, params=FIX_I3))
        with pytest.raises(InvalidWitness):
            decomposability_check(rep, Witness((1,)))


class TestDegenerateFixtures:
    def test_dim3_fixture(self):
        rep = build_rep(RepSpec(dim=3, params=FIX_I3))
        assert not irreducible_oracle(rep)
        w = invariant_subspace_witness(rep)
        assert w.index_set == (2, 3)
        assert verify_witness(rep, w)
        assert not decomposability_check(rep, w)
        assert not w.complement_found

    def test_dim4_fixture_root_split(self):
        bad = build_rep(RepSpec(dim=4, params=FIX_I4, h=qv(9)))
        assert not irreducible_oracle(bad)
        w = invariant_subspace_witness(bad)
        assert w.index_set == (1, 2, 3)
        assert verify_witness(bad, w)
        assert not decomposability_check(bad, w)
        # The other square root gives an irreducible companion.
        good = build_rep(RepSpec(dim=4, params=FIX_I4, h=qv(-9)))
        assert irreducible_oracle(good)
        assert invariant_subspace_witness(good) is None

    def test_dim5_fixture(self):
        rep = build_rep(RepSpec(dim=5, params=FIX_J5, f=qv(2)))
        assert not irreducible_oracle(rep)
        w = invariant_subspace_witness(rep)
        assert w.index_set == (3,)
        assert verify_witness(rep, w)
        assert not decomposability_check(rep, w)

    def test_dim6_j6_fixture_both_variants(self):
        v5 = build_rep(RepSpec(dim=6, params=FIX_J6, variant=5))
        assert not irreducible_oracle(v5)
        w = invariant_subspace_witness(v5)
        assert w.index_set == (1, 5) and w.extra_line is None
        assert verify_witness(v5, w)
        assert not decomposability_check(v5, w)

        v3 = build_rep(RepSpec(dim=6, params=FIX_J6, variant=3))
        assert not irreducible_oracle(v3)
        w3 = invariant_subspace_witness(v3)
        assert w3.index_set == (4,) and w3.extra_line is not None
        a, b = w3.extra_line
        assert (a.rational_value(), b.rational_value()) == \
            (Fraction(-32, 15), Fraction(1, 20))
        assert verify_witness(v3, w3)
        assert not decomposability_check(v3, w3)

        # Variants not named by the vanishing predicates stay irreducible.
        for variant in (1, 2, 4):
            rep = build_rep(RepSpec(dim=6, params=FIX_J6, variant=variant))
            assert irreducible_oracle(rep)
            assert invariant_subspace_witness(rep) is None
            assert commutant_dim([rep.g1, rep.g2]) == 1

    def test_dim6_k6_fixture(self):
        v5 = build_rep(RepSpec(dim=6, params=FIX_K6, variant=5))
        assert not irreducible_oracle(v5)
        w = invariant_subspace_witness(v5)
        assert w.index_set == (2, 3, 6) and w.extra_line is None
        assert verify_witness(v5, w)
        assert not decomposability_check(v5, w)
        for variant in (1, 2, 3, 4):
            rep = build_rep(RepSpec(dim=6, params=FIX_K6, variant=variant))
            assert irreducible_oracle(rep)

    def test_dim6_i6_fixture_line_witness(self):
        v5 = build_rep(RepSpec(dim=6, params=FIX_I6, variant=5))
        assert not irreducible_oracle(v5)
        w = invariant_subspace_witness(v5)
        assert w.index_set == ()
        alpha, beta = w.extra_line
        assert (alpha.rational_value(), beta.rational_value()) == \
            (Fraction(-441, 5), Fraction(-63, 5))
        # Collinear with the reference eigenvector (-42, -6).
        assert alpha * Fraction(-6) - beta * Fraction(-42) == 0
        assert verify_witness(v5, w)
        assert not decomposability_check(v5, w)

    def test_oracle_matches_predicates_on_fixtures(self):
        # For dims <= 5 a degenerate rep is flagged by a vanishing
        # predicate evaluated at its own root; cross-check one per family.
        rep = build_rep(RepSpec(dim=5, params=FIX_J5, f=qv(2)))
        zeros = [p for p in evaluate_predicates(FIX_J5, 5, root=qv(2)) if p.is_zero]
        assert zeros and not irreducible_oracle(rep)


class TestDecomposableExample:
    def test_artificial_direct_sum(self):
        # g1 = g2 = diag(1, 2) satisfies the braid relation and P_X trivially
        # and splits as a direct sum, so the complement must be found.
        spec = RepSpec(dim=2, params=ps(1, 2))
        diag = Matrix.diagonal(Q, [qv(1), qv(2)])
        rep = Representation(spec=spec, g1=diag, g2=diag, multiplicities=(1, 1))
        w = Witness((1,))
        assert verify_witness(rep, w)
        assert decomposability_check(rep, w)


class TestSemisimplicity:
    def test_generic_sets_pass(self):
        for vals in ((1, 2), (1, 2, 3), (1, 2, 3, 6), (1, 2, 3, 4, Fraction(4, 3))):
            report = semisimplicity(ps(*vals))
            assert report.semisimple_verdict
            assert report.failing_predicates == ()
            assert report.algebra_dim == ALGEBRA_DIMS[len(vals)]

    def test_fixture_verdicts(self):
        expected = {
            FIX_I3: "I3(1,2,3)",
            FIX_I4: "I4(4)",
            FIX_J5: "J5(1,2)",
            FIX_J6: "J6(1,5)",
            FIX_K6: "K6(5;1,4,2,3)",
            FIX_I6: "I6(5)",
        }
        for fixture, name in expected.items():
            report = semisimplicity(fixture)
            assert not report.semisimple_verdict
            assert name in [p.name for p in report.failing_predicates]

    def test_j5_fixture_full_failing_set(self):
        names = [p.name for p in semisimplicity(FIX_J5).failing_predicates]
        assert names == ["I3(3,1,2)", "I3(3,4,5)", "J5(1,2)", "J5(4,5)"]

    def test_i6_fixture_full_failing_set(self):
        names = [p.name for p in semisimplicity(FIX_I6).failing_predicates]
        assert names == ["I4(5)", "J5(3,5)", "I6(5)", "J6(3,5)"]


class TestCensus:
    def test_combinatorial_anchors(self):
        for vals, want in (((1, 2), 6), ((1, 2, 3), 24),
                           ((1, 2, 3, 6), 96),
                           ((1, 2, 3, 4, Fraction(4, 3)), 600)):
            report = dimension_census(ps(*vals), mode="combinatorial")
            assert report.sum_of_squares == want == report.algebra_dim

    def test_constructive_small(self):
        report = dimension_census(ps(1, 2))
        assert report.sum_of_squares == 6
        assert report.deferred == ()
        assert len(report.entries) == 3

    def test_constructive_square_e4(self):
        report = dimension_census(ps(1, 2, 3, 6))
        assert report.sum_of_squares == 96
        assert report.deferred == ()
        ids = [e.class_id for e in report.entries]
        assert len(set(ids)) == len(ids)  # pairwise inequivalent

    def test_constructive_deferred_counted(self):
        report = dimension_census(ps(1, 2, 3, 4))
        assert report.sum_of_squares == 96
        assert len(report.deferred) == 1
        assert report.deferred[0].radicand == 24

    def test_strict_mode_raises(self):
        with pytest.raises(RootsUnavailable):
            dimension_census(ps(1, 2, 3, 4), strict=True)

    def test_degenerate_raises(self):
        with pytest.raises(NotSemisimple, match="J6"):
            dimension_census(FIX_J6)

    def test_zeta5_fixture(self):
        ctx = cyclotomic5_context()
        report = dimension_census(ps(1, 2, 3, 4, Fraction(4, 3)), context=ctx)
        assert report.sum_of_squares == 600
        # All five fifth roots exist in the cyclotomic context, so every
        # 5-dimensional member is built; only square roots get deferred.
        assert all(d.root_order == 2 for d in report.deferred)
        dims5 = [e for e in report.entries if e.spec.dim == 5]
        assert len(dims5) == 5
        ids = [e.class_id for e in report.entries]
        assert len(set(ids)) == len(ids)


class TestEquivalenceTools:
    def test_character_probe_frozen(self):
        rep = build_rep(RepSpec(dim=2, params=ps(1, 2)))
        values = [v.rational_value() for v in character(rep, DEFAULT_PROBE_WORDS)]
        assert values == [3, 3, 2, 0, 0, -4]

    def test_intertwiner_reflexive_and_dim_gate(self):
        r2 = build_rep(RepSpec(dim=2, params=ps(1, 2)))
        r3 = build_rep(RepSpec(dim=3, params=ps(1, 2, 3)))
        assert intertwiner_exists(r2, r2)
        assert not intertwiner_exists(r2, r3)

    def test_intertwiner_finds_conjugated_copy(self):
        rep = build_rep(RepSpec(dim=2, params=ps(1, 2)))
        p = Matrix.from_rows(Q, [[1, 1], [0, 1]])
        pinv = Matrix.from_rows(Q, [[1, -1], [0, 1]])
        twin = Representation(
            spec=rep.spec,
            g1=p @ rep.g1 @ pinv,
            g2=p @ rep.g2 @ pinv,
            multiplicities=rep.multiplicities,
        )
        assert intertwiner_exists(rep, twin)

    def test_root_twins_are_inequivalent(self):
        pos = build_rep(RepSpec(dim=4, params=ps(1, 2, 3, 6), h=qv(6)))
        neg = build_rep(RepSpec(dim=4, params=ps(1, 2, 3, 6), h=qv(-6)))
        assert not intertwiner_exists(pos, neg)
