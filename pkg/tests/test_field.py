"""Exact arithmetic in Q and in single extensions Q[t]/(m)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from braidreps import (
    ContextMismatch,
    FieldContext,
    NonMonicModulus,
    NotInvertible,
    NotSquarefree,
    cyclotomic5_context,
    element_kth_roots,
    make_context,
    rational_kth_root,
    rationals,
)

Q = rationals()
SQRT24 = make_context([-24, 0, 1])        # t^2 - 24
ZETA5 = cyclotomic5_context()             # 1 + t + t^2 + t^3 + t^4

_fracs = st.fractions(min_value=-40, max_value=40, max_denominator=8)


def _elem(ctx, draw_coeffs):
    deg = max(1, len(ctx.modulus) - 1)
    return ctx.element(draw_coeffs[:deg])


class TestContextValidation:
    def test_degree_one_modulus_is_base_field(self):
        assert Q.is_base()
        assert Q.degree == 1
        assert Q.from_rational(Fraction(3, 7)).rational_value() == Fraction(3, 7)

    def test_non_monic_rejected(self):
        with pytest.raises(NonMonicModulus):
            make_context([1, 0, 2])

    def test_squarefree_enforced(self):
        # (t - 1)^2 = t^2 - 2t + 1 shares a factor with its derivative.
        with pytest.raises(NotSquarefree):
            make_context([1, -2, 1])

    def test_reducible_squarefree_modulus_allowed(self):
        # t^2 - 1 is reducible but squarefree; the ring has zero divisors.
        ctx = make_context([-1, 0, 1])
        theta = ctx.generator()
        assert (theta - 1) * (theta + 1) == ctx.zero()

    def test_contexts_compare_by_modulus(self):
        assert make_context([-24, 0, 1]) == SQRT24
        assert SQRT24 != ZETA5
        with pytest.raises(ContextMismatch):
            SQRT24.generator() + ZETA5.generator()


class TestArithmetic:
    def test_generator_satisfies_modulus(self):
        t = SQRT24.generator()
        assert t * t == 24
        z = ZETA5.generator()
        assert z ** 5 == 1
        assert z ** 4 + z ** 3 + z ** 2 + z + 1 == ZETA5.zero()

    def test_inverse_in_extension(self):
        t = SQRT24.generator()
        a = t + 5          # (5 + t)(5 - t) = 1, so the inverse is 5 - t
        assert a.inverse() == 5 - t
        assert a * a.inverse() == SQRT24.one()

    def test_zero_divisor_raises(self):
        ctx = make_context([-1, 0, 1])
        theta = ctx.generator()
        with pytest.raises(NotInvertible):
            (theta - 1).inverse()
        with pytest.raises(NotInvertible):
            1 / (theta + 1)

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            Q.zero().inverse()

    def test_pow_negative(self):
        t = SQRT24.generator()
        assert t ** -2 == Fraction(1, 24)
        assert (t + 5) ** -1 == (t + 5).inverse()

    def test_mixed_coercion(self):
        a = Q.from_rational(Fraction(2, 3))
        assert a + 1 == Fraction(5, 3)
        assert 2 - a == Fraction(4, 3)
        assert a / 2 == Fraction(1, 3)
        assert 1 / a == Fraction(3, 2)


@pytest.mark.parametrize("ctx", [Q, SQRT24, ZETA5], ids=["Q", "sqrt24", "zeta5"])
@settings(max_examples=350, deadline=None)
@given(coeffs=st.lists(_fracs, min_size=4, max_size=4))
def test_field_axioms_random_triples(ctx, coeffs):
    # Three elements per example; 350 examples x 3 contexts > 10^3 triples.
    a = _elem(ctx, coeffs)
    b = _elem(ctx, coeffs[1:])
    c = _elem(ctx, coeffs[::-1])
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    if not a.is_zero():
        try:
            assert a * a.inverse() == ctx.one()
        except NotInvertible:
            # Possible only when the modulus is reducible; zeta5's isn't,
            # and sqrt24 / Q are fields, so this must never trigger here.
            pytest.fail("nonzero element without inverse in a field context")


class TestRationalRoots:
    def test_square_roots(self):
        assert rational_kth_root(Fraction(9, 4), 2) == Fraction(3, 2)
        assert rational_kth_root(24, 2) is None
        assert rational_kth_root(Fraction(-4), 2) is None

    def test_odd_roots_of_negatives(self):
        assert rational_kth_root(Fraction(-27, 8), 3) == Fraction(-3, 2)
        assert rational_kth_root(-32, 5) == -2

    def test_zero_and_one(self):
        assert rational_kth_root(0, 7) == 0
        assert rational_kth_root(1, 4) == 1


class TestElementRoots:
    def test_rational_square_root_found_in_any_context(self):
        roots = element_kth_roots(SQRT24.from_rational(9), 2)
        assert SQRT24.from_rational(3) in roots
        assert SQRT24.from_rational(-3) in roots

    def test_adjoined_square_root(self):
        roots = element_kth_roots(SQRT24.from_rational(24), 2)
        t = SQRT24.generator()
        assert roots[0] == t or roots[0] == -t
        assert set(roots) == {t, -t}

    def test_positive_root_listed_before_negative(self):
        roots = element_kth_roots(Q.from_rational(Fraction(25, 16)), 2)
        assert [r.rational_value() for r in roots] == [Fraction(5, 4), Fraction(-5, 4)]

    def test_fifth_roots_in_cyclotomic_context(self):
        two = ZETA5.from_rational(2)
        roots = element_kth_roots(two ** 5, 5)
        assert len(roots) == 5
        z = ZETA5.generator()
        assert set(roots) == {two * z ** j for j in range(5)}
        for r in roots:
            assert r ** 5 == 32

    def test_generator_as_its_own_root(self):
        ctx = make_context([-2, 0, 0, 1])  # t^3 - 2
        t = ctx.generator()
        assert element_kth_roots(ctx.from_rational(2), 3) == [t]

    def test_no_root_gives_empty_list(self):
        assert element_kth_roots(Q.from_rational(24), 2) == []
        assert element_kth_roots(ZETA5.from_rational(24), 2) == []
