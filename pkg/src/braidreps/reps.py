"""Finite-dimensional representations of the braid quotient algebras.

For an ordered set X of n distinct nonzero eigenvalues (n <= 5) the quotient
of C[B3] by prod_{x in X} (g - x) on the generators is finite dimensional,
and its irreducible representations in dimensions 1..6 admit closed-form
matrices once g1 is diagonalised.  This module transcribes those closed
forms.  Every constructor re-checks the braid relation, the generator
relation P_X(g2) = 0 and the characteristic polynomial of g2 before
returning, so a transcription or root error cannot escape silently.

Representations of dimension 4 need a square root h of e4(X); dimension 5
needs a fifth root f of e5(X).  When the coefficient context lacks such a
root, :func:`enumerate_irreps` reports the construction as deferred along
with a modulus that would provide the root, rather than dropping it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .field import FieldContext, FieldElement, element_kth_roots
from .linalg import Matrix, charpoly
from .poly import Polynomial

__all__ = [
    "BadSpec",
    "MissingRoot",
    "IndexOutOfRange",
    "ParameterSet",
    "RepSpec",
    "Representation",
    "DeferredRoot",
    "EnumerationResult",
    "elementary_symmetric",
    "delta",
    "build_rep",
    "transpose_parameters",
    "compose_fifth_roots",
    "enumerate_irreps",
]


class BadSpec(ValueError):
    """Ill-formed representation request (sizes, variants, parameter reuse)."""


class MissingRoot(ValueError):
    """The requested representation needs a root the context cannot supply."""


class IndexOutOfRange(ValueError):
    """A 1-based eigenvalue position outside the parameter list."""


# -- symmetric-function helpers ------------------------------------------------


def elementary_symmetric(values: Sequence[FieldElement], k: int) -> FieldElement:
    """e_k of the given values (e_0 = 1)."""
    n = len(values)
    if k < 0 or k > n:
        raise ValueError(f"e_{k} of {n} values")
    ctx = values[0].context
    coeffs = [ctx.one()] + [ctx.zero()] * k
    for x in values:
        upper = min(k, len(coeffs) - 1)
        for i in range(upper, 0, -1):
            coeffs[i] = coeffs[i] + coeffs[i - 1] * x
    return coeffs[k]


def delta(values: Sequence[FieldElement], i: int) -> FieldElement:
    """prod_{j != i} (x_j - x_i) over 0-based position i."""
    acc = values[0].context.one()
    xi = values[i]
    for j, xj in enumerate(values):
        if j != i:
            acc = acc * (xj - xi)
    return acc


def _product(values: Sequence[FieldElement]) -> FieldElement:
    acc = values[0].context.one()
    for x in values:
        acc = acc * x
    return acc


def _excl(values: Sequence[FieldElement], i: int) -> tuple[FieldElement, ...]:
    return tuple(x for j, x in enumerate(values) if j != i)


# -- parameter sets ------------------------------------------------------


@dataclass(frozen=True)
class ParameterSet:
    """Ordered eigenvalues x_1..x_n: nonzero, pairwise distinct, 1 <= n <= 5."""

    values: tuple[FieldElement, ...]

    def __post_init__(self):
        n = len(self.values)
        if not 1 <= n <= 5:
            raise BadSpec(f"need between 1 and 5 eigenvalues, got {n}")
        ctx = self.values[0].context
        for v in self.values:
            if v.context.modulus != ctx.modulus:
                raise BadSpec("eigenvalues from mixed contexts")
            if v.is_zero():
                raise BadSpec("eigenvalues must be nonzero")
        for a, b in combinations(range(n), 2):
            if self.values[a] == self.values[b]:
                raise BadSpec(
                    f"eigenvalues must be pairwise distinct; positions {a+1} and {b+1} agree"
                )

    @classmethod
    def from_rationals(cls, context: FieldContext, items: Iterable) -> "ParameterSet":
        return cls(
            tuple(
                v if isinstance(v, FieldElement) else context.from_rational(v)
                for v in items
            )
        )

    @property
    def context(self) -> FieldContext:
        return self.values[0].context

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> FieldElement:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def subset(self, indices: Sequence[int]) -> "ParameterSet":
        """Sub-parameter-set over 0-based positions, order preserved."""
        return ParameterSet(tuple(self.values[i] for i in indices))


@dataclass(frozen=True)
class RepSpec:
    """What to build: dimension, eigenvalues, auxiliary roots, variant.

    ``subset`` (1-based positions into an enclosing eigenvalue set) is
    bookkeeping for enumeration reports and has no effect on the matrices.
    """

    dim: int
    params: ParameterSet
    h: FieldElement | None = None
    f: FieldElement | None = None
    variant: int | None = None
    subset: tuple[int, ...] | None = None

    def __post_init__(self):
        n = len(self.params)
        if self.dim in (1, 2, 3):
            if n != self.dim:
                raise BadSpec(f"dimension {self.dim} needs exactly {self.dim} eigenvalues")
            if self.h is not None or self.f is not None or self.variant is not None:
                raise BadSpec(f"dimension {self.dim} takes no root or variant")
        elif self.dim == 4:
            if n != 4:
                raise BadSpec("dimension 4 needs exactly 4 eigenvalues")
            if self.h is None:
                raise MissingRoot("dimension 4 needs h with h^2 = e4(X)")
            e4 = _product(self.params.values)
            if self.h * self.h != e4:
                raise BadSpec("h^2 does not equal e4(X)")
        elif self.dim == 5:
            if n != 5:
                raise BadSpec("dimension 5 needs exactly 5 eigenvalues")
            if self.f is None:
                raise MissingRoot("dimension 5 needs f with f^5 = e5(X)")
            if self.f**5 != _product(self.params.values):
                raise BadSpec("f^5 does not equal e5(X)")
        elif self.dim == 6:
            if n != 5:
                raise BadSpec("dimension 6 needs exactly 5 eigenvalues")
            if self.variant is None or not 1 <= self.variant <= 5:
                raise BadSpec("dimension 6 needs a variant index in 1..5")
        else:
            raise BadSpec(f"no representations of dimension {self.dim}")

    @property
    def context(self) -> FieldContext:
        return self.params.context


@dataclass(frozen=True)
class Representation:
    """A validated pair of generator images with diagonal g1."""

    spec: RepSpec
    g1: Matrix
    g2: Matrix
    multiplicities: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.g1.rows

    @property
    def context(self) -> FieldContext:
        return self.spec.context

    @property
    def values(self) -> tuple[FieldElement, ...]:
        return self.spec.params.values


@dataclass(frozen=True)
class DeferredRoot:
    """A representation that exists over a splitting field but not here."""

    subset: tuple[int, ...]  # 1-based positions into the enumerated set
    dim: int
    root_order: int
    radicand: FieldElement
    count: int
    suggested_modulus: Polynomial


@dataclass(frozen=True)
class EnumerationResult:
    reps: tuple[Representation, ...]
    deferred: tuple[DeferredRoot, ...]


# -- builders per dimension ----------------------------------------------


def _build_dim1(values):
    ctx = values[0].context
    m = Matrix.diagonal(ctx, [values[0]])
    return m, m, (1,)


def _build_dim2(values):
    ctx = values[0].context
    x1, x2 = values
    s = (x1 - x2).inverse()
    g2 = Matrix.from_rows(
        ctx,
        [
            [-x2 * x2 * s, -x1 * x2 * s],
            [(x1 * x1 - x1 * x2 + x2 * x2) * s, x1 * x1 * s],
        ],
    )
    return Matrix.diagonal(ctx, list(values)), g2, (1, 1)


def _build_dim3(values):
    ctx = values[0].context
    x1, x2, x3 = values
    d1, d2, d3 = (delta(values, i).inverse() for i in range(3))
    g2 = Matrix.from_rows(
        ctx,
        [
            [
                x2 * x3 * (x2 + x3) * d1,
                x3 * (x1 * x1 + x2 * x3) * d1,
                x2 * (x1 * x1 + x2 * x3) * d1,
            ],
            [
                x3 * (x2 * x2 + x1 * x3) * d2,
                x1 * x3 * (x1 + x3) * d2,
                x1 * (x2 * x2 + x1 * x3) * d2,
            ],
            [
                x2 * (x3 * x3 + x1 * x2) * d3,
                x1 * (x3 * x3 + x1 * x2) * d3,
                x1 * x2 * (x1 + x2) * d3,
            ],
        ],
    )
    return Matrix.diagonal(ctx, list(values)), g2, (1, 1, 1)


def _build_dim4(values, h):
    ctx = values[0].context
    e4 = _product(values)
    alphas = []
    betas = []
    for i in range(4):
        rest = _excl(values, i)
        alphas.append(
            elementary_symmetric(rest, 3) * elementary_symmetric(rest, 1)
            - h * elementary_symmetric(rest, 2)
        )
        betas.append(e4 / (values[i] * values[i]) - h)
    # gamma_a for a in {2,3,4} (1-based labels): x1*xa + xb*xc - h
    gammas = {}
    for a in (2, 3, 4):
        b, c = [t for t in (2, 3, 4) if t != a]
        gammas[a] = values[0] * values[a - 1] + values[b - 1] * values[c - 1] - h
    dinv = [delta(values, i).inverse() for i in range(4)]
    rows = [
        [
            alphas[0] * dinv[0],
            betas[0] * gammas[3] * gammas[4] * dinv[0],
            betas[0] * gammas[2] * gammas[4] * dinv[0],
            betas[0] * gammas[2] * gammas[3] * dinv[0],
        ],
        [
            betas[1] * dinv[1],
            alphas[1] * dinv[1],
            betas[1] * gammas[2] * dinv[1],
            betas[1] * gammas[2] * dinv[1],
        ],
        [
            betas[2] * dinv[2],
            betas[2] * gammas[3] * dinv[2],
            alphas[2] * dinv[2],
            betas[2] * gammas[3] * dinv[2],
        ],
        [
            betas[3] * dinv[3],
            betas[3] * gammas[4] * dinv[3],
            betas[3] * gammas[4] * dinv[3],
            alphas[3] * dinv[3],
        ],
    ]
    return (
        Matrix.diagonal(ctx, list(values)),
        Matrix.from_rows(ctx, rows),
        (1, 1, 1, 1),
    )


def _build_dim5(values, f):
    ctx = values[0].context
    entries = []
    f2 = f * f
    for i in range(5):
        rest = _excl(values, i)
        dinv = delta(values, i).inverse()
        xi = values[i]
        for j in range(5):
            if i == j:
                prod = ctx.one()
                for xk in rest:
                    prod = prod * (f + xk)
                num = (
                    elementary_symmetric(rest, 4) * elementary_symmetric(rest, 1)
                    + f * xi * elementary_symmetric(rest, 3)
                    + f * prod
                )
                entries.append(num * dinv)
            else:
                prod = ctx.one()
                for k in range(5):
                    if k != i and k != j:
                        prod = prod * (f2 + xi * values[k])
                num = (xi * xi + f * xi + f2) * prod
                entries.append(num * dinv / (f * xi * values[j]))
    return (
        Matrix.diagonal(ctx, list(values)),
        Matrix(ctx, 5, 5, entries),
        (1, 1, 1, 1, 1),
    )


# -- the 6-dimensional family ------------------------------------------------
#
# Helper factors below take a 1-padded tuple x with x[1]..x[5] the
# eigenvalues, so the code reads like the closed formulas.  Argument
# transpositions act by evaluating the same helper on a swapped tuple.


def _sig(x: tuple, *pairs: tuple[int, int]) -> tuple:
    vs = list(x)
    for i, j in pairs:
        vs[i], vs[j] = vs[j], vs[i]
    return tuple(vs)


def _d6_q(x, a: int) -> FieldElement:
    b, c = [t for t in (2, 3, 4) if t != a]
    return x[1] * x[a] + x[b] * x[c]


def _d6_p(x, i: int) -> FieldElement:
    e5 = x[1] * x[2] * x[3] * x[4] * x[5]
    return e5 - x[i] ** 3 * x[5] ** 2


def _d6_r(x) -> FieldElement:
    # Delta_3 of X minus {x_2}: (x1-x3)(x4-x3)(x5-x3)
    d3 = (x[1] - x[3]) * (x[4] - x[3]) * (x[5] - x[3])
    return x[3] / (x[1] * (x[2] - x[1]) * d3)


def _d6_v(x) -> FieldElement:
    d5 = (x[1] - x[5]) * (x[3] - x[5]) * (x[4] - x[5])
    return _d6_p(x, 2) / (x[1] * x[5] * (x[2] - x[1]) * d5)


def _d6_u(x) -> FieldElement:
    d5 = (x[1] - x[5]) * (x[3] - x[5]) * (x[4] - x[5])
    num = x[1] * x[2] * (x[3] + x[4]) * (x[3] * x[4] - x[1] * x[5]) + x[3] * x[4] * (
        x[2] - x[1]
    ) * (x[1] * x[1] + x[2] * x[5])
    return num / ((x[2] - x[1]) * d5)


def _d6_w(x) -> FieldElement:
    inner = x[1] * x[2] * x[3] * x[4] * (x[1] * x[3] + x[5] * (x[2] + x[4])) - x[
        5
    ] ** 3 * (x[1] * x[3] * (x[2] + x[4]) + x[5] * x[2] * x[4])
    return _d6_p(x, 1) * inner


def _d6_z(x) -> FieldElement:
    # e_i below are elementary symmetric in x2, x3, x4 only
    trio = (x[2], x[3], x[4])
    e1 = elementary_symmetric(trio, 1)
    e2 = elementary_symmetric(trio, 2)
    e3 = elementary_symmetric(trio, 3)
    first = (e1 * e3 - x[1] ** 2 * e2) * (x[1] * e1 * e3 - e2 * x[5] ** 3) * x[1] * x[5]
    second = e3 * (x[1] - x[5]) * (
        x[1] ** 2 * (e1 - x[1]) * (e3 * (x[1] - x[5]) - e1 * x[5] ** 3)
        + (x[1] * e2 - e3) * (x[1] * e2 + (x[1] - x[5]) * x[5] ** 2) * x[5]
    )
    return first + second


def _build_dim6_base(values):
    """The variant with the last eigenvalue doubled, straight off the table."""
    ctx = values[0].context
    x = (None,) + tuple(values)
    zero = ctx.zero()
    dinv = [None] + [delta(values, i).inverse() for i in range(5)]

    g = [[zero] * 7 for _ in range(7)]
    # top-left 4x4 block
    for i in range(1, 5):
        rest = _excl(values, i - 1)
        g[i][i] = (
            elementary_symmetric(rest, 4) * elementary_symmetric(rest, 1)
            - x[i] * x[5] * elementary_symmetric(rest, 3)
        ) * dinv[i]
    for a in (2, 3, 4):
        b, c = [t for t in (2, 3, 4) if t != a]
        g[1][a] = _d6_p(x, a) * _d6_q(x, b) * _d6_q(x, c) / (x[1] ** 2) * dinv[a]
        g[a][1] = _d6_p(x, 1) / (x[a] ** 2) * dinv[1]
        for b2 in (2, 3, 4):
            if b2 != a:
                g[a][b2] = _d6_q(x, a) * _d6_p(x, b2) / (x[a] ** 2) * dinv[b2]
    # rows 5..6, columns 1..2
    g[5][1] = dinv[1]
    g[6][2] = dinv[2]
    # rows 5..6, columns 3..4
    g[5][3] = _d6_q(x, 4) * _d6_r(x)
    g[5][4] = _d6_q(x, 3) * _d6_r(_sig(x, (3, 4)))
    g[6][3] = _d6_r(_sig(x, (1, 2)))
    g[6][4] = _d6_r(_sig(x, (1, 2), (3, 4)))
    # rows 5..6, columns 5..6
    g[5][5] = _d6_u(x)
    g[5][6] = _d6_q(x, 3) * _d6_q(x, 4) * _d6_v(x)
    g[6][5] = _d6_v(_sig(x, (1, 2)))
    g[6][6] = _d6_u(_sig(x, (1, 2)))
    # rows 3..4, columns 5..6
    s23 = (x[5] * delta(values, 4)).inverse()
    g[3][5] = _d6_w(x) / (x[3] ** 2) * s23
    g[3][6] = _d6_q(x, 3) * _d6_w(_sig(x, (1, 2))) / (x[3] ** 2) * s23
    g[4][5] = _d6_w(_sig(x, (3, 4))) / (x[4] ** 2) * s23
    g[4][6] = _d6_q(x, 4) * _d6_w(_sig(x, (1, 2), (3, 4))) / (x[4] ** 2) * s23
    # rows 1..2, columns 5..6
    s13 = delta(values, 4).inverse()
    g[1][5] = _d6_z(x) / x[1] * s13
    g[1][6] = (
        _d6_q(x, 3)
        * _d6_q(x, 4)
        * _d6_w(_sig(x, (1, 2), (2, 3)))
        / (x[1] ** 2 * x[5])
        * s13
    )
    g[2][5] = _d6_w(_sig(x, (2, 3))) / (x[2] ** 2 * x[5]) * s13
    g[2][6] = _d6_z(_sig(x, (1, 2))) / x[2] * s13

    g1 = Matrix.diagonal(ctx, [x[1], x[2], x[3], x[4], x[5], x[5]])
    g2 = Matrix.from_rows(ctx, [row[1:] for row in g[1:]])
    return g1, g2


def _build_dim6(values, variant: int):
    swapped = list(values)
    if variant != 5:
        swapped[variant - 1], swapped[4] = swapped[4], swapped[variant - 1]
    g1, g2 = _build_dim6_base(tuple(swapped))
    mults = [1, 1, 1, 1, 1]
    mults[variant - 1] = 2
    return g1, g2, tuple(mults)


def _self_check(spec: RepSpec, g1: Matrix, g2: Matrix, mults: tuple[int, ...]) -> None:
    values = spec.params.values
    ctx = spec.context
    if (g1 @ g2) @ g1 != (g2 @ g1) @ g2:
        raise AssertionError(f"braid relation failed for {spec}")
    d = g1.rows
    acc = Matrix.identity(ctx, d)
    for xv in values:
        acc = acc @ (g2 - Matrix.identity(ctx, d).scale(xv))
    if any(not e.is_zero() for e in acc.entries):
        raise AssertionError(f"generator relation P_X(g2) != 0 for {spec}")
    roots = []
    for xv, m in zip(values, mults):
        roots.extend([xv] * m)
    if charpoly(g2) != Polynomial.from_roots(ctx, roots):
        raise AssertionError(f"characteristic polynomial mismatch for {spec}")


def build_rep(spec: RepSpec) -> Representation:
    """Construct and validate the representation described by ``spec``."""
    values = spec.params.values
    if spec.dim == 1:
        g1, g2, mults = _build_dim1(values)
    elif spec.dim == 2:
        g1, g2, mults = _build_dim2(values)
    elif spec.dim == 3:
        g1, g2, mults = _build_dim3(values)
    elif spec.dim == 4:
        g1, g2, mults = _build_dim4(values, spec.h)
    elif spec.dim == 5:
        g1, g2, mults = _build_dim5(values, spec.f)
    else:
        g1, g2, mults = _build_dim6(values, spec.variant)
    _self_check(spec, g1, g2, mults)
    return Representation(spec=spec, g1=g1, g2=g2, multiplicities=mults)


def transpose_parameters(rep_or_expr, i: int, j: int):
    """Swap the eigenvalues at 1-based positions i and j, then rebuild.

    Acting twice with the same pair returns the original.  For the
    6-dimensional family this realises the transposition action that links
    the five variants.  A callable argument is treated as an expression in
    the parameter tuple and comes back wrapped so that it evaluates at the
    swapped arguments.
    """
    if i == j:
        raise BadSpec("positions must be distinct")
    if callable(rep_or_expr) and not isinstance(rep_or_expr, Representation):
        expr = rep_or_expr

        def swapped_expr(values):
            vs = list(values)
            if not (1 <= i <= len(vs) and 1 <= j <= len(vs)):
                raise IndexOutOfRange(f"positions {i},{j} for {len(vs)} arguments")
            vs[i - 1], vs[j - 1] = vs[j - 1], vs[i - 1]
            return expr(tuple(vs))

        return swapped_expr
    rep = rep_or_expr
    n = len(rep.spec.params)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"positions {i},{j} out of range for {n} eigenvalues")
    vs = list(rep.spec.params.values)
    vs[i - 1], vs[j - 1] = vs[j - 1], vs[i - 1]
    spec = RepSpec(
        dim=rep.spec.dim,
        params=ParameterSet(tuple(vs)),
        h=rep.spec.h,
        f=rep.spec.f,
        variant=rep.spec.variant,
    )
    return build_rep(spec)


CYCLOTOMIC5 = (1, 1, 1, 1, 1)  # ascending coefficients of t^4+t^3+t^2+t+1


def compose_fifth_roots(f0: FieldElement) -> tuple[FieldElement, ...]:
    """The five fifth roots f0 * zeta^k in a context whose generator is zeta.

    Only meaningful when the context adjoins a primitive fifth root of
    unity (the shipped cyclotomic modulus does); raises otherwise.
    """
    ctx = f0.context
    zeta = ctx.generator()
    if zeta**5 != 1 or zeta == 1:
        raise ValueError("context generator is not a primitive fifth root of unity")
    return tuple(f0 * zeta**k for k in range(5))


def enumerate_irreps(
    X: ParameterSet, context: FieldContext | None = None
) -> EnumerationResult:
    """All irreducible representations over every nonempty subset of X.

    Subsets are visited in lexicographic order of their index tuples.
    Dimension-4 and -5 members whose auxiliary root is missing from the
    context are returned as :class:`DeferredRoot` entries carrying a
    modulus suggestion: the defining polynomial of the missing root or,
    once one fifth root exists, the fifth cyclotomic modulus that supplies
    the remaining four.
    """
    if context is not None and context != X.context:
        lifted = []
        for v in X.values:
            if not v.is_rational():
                raise BadSpec("cannot move non-rational eigenvalues between contexts")
            lifted.append(context.from_rational(v.rational_value()))
        X = ParameterSet(tuple(lifted))
    ctx = X.context
    n = len(X)
    reps: list[Representation] = []
    deferred: list[DeferredRoot] = []
    subsets = sorted(
        combo for size in range(1, n + 1) for combo in combinations(range(n), size)
    )
    for combo in subsets:
        size = len(combo)
        sub = X.subset(combo)
        label = tuple(c + 1 for c in combo)
        if size <= 3:
            reps.append(build_rep(RepSpec(dim=size, params=sub, subset=label)))
        elif size == 4:
            e4 = _product(sub.values)
            roots = element_kth_roots(e4, 2)
            for h in roots:
                reps.append(build_rep(RepSpec(dim=4, params=sub, h=h, subset=label)))
            if not roots:
                mod = Polynomial.from_coeffs(ctx, [-e4, ctx.zero(), ctx.one()])
                deferred.append(DeferredRoot(label, 4, 2, e4, 2, mod))
        else:
            e5 = _product(sub.values)
            roots = element_kth_roots(e5, 5)
            for f in roots:
                reps.append(build_rep(RepSpec(dim=5, params=sub, f=f, subset=label)))
            if len(roots) < 5:
                if roots:
                    mod = Polynomial.from_coeffs(ctx, CYCLOTOMIC5)
                else:
                    coeffs = [-e5] + [ctx.zero()] * 4 + [ctx.one()]
                    mod = Polynomial.from_coeffs(ctx, coeffs)
                deferred.append(DeferredRoot(label, 5, 5, e5, 5 - len(roots), mod))
            for variant in range(1, 6):
                reps.append(
                    build_rep(RepSpec(dim=6, params=sub, variant=variant, subset=label))
                )
    return EnumerationResult(tuple(reps), tuple(deferred))
