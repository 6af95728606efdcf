"""Exact arithmetic in Q and in simple extensions Q[t]/(m(t)).

A :class:`FieldContext` wraps a monic squarefree modulus ``m`` with rational
coefficients.  Elements are coefficient vectors of length ``deg m`` in the
residue class ring Q[t]/(m); the degree-1 modulus ``t`` gives plain Q.  The
modulus is *not* checked for irreducibility: a squarefree reducible modulus
yields a product of fields, and inverting a zero divisor raises
:class:`NotInvertible` at the point of use.

All arithmetic is exact.  Rationals are ``fractions.Fraction`` throughout
(always reduced, positive denominator), so there is no floating point
anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "FieldContext",
    "FieldElement",
    "NonMonicModulus",
    "NotSquarefree",
    "ContextMismatch",
    "NotInvertible",
    "make_context",
    "rationals",
    "cyclotomic5_context",
    "rational_kth_root",
    "element_kth_roots",
]

Rational = Fraction

Coercible = Union["FieldElement", Fraction, int]


class NonMonicModulus(ValueError):
    """Modulus is not monic (or has degree < 1)."""


class NotSquarefree(ValueError):
    """Modulus shares a factor with its derivative."""


class ContextMismatch(ValueError):
    """Operands live in different coefficient contexts."""


class NotInvertible(ArithmeticError):
    """A zero divisor was inverted (the modulus is reducible)."""


# -- polynomial helpers on raw Fraction lists (used only for moduli) --------


def _trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = _trim(list(a))
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv_lead
        off = len(a) - len(b)
        for i, bc in enumerate(b):
            a[off + i] -= c * bc
        a.pop()
    return _trim(a)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b)
    return a


class FieldContext:
    """Coefficient field Q[t]/(m(t)) for a monic squarefree modulus m."""

    __slots__ = ("modulus", "degree", "_reduction", "_zero", "_one")

    def __init__(self, modulus: Sequence[Coercible]):
        coeffs = [Fraction(c) for c in modulus]
        _trim(coeffs)
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise NonMonicModulus(f"modulus must be monic of degree >= 1, got {coeffs}")
        deriv = [i * c for i, c in enumerate(coeffs)][1:]
        if len(_poly_gcd(coeffs, deriv)) != 1:
            raise NotSquarefree(f"modulus {coeffs} is not squarefree")
        self.modulus: tuple[Fraction, ...] = tuple(coeffs)
        self.degree: int = len(coeffs) - 1
        # Reduction table: coefficient vector of t^k mod m for k = d .. 2d-2.
        d = self.degree
        table = [tuple(-c for c in coeffs[:-1])]  # t^d
        for _ in range(d - 2):
            prev = table[-1]
            nxt = [Fraction(0)] * d
            for i in range(d - 1):
                nxt[i + 1] += prev[i]
            top = prev[d - 1]
            if top:
                base = table[0]
                for i in range(d):
                    nxt[i] += top * base[i]
            table.append(tuple(nxt))
        self._reduction: tuple[tuple[Fraction, ...], ...] = tuple(table)
        zero = Fraction(0)
        self._zero = FieldElement(self, (zero,) * d)
        self._one = FieldElement(self, (Fraction(1),) + (zero,) * (d - 1))

    # -- constructors --------------------------------------------------

    def zero(self) -> "FieldElement":
        return self._zero

    def one(self) -> "FieldElement":
        return self._one

    def from_rational(self, value: Coercible) -> "FieldElement":
        r = Fraction(value)
        pad = (Fraction(0),) * (self.degree - 1)
        return FieldElement(self, (r,) + pad)

    def generator(self) -> "FieldElement":
        """The residue class of t (a root of the modulus)."""
        if self.degree == 1:
            # modulus t - m0: the generator is the rational root itself
            return self.from_rational(-self.modulus[0])
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return FieldElement(self, tuple(coeffs))

    def element(self, coeffs: Iterable[Coercible]) -> "FieldElement":
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            raise ValueError(
                f"coefficient vector of length {len(cs)} in a degree {self.degree} context"
            )
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    # -- structural ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldContext) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"FieldContext({[str(c) for c in self.modulus]})"

    def is_base(self) -> bool:
        return self.degree == 1


def make_context(modulus: Sequence[Coercible]) -> FieldContext:
    """Build the context Q[t]/(m) from ascending modulus coefficients."""
    return FieldContext(modulus)


def rationals() -> FieldContext:
    """The base field Q, realised as the degree-1 context with modulus t."""
    return FieldContext((0, 1))


def cyclotomic5_context() -> FieldContext:
    """Q(zeta_5), the context needed to list all five fifth roots of a rational."""
    return FieldContext((1, 1, 1, 1, 1))


def _check_context(a: "FieldElement", b: "FieldElement") -> None:
    ca, cb = a.context, b.context
    if ca is not cb and ca.modulus != cb.modulus:
        raise ContextMismatch(f"{ca!r} vs {cb!r}")


class FieldElement:
    """An element of Q[t]/(m), stored as a coefficient vector of length deg m."""

    __slots__ = ("context", "coeffs")

    def __init__(self, context: FieldContext, coeffs: tuple[Fraction, ...]):
        self.context = context
        self.coeffs = coeffs

    # -- coercion --------------------------------------------------------

    def _coerce(self, other: Coercible) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            _check_context(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.context.from_rational(other)
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Coercible) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.context, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.context, tuple(a - b for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other: Coercible) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.context, tuple(-a for a in self.coeffs))

    def __mul__(self, other: Coercible) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        d = len(a)
        if d == 1:
            return FieldElement(self.context, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:d]
        reduction = self.context._reduction
        for k in range(d, 2 * d - 1):
            ck = prod[k]
            if ck:
                red = reduction[k - d]
                for i in range(d):
                    out[i] += ck * red[i]
        return FieldElement(self.context, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        d = self.context.degree
        if d == 1:
            return FieldElement(self.context, (1 / self.coeffs[0],))
        # extended gcd of self (as a polynomial) with the modulus
        r0 = list(self.context.modulus)
        r1 = _trim(list(self.coeffs))
        s0 = [Fraction(0)]
        s1 = [Fraction(1)]
        while True:
            # divide r0 by r1
            q = [Fraction(0)] * max(len(r0) - len(r1) + 1, 1)
            rem = list(r0)
            inv_lead = 1 / r1[-1]
            while len(rem) >= len(r1):
                if rem[-1] == 0:
                    rem.pop()
                    continue
                c = rem[-1] * inv_lead
                q[len(rem) - len(r1)] = c
                off = len(rem) - len(r1)
                for i, bc in enumerate(r1):
                    rem[off + i] -= c * bc
                rem.pop()
            _trim(rem)
            # s_new = s0 - q*s1
            s_new = list(s0) + [Fraction(0)] * max(
                0, len(q) + len(s1) - 1 - len(s0)
            )
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        s_new[i + j] -= qi * sj
            _trim(s_new)
            r0, r1 = r1, rem
            s0, s1 = s1, s_new
            if not r1:
                break
        if len(r0) != 1:
            raise NotInvertible(
                "zero divisor: element shares the factor "
                f"{[str(c) for c in r0]} with the modulus"
            )
        scale = 1 / r0[0]
        inv = [c * scale for c in s0]
        inv += [Fraction(0)] * (d - len(inv))
        return FieldElement(self.context, tuple(inv[:d]))

    def __truediv__(self, other: Coercible) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Coercible) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = self.context.one()
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and views ---------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return (
                self.context.modulus == other.context.modulus
                and self.coeffs == other.coeffs
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.context.modulus, self.coeffs))

    def __repr__(self) -> str:
        if self.context.degree == 1:
            return f"<{self.coeffs[0]}>"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{i}")
        return "<" + (" + ".join(terms) or "0") + ">"


# -- roots -------------------------------------------------------------


def _int_kth_root(n: int, k: int) -> int | None:
    """Exact integer k-th root of n >= 0, or None."""
    if n in (0, 1):
        return n
    lo, hi = 1, 1 << ((n.bit_length() + k - 1) // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        p = mid**k
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid
    return None


def rational_kth_root(value: Coercible, k: int) -> Fraction | None:
    """The rational k-th root of a rational, if one exists.

    For even k the positive root is returned; callers wanting both signs
    enumerate the pair themselves.  Returns None when no rational root
    exists (including negative radicands with even k).
    """
    if k < 1:
        raise ValueError(f"root order must be >= 1, got {k}")
    r = Fraction(value)
    if k == 1:
        return r
    if r == 0:
        return Fraction(0)
    sign = 1
    if r < 0:
        if k % 2 == 0:
            return None
        sign = -1
        r = -r
    num = _int_kth_root(r.numerator, k)
    if num is None:
        return None
    den = _int_kth_root(r.denominator, k)
    if den is None:
        return None
    return Fraction(sign * num, den)


def element_kth_roots(value: FieldElement, k: int) -> list[FieldElement]:
    """All k-th roots of ``value`` of the shape r * theta^j, r rational.

    This is a best-effort search, not a factorisation: it finds every root
    that is a rational multiple of a power of the context generator.  That
    covers the cases this package constructs on purpose (rational roots,
    a directly adjoined root t^k = e, and f0 * zeta_5^j in a cyclotomic
    context).  Roots of other shapes are reported as missing by callers.

    Results are ordered by generator power, positive rational factor first.
    """
    ctx = value.context
    if value.is_zero():
        return [ctx.zero()]
    roots: list[FieldElement] = []
    seen: set[tuple] = set()
    theta = ctx.generator()
    max_j = 1 if ctx.degree == 1 else k * ctx.degree + 1
    theta_pow = ctx.one()
    for j in range(max_j):
        if j:
            theta_pow = theta_pow * theta
        y = theta_pow**k
        if y.is_zero():
            break
        q = value / y
        if not q.is_rational():
            continue
        r0 = rational_kth_root(q.rational_value(), k)
        if r0 is None:
            continue
        candidates = [r0, -r0] if k % 2 == 0 else [r0]
        for r in candidates:
            root = theta_pow * ctx.from_rational(r)
            if root.coeffs not in seen and root**k == value:
                seen.add(root.coeffs)
                roots.append(root)
    return roots
