"""Dense univariate polynomials over an exact coefficient domain.

A coefficient domain ("base") is any object with ``zero``, ``one``,
``is_field`` and a ``__call__`` that coerces plain values into it: the
finite fields of :mod:`hyperlab.algebra.fields`, :data:`QQ`,
:class:`PolyRing` (for F_q[t] coefficients) and the local field specs of
:mod:`hyperlab.localnum`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from hyperlab.algebra.fields import (
    QQ,
    FieldElement,
    FiniteField,
    prime_factors,
)
from hyperlab.errors import IncompatibleFieldError, UndefinedResultantError

NEG_INF = float("-inf")


class Polynomial:
    """Immutable polynomial; ``coeffs`` runs from degree 0 upwards."""

    __slots__ = ("base", "coeffs")

    def __init__(self, base, coeffs: Iterable = ()) -> None:
        cs = [base(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.base = base
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, base) -> "Polynomial":
        return cls(base, (base.zero, base.one))

    @classmethod
    def constant(cls, base, c) -> "Polynomial":
        return cls(base, (c,))

    @classmethod
    def monomial(cls, base, degree: int, c=1) -> "Polynomial":
        return cls(base, [base.zero] * degree + [base(c)])

    # -- basic properties ----------------------------------------------
    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        if not self.coeffs:
            return self.base.zero
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lc == self.base.one

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.base.zero

    # -- coercion -------------------------------------------------------
    def _other(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.base is not self.base and other.base != self.base:
                if isinstance(self.base, PolyRing) and other.base == self.base.field:
                    # an element of F[t] used as a constant over F[t]
                    return Polynomial(self.base, (other,))
                raise IncompatibleFieldError(
                    f"polynomials over {self.base!r} and {other.base!r}"
                )
            return other
        try:
            return Polynomial(self.base, (other,))
        except (TypeError, IncompatibleFieldError):
            return NotImplemented

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.base, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.base, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return Polynomial(self.base)
        zero = self.base.zero
        out = [zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(o.coeffs):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Polynomial(self.base, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial(self.base, (self.base.one,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        o = self._other(other)
        if o is NotImplemented:
            return o
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.base.is_field and o.lc != self.base.one:
            raise ArithmeticError("division by a non-monic polynomial over a ring")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Polynomial(self.base), self
        inv_lc = self.base.one / o.lc if self.base.is_field else self.base.one
        quot = [self.base.zero] * (dq + 1)
        m = len(o.coeffs) - 1
        for k in range(dq, -1, -1):
            c = rem[k + m] * inv_lc
            quot[k] = c
            if c:
                for j, y in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * y
        return Polynomial(self.base, quot), Polynomial(self.base, rem[:m])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- comparison -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial(self.base, (other,))
            except (TypeError, ValueError, IncompatibleFieldError):
                return NotImplemented
        return self.base == other.base and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- calculus & evaluation -----------------------------------------
    def derivative(self) -> "Polynomial":
        return Polynomial(self.base, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.base.zero
        return acc

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        inv = self.base.one / self.lc
        return Polynomial(self.base, [c * inv for c in self.coeffs])

    def change_base(self, base) -> "Polynomial":
        return Polynomial(base, self.coeffs)

    def sort_key(self) -> tuple:
        """Key comparing coefficients from the top degree down."""
        return (len(self.coeffs),) + tuple(_coeff_key(c) for c in reversed(self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            if i == 0:
                terms.append(cs)
                continue
            mon = "X" if i == 1 else f"X^{i}"
            if c == self.base.one:
                terms.append(mon)
            else:
                if "+" in cs or " " in cs or "-" in cs[1:]:
                    cs = f"({cs})"
                terms.append(f"{cs}*{mon}")
        return " + ".join(terms).replace("+ -", "- ")


def _coeff_key(c):
    if isinstance(c, FieldElement):
        return c.sort_key()
    if isinstance(c, Polynomial):
        return c.sort_key()
    return c


@dataclass(frozen=True)
class PolyRing:
    """Coefficient domain F[t] (not a field), used for F_q((t)) inputs."""

    field: FiniteField

    is_field = False

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self.field)

    @property
    def one(self) -> Polynomial:
        return Polynomial(self.field, (self.field.one,))

    @property
    def t(self) -> Polynomial:
        return Polynomial.x(self.field)

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.base != self.field:
                raise IncompatibleFieldError("polynomial over a different field")
            return value
        return Polynomial(self.field, (self.field(value),))

    def __repr__(self) -> str:
        return f"{self.field!r}[t]"


def _check_same(a: Polynomial, b: Polynomial) -> None:
    if a.base != b.base:
        raise IncompatibleFieldError(f"polynomials over {a.base!r} and {b.base!r}")


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over a field (zero if both inputs are zero)."""
    _check_same(a, b)
    if not a.base.is_field:
        raise TypeError("gcd requires coefficients in a field")
    while b:
        a, b = b, a % b
    return a.monic()


def poly_powmod(f: Polynomial, e: int, m: Polynomial) -> Polynomial:
    result = Polynomial(f.base, (f.base.one,)) % m
    base = f % m
    while e:
        if e & 1:
            result = (result * base) % m
        base = (base * base) % m
        e >>= 1
    return result


# -- determinants, resultants, discriminants ---------------------------


def _exact_div(a, b):
    if isinstance(a, Polynomial):
        return a.exact_div(b)
    if isinstance(a, int):
        q, r = divmod(a, b)
        assert r == 0
        return q
    return a / b


def bareiss_determinant(matrix: Sequence[Sequence], zero, one):
    """Fraction-free determinant over an integral domain with exact division."""
    M = [list(row) for row in matrix]
    n = len(M)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not M[k][k]:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(row_i[j] * pivot - mik * row_k[j], prev)
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(f: Polynomial, g: Polynomial) -> list[list]:
    m, n = f.degree, g.degree
    zero = f.base.zero
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def poly_resultant(f: Polynomial, g: Polynomial):
    """Res(f, g) as the Sylvester determinant.

    For monic f this is the product of g over the roots of f, with
    multiplicity.  Over QQ, integral inputs are handled with int
    arithmetic and the result is returned as a Fraction.
    """
    _check_same(f, g)
    if not f:
        raise UndefinedResultantError("resultant with the zero polynomial as first argument")
    base = f.base
    if not g:
        return base.zero
    S = sylvester_matrix(f, g)
    if base is QQ or base == QQ:
        if all(x.denominator == 1 for row in S for x in row):
            ints = [[x.numerator for x in row] for row in S]
            return Fraction(bareiss_determinant(ints, 0, 1))
    return bareiss_determinant(S, base.zero, base.one)


def poly_discriminant(f: Polynomial):
    """disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f), with Res of formal degree d-1."""
    d = f.degree
    if d < 1:
        raise UndefinedResultantError("discriminant of a constant")
    fp = f.derivative()
    if not fp:
        return f.base.zero
    r = poly_resultant(f, fp)
    # Sylvester with the true degree of f' differs by lc(f)^(d-1-deg f')
    drop = (d - 1) - fp.degree
    lc = f.lc
    for _ in range(drop):
        r = r * lc
    r = _exact_div(r, lc)
    return -r if (d * (d - 1) // 2) % 2 else r


# -- finite field specifics --------------------------------------------


def roots_in(f: Polynomial, F: FiniteField | None = None) -> list[FieldElement]:
    """Roots of f in F (default: its coefficient field) by exhaustive search."""
    F = F or f.base
    g = f.change_base(F) if F != f.base else f
    return [x for x in F.elements() if not g(x)]


def is_irreducible(f: Polynomial) -> bool:
    """Irreducibility over a finite field.

    Root search for degree <= 2, Rabin's test otherwise.
    """
    F = f.base
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    if d == 2:
        return not roots_in(f)
    q = F.order
    X = Polynomial.x(F)
    fm = f.monic()
    if poly_powmod(X, q**d, fm) != X % fm:
        return False
    for r in prime_factors(d):
        h = poly_powmod(X, q ** (d // r), fm) - X
        if poly_gcd(h, fm).degree != 0:
            return False
    return True


def monic_polynomials(F: FiniteField, d: int) -> Iterable[Polynomial]:
    """All monic degree-d polynomials, ordered by coefficients from the top down."""
    els = F.elements()
    for lower in itertools.product(els, repeat=d):
        yield Polynomial(F, tuple(reversed(lower)) + (F.one,))


def find_irreducible(F: FiniteField, d: int) -> Polynomial:
    """Least monic irreducible polynomial of degree d (coefficients compared top down)."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    for f in monic_polynomials(F, d):
        if is_irreducible(f):
            return f
    raise AssertionError("no irreducible polynomial found")
