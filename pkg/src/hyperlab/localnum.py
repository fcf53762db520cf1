"""Truncated non-Archimedean numbers over Q_p and F_q((t)).

A :class:`LocalNumber` is ``pi**valuation * unit`` where ``pi`` is the
uniformizer (p, resp. t) and ``unit`` is known modulo ``pi**prec``.
Norms are never materialised as reals: a norm ``|x| = c**(-nu)`` is carried
by its exponent ``nu`` (:class:`ValExponent`), an exact rational or +inf.

Arithmetic tracks precision.  Whenever a result would have no known
nonzero digit (total cancellation) :class:`InsufficientPrecisionError` is
raised instead of guessing.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import NamedTuple

from hyperlab.algebra.fields import QQ, FieldElement, FiniteField, PrimeField, is_prime
from hyperlab.algebra.poly import (
    PolyRing,
    Polynomial,
    is_irreducible,
    poly_discriminant,
    poly_resultant,
)
from hyperlab.errors import (
    IncompatibleFieldError,
    InseparablePolynomialError,
    InsufficientPrecisionError,
    InvalidPrimeError,
    NoConvergenceError,
    NotIrreducibleError,
    UnnormalizedInputError,
    UnsupportedCharacteristicError,
)

DEFAULT_PRECISION = 16
INF = math.inf


@total_ordering
@dataclass(frozen=True)
class ValExponent:
    """Exponent nu of a norm ``base**(-nu)``; ``value`` is a Fraction or +inf.

    Ordering is on nu, so a *larger* exponent means a *smaller* norm.
    """

    value: Fraction | float

    def __post_init__(self) -> None:
        v = self.value
        if isinstance(v, float):
            if v != INF:
                raise TypeError("valuation exponents are exact; only +inf may be a float")
        else:
            object.__setattr__(self, "value", Fraction(v))

    @property
    def is_infinite(self) -> bool:
        return self.value == INF

    def _coerce(self, other) -> Fraction | float:
        if isinstance(other, ValExponent):
            return other.value
        if isinstance(other, (int, Fraction)) or other == INF:
            return other
        return NotImplemented

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value == o

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value < o

    def __hash__(self) -> int:
        return hash(self.value)

    def __add__(self, other) -> "ValExponent":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ValExponent(INF if INF in (self.value, o) else self.value + o)

    __radd__ = __add__

    def __mul__(self, k) -> "ValExponent":
        k = Fraction(k)
        if k < 0:
            raise ValueError("scaling a valuation by a negative number")
        if self.is_infinite:
            return ValExponent(INF) if k else ValExponent(0)
        return ValExponent(self.value * k)

    __rmul__ = __mul__

    def __truediv__(self, k) -> "ValExponent":
        return self * (1 / Fraction(k))

    def norm(self, base: int) -> Fraction:
        """``base**(-nu)`` for integral nu (0 for +inf)."""
        if self.is_infinite:
            return Fraction(0)
        if self.value.denominator != 1:
            raise ValueError("norm of a non-integral exponent is irrational")
        return Fraction(base) ** (-self.value.numerator)

    def __str__(self) -> str:
        return "+inf" if self.is_infinite else str(self.value)

    def to_json(self) -> str:
        return str(self)


# ---------------------------------------------------------------------------
# field specs


class LocalFieldSpec:
    """Common interface of :class:`PAdicField` and :class:`LaurentField`.

    Subclasses implement arithmetic on truncated "series" (the unit part of
    a number modulo ``pi**k``): ints for Q_p, coefficient tuples for
    F_q((t)).
    """

    is_field = True
    precision: int

    # -- element construction ------------------------------------------
    @property
    def zero(self) -> "LocalNumber":
        return LocalNumber(self, INF, self._s_zero(0), 0)

    @property
    def one(self) -> "LocalNumber":
        return self(1)

    def _make(self, val: int, series, k: int) -> "LocalNumber":
        """Normalise pi**val * series (series mod pi**k) into a LocalNumber."""
        s = self._s_val(series, k)
        if s >= k:
            raise InsufficientPrecisionError(
                f"result vanishes modulo the known precision (pi^{val + k})"
            )
        return LocalNumber(self, val + s, self._s_down(series, s, k), k - s)

    def uniformizer(self, prec: int | None = None) -> "LocalNumber":
        prec = prec or self.precision
        return LocalNumber(self, 1, self._s_one(prec), prec)

    # -- helpers used by Hensel ----------------------------------------
    def series_of(self, x: "LocalNumber", k: int):
        """x modulo pi**k as a series; x must be integral and known that far."""
        if x.spec != self:
            raise IncompatibleFieldError("number from another local field")
        if x.is_zero():
            return self._s_zero(k)
        if x.valuation < 0:
            raise UnnormalizedInputError("element of negative valuation")
        if x.valuation >= k:
            return self._s_zero(k)
        if x.valuation + x.prec < k:
            raise InsufficientPrecisionError(f"only {x.valuation + x.prec} digits known, {k} needed")
        return self._s_up(self._s_trunc(x.unit, x.prec, k - x.valuation), x.valuation, k)

    def number_from_series(self, series, k: int) -> "LocalNumber":
        return self._make(0, series, k)


@dataclass(frozen=True, eq=True)
class PAdicField(LocalFieldSpec):
    p: int
    precision: int = DEFAULT_PRECISION

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise InvalidPrimeError(f"{self.p} is not prime")

    @property
    def residue_field(self) -> PrimeField:
        return PrimeField(self.p)

    @property
    def residue_characteristic(self) -> int:
        return self.p

    @property
    def exact_base(self):
        return QQ

    def __call__(self, value, prec: int | None = None) -> "LocalNumber":
        prec = prec or self.precision
        if isinstance(value, LocalNumber):
            if value.spec != self:
                raise IncompatibleFieldError("number from another local field")
            return value
        if isinstance(value, FieldElement):
            if value.field != self.residue_field:
                raise IncompatibleFieldError("not a residue digit")
            value = value.rep
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot convert {value!r} into {self}")
        value = Fraction(value)
        if value == 0:
            return self.zero
        v = padic_valuation_int(value.numerator, self.p) - padic_valuation_int(
            value.denominator, self.p
        )
        num = value.numerator // self.p ** max(v, 0)
        den = value.denominator // self.p ** max(-v, 0)
        mod = self.p**prec
        return LocalNumber(self, v, num * pow(den, -1, mod) % mod, prec)

    # series = int modulo p**k
    def _s_zero(self, k):
        return 0

    def _s_one(self, k):
        return 1 % self.p**k if k else 0

    def _s_add(self, a, b, k):
        return (a + b) % self.p**k

    def _s_sub(self, a, b, k):
        return (a - b) % self.p**k

    def _s_mul(self, a, b, k):
        return a * b % self.p**k

    def _s_neg(self, a, k):
        return -a % self.p**k

    def _s_inv(self, a, k):
        return pow(a, -1, self.p**k)

    def _s_val(self, a, k):
        if a % self.p**k == 0:
            return k
        return padic_valuation_int(a, self.p)

    def _s_down(self, a, s, k):
        return (a // self.p**s) % self.p ** (k - s)

    def _s_up(self, a, s, k):
        return a * self.p**s % self.p**k

    def _s_trunc(self, a, k_from, k_to):
        return a % self.p**k_to

    def _s_digits(self, a, k):
        out = []
        for _ in range(k):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def _s_from_digit(self, d: FieldElement, k):
        return d.rep % self.p**k

    def _s_exact(self, a, k) -> Fraction:
        return Fraction(a)

    def __repr__(self) -> str:
        return f"Q_{self.p}"


@dataclass(frozen=True, eq=True)
class LaurentField(LocalFieldSpec):
    residue: FiniteField
    precision: int = DEFAULT_PRECISION

    @property
    def residue_field(self) -> FiniteField:
        return self.residue

    @property
    def residue_characteristic(self) -> int:
        return self.residue.characteristic

    @property
    def p(self) -> int:
        return self.residue.characteristic

    @property
    def exact_base(self) -> PolyRing:
        return PolyRing(self.residue)

    def __call__(self, value, prec: int | None = None) -> "LocalNumber":
        prec = prec or self.precision
        F = self.residue
        if isinstance(value, LocalNumber):
            if value.spec != self:
                raise IncompatibleFieldError("number from another local field")
            return value
        if isinstance(value, Polynomial):
            if value.base != F:
                raise IncompatibleFieldError("polynomial over another field")
            if not value:
                return self.zero
            v = next(i for i, c in enumerate(value.coeffs) if c)
            digits = [value.coeff(v + i) for i in range(prec)]
            return LocalNumber(self, v, tuple(digits), prec)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, FieldElement)):
            c = F(value)
            if not c:
                return self.zero
            return LocalNumber(self, 0, (c,) + (F.zero,) * (prec - 1), prec)
        raise TypeError(f"cannot convert {value!r} into {self}")

    def from_fraction(self, num: Polynomial, den: Polynomial, prec: int | None = None) -> "LocalNumber":
        return self(num, prec) / self(den, prec)

    @property
    def t(self) -> "LocalNumber":
        return self.uniformizer()

    # series = tuple of k residue-field elements
    def _s_zero(self, k):
        return (self.residue.zero,) * k

    def _s_one(self, k):
        F = self.residue
        return ((F.one,) + (F.zero,) * (k - 1)) if k else ()

    def _s_add(self, a, b, k):
        return tuple(x + y for x, y in zip(a[:k], b[:k]))

    def _s_sub(self, a, b, k):
        return tuple(x - y for x, y in zip(a[:k], b[:k]))

    def _s_neg(self, a, k):
        return tuple(-x for x in a[:k])

    def _s_mul(self, a, b, k):
        zero = self.residue.zero
        out = [zero] * k
        for i in range(k):
            ai = a[i]
            if not ai:
                continue
            for j in range(k - i):
                if b[j]:
                    out[i + j] = out[i + j] + ai * b[j]
        return tuple(out)

    def _s_inv(self, a, k):
        # power series inversion, a[0] != 0
        F = self.residue
        inv0 = a[0].inverse()
        out = [inv0] + [F.zero] * (k - 1)
        for n in range(1, k):
            acc = F.zero
            for i in range(1, n + 1):
                if a[i]:
                    acc = acc + a[i] * out[n - i]
            out[n] = -acc * inv0
        return tuple(out)

    def _s_val(self, a, k):
        for i in range(k):
            if a[i]:
                return i
        return k

    def _s_down(self, a, s, k):
        return tuple(a[s:k])

    def _s_up(self, a, s, k):
        return ((self.residue.zero,) * s + tuple(a))[:k]

    def _s_trunc(self, a, k_from, k_to):
        return tuple(a[:k_to])

    def _s_digits(self, a, k):
        return tuple(a[:k])

    def _s_from_digit(self, d: FieldElement, k):
        return (self.residue(d),) + (self.residue.zero,) * (k - 1)

    def _s_exact(self, a, k) -> Polynomial:
        return Polynomial(self.residue, a[:k])

    def __repr__(self) -> str:
        return f"{self.residue!r}((t))"


def padic_valuation_int(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# numbers


@dataclass(frozen=True)
class LocalNumber:
    """``pi**valuation * unit``; ``unit`` is known modulo ``pi**prec``.

    Exact zero has ``valuation == inf`` and ``prec == 0``.
    """

    spec: LocalFieldSpec
    valuation: int | float
    unit: object
    prec: int

    def __post_init__(self) -> None:
        if self.valuation != INF and self.prec < 1:
            raise InsufficientPrecisionError("a nonzero number needs at least one digit")

    # -- views ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.valuation == INF

    def __bool__(self) -> bool:
        return not self.is_zero()

    @property
    def digits(self) -> tuple:
        """Residue digits of the unit part, lowest first (``prec`` of them)."""
        if self.is_zero():
            return ()
        return self.spec._s_digits(self.unit, self.prec)

    @property
    def absolute_precision(self) -> int | float:
        return INF if self.is_zero() else self.valuation + self.prec

    @property
    def val(self) -> ValExponent:
        return ValExponent(self.valuation if self.valuation != INF else INF)

    @property
    def leading_digit(self) -> FieldElement:
        d = self.digits[0]
        return d if isinstance(d, FieldElement) else self.spec.residue_field(d)

    def unit_part(self) -> "LocalNumber":
        """x / pi**valuation."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no unit part")
        return LocalNumber(self.spec, 0, self.unit, self.prec)

    def exact_value(self):
        """The truncated value as an exact rational (Q_p) or (t-power, poly) pair."""
        s = self.spec
        if self.is_zero():
            return Fraction(0) if isinstance(s, PAdicField) else Polynomial(s.residue)
        u = s._s_exact(self.unit, self.prec)
        if isinstance(s, PAdicField):
            return u * Fraction(s.p) ** self.valuation
        if self.valuation < 0:
            raise ValueError("negative t-power has no polynomial value")
        return Polynomial.monomial(s.residue, self.valuation) * u

    # -- arithmetic -----------------------------------------------------
    def _other(self, other) -> "LocalNumber":
        if isinstance(other, LocalNumber):
            if other.spec != self.spec:
                raise IncompatibleFieldError(f"{self.spec!r} vs {other.spec!r}")
            return other
        try:
            prec = max(self.prec, self.spec.precision)
            return self.spec(other, prec)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        s = self.spec
        v = min(self.valuation, o.valuation)
        k = min(self.absolute_precision, o.absolute_precision) - v
        a = s._s_up(s._s_trunc(self.unit, self.prec, k), self.valuation - v, k)
        b = s._s_up(s._s_trunc(o.unit, o.prec, k), o.valuation - v, k)
        return s._make(v, s._s_add(_pad(s, a, k), _pad(s, b, k), k), k)

    __radd__ = __add__

    def __neg__(self) -> "LocalNumber":
        if self.is_zero():
            return self
        return LocalNumber(self.spec, self.valuation, self.spec._s_neg(self.unit, self.prec), self.prec)

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
        if self.is_zero() or o.is_zero():
            return self.spec.zero
        k = min(self.prec, o.prec)
        s = self.spec
        return LocalNumber(
            s,
            self.valuation + o.valuation,
            s._s_mul(s._s_trunc(self.unit, self.prec, k), s._s_trunc(o.unit, o.prec, k), k),
            k,
        )

    __rmul__ = __mul__

    def inverse(self) -> "LocalNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        s = self.spec
        return LocalNumber(s, -self.valuation, s._s_inv(self.unit, self.prec), self.prec)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int) -> "LocalNumber":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec(1, self.prec or self.spec.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        ds = ",".join(str(d) for d in self.digits)
        return f"{self.spec!r}(v={self.valuation}; {ds})"


def _pad(spec, series, k):
    if isinstance(spec, LaurentField) and len(series) < k:
        return tuple(series) + (spec.residue.zero,) * (k - len(series))
    return series


# ---------------------------------------------------------------------------
# norms


def padic_norm_rational(a, p: int) -> ValExponent:
    """nu with |a|_p = p**(-nu): v_p(numerator) - v_p(denominator)."""
    if not is_prime(p):
        raise InvalidPrimeError(f"{p} is not prime")
    a = Fraction(a)
    if a == 0:
        return ValExponent(INF)
    return ValExponent(
        padic_valuation_int(a.numerator, p) - padic_valuation_int(a.denominator, p)
    )


def _multiplicity(f: Polynomial, h: Polynomial) -> int:
    m = 0
    while True:
        q, r = divmod(f, h)
        if r:
            return m
        f = q
        m += 1


def _check_irreducible(h: Polynomial) -> None:
    if h.degree < 1:
        raise NotIrreducibleError("h must have positive degree")
    if h.base == QQ:
        if h.degree == 1:
            return
        if h.degree > 3:
            raise NotImplementedError("irreducibility over Q is only checked up to degree 3")
        # rational root test
        lcm = math.lcm(*(c.denominator for c in h.coeffs))
        ints = [int(c * lcm) for c in h.coeffs]
        a0, an = ints[0], ints[-1]
        if a0 == 0:
            raise NotIrreducibleError(f"{h} has the root 0")
        for r in _divisors(abs(a0)):
            for s in _divisors(abs(an)):
                for cand in (Fraction(r, s), Fraction(-r, s)):
                    if h(cand) == 0:
                        raise NotIrreducibleError(f"{h} has the root {cand}")
        return
    if not is_irreducible(h):
        raise NotIrreducibleError(f"{h} is reducible")


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def hadic_norm_ratfunc(f, h: Polynomial | None = None, *, degree_norm: bool = False) -> ValExponent:
    """nu of the h-adic norm of a rational function ``f``.

    ``f`` is a Polynomial or a ``(numerator, denominator)`` pair.  With
    ``degree_norm=True`` the degree norm is used instead: nu = deg(den) - deg(num).
    """
    if isinstance(f, Polynomial):
        num, den = f, Polynomial(f.base, (f.base.one,))
    else:
        num, den = f
        if num.base != den.base:
            raise IncompatibleFieldError("numerator and denominator over different fields")
    if not num and not den:
        raise ValueError("0/0 is not a rational function")
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return ValExponent(INF)
    if degree_norm:
        return ValExponent(den.degree - num.degree)
    if h is None:
        raise ValueError("h is required for the h-adic norm")
    if h.base != num.base:
        raise IncompatibleFieldError("h over a different field")
    _check_irreducible(h)
    return ValExponent(_multiplicity(num, h) - _multiplicity(den, h))


def exact_valuation(c, spec: LocalFieldSpec) -> ValExponent:
    """Valuation of an exact coefficient (rational, or element of F_q[t])."""
    if isinstance(spec, PAdicField):
        return padic_norm_rational(c, spec.p)
    c = spec.exact_base(c)
    return hadic_norm_ratfunc(c, Polynomial.x(spec.residue))


# ---------------------------------------------------------------------------
# Hensel lifting


def _as_local_poly(f: Polynomial, spec: LocalFieldSpec, prec: int) -> list[LocalNumber]:
    return [spec(c, prec) for c in f.coeffs]


def _eval_series(spec, coeffs: list, x, k: int):
    acc = spec._s_zero(k)
    for c in reversed(coeffs):
        acc = spec._s_add(spec._s_mul(acc, x, k), c, k)
    return acc


def hensel_lift(f: Polynomial, x0: LocalNumber, target_prec: int) -> LocalNumber:
    """Newton-lift an approximate root ``x0`` of ``f`` to ``target_prec`` digits.

    ``f`` must have integral coefficients (rationals for Q_p, elements of
    F_q[t] or LocalNumbers otherwise) and satisfy |f(x0)| < |f'(x0)|^2.
    The result ``x`` satisfies nu(f(x)) >= target_prec and agrees with the
    true root modulo pi**target_prec.
    """
    spec = x0.spec
    if target_prec < 1:
        raise ValueError("target precision must be at least one digit")
    if f.degree < 1:
        raise ValueError("constant polynomial has no roots to lift")
    if f.degree == 1:
        c0, c1 = _as_local_poly(f, spec, target_prec + spec.precision)
        return _truncate_abs(-c0 / c1, target_prec)
    if not x0.is_zero() and x0.valuation < 0:
        raise UnnormalizedInputError("starting point must be integral")

    known = x0.absolute_precision
    probe = max(target_prec, spec.precision) * 2 + 2
    coeffs = _as_local_poly(f, spec, probe)
    for c in coeffs:
        if not c.is_zero() and c.valuation < 0:
            raise UnnormalizedInputError("coefficients must be integral")
        known = min(known, c.absolute_precision)
    W0 = int(min(known, probe))
    cs0 = [spec.series_of(c, W0) for c in coeffs]
    fp = f.derivative()
    dcoeffs = _as_local_poly(fp, spec, probe)
    dcs0 = [spec.series_of(c, W0) for c in dcoeffs]
    xs = spec.series_of(x0, W0)
    fx = _eval_series(spec, cs0, xs, W0)
    dfx = _eval_series(spec, dcs0, xs, W0)
    e = spec._s_val(dfx, W0)
    if e >= W0:
        raise InsufficientPrecisionError("f'(x0) vanishes to the known precision")
    s = spec._s_val(fx, W0)
    if s <= 2 * e:
        if s < W0:
            raise NoConvergenceError(
                f"Hensel condition fails: nu(f(x0)) = {s} <= 2*nu(f'(x0)) = {2 * e}"
            )
        raise InsufficientPrecisionError("cannot certify Hensel's condition at this precision")

    W = target_prec + 2 * e + 2
    if W > known:
        raise InsufficientPrecisionError(f"need {W} known digits, have {known}")
    cs = [spec.series_of(c, W) for c in coeffs]
    dcs = [spec.series_of(c, W) for c in dcoeffs]
    x = _pad(spec, spec.series_of(x0, min(W, int(x0.absolute_precision)) if not x0.is_zero() else W), W)
    if isinstance(spec, PAdicField):
        x = x % spec.p**W
    for _ in range(2 * W.bit_length() + 4):
        fx = _eval_series(spec, cs, x, W)
        s = spec._s_val(fx, W)
        if s - e >= target_prec:
            break
        dfx = _eval_series(spec, dcs, x, W)
        if spec._s_val(dfx, W) != e:
            raise AssertionError("derivative valuation changed during Newton iteration")
        k = W - e
        u = spec._s_down(dfx, e, W)
        delta = spec._s_mul(spec._s_down(fx, e, W), spec._s_inv(u, k), k)
        x = spec._s_sub(x, _pad(spec, delta, W), W)
    else:
        raise InsufficientPrecisionError("Newton iteration did not reach the target precision")

    root = _series_to_number(spec, x, target_prec)
    # postcondition by substitution
    check = _eval_series(spec, [spec.series_of(c, target_prec) for c in coeffs],
                         spec.series_of(root, target_prec), target_prec)
    assert spec._s_val(check, target_prec) >= target_prec
    return root


def _series_to_number(spec, x, k: int) -> LocalNumber:
    s = spec._s_val(x, k)
    if s >= k:
        raise InsufficientPrecisionError("lifted root is zero to the requested precision")
    return LocalNumber(spec, s, spec._s_down(x, s, k), k - s)


def _truncate_abs(x: LocalNumber, k: int) -> LocalNumber:
    if x.is_zero():
        return x
    rel = k - x.valuation
    if rel < 1:
        raise InsufficientPrecisionError("no digit of the root below the target precision")
    if rel > x.prec:
        raise InsufficientPrecisionError("root not known to the requested precision")
    s = x.spec
    return LocalNumber(s, x.valuation, s._s_trunc(x.unit, x.prec, rel), rel)


# ---------------------------------------------------------------------------
# square classes and quadratic extensions


class SquareClass(NamedTuple):
    """Class in F^x/(F^x)^2: valuation parity and unit class.

    ``unit`` is +1/-1 (quadratic character of the leading digit) for odd
    residue characteristic and the unit modulo 8 for Q_2.  The trivial
    class is ``(0, 1)`` in both cases.
    """

    parity: int
    unit: int

    @property
    def is_trivial(self) -> bool:
        return self.parity == 0 and self.unit == 1


def _check_char(spec: LocalFieldSpec) -> None:
    if isinstance(spec, LaurentField) and spec.residue_characteristic == 2:
        raise UnsupportedCharacteristicError(
            "F_2^k((t)) has infinitely many quadratic extensions; not supported"
        )


def _residue_sqrt(d: FieldElement) -> FieldElement | None:
    for a in d.field.elements():
        if a * a == d:
            return a
    return None


def square_class(u: LocalNumber) -> SquareClass:
    """Class of ``u`` in F^x/(F^x)^2, certified by Hensel lifting."""
    spec = u.spec
    _check_char(spec)
    if u.is_zero():
        raise ValueError("zero has no square class")
    parity = u.valuation % 2
    w = u.unit_part()
    X = Polynomial.x(spec)
    if spec.residue_characteristic == 2:
        if w.prec < 3:
            raise InsufficientPrecisionError("Q_2 square classes need three unit digits")
        m8 = w.unit % 8
        if m8 == 1:
            hensel_lift(X * X - w, spec(1, w.prec), min(w.prec - 1, 3))
        return SquareClass(parity, m8)
    d = w.leading_digit
    F = d.field
    is_sq = d ** ((F.order - 1) // 2) == F.one
    if is_sq:
        a0 = _residue_sqrt(d)
        hensel_lift(X * X - w, spec(a0, w.prec), min(w.prec, 2))
    return SquareClass(parity, 1 if is_sq else -1)


def square_class_representatives(spec: LocalFieldSpec) -> list[LocalNumber]:
    """Candidate representatives: pi^v * unit for v in {0,1} and units mod pi (mod 8 for Q_2)."""
    _check_char(spec)
    out = []
    if spec.residue_characteristic == 2:
        units = [spec(k) for k in (1, 3, 5, 7)]
    else:
        units = [spec(d) for d in spec.residue_field.units()]
    for v in (0, 1):
        for w in units:
            out.append(w if v == 0 else w * spec.uniformizer())
    return out


def count_quadratic_extensions(spec: LocalFieldSpec) -> int:
    """|F^x/(F^x)^2| - 1, by enumerating square classes."""
    classes = {square_class(u) for u in square_class_representatives(spec)}
    return len(classes) - 1


# ---------------------------------------------------------------------------
# Krasner's lemma


class KrasnerVerdict(str, enum.Enum):
    CERTIFIED_ISOMORPHIC = "certified-isomorphic"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class KrasnerCertificate:
    verdict: KrasnerVerdict
    degree: int
    resultant_valuation: ValExponent
    conjugate_valuation: ValExponent
    radius_valuation: ValExponent
    threshold: ValExponent


def _exact_poly(f: Polynomial, spec: LocalFieldSpec) -> Polynomial:
    return Polynomial(spec.exact_base, f.coeffs)


def _check_integral(f: Polynomial, spec: LocalFieldSpec) -> None:
    for c in f.coeffs:
        if exact_valuation(c, spec) < 0:
            raise UnnormalizedInputError(f"coefficient {c} has negative valuation")


@lru_cache(maxsize=1024)
def krasner_radius_bound(p: Polynomial, spec: LocalFieldSpec) -> ValExponent:
    """Valuation nu(r) of a lower bound r for the least distance between roots of p.

    With integral roots every pairwise distance is at most 1, so the least
    one is at least |disc(p)|^(1/2); the bound is exact in degree 2.
    """
    p = _exact_poly(p, spec)
    if not p.is_monic():
        raise UnnormalizedInputError("p must be monic")
    _check_integral(p, spec)
    disc = poly_discriminant(p)
    if not disc:
        raise InseparablePolynomialError(f"{p} has a repeated root")
    if p.degree == 2 and square_class(spec(disc, _disc_prec(disc, spec))).is_trivial:
        raise NotIrreducibleError(f"{p} splits over {spec!r}")
    return exact_valuation(disc, spec) / 2


def _disc_prec(disc, spec: LocalFieldSpec) -> int:
    v = exact_valuation(disc, spec).value
    return max(spec.precision, int(v) + 4)


def krasner_certificate(p: Polynomial, q: Polynomial, spec: LocalFieldSpec) -> KrasnerCertificate:
    p = _exact_poly(p, spec)
    q = _exact_poly(q, spec)
    d = p.degree
    if q.degree != d:
        raise ValueError(f"degree mismatch: {d} vs {q.degree}")
    if not q.is_monic():
        raise UnnormalizedInputError("q must be monic")
    _check_integral(q, spec)
    nu_r = krasner_radius_bound(p, spec)
    res = poly_resultant(p, q)
    nu_res = exact_valuation(res, spec)
    # all conjugates q(x_i) share one norm, so each has valuation nu(Res)/d
    per_root = nu_res / d
    threshold = nu_r * d
    verdict = (
        KrasnerVerdict.CERTIFIED_ISOMORPHIC if per_root > threshold else KrasnerVerdict.INCONCLUSIVE
    )
    return KrasnerCertificate(verdict, d, nu_res, per_root, nu_r, threshold)


def krasner_separates(p: Polynomial, q: Polynomial, spec: LocalFieldSpec) -> KrasnerVerdict:
    """Sufficient test that ``F[X]/(q)`` is isomorphic to ``F[X]/(p)``.

    Certifies when |q(x_i)| < r^d for the roots x_i of p, where r is the
    root-separation bound of :func:`krasner_radius_bound`.  A negative
    answer is only ``INCONCLUSIVE``.
    """
    return krasner_certificate(p, q, spec).verdict
