"""Finite fields F_p and explicit extensions F[X]/(m), plus the rationals.

Elements are small immutable objects carrying their field.  Arithmetic
between elements of different fields is an error; embeddings of a base
field into an extension are always explicit (``ext(base_element)``).

Element order
-------------
``Field.elements()`` lists elements lexicographically by coefficient
vector, lowest coefficient first, recursively through the tower.  The same
key (``FieldElement.sort_key``) drives canonical coset representatives.
``to_int``/``element_from_int`` use a different, positional encoding
(coefficient ``c_i`` is the base-``|base|`` digit of weight ``i``) which is
what the CLI uses for moduli of non-prime fields.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Iterator

from hyperlab.errors import IncompatibleFieldError, InvalidPrimeError, NotIrreducibleError

if TYPE_CHECKING:
    from hyperlab.algebra.poly import Polynomial


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p**n``; raise for non prime powers."""
    if q < 2:
        raise InvalidPrimeError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n, rest = 0, q
    while rest % p == 0:
        rest //= p
        n += 1
    if rest != 1:
        raise InvalidPrimeError(f"{q} is not a prime power")
    return p, n


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldElement:
    """Element of a finite field; ``rep`` is the raw representation.

    For a prime field ``rep`` is an int in ``range(p)``; for an extension
    it is a tuple of base reps, lowest coefficient first.
    """

    __slots__ = ("field", "rep")

    def __init__(self, field: "FiniteField", rep) -> None:
        self.field = field
        self.rep = rep

    # -- coercion -------------------------------------------------------
    def _other(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise IncompatibleFieldError(
                    f"cannot combine elements of {self.field} and {other.field}"
                )
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._add(self.rep, o.rep))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._sub(self.rep, o.rep))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._mul(self.rep, o.rep))

    __rmul__ = __mul__

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

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field._neg(self.rep))

    def __pos__(self) -> "FieldElement":
        return self

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        f = self.field
        result, base = f._one_rep, self.rep
        while e:
            if e & 1:
                result = f._mul(result, base)
            base = f._mul(base, base)
            e >>= 1
        return FieldElement(f, result)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(self.field, self.field._inv(self.rep))

    # -- comparison / hashing ------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return (other.field is self.field or other.field == self.field) and other.rep == self.rep
        if isinstance(other, int):
            return self.rep == self.field(other).rep
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rep)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_zero(self) -> bool:
        return self.rep == self.field._zero_rep

    # -- views ----------------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        """Coefficient vector over the base field (length = degree)."""
        f = self.field
        if isinstance(f, PrimeField):
            return (self.rep,)
        return tuple(FieldElement(f.base, r) for r in self.rep)

    def sort_key(self):
        return self.field._sort_key(self.rep)

    def to_int(self) -> int:
        return self.field._to_int(self.rep)

    def __repr__(self) -> str:
        return self.field._format(self.rep)

    def __str__(self) -> str:
        return self.field._format(self.rep)


class FiniteField:
    """Shared behaviour of :class:`PrimeField` and :class:`ExtensionField`."""

    is_field = True

    # subclasses provide: order, characteristic, degree, base, _add, _sub,
    # _mul, _neg, _inv, _zero_rep, _one_rep, _sort_key, _to_int, _from_int,
    # _format, _reps

    @cached_property
    def zero(self) -> FieldElement:
        return FieldElement(self, self._zero_rep)

    @cached_property
    def one(self) -> FieldElement:
        return FieldElement(self, self._one_rep)

    @property
    def absolute_degree(self) -> int:
        d, f = 1, self
        while isinstance(f, ExtensionField):
            d *= f.degree
            f = f.base
        return d

    @property
    def prime_field(self) -> "PrimeField":
        f = self
        while isinstance(f, ExtensionField):
            f = f.base
        return f

    @cached_property
    def _elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self, r) for r in self._reps())

    def elements(self) -> tuple[FieldElement, ...]:
        """All elements in lexicographic coefficient order (zero first)."""
        return self._elements

    def units(self) -> tuple[FieldElement, ...]:
        return self._elements[1:]

    def __iter__(self) -> Iterator[FieldElement]:
        return iter(self._elements)

    def __len__(self) -> int:
        return self.order

    @cached_property
    def _index(self) -> dict:
        return {e.rep: i for i, e in enumerate(self._elements)}

    def index(self, x: FieldElement) -> int:
        return self._index[self(x).rep]

    def element_from_int(self, k: int) -> FieldElement:
        if not 0 <= k < self.order:
            raise ValueError(f"{k} out of range for a field of order {self.order}")
        return FieldElement(self, self._from_int(k))

    # integer-indexed tables, indices follow elements()
    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        els, idx = self._elements, self._index
        return tuple(tuple(idx[self._add(a.rep, b.rep)] for b in els) for a in els)

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        els, idx = self._elements, self._index
        return tuple(tuple(idx[self._mul(a.rep, b.rep)] for b in els) for a in els)

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        idx = self._index
        return tuple(idx[self._neg(a.rep)] for a in self._elements)

    @cached_property
    def inv_table(self) -> tuple[int | None, ...]:
        idx = self._index
        return (None,) + tuple(idx[self._inv(a.rep)] for a in self._elements[1:])

    def multiplicative_order(self, x: FieldElement) -> int:
        x = self(x)
        if x.is_zero():
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        order = n
        for r in prime_factors(n):
            while order % r == 0 and (x ** (order // r)) == self.one:
                order //= r
        return order

    @cached_property
    def primitive_element(self) -> FieldElement:
        """Least element (in ``elements()`` order) generating F^x."""
        for x in self._elements[1:]:
            if self.multiplicative_order(x) == self.order - 1:
                return x
        raise AssertionError("finite field without primitive element")

    def subgroup(self, order: int) -> tuple[FieldElement, ...]:
        """The unique subgroup of F^x of the given order, sorted."""
        if (self.order - 1) % order:
            raise ValueError(f"{order} does not divide {self.order - 1}")
        g = self.primitive_element ** ((self.order - 1) // order)
        elems, x = [], self.one
        for _ in range(order):
            elems.append(x)
            x = x * g
        return tuple(sorted(elems, key=FieldElement.sort_key))


@dataclass(frozen=True)
class PrimeField(FiniteField):
    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise InvalidPrimeError(f"{self.p} is not prime")

    @property
    def order(self) -> int:
        return self.p

    @property
    def characteristic(self) -> int:
        return self.p

    degree = 1
    base = None
    _zero_rep = 0
    _one_rep = 1

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is self or value.field == self:
                return value
            raise IncompatibleFieldError(f"{value!r} is not an element of {self}")
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return FieldElement(self, value.numerator * pow(value.denominator, -1, self.p) % self.p)
        raise TypeError(f"cannot convert {value!r} into {self}")

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _neg(self, a):
        return -a % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _reps(self):
        return range(self.p)

    def _sort_key(self, rep):
        return rep

    def _to_int(self, rep):
        return rep

    def _from_int(self, k):
        return k

    def _format(self, rep):
        return str(rep)

    def __repr__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class ExtensionField(FiniteField):
    """``base[X]/(modulus)`` for a monic irreducible ``modulus``.

    ``name`` is only used for printing elements.
    """

    base: FiniteField
    modulus: "Polynomial"
    name: str = field(default="a", compare=False)

    def __post_init__(self) -> None:
        from hyperlab.algebra.poly import is_irreducible

        if self.modulus.base != self.base:
            raise IncompatibleFieldError("modulus must have coefficients in the base field")
        if self.modulus.degree < 1 or self.modulus.lc != self.base.one:
            raise NotIrreducibleError("modulus must be monic of positive degree")
        if not is_irreducible(self.modulus):
            raise NotIrreducibleError(f"{self.modulus} is reducible over {self.base}")

    @cached_property
    def degree(self) -> int:
        return self.modulus.degree

    @cached_property
    def order(self) -> int:
        return self.base.order ** self.degree

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @cached_property
    def _mod_raw(self) -> tuple:
        return tuple(c.rep for c in self.modulus.coeffs)

    @cached_property
    def _zero_rep(self):
        return (self.base._zero_rep,) * self.degree

    @cached_property
    def _one_rep(self):
        return (self.base._one_rep,) + (self.base._zero_rep,) * (self.degree - 1)

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is self or value.field == self:
                return value
            # explicit embedding of a subfield in the tower
            b = self.base(value)
            return FieldElement(self, (b.rep,) + (self.base._zero_rep,) * (self.degree - 1))
        if isinstance(value, (tuple, list)):
            if len(value) != self.degree:
                raise ValueError(f"expected {self.degree} coefficients")
            return FieldElement(self, tuple(self.base(c).rep for c in value))
        b = self.base(value)
        return FieldElement(self, (b.rep,) + (self.base._zero_rep,) * (self.degree - 1))

    def embed(self, x: FieldElement) -> FieldElement:
        return self(self.base(x))

    @cached_property
    def gen(self) -> FieldElement:
        """The class of X."""
        if self.degree == 1:
            return self(-self.modulus.coeffs[0])
        z, o = self.base._zero_rep, self.base._one_rep
        return FieldElement(self, (z, o) + (z,) * (self.degree - 2))

    def _add(self, a, b):
        add = self.base._add
        return tuple(add(x, y) for x, y in zip(a, b))

    def _sub(self, a, b):
        sub = self.base._sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        neg = self.base._neg
        return tuple(neg(x) for x in a)

    def _mul(self, a, b):
        B = self.base
        d = self.degree
        zero = B._zero_rep
        prod = [zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                if y != zero:
                    prod[i + j] = B._add(prod[i + j], B._mul(x, y))
        m = self._mod_raw
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c == zero:
                continue
            for j in range(d):
                prod[i - d + j] = B._sub(prod[i - d + j], B._mul(c, m[j]))
            prod[i] = zero
        return tuple(prod[:d])

    def _inv(self, a):
        if a == self._zero_rep:
            raise ZeroDivisionError("inverse of zero")
        return (FieldElement(self, a) ** (self.order - 2)).rep

    def _reps(self):
        base_reps = [e.rep for e in self.base.elements()]
        return itertools.product(base_reps, repeat=self.degree)

    def _sort_key(self, rep):
        return tuple(self.base._sort_key(r) for r in rep)

    def _to_int(self, rep):
        q = self.base.order
        return sum(self.base._to_int(r) * q**i for i, r in enumerate(rep))

    def _from_int(self, k):
        q = self.base.order
        out = []
        for _ in range(self.degree):
            k, r = divmod(k, q)
            out.append(self.base._from_int(r))
        return tuple(out)

    def _format(self, rep):
        terms = []
        for i, r in enumerate(rep):
            if r == self.base._zero_rep:
                continue
            c = self.base._format(r)
            if isinstance(self.base, ExtensionField) and "+" in c:
                c = f"({c})"
            if i == 0:
                terms.append(c)
            else:
                mon = self.name if i == 1 else f"{self.name}^{i}"
                terms.append(mon if r == self.base._one_rep else f"{c}{mon}")
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"{self.base!r}[{self.name}]/({self.modulus})"


def GF(p: int, n: int = 1, modulus: "Polynomial | None" = None, name: str = "a") -> FiniteField:
    """F_{p^n}.  Without an explicit modulus the least irreducible one is used."""
    from hyperlab.algebra.poly import find_irreducible

    F = PrimeField(p)
    if n == 1 and modulus is None:
        return F
    if modulus is None:
        modulus = find_irreducible(F, n)
    return ExtensionField(F, modulus, name=name)


def field_of_order(q: int, name: str = "a") -> FiniteField:
    p, n = prime_power(q)
    return GF(p, n, name=name)


@dataclass(frozen=True)
class FieldAutomorphism:
    """x -> x^(p^power) on a finite field."""

    field: FiniteField
    power: int

    def __call__(self, x: FieldElement) -> FieldElement:
        return self.field(x) ** (self.field.characteristic**self.power)

    def __mul__(self, other: "FieldAutomorphism") -> "FieldAutomorphism":
        if other.field != self.field:
            raise IncompatibleFieldError("automorphisms of different fields")
        return frobenius(self.field, self.power + other.power)

    @property
    def is_identity(self) -> bool:
        return self.power == 0


def frobenius(F: FiniteField, k: int) -> FieldAutomorphism:
    """The k-th power of the absolute Frobenius, with k reduced mod [F:F_p]."""
    return FieldAutomorphism(F, k % F.absolute_degree)


@dataclass(frozen=True)
class RationalField:
    """The field Q with elements represented as :class:`fractions.Fraction`."""

    is_field = True
    characteristic = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, FieldElement):
            raise IncompatibleFieldError("finite field element is not rational")
        return Fraction(value)

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()
