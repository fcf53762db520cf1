"""Bounded pieces of (F_q[X])_{F_q^x} and of its hyperfield of fractions.

The fraction hyperfield of an infinite hyperdomain is infinite, so it is
truncated at a degree cap.  Sums whose members leave the cap are kept
apart as *escapes* rather than silently dropped, so that a comparison can
tell "unequal" from "undetermined at this cap".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import chain

from hyperlab.algebra.fields import FiniteField
from hyperlab.algebra.poly import Polynomial, monic_polynomials, poly_gcd
from hyperlab.hyper.table import MultiOpTable

Fraction_ = tuple[Polynomial, Polynomial]


class PolynomialCosets:
    """The factor hyperring F[X]_{F^x}, with classes represented by monic polynomials.

    ``table`` is the additive hypergroup of the finite piece of degree at
    most ``max_degree``, which is closed under ⊞.
    """

    def __init__(self, field: FiniteField, max_degree: int) -> None:
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        self.field = field
        self.max_degree = max_degree
        self.units = field.units()

    @cached_property
    def elements(self) -> tuple[Polynomial, ...]:
        zero = Polynomial(self.field)
        monics = chain.from_iterable(
            monic_polynomials(self.field, d) for d in range(self.max_degree + 1)
        )
        return (zero, *monics)

    @cached_property
    def index(self) -> dict[Polynomial, int]:
        return {f: i for i, f in enumerate(self.elements)}

    def hypersum(self, f: Polynomial, g: Polynomial) -> set[Polynomial]:
        """fT ⊞ gT = {(f + u g)T : u ∈ T} on monic representatives."""
        return {(f + g * u).monic() for u in self.units}

    @cached_property
    def table(self) -> MultiOpTable:
        els = self.elements
        idx = self.index
        sums = [[{idx[h] for h in self.hypersum(f, g)} for g in els] for f in els]
        return MultiOpTable.build([repr(f) for f in els], 0, sums)


def _reduce(num: Polynomial, den: Polynomial) -> Fraction_:
    """Canonical class of num/den modulo F^x: coprime, both monic; 0 is 0/1."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    one = Polynomial(num.base, (num.base.one,))
    if not num:
        return num, one
    g = poly_gcd(num, den)
    return (num // g).monic(), (den // g).monic()


def _fits(fr: Fraction_, cap: int) -> bool:
    return fr[0].degree <= cap and fr[1].degree <= cap


@dataclass(frozen=True)
class BoundedFractionTable:
    """Fr(R) restricted to classes x/x' with deg x, deg x' <= cap."""

    cap: int
    fractions: tuple[Fraction_, ...]
    table: MultiOpTable
    escapes: dict[tuple[int, int], int]
    embed: dict[int, int]
    index: dict[Fraction_, int] = field(repr=False)

    def escaped(self, i: int, j: int) -> bool:
        return (i, j) in self.escapes

    def label(self, i: int) -> str:
        num, den = self.fractions[i]
        return f"({num!r})/({den!r})"


def _fraction_classes(F: FiniteField, cap: int) -> list[Fraction_]:
    zero = Polynomial(F)
    one = Polynomial(F, (F.one,))
    monics = [f for d in range(cap + 1) for f in monic_polynomials(F, d)]
    out = [(zero, one)]
    for num in monics:
        for den in monics:
            if poly_gcd(num, den).degree == 0:
                out.append((num, den))
    return out


def build_fraction_hyperfield(R: PolynomialCosets, cap: int) -> BoundedFractionTable:
    """Bounded Fr(R): x/x' ⊞ y/y' = {z/(x'y') : z ∈ xy' ⊞_R yx'} within the cap."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    fracs = _fraction_classes(R.field, cap)
    index = {fr: i for i, fr in enumerate(fracs)}
    n = len(fracs)
    sums: list[list[set[int]]] = [[set() for _ in range(n)] for _ in range(n)]
    escapes: dict[tuple[int, int], int] = {}
    for i, (x, xd) in enumerate(fracs):
        for j in range(i, n):
            y, yd = fracs[j]
            den = xd * yd
            members = {_reduce(z, den) for z in R.hypersum(x * yd, y * xd)}
            inside = {index[m] for m in members if _fits(m, cap)}
            sums[i][j] = sums[j][i] = inside
            out = len(members) - len(inside)
            if out:
                escapes[i, j] = escapes[j, i] = out
    one = Polynomial(R.field, (R.field.one,))
    embed = {
        k: index[(f, one)] for k, f in enumerate(R.elements) if f.degree <= cap
    }
    table = MultiOpTable.build(
        [f"({a!r})/({b!r})" for a, b in fracs],
        0,
        sums,
        meta={"cap": cap, "escaping_pairs": len(escapes)},
    )
    return BoundedFractionTable(cap, tuple(fracs), table, escapes, embed, index)


def rational_function_hypersum(F: FiniteField, a: Fraction_, b: Fraction_) -> set[Fraction_]:
    """aT ⊞ bT in F(X)_{F^x}, straight from ∃t,s ∈ T: z/z' = (x/x')t + (y/y')s."""
    x, xd = a
    y, yd = b
    return {_reduce(yd * x * t + xd * y * s, xd * yd) for t in F.units() for s in F.units()}
