"""Krasner's factor hyperfield A_T of a finite field A by a subgroup T of A^x."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from hyperlab.algebra.fields import FieldElement, FiniteField
from hyperlab.errors import NotASubgroupError, StructuralError
from hyperlab.hyper.table import MultiOpTable


def generate_subgroup(A: FiniteField, gens: Iterable) -> tuple[FieldElement, ...]:
    """Subgroup of A^x generated by ``gens``, sorted."""
    gens = [A(g) for g in gens]
    if any(not g for g in gens):
        raise NotASubgroupError("0 cannot lie in a subgroup of A^x")
    group = {A.one}
    frontier = [A.one]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g
            if y not in group:
                group.add(y)
                frontier.append(y)
    return tuple(sorted(group, key=FieldElement.sort_key))


def as_subgroup(A: FiniteField, T, closure: bool = True) -> tuple[FieldElement, ...]:
    """Normalise T: an int (the subgroup of that order), generators, or a closed set.

    With ``closure=False`` the given elements must already form a subgroup.
    """
    if isinstance(T, int):
        return A.subgroup(T)
    elems = [A(t) for t in T]
    if not elems:
        raise NotASubgroupError("empty subgroup")
    if any(not t for t in elems):
        raise NotASubgroupError("0 cannot lie in a subgroup of A^x")
    if closure:
        return generate_subgroup(A, elems)
    given = set(elems)
    if A.one not in given or any(a * b not in given for a in given for b in given):
        raise NotASubgroupError("the given set is not closed under multiplication")
    return tuple(sorted(given, key=FieldElement.sort_key))


@dataclass(frozen=True)
class Coset:
    """The class xT, stored by its canonical (lexicographically least) member."""

    representative: FieldElement
    subgroup: tuple[FieldElement, ...]

    @classmethod
    def of(cls, x: FieldElement, T: tuple[FieldElement, ...]) -> "Coset":
        if not x:
            return cls(x, T)
        return cls(min((x * t for t in T), key=FieldElement.sort_key), T)

    def __str__(self) -> str:
        return str(self.representative)


def coset_representatives(A: FiniteField, T) -> list[FieldElement]:
    """0 followed by the canonical representatives of A^x/T, in element order."""
    seen: dict[FieldElement, FieldElement] = {}
    reps = [A.zero]
    for x in A.elements():
        if not x or x in seen:
            continue
        orbit = [x * t for t in T]
        rep = min(orbit, key=FieldElement.sort_key)
        for y in orbit:
            seen[y] = rep
        reps.append(rep)
    return reps


def build_factor_hyperfield(A: FiniteField, T, closure: bool = True) -> MultiOpTable:
    """The factor hyperfield A_T.

    xT ⊞ yT = {(xt + ys)T : t, s ∈ T} = {(x + yu)T : u ∈ T}, and xT · yT = xyT.
    Index 0 is the zero class; labels are canonical representatives.
    """
    T = as_subgroup(A, T, closure)
    reps = coset_representatives(A, T)
    cls_of: dict[FieldElement, int] = {A.zero: 0}
    for i, r in enumerate(reps[1:], 1):
        for t in T:
            cls_of[r * t] = i
    n = len(reps)
    sums = [[{cls_of[x + y * u] for u in T} for y in reps] for x in reps]
    mul = [[cls_of[x * y] for y in reps] for x in reps]
    return MultiOpTable.build(
        [str(r) for r in reps],
        0,
        sums,
        mul=mul,
        one=cls_of[A.one],
        meta={"field": repr(A), "subgroup_order": len(T), "carrier": n},
    )


def subfield_criterion(A: FiniteField, T, closure: bool = True) -> bool:
    """Whether 1T ⊞ 1T = {0T, 1T}, i.e. T ∪ {0} is a subfield of A.

    Both sides are computed independently; a disagreement raises
    :class:`StructuralError`.  The one exception is T = {1} in
    characteristic 2: T ∪ {0} = F_2 is a subfield, yet 1T ⊞ 1T = {0T}.
    The returned value is always the hypersum test.
    """
    T = as_subgroup(A, T, closure)
    H = build_factor_hyperfield(A, T)
    one = H.one
    hyper_side = set(H.sum(one, one)) == {H.zero, one}
    closed = set(T) | {A.zero}
    direct_side = all(a + b in closed for a in closed for b in closed)
    prime_two = A.characteristic == 2 and len(T) == 1
    if hyper_side != direct_side and not prime_two:
        raise StructuralError("1T ⊞ 1T test disagrees with the additive closure of T ∪ {0}")
    return hyper_side
