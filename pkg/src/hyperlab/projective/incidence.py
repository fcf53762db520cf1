"""Incidence abelian group structures on P^n(F_q) via F_{q^(n+1)}^x / F_q^x."""

from __future__ import annotations

from dataclasses import dataclass

from hyperlab.algebra.fields import ExtensionField, FieldElement
from hyperlab.algebra.poly import Polynomial, is_irreducible
from hyperlab.errors import DimensionError, NotIrreducibleError
from hyperlab.hyper.axioms import AxiomReport, Tally
from hyperlab.hyper.table import bits
from hyperlab.projective.space import ProjectiveSpace


@dataclass(frozen=True)
class IncidenceGroup:
    """Group structure on the points; ``table[i][j]`` is the index of i·j."""

    space: ProjectiveSpace
    modulus: Polynomial | None
    table: tuple[tuple[int, ...], ...]
    identity: int

    @property
    def order(self) -> int:
        return len(self.table)

    def element_order(self, i: int) -> int:
        """Least k with i^k = identity, or 0 if none up to the group order."""
        x = i
        for k in range(1, self.order + 1):
            if x == self.identity:
                return k
            x = self.table[x][i]
        return 0

    def is_cyclic(self) -> bool:
        return any(self.element_order(i) == self.order for i in range(self.order))

    def with_table(self, table) -> "IncidenceGroup":
        return IncidenceGroup(self.space, self.modulus, tuple(tuple(r) for r in table), self.identity)


def build_incidence_group(space: ProjectiveSpace, modulus: Polynomial) -> IncidenceGroup:
    """Identify P^n(F_q) with F_{q^(n+1)}^x / F_q^x through the power basis of F_q[X]/(modulus).

    The point with coordinates (c_0, ..., c_n) is the class of sum c_i X^i.
    """
    F = space.field
    if modulus.base != F:
        modulus = Polynomial(F, modulus.coeffs)
    if modulus.degree != space.n + 1:
        raise DimensionError(f"modulus must have degree {space.n + 1}, got {modulus.degree}")
    if not modulus.is_monic():
        raise ValueError("modulus must be monic")
    if not is_irreducible(modulus):
        raise NotIrreducibleError(f"{modulus} is reducible over {F!r}")
    E = ExtensionField(F, modulus, name="X")

    def to_ext(v) -> FieldElement:
        return E(tuple(c.rep for c in v))

    def to_point(e: FieldElement) -> int:
        return space.index_of(tuple(F(c) for c in e.rep))

    elems = [to_ext(v) for v in space.coords]
    table = tuple(tuple(to_point(a * b) for b in elems) for a in elems)
    identity = to_point(E.one)
    return IncidenceGroup(space, modulus, table, identity)


def verify_incidence_group(G: IncidenceGroup) -> AxiomReport:
    """Abelian group axioms plus: every translation maps every line onto a line."""
    T = G.table
    N = G.order
    e = G.identity
    space = G.space
    tally = Tally()
    for a in range(N):
        if T[e][a] != a or T[a][e] != a:
            tally.fail("identity", (a,))
        if not any(T[a][b] == e for b in range(N)):
            tally.fail("inverses", (a,))
        for b in range(N):
            if T[a][b] != T[b][a]:
                tally.fail("commutative", (a, b))
            for c in range(N):
                if T[T[a][b]][c] != T[a][T[b][c]]:
                    tally.fail("associative", (a, b, c))
    for a in range(N):
        for k, m in enumerate(space.line_masks):
            image = 0
            for x in bits(m):
                image |= 1 << T[a][x]
            if image.bit_count() != m.bit_count() or not space.is_line(image):
                tally.fail("incidence", (a, k))
    order = ("associative", "commutative", "identity", "inverses", "incidence")
    return AxiomReport(
        "incidence-group",
        {ax: ax not in tally.counts for ax in order},
        tally.violations(order),
        {"cyclic": G.is_cyclic(), "order": N},
    )
