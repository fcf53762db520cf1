"""Exhaustive axiom checks for canonical hypergroups and hyperrings.

Checks never stop at the first failure: every axiom is evaluated on the
whole carrier and each violated one is reported with its lexicographically
least witness and the number of failing tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from hyperlab.errors import MissingMultiplicationError
from hyperlab.hyper.table import MultiOpTable, bits
from hyperlab.parallel import map_chunks

HYPERGROUP_AXIOMS = ("nonempty", "CH1", "CH2", "CH3", "CH4", "neutral")


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    count: int

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "witness": list(self.witness), "count": self.count}


@dataclass(frozen=True)
class AxiomReport:
    kind: str
    results: dict[str, bool]
    violations: tuple[Violation, ...]
    derived: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def __bool__(self) -> bool:
        return self.ok

    def violation(self, axiom: str) -> Violation | None:
        return next((v for v in self.violations if v.axiom == axiom), None)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "results": dict(self.results),
            "derived": dict(self.derived),
            "violations": [v.to_dict() for v in self.violations],
        }


class Tally:
    """Count failures per axiom, remembering the least witness."""

    def __init__(self) -> None:
        self.counts: dict[str, int] = {}
        self.first: dict[str, tuple[int, ...]] = {}

    def fail(self, axiom: str, witness: tuple[int, ...]) -> None:
        self.counts[axiom] = self.counts.get(axiom, 0) + 1
        if axiom not in self.first or witness < self.first[axiom]:
            self.first[axiom] = witness

    def merge(self, other: "Tally") -> None:
        for ax, c in other.counts.items():
            self.counts[ax] = self.counts.get(ax, 0) + c
            w = other.first[ax]
            if ax not in self.first or w < self.first[ax]:
                self.first[ax] = w

    def violations(self, order) -> tuple[Violation, ...]:
        return tuple(Violation(ax, self.first[ax], self.counts[ax]) for ax in order if ax in self.counts)


def _assoc_chunk(args: tuple[MultiOpTable, list[int]]) -> Tally:
    H, xs = args
    m = H.masks
    n = H.n
    tally = Tally()
    for x in xs:
        mx = m[x]
        for y in range(n):
            xy = mx[y]
            my = m[y]
            for z in range(n):
                left = 0
                for t in bits(xy):
                    left |= m[t][z]
                right = 0
                for u in bits(my[z]):
                    right |= mx[u]
                if left != right:
                    tally.fail("CH1", (x, y, z))
    return tally


def _negatives(H: MultiOpTable) -> list[list[int]]:
    return [[y for y in range(H.n) if H.contains(x, y, H.zero)] for x in range(H.n)]


def _split(n: int, jobs: int) -> list[list[int]]:
    if jobs <= 1:
        return [list(range(n))]
    return [list(range(k, n, jobs)) for k in range(jobs)]


def check_canonical_hypergroup(H: MultiOpTable, jobs: int = 1) -> AxiomReport:
    """Check non-emptiness, CH1-CH4 and neutrality of 0; reproductivity is derived."""
    n, m, zero = H.n, H.masks, H.zero
    tally = Tally()
    full = (1 << n) - 1
    for x in range(n):
        for y in range(n):
            if not m[x][y]:
                tally.fail("nonempty", (x, y))
            if m[x][y] != m[y][x]:
                tally.fail("CH2", (x, y))
        if m[x][zero] != 1 << x or m[zero][x] != 1 << x:
            tally.fail("neutral", (x,))
    for part in map_chunks(_assoc_chunk, [(H, xs) for xs in _split(n, jobs)], jobs):
        tally.merge(part)
    negs = _negatives(H)
    for x in range(n):
        if len(negs[x]) != 1:
            tally.fail("CH3", (x,))
    for x in range(n):
        if len(negs[x]) != 1:
            continue
        xneg = negs[x][0]
        for y in range(n):
            for z in bits(m[x][y]):
                if not m[z][xneg] >> y & 1:
                    tally.fail("CH4", (x, y, z))
    reproductive = Tally()
    for x in range(n):
        row = 0
        for y in range(n):
            row |= m[x][y]
        if row != full:
            reproductive.fail("reproductive", (x,))
    order = HYPERGROUP_AXIOMS
    results = {ax: ax not in tally.counts for ax in order}
    return AxiomReport(
        "canonical-hypergroup",
        results,
        tally.violations(order) + reproductive.violations(("reproductive",)),
        {"reproductive": not reproductive.counts},
    )


def _scale(H: MultiOpTable, x: int, mask: int) -> int:
    mul = H.mul[x]
    out = 0
    for a in bits(mask):
        out |= 1 << mul[a]
    return out


def check_hyperring(H: MultiOpTable, jobs: int = 1) -> AxiomReport:
    """HR1-HR3 plus the unit axioms; ``derived['hyperfield']`` flags a hyperfield."""
    if H.mul is None or H.one is None:
        raise MissingMultiplicationError("hyperring checks need a multiplication and a unit")
    base = check_canonical_hypergroup(H, jobs)
    n, mul, zero, one, m = H.n, H.mul, H.zero, H.one, H.masks
    tally = Tally()
    for x in range(n):
        for y in range(n):
            if mul[x][y] != mul[y][x]:
                tally.fail("HR2-comm", (x, y))
            for z in range(n):
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    tally.fail("HR2-assoc", (x, y, z))
        if mul[zero][x] != zero or mul[x][zero] != zero:
            tally.fail("HR2-zero", (x,))
        if mul[one][x] != x or mul[x][one] != x:
            tally.fail("unit", (x,))
    if one == zero:
        tally.fail("unit", (one,))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if _scale(H, x, m[y][z]) != H.set_sum(1 << mul[x][y], 1 << mul[x][z]):
                    tally.fail("HR3", (x, y, z))
    units = [x for x in range(n) if x != zero and any(mul[x][y] == one for y in range(n))]
    domain = all(mul[x][y] != zero for x in range(n) for y in range(n) if x != zero and y != zero)
    order = ("HR2-assoc", "HR2-comm", "HR2-zero", "HR3", "unit")
    results = {"HR1": base.ok}
    results.update({ax: ax not in tally.counts for ax in order})
    hyperfield = results["unit"] and domain and len(units) == n - 1
    return AxiomReport(
        "hyperring",
        results,
        base.violations + tally.violations(order),
        {**base.derived, "integral": domain, "hyperfield": hyperfield},
    )


def x_plus_x_law(H: MultiOpTable) -> list[int]:
    """Elements x violating x ⊞ x = {0, x}."""
    return [x for x in range(H.n) if x != H.zero and H.masks[x][x] != (1 << H.zero | 1 << x)]

