"""Finite projective spaces P^n(F_q): points, lines, axioms, Desargues."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from hyperlab.algebra.fields import GF, FieldElement, FiniteField, prime_power
from hyperlab.algebra.poly import Polynomial
from hyperlab.errors import DegenerateLineError, DimensionError, ExcludedFieldError
from hyperlab.hyper.axioms import AxiomReport, Tally
from hyperlab.hyper.table import MultiOpTable, bits
from hyperlab.parallel import map_chunks

Coords = tuple[FieldElement, ...]


def canonical_coords(v: Coords) -> Coords:
    """Scale v so that its first nonzero coordinate is 1."""
    for c in v:
        if c:
            inv = c.inverse()
            return tuple(x * inv for x in v)
    raise ValueError("the zero vector is not a point")


@dataclass(frozen=True)
class ProjPoint:
    space: "ProjectiveSpace"
    coords: Coords

    @property
    def index(self) -> int:
        return self.space.index_of(self.coords)

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    __repr__ = __str__


@dataclass(frozen=True)
class Line:
    """A line as the sorted tuple of its point indices plus the pair that defined it."""

    space: "ProjectiveSpace"
    members: tuple[int, ...]
    defining: tuple[int, int]

    @property
    def points(self) -> tuple[ProjPoint, ...]:
        return tuple(self.space.point(i) for i in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p) -> bool:
        i = p.index if isinstance(p, ProjPoint) else p
        return i in self.members

    def __eq__(self, other) -> bool:
        if not isinstance(other, Line):
            return NotImplemented
        return self.space == other.space and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)


class ProjectiveSpace:
    """P^n over a finite field, with points indexed in coordinate order.

    Lines are stored as bitmasks over point indices; ``line_index[i][j]``
    is the line through points i and j.
    """

    def __init__(self, field: FiniteField, n: int) -> None:
        if n < 1:
            raise DimensionError("projective dimension must be at least 1")
        self.field = field
        self.n = n
        self.q = field.order

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjectiveSpace) and (self.field, self.n) == (other.field, other.n)

    def __hash__(self) -> int:
        return hash((self.field, self.n))

    def __repr__(self) -> str:
        return f"P^{self.n}({self.field!r})"

    # -- points ---------------------------------------------------------
    @cached_property
    def coords(self) -> tuple[Coords, ...]:
        els = self.field.elements()
        pts = set()
        for v in itertools.product(els, repeat=self.n + 1):
            if any(v):
                pts.add(canonical_coords(v))
        return tuple(sorted(pts, key=lambda v: tuple(c.sort_key() for c in v)))

    @cached_property
    def _index(self) -> dict[Coords, int]:
        return {v: i for i, v in enumerate(self.coords)}

    @property
    def num_points(self) -> int:
        return len(self.coords)

    def index_of(self, v: Coords) -> int:
        return self._index[canonical_coords(tuple(v))]

    def point(self, i: int) -> ProjPoint:
        return ProjPoint(self, self.coords[i])

    def points(self) -> list[ProjPoint]:
        return [self.point(i) for i in range(self.num_points)]

    def make_point(self, values) -> ProjPoint:
        v = tuple(self.field(c) for c in values)
        if len(v) != self.n + 1:
            raise DimensionError(f"expected {self.n + 1} coordinates")
        return ProjPoint(self, canonical_coords(v))

    def label(self, i: int) -> str:
        return str(self.point(i))

    # -- lines ----------------------------------------------------------
    def _span(self, i: int, j: int) -> int:
        """Bitmask of {[a x + b y]} ∪ {x, y} for points i != j."""
        x, y = self.coords[i], self.coords[j]
        mask = 1 << i | 1 << j
        units = self.field.units()
        for a in units:
            for b in units:
                mask |= 1 << self._index[canonical_coords(tuple(a * s + b * t for s, t in zip(x, y)))]
        return mask

    @cached_property
    def _lines(self) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...], list[list[int]]]:
        N = self.num_points
        line_index = [[-1] * N for _ in range(N)]
        masks: list[int] = []
        defining: list[tuple[int, int]] = []
        for i in range(N):
            for j in range(i + 1, N):
                if line_index[i][j] >= 0:
                    continue
                m = self._span(i, j)
                k = len(masks)
                masks.append(m)
                defining.append((i, j))
                members = list(bits(m))
                for a in members:
                    for b in members:
                        if a != b:
                            line_index[a][b] = k
        return tuple(masks), tuple(defining), line_index

    @property
    def line_masks(self) -> tuple[int, ...]:
        return self._lines[0]

    @property
    def line_index(self) -> list[list[int]]:
        return self._lines[2]

    @property
    def num_lines(self) -> int:
        return len(self.line_masks)

    def line(self, k: int) -> Line:
        return Line(self, tuple(bits(self.line_masks[k])), self._lines[1][k])

    def lines(self) -> list[Line]:
        return [self.line(k) for k in range(self.num_lines)]

    def line_mask(self, i: int, j: int) -> int:
        if i == j:
            raise DegenerateLineError("a line needs two distinct points")
        return self.line_masks[self.line_index[i][j]]

    @cached_property
    def lines_through(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.num_points)]
        for k, m in enumerate(self.line_masks):
            for i in bits(m):
                out[i].append(k)
        return tuple(tuple(x) for x in out)

    def is_line(self, mask: int) -> bool:
        return mask in self._line_set

    @cached_property
    def _line_set(self) -> frozenset[int]:
        return frozenset(self.line_masks)

    def collinear(self, i: int, j: int, k: int) -> bool:
        if len({i, j, k}) < 3:
            return True
        return bool(self.line_mask(i, j) >> k & 1)

    def descriptor(self) -> str:
        return space_descriptor(self)


def projective_space(q: int, n: int, modulus=None) -> ProjectiveSpace:
    p, k = prime_power(q)
    return ProjectiveSpace(GF(p, k, modulus=modulus), n)


def line_of(x: ProjPoint, y: ProjPoint) -> Line:
    """ℓ(x, y) = {[a x + b y] : a, b ∈ F^x} ∪ {x, y}."""
    if x.space != y.space:
        raise DimensionError("points of different spaces")
    if x.coords == y.coords:
        raise DegenerateLineError("ℓ(x, x) is undefined")
    S = x.space
    i, j = x.index, y.index
    members = tuple(bits(S._span(i, j)))
    return Line(S, members, (i, j))


def _reject_f2(space: ProjectiveSpace) -> None:
    if space.q == 2:
        raise ExcludedFieldError("lines over F_2 have only 3 points; F_2 is excluded")


def check_projective_axioms(space: ProjectiveSpace) -> AxiomReport:
    """Exhaustive P1, P2 (as literally quantified) and P3."""
    _reject_f2(space)
    N = space.num_points
    masks = space.line_masks
    tally = Tally()
    for i in range(N):
        for j in range(i + 1, N):
            containing = sum(1 for m in masks if m >> i & 1 and m >> j & 1)
            if containing != 1:
                tally.fail("P1", (i, j))
    line = space.line_mask
    for x in range(N):
        for y in range(N):
            if x == y:
                continue
            lxy = line(x, y)
            for z in range(N):
                if lxy >> z & 1:
                    continue
                lyz = line(y, z)
                lxz = line(x, z)
                for t in bits(lxy & ~(1 << x)):
                    for u in bits(lxz & ~(1 << x)):
                        if not lyz & line(t, u):
                            tally.fail("P2", (x, y, z, t, u))
    for k, m in enumerate(masks):
        if m.bit_count() < 4:
            tally.fail("P3", (k,))
    order = ("P1", "P2", "P3")
    return AxiomReport(
        "projective-geometry",
        {ax: ax not in tally.counts for ax in order},
        tally.violations(order),
        {"points": N, "lines": len(masks)},
    )


def _desargues_chunk(args: tuple[ProjectiveSpace, list[int]]) -> tuple[Tally, int]:
    space, centres = args
    line = space.line_mask
    tally = Tally()
    checked = 0

    def collinear3(a, b, c):
        return bool(line(a, b) >> c & 1)

    for z in centres:
        pencil = space.lines_through[z]
        for l1, l2, l3 in itertools.combinations(pencil, 3):
            rows = [list(bits(space.line_masks[l] & ~(1 << z))) for l in (l1, l2, l3)]
            pairs = [[(a, b) for a in r for b in r if a != b] for r in rows]
            for (x1, y1), (x2, y2), (x3, y3) in itertools.product(*pairs):
                xs, ys = (x1, x2, x3, z), (y1, y2, y3, z)
                if any(collinear3(*c) for c in itertools.combinations(xs, 3)):
                    continue
                if any(collinear3(*c) for c in itertools.combinations(ys, 3)):
                    continue
                common = line(x1, y1) & line(x2, y2) & line(x3, y3)
                if common != 1 << z:
                    continue
                checked += 1
                z12 = _meet(line(x1, x2), line(y1, y2))
                z23 = _meet(line(x2, x3), line(y2, y3))
                z31 = _meet(line(x3, x1), line(y3, y1))
                if z12 is None or z23 is None or z31 is None or z12 == z23:
                    tally.fail("DS", (z, x1, x2, x3, y1, y2, y3))
                elif not line(z12, z23) >> z31 & 1:
                    tally.fail("DS", (z, x1, x2, x3, y1, y2, y3))
    return tally, checked


def _meet(a: int, b: int) -> int | None:
    m = a & b
    if m == 0 or m & (m - 1):
        return None
    return m.bit_length() - 1


def check_desargues(space: ProjectiveSpace, jobs: int = 1) -> AxiomReport:
    """Exhaustive (DS): centre z, three lines through z, then x_i, y_i on them.

    Each configuration is visited with its three lines in increasing
    index order; the conclusion is symmetric in the labels.
    """
    if space.n < 2:
        raise DimensionError("(DS) is vacuous on a single line")
    _reject_f2(space)
    N = space.num_points
    chunks = [(space, list(range(k, N, max(jobs, 1)))) for k in range(max(jobs, 1))]
    tally = Tally()
    checked = 0
    for part, c in map_chunks(_desargues_chunk, chunks, jobs):
        tally.merge(part)
        checked += c
    return AxiomReport(
        "desargues",
        {"DS": "DS" not in tally.counts},
        tally.violations(("DS",)),
        {"configurations": checked},
    )


def incidence_hypergroup(space: ProjectiveSpace) -> MultiOpTable:
    """H(P): points ∪ {0}; x ⊞ y = ℓ(x,y) ∖ {x,y}, x ⊞ x = {0,x}, x ⊞ 0 = {x}.

    Index 0 is the new point 0, point i of the space is index i + 1.
    """
    _reject_f2(space)
    N = space.num_points
    sums: list[list[set[int]]] = [[set() for _ in range(N + 1)] for _ in range(N + 1)]
    for x in range(N + 1):
        sums[x][0] = {x}
        sums[0][x] = {x}
    for i in range(N):
        for j in range(N):
            if i == j:
                sums[i + 1][j + 1] = {0, i + 1}
            else:
                m = space.line_mask(i, j) & ~(1 << i | 1 << j)
                sums[i + 1][j + 1] = {k + 1 for k in bits(m)}
    labels = ["0"] + [space.label(i) for i in range(N)]
    return MultiOpTable.build(labels, 0, sums, meta={"space": space.descriptor()})


def geometry_from_hypergroup(H: MultiOpTable) -> set[frozenset[int]]:
    """Converse construction: lines ℓ(x,y) = x ⊞ y ∪ {x,y} over H ∖ {0}."""
    pts = [x for x in range(H.n) if x != H.zero]
    return {frozenset(H.sum(x, y)) | {x, y} for x in pts for y in pts if x < y}


# -- descriptors ---------------------------------------------------------


def space_descriptor(space: ProjectiveSpace) -> str:
    F = space.field
    modulus = getattr(F, "modulus", None)
    text = f"space q={space.q} n={space.n}"
    if modulus is not None:
        text += " modulus=" + ",".join(str(c.to_int()) for c in modulus.coeffs)
    return text


def parse_space_descriptor(text: str) -> ProjectiveSpace:
    """Parse ``space q=<q> n=<n> [modulus=<c0,c1,...>]``.

    ``modulus`` lists the coefficients of the polynomial defining F_q over
    its prime field, lowest degree first; it defaults to the least monic
    irreducible one.
    """
    head, *fields = text.split()
    if head != "space":
        raise ValueError("descriptor must start with 'space'")
    kv = {}
    for f in fields:
        key, sep, value = f.partition("=")
        if not sep or key not in ("q", "n", "modulus") or key in kv:
            raise ValueError(f"bad descriptor field {f!r}")
        kv[key] = value
    if "q" not in kv or "n" not in kv:
        raise ValueError("descriptor needs q and n")
    q, n = int(kv["q"]), int(kv["n"])
    p, k = prime_power(q)
    modulus = None
    if "modulus" in kv:
        cs = [int(c) for c in kv["modulus"].split(",")]
        modulus = Polynomial(GF(p), cs)
        if modulus.degree != k:
            raise ValueError(f"modulus must have degree {k}")
    return ProjectiveSpace(GF(p, k, modulus=modulus), n)
