"""Semilinear maps and the enumeration of collineations of small spaces."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from hyperlab.algebra.fields import FieldElement
from hyperlab.algebra.poly import bareiss_determinant
from hyperlab.errors import DimensionError, TooLargeError
from hyperlab.hyper.table import bits
from hyperlab.parallel import map_chunks
from hyperlab.projective.space import ProjectiveSpace, ProjPoint, canonical_coords

Matrix = tuple[tuple[FieldElement, ...], ...]

COLLINEATION_GUARD = 30


@dataclass(frozen=True)
class SemilinearMap:
    """v -> M · theta^k(v), where theta is the absolute Frobenius x -> x^p."""

    space: ProjectiveSpace
    matrix: Matrix
    k: int = 0

    def __post_init__(self) -> None:
        F = self.space.field
        size = self.space.n + 1
        M = tuple(tuple(F(c) for c in row) for row in self.matrix)
        if len(M) != size or any(len(row) != size for row in M):
            raise DimensionError(f"matrix must be {size}x{size}")
        if not bareiss_determinant(M, F.zero, F.one):
            raise ValueError("singular matrix")
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "k", self.k % F.absolute_degree)

    @classmethod
    def identity(cls, space: ProjectiveSpace, k: int = 0) -> "SemilinearMap":
        F = space.field
        size = space.n + 1
        return cls(space, tuple(tuple(F.one if i == j else F.zero for j in range(size)) for i in range(size)), k)

    def _frob(self, x: FieldElement, k: int) -> FieldElement:
        return x ** (self.space.field.characteristic**k) if k else x

    def apply_vector(self, v) -> tuple[FieldElement, ...]:
        w = [self._frob(c, self.k) for c in v]
        zero = self.space.field.zero
        out = []
        for row in self.matrix:
            acc = zero
            for a, b in zip(row, w):
                acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __mul__(self, other: "SemilinearMap") -> "SemilinearMap":
        """(M, k) ∘ (M', k') = (M · frob^k(M'), k + k')."""
        if other.space != self.space:
            raise DimensionError("maps on different spaces")
        F = self.space.field
        twisted = [[self._frob(c, self.k) for c in row] for row in other.matrix]
        size = len(self.matrix)
        prod = tuple(
            tuple(
                sum((self.matrix[i][t] * twisted[t][j] for t in range(size)), F.zero)
                for j in range(size)
            )
            for i in range(size)
        )
        return SemilinearMap(self.space, prod, self.k + other.k)

    def permutation(self) -> list[int]:
        """Point images as an index list."""
        S = self.space
        return [S.index_of(self.apply_vector(v)) for v in S.coords]


def apply_semilinear(f: SemilinearMap, x: ProjPoint) -> ProjPoint:
    if x.space != f.space:
        raise DimensionError("point and map live on different spaces")
    return ProjPoint(x.space, canonical_coords(f.apply_vector(x.coords)))


def is_collineation(space: ProjectiveSpace, perm: list[int]) -> bool:
    """Whether the point bijection maps every line onto a line."""
    if sorted(perm) != list(range(space.num_points)):
        return False
    for m in space.line_masks:
        image = 0
        for i in bits(m):
            image |= 1 << perm[i]
        if not space.is_line(image):
            return False
    return True


def pgammal_order(q: int, n: int, absolute_degree: int) -> int:
    """|PΓL_{n+1}(F_q)| = |GL_{n+1}(F_q)| / (q - 1) · [F_q : F_p]."""
    gl = 1
    for i in range(n + 1):
        gl *= q ** (n + 1) - q**i
    return gl // (q - 1) * absolute_degree


@dataclass(frozen=True)
class CollineationReport:
    space: str
    count: int
    expected: int
    generators: tuple[tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return self.count == self.expected

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "count": self.count,
            "expected": self.expected,
            "generators": [list(g) for g in self.generators],
        }


def _frame(space: ProjectiveSpace) -> list[int]:
    """Standard frame: the unit vectors and their sum."""
    F = space.field
    size = space.n + 1
    vecs = [tuple(F.one if i == j else F.zero for j in range(size)) for i in range(size)]
    vecs.append(tuple(F.one for _ in range(size)))
    return [space.index_of(v) for v in vecs]


def _frame_images(space: ProjectiveSpace):
    """All ordered (n+2)-tuples of points in general position."""
    N = space.num_points
    if space.n == 2:
        line = space.line_mask
        for a in range(N):
            for b in range(N):
                if b == a:
                    continue
                lab = line(a, b)
                for c in range(N):
                    if lab >> c & 1:
                        continue
                    blocked = lab | line(a, c) | line(b, c)
                    for d in range(N):
                        if not blocked >> d & 1:
                            yield (a, b, c, d)
        return
    n1 = space.n + 1

    def extend(images: list[int], span: int):
        if len(images) == n1:
            blocked = 0
            for i in range(n1):
                blocked |= _span_mask(space, images[:i] + images[i + 1 :])
            for d in range(N):
                if not blocked >> d & 1:
                    yield tuple(images) + (d,)
            return
        for c in range(N):
            if span >> c & 1:
                continue
            grown = span | 1 << c
            for x in bits(span):
                grown |= space.line_mask(x, c)
            yield from extend(images + [c], grown)

    yield from extend([], 0)


def _span_mask(space: ProjectiveSpace, pts: list[int]) -> int:
    """Points of the subspace spanned by ``pts``."""
    span = 0
    for c in pts:
        if span >> c & 1:
            continue
        grown = span | 1 << c
        for x in bits(span):
            grown |= space.line_mask(x, c)
        span = grown
    return span


def _closure_order(space: ProjectiveSpace, start: list[int]) -> list[tuple[int, list[tuple[int, int]]]]:
    """Order the remaining points so each lies on lines through earlier ones.

    Each entry is (point, anchors): for every line through the point that
    already holds two placed points, the first two of them.  Constraining
    the image to the image lines of all anchors makes every line map into
    a line, which for a bijection means onto.
    """
    placed = list(start)
    placed_set = set(start)
    order = []
    N = space.num_points
    while len(placed) < N:
        best = None
        for p in range(N):
            if p in placed_set:
                continue
            anchors = {}
            for k in space.lines_through[p]:
                on = [x for x in placed if space.line_masks[k] >> x & 1]
                if len(on) >= 2:
                    anchors[k] = (on[0], on[1])
            if best is None or len(anchors) > len(best[1]):
                best = (p, anchors)
        p, anchors = best
        order.append((p, [anchors[k] for k in sorted(anchors)]))
        placed.append(p)
        placed_set.add(p)
    return order


def _complete_frames(args) -> tuple[int, tuple[int, ...] | None, list[tuple[int, ...]] | None]:
    """Count completions of the given frame images (worker entry point)."""
    space, frame, order, frames, want_all = args
    N = space.num_points
    masks = space.line_masks
    line_index = space.line_index
    sigma = [-1] * N
    used = [False] * N
    count = 0
    first = None
    found = [] if want_all else None
    full = (1 << N) - 1
    last = len(order)

    def complete(step: int) -> None:
        nonlocal count, first
        if step == last:
            count += 1
            if first is None:
                first = tuple(sigma)
            if found is not None:
                found.append(tuple(sigma))
            return
        p, anchors = order[step]
        allowed = full
        for a, b in anchors:
            allowed &= masks[line_index[sigma[a]][sigma[b]]]
        for c in bits(allowed):
            if used[c]:
                continue
            sigma[p], used[c] = c, True
            complete(step + 1)
            sigma[p], used[c] = -1, False

    for cand in frames:
        for f, c in zip(frame, cand):
            sigma[f], used[c] = c, True
        complete(0)
        for f, c in zip(frame, cand):
            sigma[f], used[c] = -1, False
    return count, first, found


def enumerate_collineations(space: ProjectiveSpace, want_all: bool = False, jobs: int = 1):
    """Count the incidence-preserving bijections of the point set.

    For n = 1 every bijection of the single line qualifies, so the count is
    (q+1)!.  For n >= 2 the frame images are enumerated and each frame is
    completed by backtracking along lines; the count must equal |PΓL|.
    With ``want_all`` the permutations themselves are returned too.
    """
    N = space.num_points
    if N > COLLINEATION_GUARD:
        raise TooLargeError(f"{N} points exceeds the guard of {COLLINEATION_GUARD}")
    if space.n == 1:
        count = math.factorial(N)
        gens = []
        if N > 1:
            gens.append(tuple([1, 0] + list(range(2, N))))
            gens.append(tuple(list(range(1, N)) + [0]))
        found = [tuple(p) for p in itertools.permutations(range(N))] if want_all else None
        report = CollineationReport(space.descriptor(), count, count, tuple(gens))
        return (report, found) if want_all else report

    frame = _frame(space)
    order = _closure_order(space, frame)
    frames = list(_frame_images(space))
    parts = max(jobs, 1)
    chunks = [(space, frame, order, frames[k::parts], want_all) for k in range(parts)]
    count = 0
    found: list[tuple[int, ...]] = []
    sample = None
    for c, first, perms in map_chunks(_complete_frames, chunks, jobs):
        count += c
        if sample is None:
            sample = first
        if perms:
            found.extend(perms)
    if sample is not None and not is_collineation(space, list(sample)):
        raise AssertionError("line propagation produced a non-collineation")
    expected = pgammal_order(space.q, space.n, space.field.absolute_degree)
    gens = semilinear_generators(space)
    report = CollineationReport(space.descriptor(), count, expected, tuple(tuple(g) for g in gens))
    return (report, sorted(found)) if want_all else report


def semilinear_generators(space: ProjectiveSpace) -> list[list[int]]:
    """Point permutations of generators of PΓL: transvections, a diagonal, Frobenius."""
    F = space.field
    size = space.n + 1
    basis = [F.one]
    if F.absolute_degree > 1:
        g = F.primitive_element
        basis = [g**i for i in range(F.absolute_degree)]
    gens = []

    def unit(i, j, c):
        return tuple(
            tuple((F.one if r == s else F.zero) + (c if (r, s) == (i, j) else F.zero) for s in range(size))
            for r in range(size)
        )

    for i in range(size):
        for j in range(size):
            if i != j:
                for c in basis:
                    gens.append(SemilinearMap(space, unit(i, j, c)))
    diag = tuple(
        tuple((F.primitive_element if r == 0 else F.one) if r == s else F.zero for s in range(size))
        for r in range(size)
    )
    if F.order > 2:
        gens.append(SemilinearMap(space, diag))
    if F.absolute_degree > 1:
        gens.append(SemilinearMap.identity(space, 1))
    perms = []
    for f in gens:
        perm = f.permutation()
        if perm != list(range(space.num_points)) and perm not in perms:
            perms.append(perm)
    return perms


def group_order(perms: list[list[int]], degree: int) -> int:
    """Order of the permutation group generated by ``perms`` (by orbit closure)."""
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    gens = [tuple(g) for g in perms]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                composed = tuple(g[i] for i in h)
                if composed not in seen:
                    seen.add(composed)
                    nxt.append(composed)
        frontier = nxt
    return len(seen)
