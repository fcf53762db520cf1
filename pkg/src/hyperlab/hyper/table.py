"""Finite multivalued-operation tables and their text serialisation."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from hyperlab.errors import StructuralError


@dataclass(frozen=True)
class MultiOpTable:
    """A finite carrier with a hyperaddition and an optional multiplication.

    ``sums[i][j]`` is the sorted tuple of indices in ``i ⊞ j``.  ``mul`` (if
    present) is a total single-valued table, ``one`` its unit index.
    """

    labels: tuple[str, ...]
    zero: int
    sums: tuple[tuple[tuple[int, ...], ...], ...]
    mul: tuple[tuple[int, ...], ...] | None = None
    one: int | None = None
    meta: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        n = len(self.labels)
        if not 0 <= self.zero < n:
            raise StructuralError("zero index out of range")
        if len(self.sums) != n or any(len(row) != n for row in self.sums):
            raise StructuralError("sum table is not total on carrier x carrier")
        for row in self.sums:
            for s in row:
                if any(not 0 <= k < n for k in s):
                    raise StructuralError("sum member out of range")
        if self.mul is not None and (
            len(self.mul) != n or any(len(row) != n for row in self.mul)
        ):
            raise StructuralError("multiplication table is not total")
        if self.one is not None and not 0 <= self.one < n:
            raise StructuralError("unit index out of range")

    @classmethod
    def build(
        cls,
        labels: Sequence[str],
        zero: int,
        sums: Sequence[Sequence[Iterable[int]]],
        mul: Sequence[Sequence[int]] | None = None,
        one: int | None = None,
        meta: dict | None = None,
    ) -> "MultiOpTable":
        """Normalise nested sequences (sets allowed) into a table."""
        return cls(
            tuple(labels),
            zero,
            tuple(tuple(tuple(sorted(set(s))) for s in row) for row in sums),
            None if mul is None else tuple(tuple(row) for row in mul),
            one,
            meta or {},
        )

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def masks(self) -> tuple[tuple[int, ...], ...]:
        """Sum sets as bitmasks, for fast unions and comparisons."""
        return tuple(tuple(_mask(s) for s in row) for row in self.sums)

    def sum(self, i: int, j: int) -> tuple[int, ...]:
        return self.sums[i][j]

    def contains(self, i: int, j: int, k: int) -> bool:
        return bool(self.masks[i][j] >> k & 1)

    def set_sum(self, a: int, b: int) -> int:
        """Union of x ⊞ y over members of two bitmask sets."""
        out = 0
        m = self.masks
        for i in bits(a):
            row = m[i]
            for j in bits(b):
                out |= row[j]
        return out

    def index(self, label: str) -> int:
        return self.labels.index(label)

    @property
    def has_mul(self) -> bool:
        return self.mul is not None

    def additive(self) -> "MultiOpTable":
        """The same table with the multiplication forgotten."""
        return MultiOpTable(self.labels, self.zero, self.sums, meta=dict(self.meta))

    def replace_sum(self, i: int, j: int, members: Iterable[int]) -> "MultiOpTable":
        rows = [list(r) for r in self.sums]
        rows[i][j] = tuple(sorted(set(members)))
        return MultiOpTable(self.labels, self.zero, tuple(tuple(r) for r in rows), self.mul, self.one)

    def replace_mul(self, i: int, j: int, k: int) -> "MultiOpTable":
        if self.mul is None:
            raise StructuralError("table has no multiplication")
        rows = [list(r) for r in self.mul]
        rows[i][j] = k
        return MultiOpTable(self.labels, self.zero, self.sums, tuple(tuple(r) for r in rows), self.one)

    # -- text format ----------------------------------------------------
    def to_text(self) -> str:
        lines = [f"carrier {self.n}", f"zero {self.zero}"]
        if self.one is not None:
            lines.append(f"one {self.one}")
        for i, row in enumerate(self.sums):
            for j, s in enumerate(row):
                lines.append(f"sum {i} {j} : " + " ".join(map(str, s)) if s else f"sum {i} {j} :")
        if self.mul is not None:
            for i, row in enumerate(self.mul):
                for j, k in enumerate(row):
                    lines.append(f"mul {i} {j} : {k}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, labels: Sequence[str] | None = None) -> "MultiOpTable":
        n = zero = one = None
        sums: dict[tuple[int, int], tuple[int, ...]] = {}
        mul: dict[tuple[int, int], int] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            head, *rest = line.split()
            try:
                if head == "carrier":
                    (n,) = map(int, rest)
                elif head == "zero":
                    (zero,) = map(int, rest)
                elif head == "one":
                    (one,) = map(int, rest)
                elif head in ("sum", "mul"):
                    i, j, colon, *members = rest
                    if colon != ":":
                        raise ValueError("expected ':'")
                    key = (int(i), int(j))
                    if head == "sum":
                        if key in sums:
                            raise ValueError("duplicate sum entry")
                        sums[key] = tuple(sorted(set(map(int, members))))
                    else:
                        (k,) = map(int, members)
                        if key in mul:
                            raise ValueError("duplicate mul entry")
                        mul[key] = k
                else:
                    raise ValueError(f"unknown directive {head!r}")
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        if n is None or zero is None:
            raise ValueError("missing 'carrier' or 'zero' line")
        missing = [(i, j) for i in range(n) for j in range(n) if (i, j) not in sums]
        if missing:
            raise ValueError(f"sum table incomplete, first missing entry {missing[0]}")
        mul_rows = None
        if mul:
            if len(mul) != n * n:
                raise ValueError("mul table incomplete")
            mul_rows = tuple(tuple(mul[i, j] for j in range(n)) for i in range(n))
        return cls(
            tuple(labels) if labels is not None else tuple(str(i) for i in range(n)),
            zero,
            tuple(tuple(sums[i, j] for j in range(n)) for i in range(n)),
            mul_rows,
            one,
        )


def _mask(members: Iterable[int]) -> int:
    m = 0
    for k in members:
        m |= 1 << k
    return m


def bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def hypersum_membership(H: MultiOpTable, x: int, y: int, z: int) -> bool:
    """z ∈ x ⊞ y."""
    for k in (x, y, z):
        if not 0 <= k < H.n:
            raise IndexError(f"index {k} not in carrier of size {H.n}")
    return H.contains(x, y, z)


def krasner_hyperfield() -> MultiOpTable:
    """The two-element hyperfield K, with 1 ⊞ 1 = {0, 1}."""
    return MultiOpTable.build(
        ["0", "1"],
        0,
        [[{0}, {1}], [{1}, {0, 1}]],
        mul=[[0, 0], [0, 1]],
        one=1,
    )
