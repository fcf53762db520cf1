"""K-vector spaces: canonical hypergroups with x ⊞ x = {0, x}.

Independence and spanning are decided from iterated set-sums over subsets
of distinct elements.  Because ⊞ is commutative and associative, a subset
determines its sum regardless of order or bracketing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from hyperlab.errors import StructuralError, TooLargeError
from hyperlab.hyper.axioms import x_plus_x_law
from hyperlab.hyper.table import MultiOpTable

MAX_CARRIER = 50


@dataclass(frozen=True)
class KVectorSpace:
    table: MultiOpTable

    def __post_init__(self) -> None:
        if self.table.n > MAX_CARRIER:
            raise TooLargeError(f"carrier of size {self.table.n} exceeds {MAX_CARRIER}")
        bad = x_plus_x_law(self.table)
        if bad:
            raise StructuralError(f"x ⊞ x != {{0, x}} for x = {bad[0]}")

    @property
    def zero(self) -> int:
        return self.table.zero

    def nonzero(self) -> list[int]:
        return [x for x in range(self.table.n) if x != self.zero]


def _subset_sums(V: KVectorSpace, S: Sequence[int]) -> list[int]:
    """Masks of s_1 ⊞ ... ⊞ s_k for every nonempty subset of S."""
    H = V.table
    sums: list[int] = []
    for s in S:
        single = 1 << s
        sums += [H.set_sum(m, single) for m in sums] + [single]
    return sums


def is_independent(V: KVectorSpace, S: Iterable[int]) -> bool:
    """0 lies in no iterated sum of distinct members of S (and 0 ∉ S)."""
    S = sorted(set(S))
    if V.zero in S:
        return False
    zero_bit = 1 << V.zero
    return not any(m & zero_bit for m in _subset_sums(V, S))


def spans(V: KVectorSpace, S: Iterable[int]) -> bool:
    """Every x ∉ S lies in some sum s_1 ⊞ ... ⊞ s_n over members of S.

    Repeated summands only add 0 and sums of smaller subsets, since
    s ⊞ s = {0, s}; so subsets of distinct members (plus 0 when S is
    nonempty) cover everything reachable.
    """
    S = sorted(set(S))
    reach = 0
    for m in _subset_sums(V, S):
        reach |= m
    for s in S:
        reach |= 1 << s
    if S:
        reach |= 1 << V.zero
    return reach == (1 << V.table.n) - 1


def find_basis(V: KVectorSpace, order: Sequence[int] | None = None) -> list[int]:
    """Greedy basis along ``order`` (default: carrier order), then a spanning check."""
    H = V.table
    zero_bit = 1 << V.zero
    basis: list[int] = []
    sums: list[int] = []
    for x in order if order is not None else V.nonzero():
        if x == V.zero or x in basis:
            continue
        single = 1 << x
        extra = [H.set_sum(m, single) for m in sums] + [single]
        if any(m & zero_bit for m in extra):
            continue
        basis.append(x)
        sums += extra
    if not spans(V, basis):
        raise StructuralError("a maximal independent set does not span")
    return basis


def basis_cardinalities(V: KVectorSpace, seed: int = 0, orders: int = 20) -> list[int]:
    """Basis sizes from the carrier order and ``orders`` seeded shuffles."""
    rng = random.Random(seed)
    sizes = [len(find_basis(V))]
    elems = V.nonzero()
    for _ in range(orders):
        rng.shuffle(elems)
        sizes.append(len(find_basis(V, elems)))
    return sizes


def dimension(V: KVectorSpace, seed: int = 0, orders: int = 20) -> int:
    """|find_basis(V)|, cross-checked against shuffled greedy orders."""
    sizes = basis_cardinalities(V, seed, orders)
    if len(set(sizes)) != 1:
        raise StructuralError(f"greedy bases of different sizes: {sorted(set(sizes))}")
    return sizes[0]
