"""Backtracking search for isomorphisms between small hyperstructures."""

from __future__ import annotations

from collections import Counter

from hyperlab.hyper.table import MultiOpTable, bits


def _signature(H: MultiOpTable, x: int) -> tuple:
    sizes = Counter(len(H.sum(x, y)) for y in range(H.n))
    return (x == H.zero, len(H.sum(x, x)), tuple(sorted(sizes.items())))


def find_isomorphism(H1: MultiOpTable, H2: MultiOpTable) -> list[int] | None:
    """A bijection sigma with sigma(0)=0 and sigma(x ⊞ y) = sigma(x) ⊞ sigma(y).

    When both tables carry a multiplication it must be preserved as well.
    Returns ``sigma`` as an image list, or None.
    """
    n = H1.n
    if n != H2.n:
        return None
    use_mul = H1.mul is not None and H2.mul is not None
    sig1 = [_signature(H1, x) for x in range(n)]
    sig2 = [_signature(H2, x) for x in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    m1, m2 = H1.masks, H2.masks
    sigma = [-1] * n
    inv = [-1] * n

    def consistent(x: int) -> bool:
        """Check every relation between x and already-assigned elements."""
        sx = sigma[x]
        for y in range(n):
            sy = sigma[y]
            if sy < 0:
                continue
            for a, b, sa, sb in ((x, y, sx, sy), (y, x, sy, sx)):
                s1, s2 = m1[a][b], m2[sa][sb]
                if s1.bit_count() != s2.bit_count():
                    return False
                for k in bits(s1):
                    if sigma[k] >= 0 and not s2 >> sigma[k] & 1:
                        return False
                for k in bits(s2):
                    if inv[k] >= 0 and not s1 >> inv[k] & 1:
                        return False
            if use_mul:
                p = H1.mul[x][y]
                if sigma[p] >= 0 and sigma[p] != H2.mul[sx][sy]:
                    return False
                q = H2.mul[sx][sy]
                if inv[q] >= 0 and inv[q] != p:
                    return False
        return True

    def candidates(x: int) -> list[int]:
        return [c for c in range(n) if inv[c] < 0 and sig2[c] == sig1[x]]

    def choose() -> int | None:
        best, best_count = None, n + 1
        for x in range(n):
            if sigma[x] >= 0:
                continue
            count = 0
            for c in candidates(x):
                sigma[x], inv[c] = c, x
                if consistent(x):
                    count += 1
                sigma[x], inv[c] = -1, -1
            if count < best_count:
                best, best_count = x, count
                if count <= 1:
                    break
        return best

    def assign(x: int, c: int) -> bool:
        sigma[x], inv[c] = c, x
        if consistent(x):
            return True
        sigma[x], inv[c] = -1, -1
        return False

    if not assign(H1.zero, H2.zero):
        return None
    if use_mul and H1.one is not None and H2.one is not None and not assign(H1.one, H2.one):
        return None

    def search() -> bool:
        x = choose()
        if x is None:
            return True
        for c in candidates(x):
            if assign(x, c):
                if search():
                    return True
                sigma[x], inv[c] = -1, -1
        return False

    if not search():
        return None
    assert is_isomorphism(H1, H2, sigma)
    return list(sigma)


def is_isomorphism(H1: MultiOpTable, H2: MultiOpTable, sigma: list[int]) -> bool:
    """Independent full check of a candidate map."""
    n = H1.n
    if H2.n != n or sorted(sigma) != list(range(n)) or sigma[H1.zero] != H2.zero:
        return False
    for x in range(n):
        for y in range(n):
            if {sigma[k] for k in H1.sum(x, y)} != set(H2.sum(sigma[x], sigma[y])):
                return False
            if H1.mul is not None and H2.mul is not None:
                if sigma[H1.mul[x][y]] != H2.mul[sigma[x]][sigma[y]]:
                    return False
    return True
