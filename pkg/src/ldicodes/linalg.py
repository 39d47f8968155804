"""Exact linear algebra over GF(p) and the integers, on plain Python ints."""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def rref_mod(rows: Sequence[Sequence[int]], p: int, columns: Sequence[int] | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form mod ``p``.

    ``columns`` fixes the order in which pivot columns are tried (default left
    to right).  Returns the nonzero rows and their pivot columns.
    """
    m = [[v % p for v in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    order = range(ncols) if columns is None else columns
    pivots: list[int] = []
    r = 0
    for c in order:
        if r == len(m):
            break
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref_mod(rows, p)[1])


def nullspace_mod(rows: Sequence[Sequence[int]], ncols: int, p: int) -> Matrix:
    """Basis of ``{v : A v = 0 mod p}`` for the ``len(rows) x ncols`` matrix ``A``."""
    red, pivots = rref_mod(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


class RowSpace:
    """Row space of a matrix mod ``p`` with a membership test."""

    def __init__(self, rows: Sequence[Sequence[int]], p: int):
        self.p = p
        self.basis, self.pivots = rref_mod(rows, p)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def residual(self, vec: Sequence[int]) -> list[int]:
        p = self.p
        v = [x % p for x in vec]
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f:
                v = [(a - f * b) % p for a, b in zip(v, row)]
        return v

    def __contains__(self, vec: Sequence[int]) -> bool:
        return not any(self.residual(vec))


def det_bareiss(m: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
