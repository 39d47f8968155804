"""Code distance by enumeration, error classification and minor scans.

Supports are enumerated in colexicographic order and, on each support, the
per-register ``(x, z)`` values in odometer order with the first register's
leading nonzero exponent fixed to 1 (scalar multiples of an error are
undetectable together).  The first witness met in this order is reported.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .config import BudgetExceeded, distance_budget
from .linalg import RowSpace, det_bareiss, nullspace_mod
from .phi import PhiVector, Ring, lift_row, row_product
from .stabilizer import CssStructure, StabilizerCode


@dataclass(frozen=True)
class DistanceResult:
    """``Exact(value)`` when ``exact``, otherwise the lower bound ``AtLeast(value)``."""

    value: int
    exact: bool
    p: int
    witness: PhiVector | None = None
    degenerate: bool | None = None

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


def colex_supports(n: int, w: int) -> Iterator[tuple[int, ...]]:
    """All ``w``-subsets of ``range(n)`` in colexicographic order."""
    if w == 0:
        yield ()
        return
    for last in range(w - 1, n):
        for head in colex_supports(last, w - 1):
            yield head + (last,)


def _value_patterns(p: int, w: int) -> np.ndarray:
    """Array ``(M, w, 2)`` of nonzero ``(x, z)`` pairs, first pair normalized."""
    pairs = [(idx // p, idx % p) for idx in range(1, p * p)]
    first = [pr for pr in pairs if (pr[0] or pr[1]) == 1]
    combos = itertools.product(first, *([pairs] * (w - 1)))
    return np.array(list(combos), dtype=np.int64).reshape(-1, w, 2)


def stabilizer_min_weight(code: StabilizerCode, cap: int = 10**6) -> int | None:
    """Least weight of a non-identity stabilizer element, or None past ``cap``."""
    q, r, n = code.q, len(code.rows), code.n
    if r == 0 or q**r > cap:
        return None
    gens = np.array(code.rows, dtype=np.int64)
    coeffs = np.array(list(itertools.product(range(q), repeat=r))[1:], dtype=np.int64)
    elems = (coeffs @ gens) % q
    weights = np.count_nonzero(elems[:, :n] | elems[:, n:], axis=1)
    return int(weights.min())


def distance_exact(code: StabilizerCode, wmax: int, budget: int | None = None) -> DistanceResult:
    """Least weight of an error with zero syndrome mod q outside the stabilizer group."""
    if wmax < 1:
        raise ValueError(f"wmax must be >= 1, got {wmax}")
    budget = distance_budget() if budget is None else budget
    n, p = code.n, code.q
    group = RowSpace(code.rows, p)
    r = len(code.rows)
    gens = np.array(code.rows, dtype=np.int64).reshape(r, 2 * n)
    sx, sz = gens[:, :n], gens[:, n:]
    spent = 0
    for w in range(1, min(wmax, n) + 1):
        pats = _value_patterns(p, w)
        ex, ez = pats[:, :, 0], pats[:, :, 1]
        for supp in colex_supports(n, w):
            if spent + len(pats) > budget:
                return DistanceResult(w, False, p)
            spent += len(pats)
            cols = list(supp)
            synd = (ez @ sx[:, cols].T - ex @ sz[:, cols].T) % p
            for idx in np.flatnonzero(~synd.any(axis=1)):
                row = [0] * (2 * n)
                for t, (a, b) in zip(cols, pats[idx]):
                    row[t], row[n + t] = int(a), int(b)
                if row not in group:
                    e = PhiVector.from_row(row, Ring.mod(p))
                    low = stabilizer_min_weight(code)
                    degenerate = None if low is None else low < w
                    return DistanceResult(w, True, p, e, degenerate)
    return DistanceResult(min(wmax, n) + 1, False, p)


def _block_distance(check: Sequence[Sequence[int]], group: Sequence[Sequence[int]], n: int, p: int,
                    wmax: int, budget: int, z_type: bool) -> DistanceResult:
    """Least Hamming weight of ``e`` with ``check . e = 0`` mod p and ``e`` outside rowspace(group)."""
    space = RowSpace(group, p)
    check = [[v % p for v in row] for row in check]
    spent = 0
    for w in range(1, min(wmax, n) + 1):
        for supp in colex_supports(n, w):
            spent += 1
            if spent > budget:
                return DistanceResult(w, False, p)
            sub = [[row[t] for t in supp] for row in check]
            for vec in nullspace_mod(sub, w, p):
                e = [0] * n
                for t, v in zip(supp, vec):
                    e[t] = v
                if e not in space:
                    lead = next(v for v in e if v)
                    inv = pow(lead, -1, p)
                    e = [(v * inv) % p for v in e]
                    zero = [0] * n
                    row = zero + e if z_type else e + zero
                    return DistanceResult(w, True, p, PhiVector.from_row(row, Ring.mod(p)))
    return DistanceResult(min(wmax, n) + 1, False, p)


def css_distance(css: CssStructure, p: int, wmax: int, budget: int | None = None) -> tuple[DistanceResult, DistanceResult]:
    """``(dX, dZ)``: block-wise distances of a CSS code over ``p``, one kernel test per support."""
    budget = distance_budget() if budget is None else budget
    dx = _block_distance(css.zblock, css.xblock, css.n, p, wmax, budget, z_type=False)
    dz = _block_distance(css.xblock, css.zblock, css.n, p, wmax, budget, z_type=True)
    return dx, dz


def css_min(dx: DistanceResult, dz: DistanceResult) -> DistanceResult:
    if dx.exact and dz.exact:
        return dx if dx.value <= dz.value else dz
    exact = [d for d in (dx, dz) if d.exact]
    bound = min(d.value for d in (dx, dz))
    if exact and exact[0].value <= bound:
        return exact[0]
    return DistanceResult(bound, False, dx.p)


# -- error classes ---------------------------------------------------------


@dataclass(frozen=True)
class Detectable:
    pass


@dataclass(frozen=True)
class InGroup:
    pass


@dataclass(frozen=True)
class Unavoidable:
    pass


@dataclass(frozen=True)
class Artifact:
    """Undetectable only mod p: integer syndrome ``value`` at generator ``index``."""

    index: int
    value: int


ErrorClass = Detectable | InGroup | Unavoidable | Artifact


def classify_error(ldi, p: int, e: PhiVector) -> ErrorClass:
    """Classify ``e`` against integer generators (an LdiCode or raw rows) at modulus ``p``.

    An ``e`` over a prime ring is taken as its symmetric lift, so ``p - 1``
    counts as ``-1``; an ``e`` over the integers is used exactly.
    """
    rows = ldi.rows if hasattr(ldi, "rows") else [tuple(r) for r in ldi]
    if rows and len(rows[0]) != 2 * e.n:
        raise ValueError(f"error acts on {e.n} registers, code on {len(rows[0]) // 2}")
    # mod-q errors are read through the symmetric lift; integer errors as given
    erow = e.row if e.ring.modulus is None else lift_row(e.row, e.ring.modulus)
    ints = [row_product(r, erow) for r in rows]
    if any(v % p for v in ints):
        return Detectable()
    if e.row in RowSpace(rows, p):
        return InGroup()
    bad = next((i for i, v in enumerate(ints) if v), None)
    if bad is None:
        return Unavoidable()
    return Artifact(bad, ints[bad])


# -- minors ----------------------------------------------------------------


@dataclass(frozen=True)
class MinorScanReport:
    shape: tuple[int, int]
    w: int
    count: int
    max_abs_det: int
    hadamard_bound: int
    artifact_minors: tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]


def hadamard_bound(B: int, w: int) -> int:
    """``ceil(B^w * w^(w/2))``, an upper bound on any ``w x w`` minor with entries ``|a| <= B``."""
    s = B ** (2 * w) * w**w
    root = math.isqrt(s)
    return root if root * root == s else root + 1


def minor_scan(block: Sequence[Sequence[int]], w: int, p: int, budget: int | None = None) -> MinorScanReport:
    budget = distance_budget() if budget is None else budget
    rows = len(block)
    cols = len(block[0]) if rows else 0
    if not 1 <= w <= min(rows, cols):
        raise ValueError(f"minor size {w} does not fit a {rows}x{cols} block")
    count = math.comb(rows, w) * math.comb(cols, w)
    if count > budget:
        raise BudgetExceeded(f"{count} minors", budget)
    B = max(abs(v) for r in block for v in r)
    worst = 0
    artifacts = []
    for rs in itertools.combinations(range(rows), w):
        for cs in itertools.combinations(range(cols), w):
            det = det_bareiss([[block[i][j] for j in cs] for i in rs])
            worst = max(worst, abs(det))
            if det and det % p == 0:
                artifacts.append((rs, cs, det))
    return MinorScanReport((rows, cols), w, count, worst, hadamard_bound(B, w), tuple(artifacts))
