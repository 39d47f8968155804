"""Qubit quantum Hamming codes [[2^N-1, 2^N-1-2N, 3]] and their B = 1 LDI forms.

The LDI form keeps the X block equal to the binary parity-check matrix and
signs the Z block.  It is grown inductively on the recursive column order

    labels(N+1) = [2^N] + [2^N + c for c in labels(N)] + labels(N)

where the X block becomes ``[1 1..1 0..0 ; 0 H_N H_N]`` and the Z block
``[1 v 0..0 ; 0 Z_N Z_N]`` with ``v`` alternating ``-1, 1, ..., -1``.  Each
level must satisfy ``H_N . Z_N^T = 0`` over the integers and have zero row
sums in ``Z_N``; the latter is what makes the next level commute.  Every
candidate is checked and offending Z rows are repaired by sign search.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from typing import Sequence

from .bounds import CssCutoff, p_star_css
from .distance import DistanceResult, css_distance, css_min
from .ldi import LdiCode, reduce_mod, sign_search_rows
from .stabilizer import StabilizerCode, is_css

log = logging.getLogger(__name__)

Matrix = tuple[tuple[int, ...], ...]


class RepairFailed(RuntimeError):
    pass


class PromiseViolation(AssertionError):
    pass


def _parity_rows(labels: Sequence[int], N: int) -> Matrix:
    return tuple(tuple((v >> (N - 1 - r)) & 1 for v in labels) for r in range(N))


def parity_check(N: int) -> Matrix:
    """N x (2^N - 1) matrix whose columns are 1..2^N-1 in binary, MSB in row 0."""
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    return _parity_rows(range(1, 2**N), N)


def _check_n(N: int) -> None:
    if N < 3:
        raise ValueError(f"the Hamming family starts at N = 3, got {N}")


def hamming_css(N: int) -> StabilizerCode:
    _check_n(N)
    H = parity_check(N)
    zero = (0,) * len(H[0])
    return StabilizerCode(tuple(h + zero for h in H) + tuple(zero + h for h in H), len(H[0]), 2)


def _labels(N: int) -> list[int]:
    labels = [1]
    for m in range(1, N):
        labels = [2**m] + [2**m + c for c in labels] + labels
    return labels


# Z rows of the sign-flipped Steane form (STEANE_SIGNED), on the labels(3) column order.
_SIGNED_BASE_Z = (
    (1, -1, 1, -1, 0, 0, 0),
    (0, 1, -1, 0, 1, -1, 0),
    (0, 0, 1, -1, 0, -1, 1),
)


def _offending(X: Matrix, Z: Matrix) -> list[int]:
    """Z rows with a nonzero integer product against X, or a nonzero row sum."""
    bad = []
    for i, z in enumerate(Z):
        if sum(z) or any(sum(a * b for a, b in zip(x, z)) for x in X):
            bad.append(i)
    return bad


def _repair(X: Matrix, Z: Matrix, notes: list[str]) -> Matrix:
    bad = _offending(X, Z)
    if not bad:
        return Z
    n = len(X[0])
    zero = (0,) * n
    fixed = [x + zero for x in X] + [(1,) * n + zero]
    fixed += [zero + z for i, z in enumerate(Z) if i not in bad]
    found = sign_search_rows([zero + Z[i] for i in bad], n, 2, fixed=fixed, max_abs=1)
    if found is None:
        raise RepairFailed(f"no {{0, +-1}} signs repair Z rows {bad} on {n} registers")
    repaired = list(Z)
    for i, row in zip(bad, found):
        repaired[i] = row[n:]
    notes.append(f"n={n}: repaired Z rows {bad} by sign search")
    log.info(notes[-1])
    return tuple(repaired)


def _alternating(reps: int) -> tuple[int, ...]:
    return (-1, 1) * reps + (-1,)


@functools.lru_cache(maxsize=None)
def _build(N: int) -> tuple[Matrix, Matrix, tuple[int, ...], tuple[str, ...]]:
    """X block, signed Z block and column labels for member N (recursive order)."""
    notes: list[str] = []
    if N == 3:
        labels = tuple(_labels(3))
        X = _parity_rows(labels, 3)
        Z = _repair(X, _SIGNED_BASE_Z, notes)
        return X, Z, labels, tuple(notes)
    X0, Z0, labels0, notes0 = _build(N - 1)
    notes.extend(notes0)
    m = len(labels0)
    top = 2 ** (N - 1)
    labels = (top,) + tuple(top + c for c in labels0) + labels0
    X = ((1,) + (1,) * m + (0,) * m,) + tuple((0,) + h + h for h in X0)
    tail = tuple((0,) + z + z for z in Z0)
    Z = None
    for name, reps in (("short", 2 ** (N - 2) - 2), ("full", 2 ** (N - 2) - 1)):
        v = _alternating(reps)
        if len(v) != m:
            notes.append(f"N={N}: {name} pattern has length {len(v)}, slot needs {m}; skipped")
            log.info(notes[-1])
            continue
        candidate = ((1,) + v + (0,) * m,) + tail
        if not _offending(X, candidate):
            notes.append(f"N={N}: {name} pattern certified")
            Z = candidate
            break
    if Z is None:
        Z = _repair(X, ((1,) + _alternating(2 ** (N - 2) - 1) + (0,) * m,) + tail, notes)
    return X, Z, labels, tuple(notes)


@functools.lru_cache(maxsize=None)
def hamming_ldi(N: int) -> LdiCode:
    """Certified B = 1 LDI form with X block ``parity_check(N)``."""
    _check_n(N)
    X, Z, labels, _ = _build(N)
    n = len(labels)
    order = sorted(range(n), key=lambda t: labels[t])  # ascending column values
    zero = (0,) * n
    xs = tuple(tuple(x[t] for t in order) + zero for x in X)
    zs = tuple(zero + tuple(z[t] for t in order) for z in Z)
    ldi = LdiCode(xs + zs, n, 2).check()
    if ldi.B != 1:
        raise RepairFailed(f"member N={N} ended with B={ldi.B}")
    return ldi


def construction_notes(N: int) -> tuple[str, ...]:
    _check_n(N)
    return _build(N)[3]


@dataclass(frozen=True)
class HammingMember:
    N: int
    parity: Matrix
    css: StabilizerCode
    ldi: LdiCode | None = None

    @classmethod
    def build(cls, N: int, with_ldi: bool = True) -> "HammingMember":
        return cls(N, parity_check(N), hamming_css(N), hamming_ldi(N) if with_ldi else None)


@dataclass(frozen=True)
class FamilyReport:
    N: int
    n: int
    k: int
    B: int
    p_star_css: CssCutoff
    table: tuple[tuple[int, DistanceResult, DistanceResult, DistanceResult], ...] = field(default=())

    def distances(self) -> dict[int, DistanceResult]:
        return {p: d for p, _, _, d in self.table}


def certify_family_member(N: int, primes: Sequence[int], wmax: int = 3) -> FamilyReport:
    """Reduce the LDI form mod each prime and confirm distance exactly 3."""
    ldi = hamming_ldi(N)
    table = []
    for p in primes:
        code = reduce_mod(ldi, p)
        dx, dz = css_distance(is_css(code), p, wmax)
        d = css_min(dx, dz)
        if not (d.exact and d.value == 3):
            raise PromiseViolation(f"N={N}, p={p}: distance {d}, expected exactly 3")
        table.append((p, dx, dz, d))
    return FamilyReport(N, ldi.n, ldi.k, ldi.B, p_star_css(ldi.B, 3), tuple(table))
