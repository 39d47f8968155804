"""Local-dimension-invariant (LDI) generator matrices.

An LDI matrix is an integer generator matrix whose pairwise symplectic
products vanish exactly, so it reduces to a commuting set modulo every prime.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Sequence

from .config import BudgetExceeded, sign_search_budget
from .phi import lift_row, row_product
from .stabilizer import CodeError, Row, StabilizerCode, canonical_form, css_split

log = logging.getLogger(__name__)


class LdiViolationError(CodeError):
    def __init__(self, violations):
        shown = ", ".join(f"({i},{j})={v}" for i, j, v in violations[:5])
        super().__init__(f"integer symplectic products do not vanish: {shown}")
        self.violations = violations


@dataclass(frozen=True)
class LdiReport:
    B: int
    gram: tuple[tuple[int, ...], ...]
    violations: tuple[tuple[int, int, int], ...]
    css: bool

    @property
    def certified(self) -> bool:
        return not self.violations

    @property
    def pairs(self) -> int:
        r = len(self.gram)
        return r * (r - 1) // 2


def verify_ldi(rows: Sequence[Sequence[int]], n: int | None = None) -> LdiReport:
    rows = [tuple(int(v) for v in r) for r in rows]
    if n is None:
        n = len(rows[0]) // 2 if rows else 0
    for i, r in enumerate(rows):
        if len(r) != 2 * n:
            raise ValueError(f"row {i} has length {len(r)}, expected {2 * n}")
    gram = tuple(tuple(row_product(a, b) for b in rows) for a in rows)
    violations = tuple(
        (i, j, gram[i][j]) for i, j in itertools.combinations(range(len(rows)), 2) if gram[i][j]
    )
    B = max((abs(v) for r in rows for v in r), default=0)
    return LdiReport(B, gram, violations, css_split(rows, n) is not None)


@dataclass(frozen=True)
class LdiCode:
    """Integer generators plus the prime they were imported from.

    Construction does not certify; :meth:`check` does, and every producer in
    this package calls it before returning.
    """

    rows: tuple[Row, ...]
    n: int
    origin_q: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        for i, r in enumerate(rows):
            if len(r) != 2 * self.n:
                raise CodeError(f"row {i} has length {len(r)}, expected {2 * self.n}")
        object.__setattr__(self, "rows", rows)

    @property
    def k(self) -> int:
        return self.n - len(self.rows)

    @property
    def B(self) -> int:
        return max((abs(v) for r in self.rows for v in r), default=0)

    def report(self) -> LdiReport:
        return verify_ldi(self.rows, self.n)

    def check(self) -> "LdiCode":
        rep = self.report()
        if rep.violations:
            raise LdiViolationError(list(rep.violations))
        StabilizerCode(self.rows, self.n, self.origin_q)
        return self


def reduce_mod(ldi: LdiCode, p: int) -> StabilizerCode:
    return StabilizerCode(ldi.rows, ldi.n, p)


def ldi_prescriptive(code: StabilizerCode, system: str = "symmetric") -> LdiCode:
    """Canonical form, then add the strictly-lower Gram triangle to the Z1 block."""
    canon = canonical_form(code).code
    rows = [list(r) for r in canon.lifted_rows(system)]
    n, r = code.n, len(rows)
    gram = [[row_product(a, b) for b in rows] for a in rows]
    if any(gram[i][j] for i in range(r) for j in range(i)):
        for i in range(r):
            for j in range(i):
                rows[i][n + j] += gram[i][j]
    return LdiCode(tuple(map(tuple, rows)), n, code.q).check()


# -- sign search -----------------------------------------------------------


def _candidates(residue: int, q: int, bmax: int) -> list[int]:
    """Integers congruent to ``residue`` with ``|v| < q`` and ``|v| <= bmax``, ascending."""
    lim = min(q - 1, bmax)
    return [v for v in range(-lim, lim + 1) if (v - residue) % q == 0]


class _SignSearch:
    def __init__(self, free: Sequence[Row], fixed: Sequence[Row], n: int, q: int, bmax: int, budget: int):
        self.free = [tuple(v % q for v in r) for r in free]
        self.fixed = [tuple(r) for r in fixed]
        self.n, self.q, self.bmax = n, q, bmax
        self.budget = budget
        self.nodes = 0

    def _coeffs(self, other: Row) -> list[int]:
        # coefficient of each entry of the new row in row_product(new, other)
        n = self.n
        return [other[n + t] for t in range(n)] + [-other[t] for t in range(n)]

    def _row_completions(self, residues: Row, placed: list[Row]):
        q = self.q
        positions = [t for t, v in enumerate(residues) if v]
        cands = [_candidates(residues[t], q, self.bmax) for t in positions]
        if q == 2 and positions:
            # -row is congruent to row mod 2: pin the leading entry's sign
            cands[0] = [v for v in cands[0] if v > 0]
        if any(not c for c in cands):
            return
        constraints = []
        for other in placed:
            co = self._coeffs(other)
            c = [co[t] for t in positions]
            if any(c):
                constraints.append(c)
        m, L = len(constraints), len(positions)
        # suffix extremes of the remaining contribution, per constraint
        lo = [[0] * (L + 1) for _ in range(m)]
        hi = [[0] * (L + 1) for _ in range(m)]
        for j, c in enumerate(constraints):
            for k in range(L - 1, -1, -1):
                vals = [c[k] * v for v in cands[k]]
                lo[j][k] = lo[j][k + 1] + min(vals)
                hi[j][k] = hi[j][k + 1] + max(vals)
        values = [0] * L
        sums = [0] * m

        def dfs(k: int):
            if k == L:
                row = [0] * len(residues)
                for t, v in zip(positions, values):
                    row[t] = v
                yield tuple(row)
                return
            for v in cands[k]:
                self.nodes += 1
                if self.nodes > self.budget:
                    raise BudgetExceeded("sign search", self.budget)
                ok = True
                for j in range(m):
                    s = sums[j] + constraints[j][k] * v
                    if s + lo[j][k + 1] > 0 or s + hi[j][k + 1] < 0:
                        ok = False
                        break
                if not ok:
                    continue
                for j in range(m):
                    sums[j] += constraints[j][k] * v
                values[k] = v
                yield from dfs(k + 1)
                for j in range(m):
                    sums[j] -= constraints[j][k] * v

        yield from dfs(0)

    def solve(self) -> list[Row] | None:
        placed = list(self.fixed)

        def go(i: int):
            if i == len(self.free):
                return list(placed[len(self.fixed):])
            for row in self._row_completions(self.free[i], placed):
                placed.append(row)
                found = go(i + 1)
                if found is not None:
                    return found
                placed.pop()
            return None

        return go(0)


def sign_search_rows(
    residues: Sequence[Row],
    n: int,
    q: int,
    fixed: Sequence[Row] = (),
    max_abs: int | None = None,
    budget: int | None = None,
) -> list[Row] | None:
    """Integer lifts of ``residues`` commuting exactly with each other and with ``fixed``.

    Tries entry bounds ``B = 1, 2, ...`` up to ``max_abs`` (default ``q - 1``)
    and returns the lexicographically smallest solution at the least feasible
    ``B``, or None once every allowed lift has been ruled out.
    """
    budget = sign_search_budget() if budget is None else budget
    limit = q - 1 if max_abs is None else min(max_abs, q - 1)
    used = 0
    for bmax in range(1, limit + 1):
        search = _SignSearch(residues, fixed, n, q, bmax, budget - used)
        found = search.solve()
        used += search.nodes
        if found is not None:
            log.debug("sign search: B=%d after %d nodes", bmax, used)
            return found
    return None


def ldi_sign_search(code: StabilizerCode, max_abs: int | None = None, budget: int | None = None) -> LdiCode | None:
    """Search per-entry integer lifts (``|v| < q``) that make the generators commute exactly.

    Returns None when the allowed lifts admit no solution; raises
    :class:`BudgetExceeded` when the node budget runs out first.
    """
    found = sign_search_rows(code.rows, code.n, code.q, max_abs=max_abs, budget=budget)
    if found is None:
        return None
    return LdiCode(tuple(found), code.n, code.q).check()


def lift_code(code: StabilizerCode, system: str = "symmetric") -> LdiCode:
    """Wrap a code whose lifted rows already commute over the integers."""
    return LdiCode(tuple(lift_row(r, code.q, system) for r in code.rows), code.n, code.q).check()
