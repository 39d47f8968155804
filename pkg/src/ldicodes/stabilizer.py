"""Stabilizer codes over a prime modulus and the moves that preserve them.

Generators are stored as flat ``x | z`` integer rows.  Registers and rows are
indexed from 0 throughout the API.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence, Union

from sympy import isprime

from .linalg import rank_mod
from .phi import NotPrimeError, PhiVector, Ring, lift_row, row_product

Row = tuple[int, ...]


class CodeError(ValueError):
    """Generator rows do not define a stabilizer code."""


class NonCommutingError(CodeError):
    def __init__(self, i: int, j: int, value: int):
        super().__init__(f"generators {i} and {j} do not commute (product {value} mod q)")
        self.i, self.j, self.value = i, j, value


class DependentRowsError(CodeError):
    def __init__(self, rank: int, count: int):
        super().__init__(f"generators are linearly dependent (rank {rank} < {count})")
        self.rank, self.count = rank, count


def _as_rows(rows: Sequence[Sequence[int]], n: int) -> tuple[Row, ...]:
    out = []
    for i, r in enumerate(rows):
        r = tuple(int(v) for v in r)
        if len(r) != 2 * n:
            raise CodeError(f"row {i} has length {len(r)}, expected {2 * n}")
        out.append(r)
    return tuple(out)


@dataclass(frozen=True)
class StabilizerCode:
    """``n - k`` commuting, independent generators over GF(q); ``k`` is derived."""

    rows: tuple[Row, ...]
    n: int
    q: int

    def __post_init__(self):
        if not isprime(self.q):
            raise NotPrimeError(self.q)
        rows = tuple(tuple(v % self.q for v in r) for r in _as_rows(self.rows, self.n))
        object.__setattr__(self, "rows", rows)
        for i, j in itertools.combinations(range(len(rows)), 2):
            value = row_product(rows[i], rows[j]) % self.q
            if value:
                raise NonCommutingError(i, j, value)
        rank = rank_mod(rows, self.q)
        if rank < len(rows):
            raise DependentRowsError(rank, len(rows))

    @classmethod
    def _trusted(cls, rows: Sequence[Row], n: int, q: int) -> "StabilizerCode":
        code = object.__new__(cls)
        object.__setattr__(code, "rows", tuple(tuple(r) for r in rows))
        object.__setattr__(code, "n", n)
        object.__setattr__(code, "q", q)
        return code

    @property
    def k(self) -> int:
        return self.n - len(self.rows)

    @property
    def ring(self) -> Ring:
        return Ring.mod(self.q)

    @property
    def gens(self) -> list[PhiVector]:
        return [PhiVector.from_row(r, self.ring) for r in self.rows]

    def lifted_rows(self, system: str = "symmetric") -> tuple[Row, ...]:
        return tuple(lift_row(r, self.q, system) for r in self.rows)


def new_code(rows: Sequence[Sequence[int]], n: int, q: int) -> StabilizerCode:
    return StabilizerCode(tuple(tuple(r) for r in rows), n, q)


# -- moves -----------------------------------------------------------------


@dataclass(frozen=True)
class RowSwap:
    i: int
    j: int


@dataclass(frozen=True)
class RegisterSwap:
    i: int
    j: int


@dataclass(frozen=True)
class RowScale:
    i: int
    c: int


@dataclass(frozen=True)
class RowAdd:
    """Add ``times`` copies of row ``src`` to row ``dst``."""

    src: int
    dst: int
    times: int = 1


@dataclass(frozen=True)
class Dft:
    """Qudit Fourier transform on one register: ``(x, z) -> (-z, x)``."""

    register: int


Move = Union[RowSwap, RegisterSwap, RowScale, RowAdd, Dft]


def _check_index(idx: int, bound: int, what: str) -> None:
    if not 0 <= idx < bound:
        raise IndexError(f"{what} index {idx} out of range 0..{bound - 1}")


def apply_move_rows(rows: Sequence[Sequence[int]], n: int, move: Move, modulus: int | None = None) -> tuple[Row, ...]:
    """Apply ``move`` to raw rows; entries are reduced when ``modulus`` is given."""
    m = [list(r) for r in rows]
    r = len(m)
    if isinstance(move, RowSwap):
        _check_index(move.i, r, "row")
        _check_index(move.j, r, "row")
        m[move.i], m[move.j] = m[move.j], m[move.i]
    elif isinstance(move, RegisterSwap):
        _check_index(move.i, n, "register")
        _check_index(move.j, n, "register")
        for row in m:
            for off in (0, n):
                row[move.i + off], row[move.j + off] = row[move.j + off], row[move.i + off]
    elif isinstance(move, RowScale):
        _check_index(move.i, r, "row")
        if move.c == 0 or (modulus is not None and move.c % modulus == 0):
            raise ValueError(f"row scale factor {move.c} is zero")
        m[move.i] = [v * move.c for v in m[move.i]]
    elif isinstance(move, RowAdd):
        _check_index(move.src, r, "row")
        _check_index(move.dst, r, "row")
        if move.src == move.dst:
            raise ValueError("RowAdd needs two distinct rows")
        m[move.dst] = [a + move.times * b for a, b in zip(m[move.dst], m[move.src])]
    elif isinstance(move, Dft):
        _check_index(move.register, n, "register")
        t = move.register
        for row in m:
            row[t], row[n + t] = -row[n + t], row[t]
    else:
        raise TypeError(f"not a move: {move!r}")
    if modulus is not None:
        m = [[v % modulus for v in row] for row in m]
    return tuple(tuple(row) for row in m)


def apply_move(code: StabilizerCode, move: Move) -> StabilizerCode:
    return StabilizerCode._trusted(apply_move_rows(code.rows, code.n, move, code.q), code.n, code.q)


def apply_moves(code: StabilizerCode, moves: Sequence[Move]) -> StabilizerCode:
    for mv in moves:
        code = apply_move(code, mv)
    return code


# -- canonical form --------------------------------------------------------


@dataclass(frozen=True)
class CanonicalResult:
    code: StabilizerCode
    moves: tuple[Move, ...]
    permutation: tuple[int, ...]  # permutation[t] = original register now at position t


class _Eliminator:
    """Row-reduces a working copy mod q while logging every move."""

    def __init__(self, rows: Sequence[Row], n: int, q: int):
        self.rows = [list(r) for r in rows]
        self.n, self.q = n, q
        self.moves: list[Move] = []

    def do(self, move: Move) -> None:
        self.rows = [list(r) for r in apply_move_rows(self.rows, self.n, move, self.q)]
        self.moves.append(move)

    def pivot(self, r: int, col: int, clear_rows: Sequence[int]) -> None:
        """Make entry ``(r, col)`` one and clear ``col`` in ``clear_rows``."""
        c = self.rows[r][col]
        if c != 1:
            self.do(RowScale(r, pow(c, -1, self.q)))
        for i in clear_rows:
            f = self.rows[i][col]
            if i != r and f:
                self.do(RowAdd(r, i, self.q - f))

    def eliminate(self, cols: Sequence[int], start: int, stop: int) -> int:
        """RREF of rows ``start..stop-1`` over ``cols``, clearing pivots in every row.

        Returns the row index one past the last pivot row.
        """
        r = start
        everyone = range(len(self.rows))
        for col in cols:
            if r == stop:
                break
            pr = next((i for i in range(r, stop) if self.rows[i][col]), None)
            if pr is None:
                continue
            if pr != r:
                self.do(RowSwap(r, pr))
            self.pivot(r, col, everyone)
            r += 1
        return r


def canonical_form(code: StabilizerCode) -> CanonicalResult:
    """Reduce to ``[I X2 | Z1 Z2]`` using only parameter-preserving moves.

    Pivot policy: leftmost x-column with a nonzero entry among the unpivoted
    rows (lowest row on ties).  When the unpivoted rows have no x-support at
    all, a Dft on the lowest register carrying z-support creates one.
    """
    n, q = code.n, code.q
    el = _Eliminator(code.rows, n, q)
    perm = list(range(n))
    r = len(el.rows)
    for c in range(r):
        found = None
        for j in range(c, n):
            i = next((i for i in range(c, r) if el.rows[i][j]), None)
            if i is not None:
                found = (i, j)
                break
        if found is None:
            j = next(j for j in range(c, n) if any(el.rows[i][n + j] for i in range(c, r)))
            el.do(Dft(j))
            i = next(i for i in range(c, r) if el.rows[i][j])
            found = (i, j)
        i, j = found
        if j != c:
            el.do(RegisterSwap(c, j))
            perm[c], perm[j] = perm[j], perm[c]
        if i != c:
            el.do(RowSwap(c, i))
        el.pivot(c, c, range(r))
    return CanonicalResult(StabilizerCode._trusted(el.rows, n, q), tuple(el.moves), tuple(perm))


# -- CSS structure ---------------------------------------------------------


@dataclass(frozen=True)
class CssStructure:
    xblock: tuple[Row, ...]
    zblock: tuple[Row, ...]
    n: int
    x_rows: tuple[int, ...] = ()
    z_rows: tuple[int, ...] = ()
    permutation: tuple[int, ...] = ()
    dfts: frozenset[int] = field(default_factory=frozenset)

    @property
    def r(self) -> int:
        return len(self.xblock) + len(self.zblock)

    def rows(self) -> tuple[Row, ...]:
        zero = (0,) * self.n
        return tuple(x + zero for x in self.xblock) + tuple(zero + z for z in self.zblock)


def css_split(rows: Sequence[Sequence[int]], n: int) -> CssStructure | None:
    """Partition raw rows into pure-X and pure-Z rows, or None if any row is mixed."""
    xs, zs, xi, zi = [], [], [], []
    for i, r in enumerate(rows):
        xpart, zpart = tuple(r[:n]), tuple(r[n:])
        if not any(zpart):
            xs.append(xpart)
            xi.append(i)
        elif not any(xpart):
            zs.append(zpart)
            zi.append(i)
        else:
            return None
    return CssStructure(tuple(xs), tuple(zs), n, tuple(xi), tuple(zi), tuple(range(n)))


def is_css(code) -> CssStructure | None:
    """CSS partition of any object with ``rows`` and ``n`` (codes and LDI codes)."""
    return css_split(code.rows, code.n)


def _css_by_elimination(rows: Sequence[Row], n: int, q: int) -> list[Move] | None:
    if css_split(rows, n) is not None:
        return []
    el = _Eliminator(rows, n, q)
    r = len(el.rows)
    m = el.eliminate(range(n), 0, r)
    el.eliminate(range(n, 2 * n), m, r)
    if css_split(el.rows, n) is None:
        return None
    return el.moves


def _dft_rows(rows: Sequence[Row], n: int, q: int, subset: Sequence[int]) -> tuple[Row, ...]:
    for t in subset:
        rows = apply_move_rows(rows, n, Dft(t), q)
    return tuple(rows)


EXHAUSTIVE_CSS_LIMIT = 20


def _css_score(rows: Sequence[Row], n: int, q: int) -> int:
    """dim(S cap X-space) + dim(S cap Z-space); equals len(rows) iff S is CSS."""
    total = 0
    for first, second in ((range(n, 2 * n), range(n)), (range(n), range(n, 2 * n))):
        el = _Eliminator(rows, n, q)
        m = el.eliminate(first, 0, len(rows))
        total += len(rows) - m
    return total


def to_css(code: StabilizerCode) -> tuple[StabilizerCode, tuple[Move, ...]] | None:
    """Find a CSS presentation reachable by per-register Dfts plus row operations.

    Exhaustive over Dft subsets (by size, then lexicographically) for
    ``n <= 20``; beyond that a greedy register-by-register heuristic.
    """
    if is_css(code) is not None:
        return code, ()
    n, q = code.n, code.q

    def attempt(subset) -> tuple[StabilizerCode, tuple[Move, ...]] | None:
        rows = _dft_rows(code.rows, n, q, subset)
        moves = _css_by_elimination(rows, n, q)
        if moves is None:
            return None
        dfts = [Dft(t) for t in subset]
        return apply_moves(code, dfts + moves), tuple(dfts + moves)

    if n <= EXHAUSTIVE_CSS_LIMIT:
        for size in range(1, n + 1):
            for subset in itertools.combinations(range(n), size):
                found = attempt(subset)
                if found is not None:
                    return found
        return None

    chosen: list[int] = []
    best = _css_score(code.rows, n, q)
    for t in range(n):
        trial = sorted(chosen + [t])
        score = _css_score(_dft_rows(code.rows, n, q, trial), n, q)
        if score > best:
            chosen, best = trial, score
    return attempt(chosen) if chosen else None


# -- syndromes -------------------------------------------------------------


class Syndrome(NamedTuple):
    integers: tuple[int, ...]
    reduced: tuple[int, ...]


def syndrome(code, e: PhiVector, p: int | None = None, system: str = "symmetric") -> Syndrome:
    """Integer and reduced syndrome of ``e``.

    Mod-q codes are lifted to the integers with ``system``; LDI codes use their
    own integer rows.  Reduction is mod ``p`` (default: the code's modulus).
    """
    if e.n != code.n:
        raise ValueError(f"error acts on {e.n} registers, code on {code.n}")
    if isinstance(code, StabilizerCode):
        rows = code.lifted_rows(system)
        p = code.q if p is None else p
    else:
        rows = code.rows
        p = code.origin_q if p is None else p
    ints = tuple(row_product(r, e.row) for r in rows)
    return Syndrome(ints, tuple(v % p for v in ints))
