"""Generalized Pauli words as exponent vectors.

A Pauli word ``X^{a_1}Z^{b_1} (x) ... (x) X^{a_n}Z^{b_n}`` (global phase
quotiented out) is stored as the pair of exponent tuples ``x = (a_1..a_n)``
and ``z = (b_1..b_n)``.  Vectors are tagged with a :class:`Ring`: either the
integers mod a prime ``q`` or the unbounded integers.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from sympy import isprime

DENSE_CAP = 64


class NotPrimeError(ValueError):
    def __init__(self, q: int):
        super().__init__(f"modulus {q} is not prime")
        self.q = q


@dataclass(frozen=True)
class Ring:
    """Mod a prime ``modulus``, or the integers when ``modulus`` is None."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and not isprime(self.modulus):
            raise NotPrimeError(self.modulus)

    @classmethod
    def mod(cls, q: int) -> "Ring":
        return cls(int(q))

    @property
    def is_integers(self) -> bool:
        return self.modulus is None

    def reduce(self, value: int) -> int:
        return value if self.modulus is None else value % self.modulus

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


INTEGERS = Ring()


def lift(value: int, q: int, system: str = "symmetric") -> int:
    """Integer representative of ``value mod q``.

    ``system="symmetric"`` picks the residue in ``(-q/2, q/2]``;
    ``system="standard"`` picks ``{0, ..., q-1}``.
    """
    r = value % q
    if system == "standard":
        return r
    if system != "symmetric":
        raise ValueError(f"unknown residue system {system!r}")
    return r - q if 2 * r > q else r


def lift_row(row: Sequence[int], q: int, system: str = "symmetric") -> tuple[int, ...]:
    return tuple(lift(v, q, system) for v in row)


@dataclass(frozen=True)
class PhiVector:
    x: tuple[int, ...]
    z: tuple[int, ...]
    ring: Ring = INTEGERS

    def __post_init__(self):
        x = tuple(int(v) for v in self.x)
        z = tuple(int(v) for v in self.z)
        if len(x) != len(z):
            raise ValueError(f"x and z halves differ in length ({len(x)} != {len(z)})")
        if self.ring.modulus is not None:
            q = self.ring.modulus
            if any(not 0 <= v < q for v in x + z):
                raise ValueError(f"entries must lie in 0..{q - 1} under {self.ring}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)

    @classmethod
    def from_row(cls, row: Sequence[int], ring: Ring = INTEGERS) -> "PhiVector":
        """Build from a flat ``x | z`` row, reducing into ``ring``."""
        if len(row) % 2:
            raise ValueError(f"row length {len(row)} is odd")
        n = len(row) // 2
        vals = [ring.reduce(int(v)) for v in row]
        return cls(tuple(vals[:n]), tuple(vals[n:]), ring)

    @classmethod
    def zeros(cls, n: int, ring: Ring = INTEGERS) -> "PhiVector":
        return cls((0,) * n, (0,) * n, ring)

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def row(self) -> tuple[int, ...]:
        return self.x + self.z

    def reduce(self, ring: Ring) -> "PhiVector":
        return PhiVector.from_row(self.row, ring)

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.x)) + " | " + " ".join(map(str, self.z)) + ")"


@dataclass(frozen=True)
class PauliWord:
    """Tensor product of ``X^a Z^b`` factors, one ``(a, b)`` per register.

    Exponents are kept as written (``Z^{-1}`` stays ``-1``); reduction into
    the ring happens in :func:`phi_map`.
    """

    factors: tuple[tuple[int, int], ...]
    ring: Ring = INTEGERS

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(a), int(b)) for a, b in self.factors))

    @classmethod
    def identity(cls, n: int, ring: Ring = INTEGERS) -> "PauliWord":
        return cls(((0, 0),) * n, ring)

    @property
    def n(self) -> int:
        return len(self.factors)


def phi_map(word: PauliWord) -> PhiVector:
    x = tuple(word.ring.reduce(a) for a, _ in word.factors)
    z = tuple(word.ring.reduce(b) for _, b in word.factors)
    return PhiVector(x, z, word.ring)


def _check_same_n(u: PhiVector, v: PhiVector) -> None:
    if u.n != v.n:
        raise ValueError(f"register count mismatch: {u.n} != {v.n}")


def symplectic_product(u: PhiVector, v: PhiVector) -> int:
    """``u.x . v.z - u.z . v.x`` over the integers, whatever the ring tags."""
    _check_same_n(u, v)
    return row_product(u.row, v.row)


def row_product(r: Sequence[int], s: Sequence[int]) -> int:
    """Symplectic product of two flat ``x | z`` rows of equal length."""
    if len(r) != len(s):
        raise ValueError(f"row length mismatch: {len(r)} != {len(s)}")
    n = len(r) // 2
    return sum(r[t] * s[n + t] - r[n + t] * s[t] for t in range(n))


def compose(u: PhiVector, v: PhiVector) -> PhiVector:
    if u.ring != v.ring:
        raise ValueError(f"ring mismatch: {u.ring} vs {v.ring}")
    _check_same_n(u, v)
    return PhiVector.from_row([a + b for a, b in zip(u.row, v.row)], u.ring)


def pauli_weight(u: PhiVector) -> int:
    return sum(1 for a, b in zip(u.x, u.z) if u.ring.reduce(a) or u.ring.reduce(b))


def row_weight(row: Sequence[int]) -> int:
    n = len(row) // 2
    return sum(1 for t in range(n) if row[t] or row[n + t])


@dataclass(frozen=True, eq=False)
class DensePauli:
    matrix: np.ndarray
    q: int
    n: int

    def __post_init__(self):
        dim = self.q**self.n
        if self.matrix.shape != (dim, dim):
            raise ValueError(f"expected a {dim}x{dim} matrix, got {self.matrix.shape}")
        if not np.allclose(self.matrix @ self.matrix.conj().T, np.eye(dim), atol=1e-10):
            raise ValueError("matrix is not unitary")

    def commutes_with(self, other: "DensePauli", atol: float = 1e-10) -> bool:
        a, b = self.matrix, other.matrix
        return bool(np.allclose(a @ b, b @ a, atol=atol))


def _single_register(a: int, b: int, q: int) -> np.ndarray:
    omega = cmath.exp(2j * cmath.pi / q)
    shift = np.roll(np.eye(q, dtype=complex), 1, axis=0)  # X|j> = |j+1>
    phase = np.diag([omega**j for j in range(q)])  # Z|j> = w^j |j>
    return np.linalg.matrix_power(shift, a % q) @ np.linalg.matrix_power(phase, b % q)


def realize_dense(u: PhiVector, q: int) -> DensePauli:
    """Dense ``q^n x q^n`` matrix of ``u``; a cross-check oracle for tiny sizes."""
    if not isprime(q):
        raise NotPrimeError(q)
    if q**u.n > DENSE_CAP:
        raise ValueError(f"q^n = {q ** u.n} exceeds the dense cap {DENSE_CAP}")
    m = np.eye(1, dtype=complex)
    for a, b in zip(u.x, u.z):
        m = np.kron(m, _single_register(a, b, q))
    return DensePauli(m, q, u.n)


def rows_to_vectors(rows: Iterable[Sequence[int]], ring: Ring) -> list[PhiVector]:
    return [PhiVector.from_row(r, ring) for r in rows]
