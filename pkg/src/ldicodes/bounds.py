"""Promise cutoffs, the entry bound and the generalized quantum Hamming bound.

Everything here is exact integer arithmetic.  The CSS cutoff
``B^(d-1) (d-1)^((d-1)/2)`` is irrational for even ``d``; it is compared with
primes through its square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from sympy import isprime, nextprime

from .phi import NotPrimeError


def _check_bd(B: int, d: int) -> None:
    if B < 1 or d < 2:
        raise ValueError(f"need B >= 1 and d >= 2, got B={B}, d={d}")


@dataclass(frozen=True)
class CssCutoff:
    """Exact value ``base * radicand ** (radicand / 2)``."""

    base: int  # B^(d-1)
    radicand: int  # d-1

    @property
    def square(self) -> int:
        return self.base**2 * self.radicand**self.radicand

    @property
    def exact(self) -> int | None:
        """The value as an integer when it is one."""
        s = self.square
        root = math.isqrt(s)
        return root if root * root == s else None

    @property
    def ceiling(self) -> int:
        s = self.square
        root = math.isqrt(s)
        return root if root * root == s else root + 1

    @property
    def upper(self) -> Fraction:
        """Rational upper bound (the integer ceiling)."""
        return Fraction(self.ceiling)

    def below(self, p: int) -> bool:
        """True iff the cutoff is strictly less than ``p``."""
        return p > 0 and self.square < p * p

    def __float__(self) -> float:
        return math.sqrt(self.square)

    def __str__(self) -> str:
        e = self.exact
        if e is not None:
            return str(e)
        return f"{self.base}*{self.radicand}^({self.radicand}/2)"


def p_star_css(B: int, d: int) -> CssCutoff:
    _check_bd(B, d)
    return CssCutoff(B ** (d - 1), d - 1)


def p_star_general(B: int, d: int) -> int:
    _check_bd(B, d)
    return B ** (2 * (d - 1)) * (2 * (d - 1)) ** (d - 1)


def b_bound(k: int, q: int) -> int:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if not isprime(q):
        raise NotPrimeError(q)
    return (2 + k * (q - 1)) * (q - 1)


class HammingBound(NamedTuple):
    holds: bool
    lhs: int
    rhs: int


def gqhb_holds(n: int, k: int, d: int, q: int) -> HammingBound:
    if not (n >= k >= 0 and d >= 1):
        raise ValueError(f"need n >= k >= 0 and d >= 1, got n={n}, k={k}, d={d}")
    if not isprime(q):
        raise NotPrimeError(q)
    lhs = sum(math.comb(n, j) * (q * q - 1) ** j for j in range((d - 1) // 2 + 1))
    rhs = q ** (n - k)
    return HammingBound(lhs <= rhs, lhs, rhs)


def next_safe_prime(bound: int | CssCutoff | Fraction) -> int:
    """Least prime strictly greater than ``bound``."""
    if isinstance(bound, CssCutoff):
        p = nextprime(math.isqrt(bound.square) - 1) if bound.square else 2
        while not bound.below(p):
            p = nextprime(p)
        return p
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound}")
    return nextprime(math.floor(bound))


@dataclass(frozen=True)
class PromiseBounds:
    B: int
    d: int
    p_general: int
    p_css: CssCutoff
    next_safe_prime_general: int
    next_safe_prime_css: int


def promise_bounds(B: int, d: int) -> PromiseBounds:
    general = p_star_general(B, d)
    css = p_star_css(B, d)
    return PromiseBounds(B, d, general, css, next_safe_prime(general), next_safe_prime(css))
